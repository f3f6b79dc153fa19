#include "lrc/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lrc {

namespace {

std::vector<int> units_mod(int n) {
    std::vector<int> u;
    for (int z = 1; z < n; ++z)
        if (std::gcd(z, n) == 1) u.push_back(z);
    return u;
}

// runs[zi][u] = number of consecutive exponents u, u+z, u+2z, ... inside D.
// Requires D not to be the full residue set, so every run is shorter than n.
std::vector<std::vector<int>> progression_runs(const std::vector<bool>& in, const std::vector<int>& units) {
    const int n = static_cast<int>(in.size());
    std::vector<std::vector<int>> runs(units.size(), std::vector<int>(in.size(), 0));
    for (std::size_t zi = 0; zi < units.size(); ++zi) {
        const int z = units[zi];
        auto& run = runs[zi];
        // Walk the single cycle generated by z backwards from a missing exponent.
        int start = 0;
        while (in[static_cast<std::size_t>(start)]) ++start;
        int x = start;
        int len = 0;
        for (int step = 0; step < n; ++step) {
            x = ((x - z) % n + n) % n;
            len = in[static_cast<std::size_t>(x)] ? len + 1 : 0;
            run[static_cast<std::size_t>(x)] = len;
        }
    }
    return runs;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Largest v with v^k <= x.
long long iroot(long long x, int k) {
    if (k == 1) return x;
    long long v = 0;
    while (ipow(v + 1, k) <= x) ++v;
    return v;
}

void check_lengths(const std::vector<int>& lengths) {
    if (lengths.empty()) throw ParamError("at least one local length is required");
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (lengths[i] < 2) throw ParamError("local lengths must be at least 2");
        for (std::size_t j = 0; j < i; ++j)
            if (std::gcd(lengths[i], lengths[j]) != 1) throw ParamError("local lengths must be pairwise coprime");
    }
}

long long product(const std::vector<int>& v) {
    long long p = 1;
    for (int x : v) p *= x;
    return p;
}

}  // namespace

DistanceBound bch_bound(const DefiningSet& d) {
    const int n = d.modulus();
    DistanceBound best{1, HTWitness{n, 0, 1, 1, 1, 0}};
    if (d.empty() || n < 2) return best;
    if (static_cast<int>(d.size()) == n) return {n + 1, HTWitness{n, 0, 1, 1, n + 1, 0}};
    const auto units = units_mod(n);
    const auto runs = progression_runs(d.indicator(), units);
    for (int u = 0; u < n; ++u)
        for (std::size_t zi = 0; zi < units.size(); ++zi) {
            const int delta = runs[zi][static_cast<std::size_t>(u)] + 1;
            if (delta > best.bound) best = {delta, HTWitness{n, u, units[zi], 1, delta, 0}};
        }
    return best;
}

DistanceBound ht_bound(const DefiningSet& d) {
    const int n = d.modulus();
    DistanceBound best{1, HTWitness{n, 0, 1, 1, 1, 0}};
    if (d.empty() || n < 2) return best;
    if (static_cast<int>(d.size()) == n) return {n + 1, HTWitness{n, 0, 1, 1, n + 1, 0}};
    const auto units = units_mod(n);
    const auto runs = progression_runs(d.indicator(), units);
    const std::size_t nu = units.size();

    // Triples are visited in lexicographic (u, z1, z2) order and only a strict
    // improvement replaces the incumbent, so the first optimal triple wins.
    for (int u = 0; u < n; ++u) {
        const auto uu = static_cast<std::size_t>(u);
        if (runs[0][uu] == 0) continue;  // u must lie in D
        for (std::size_t i1 = 0; i1 < nu; ++i1) {
            const int row = runs[i1][uu];
            for (std::size_t i2 = 0; i2 < nu; ++i2) {
                // delta - 1 <= row and gamma + 1 <= column run along z2.
                if (row + runs[i2][uu] <= best.bound) continue;
                int min_run = row;
                int triple_value = 0;
                int triple_delta = 0;
                int triple_gamma = 0;
                int x = u;
                for (int gamma = 0; gamma < n; ++gamma) {
                    min_run = std::min(min_run, runs[i1][static_cast<std::size_t>(x)]);
                    if (min_run == 0) break;
                    const int value = min_run + 1 + gamma;
                    // Equal values: keep the larger gamma, i.e. the smaller delta.
                    if (value >= triple_value) {
                        triple_value = value;
                        triple_delta = min_run + 1;
                        triple_gamma = gamma;
                    }
                    x = (x + units[i2]) % n;
                }
                if (triple_value > best.bound)
                    best = {triple_value, HTWitness{n, u, units[i1], units[i2], triple_delta, triple_gamma}};
            }
        }
    }
    return best;
}

bool validate_witness(const DefiningSet& d, const HTWitness& w) {
    const int n = d.modulus();
    if (w.n != n || w.delta < 1 || w.gamma < 0) return false;
    if (std::gcd(w.z1, n) != 1 || std::gcd(w.z2, n) != 1) return false;
    if (w.delta == n + 1 && w.gamma == 0) return static_cast<int>(d.size()) == n;
    for (long long s1 = 0; s1 <= w.delta - 2; ++s1)
        for (long long s2 = 0; s2 <= w.gamma; ++s2) {
            const long long e = w.u + s1 * w.z1 + s2 * w.z2;
            if (!d.contains(static_cast<int>(e % n))) return false;
        }
    return true;
}

int singleton_like(int n, int k, int r, int rho) {
    if (n < 1 || k < 1 || k > n) throw ParamError("singleton_like requires 1 <= k <= n");
    if (r < 1) throw ParamError("singleton_like requires r >= 1");
    if (rho < 2) throw ParamError("singleton_like requires rho >= 2");
    const int groups = (k + r - 1) / r;
    return n - k + 1 - (groups - 1) * (rho - 1);
}

int sij(int i, int j, int p, int q) {
    if (p < 1 || q < 1) throw ParamError("sij requires p, q >= 1");
    const long long m = static_cast<long long>(p) * q;
    const long long v = static_cast<long long>(j) * q - static_cast<long long>(i) * p;
    return static_cast<int>(((v % m) + m) % m);
}

XiValue xi_value(const std::vector<int>& sorted_lengths, int rho, int d) {
    check_lengths(sorted_lengths);
    if (!std::is_sorted(sorted_lengths.begin(), sorted_lengths.end()))
        throw ParamError("xi_value expects lengths in ascending order");
    if (rho < 2 || rho > sorted_lengths.front()) throw ParamError("rho must lie in [2, min n_i]");
    const long long n = product(sorted_lengths);
    if (d < 1 || d > n) throw ParamError("d must lie in [1, n]");
    const int t = static_cast<int>(sorted_lengths.size());
    long long filled = 1;
    for (int xi = 0; xi < t; ++xi) {
        const long long v = iroot((d - 1) / filled, t - xi);
        if (sorted_lengths[static_cast<std::size_t>(xi)] > v) return {xi, static_cast<int>(v)};
        filled *= sorted_lengths[static_cast<std::size_t>(xi)];
    }
    // d - 1 < n makes the last step succeed.
    throw ParamError("no valid xi");
}

int dim_bound_thm4(std::vector<int> lengths, int rho, int d) {
    std::sort(lengths.begin(), lengths.end());
    const auto [xi, v] = xi_value(lengths, rho, d);
    const int t = static_cast<int>(lengths.size());
    long long full = 1;
    long long filled = 1;
    for (int i = 0; i < t; ++i) {
        full *= lengths[static_cast<std::size_t>(i)] - rho + 1;
        if (i < xi) filled *= lengths[static_cast<std::size_t>(i)] - rho + 1;
    }
    const long long side = std::max(0, v - (rho - 1));
    return static_cast<int>(full - ipow(side, t - xi) * filled);
}

RectBound dim_bound_rect(const std::vector<int>& lengths, const std::vector<int>& rhos, int d) {
    check_lengths(lengths);
    if (rhos.size() != lengths.size()) throw ParamError("one rho per local length is required");
    for (std::size_t i = 0; i < lengths.size(); ++i)
        if (rhos[i] < 2 || rhos[i] > lengths[i]) throw ParamError("rho_i must lie in [2, n_i]");
    const long long n = product(lengths);
    if (d < 1 || d > n) throw ParamError("d must lie in [1, n]");

    const std::size_t t = lengths.size();
    long long full = 1;
    for (std::size_t i = 0; i < t; ++i) full *= lengths[i] - rhos[i] + 1;

    // Any side of length 0 removes nothing, so the all-zero vector is the
    // lexicographically smallest zero-reduction rectangle; search v_i >= 1.
    long long best_reduction = 0;
    std::vector<int> best_sides(t, 0);
    std::vector<int> sides(t, 1);
    const long long budget = d - 1;

    auto search = [&](auto&& self, std::size_t i, long long volume) -> void {
        if (i == t) {
            long long reduction = 1;
            for (std::size_t j = 0; j < t; ++j) reduction *= std::max(0, sides[j] - rhos[j] + 1);
            if (reduction > best_reduction) {
                best_reduction = reduction;
                best_sides = sides;
            }
            return;
        }
        for (int v = 1; v <= lengths[i] && volume * v <= budget; ++v) {
            sides[i] = v;
            self(self, i + 1, volume * v);
        }
        sides[i] = 1;
    };
    if (budget >= 1) search(search, 0, 1);
    return {static_cast<int>(full - best_reduction), best_sides};
}

int product_distance_bound(const ConstructionParams& params) {
    long long p = 1;
    for (int r : params.rhos) p *= r;
    return static_cast<int>(p);
}

BoundReport compute_bounds(const ConstructionParams& params, const CyclicLRC& code) {
    params.validate();
    BoundReport rep;
    const auto& d = code.defining_set();
    rep.bch = bch_bound(d);
    rep.ht = ht_bound(d);
    rep.product = product_distance_bound(params);

    const int n = code.length();
    const int k = code.dimension();
    if (k >= 1) {
        for (std::size_t i = 0; i < params.t(); ++i)
            rep.singleton_like.push_back(singleton_like(n, k, params.locality(i), params.rhos[i]));
        rep.singleton_like_min = *std::min_element(rep.singleton_like.begin(), rep.singleton_like.end());
    }

    // The distance certified for the dimension bounds: the best of the
    // progression bound and the product bound, never beyond n.
    rep.design_distance = std::min(std::max(rep.ht.bound, rep.product), n);
    const bool uniform =
        std::all_of(params.rhos.begin(), params.rhos.end(), [&](int r) { return r == params.rhos.front(); });
    if (uniform) {
        auto sorted = params.lengths;
        std::sort(sorted.begin(), sorted.end());
        rep.thm4 = dim_bound_thm4(params.lengths, params.rhos.front(), rep.design_distance);
        rep.thm4_xi = xi_value(sorted, params.rhos.front(), rep.design_distance);
    }
    rep.rect = dim_bound_rect(params.lengths, params.rhos, rep.design_distance);
    return rep;
}

}  // namespace lrc
