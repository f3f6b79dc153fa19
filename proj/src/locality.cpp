#include "lrc/locality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lrc/bounds.hpp"
#include "lrc/distance.hpp"

namespace lrc {

PartitionFamily build_partitions(const ConstructionParams& params) {
    params.validate();
    PartitionFamily pf;
    pf.n = params.length();
    pf.lengths = params.lengths;
    for (int ni : params.lengths) {
        const int nu = pf.n / ni;
        Partition part;
        part.reserve(static_cast<std::size_t>(nu));
        for (int j = 0; j < nu; ++j) {
            Group g;
            g.reserve(static_cast<std::size_t>(ni));
            for (int v = 0; v < ni; ++v) g.push_back(j + v * nu);
            part.push_back(std::move(g));
        }
        pf.partitions.push_back(std::move(part));
    }
    return pf;
}

std::vector<int> crt_map(int x, const std::vector<int>& lengths) {
    long long n = 1;
    for (int ni : lengths) n *= ni;
    if (x < 0 || x >= n) throw std::out_of_range("position " + std::to_string(x) + " outside [0, n-1]");
    std::vector<int> r;
    r.reserve(lengths.size());
    for (int ni : lengths) r.push_back(x % ni);
    return r;
}

namespace {

void check_well_formed(const PartitionFamily& pf) {
    if (pf.partitions.size() != pf.lengths.size())
        throw std::invalid_argument("partition family must hold one partition per local length");
    for (std::size_t i = 0; i < pf.partitions.size(); ++i) {
        std::vector<int> seen(static_cast<std::size_t>(pf.n), 0);
        for (const auto& g : pf.partitions[i]) {
            if (static_cast<int>(g.size()) != pf.lengths[i])
                throw std::invalid_argument("group of partition " + std::to_string(i + 1) + " has size " +
                                            std::to_string(g.size()) + ", expected " +
                                            std::to_string(pf.lengths[i]));
            for (int x : g) {
                if (x < 0 || x >= pf.n) throw std::invalid_argument("group position outside [0, n-1]");
                ++seen[static_cast<std::size_t>(x)];
            }
        }
        if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
            throw std::invalid_argument("partition " + std::to_string(i + 1) + " does not cover [0, n-1] exactly once");
    }
}

}  // namespace

bool check_strong_orthogonality(const PartitionFamily& pf, const std::function<std::vector<int>(int)>& position_map) {
    check_well_formed(pf);
    const std::size_t t = pf.lengths.size();
    std::set<std::vector<int>> image;
    std::vector<std::vector<int>> coords(static_cast<std::size_t>(pf.n));
    for (int x = 0; x < pf.n; ++x) {
        auto c = position_map(x);
        if (c.size() != t) return false;
        for (std::size_t i = 0; i < t; ++i)
            if (c[i] < 0 || c[i] >= pf.lengths[i]) return false;
        image.insert(c);
        coords[static_cast<std::size_t>(x)] = std::move(c);
    }
    if (static_cast<int>(image.size()) != pf.n) return false;  // not a bijection

    for (std::size_t i = 0; i < t; ++i)
        for (const auto& g : pf.partitions[i]) {
            const auto& first = coords[static_cast<std::size_t>(g.front())];
            for (int x : g) {
                const auto& c = coords[static_cast<std::size_t>(x)];
                for (std::size_t other = 0; other < t; ++other)
                    if (other != i && c[other] != first[other]) return false;
            }
        }
    return true;
}

bool check_strong_orthogonality(const PartitionFamily& pf, const std::vector<int>& lengths) {
    return check_strong_orthogonality(pf, [&](int x) { return crt_map(x, lengths); });
}

std::string to_string(LocalMethod m) {
    switch (m) {
        case LocalMethod::Auto: return "auto";
        case LocalMethod::Enumerate: return "enumerate";
        case LocalMethod::ParityRank: return "parity-rank";
    }
    return "unknown";
}

namespace {

// Smallest number of linearly dependent columns of h, searched by subset size.
LocalDistance parity_rank_distance(const Matrix& h, int restricted_dimension) {
    const int len = static_cast<int>(h.cols());
    LocalDistance r;
    r.method = LocalMethod::ParityRank;
    r.restricted_dimension = restricted_dimension;
    const int singleton = len - restricted_dimension + 1;  // any more columns than rows are dependent
    std::uint64_t examined = 0;
    for (int s = 1; s < singleton; ++s) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        while (true) {
            if (++examined > kParitySubsetBudget) {
                r.distance = s;
                r.exact = false;
                return r;
            }
            if (rank(h.columns(pick)) < static_cast<std::size_t>(s)) {
                r.distance = s;
                r.exact = true;
                return r;
            }
            int i = s - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<std::size_t>(len - s + i)) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < s; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    r.distance = singleton;
    r.exact = true;
    return r;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        if (r > UINT64_MAX / num) return UINT64_MAX;
        r = r * num / i;  // exact: r * num is divisible by i
    }
    return r;
}

// When the positions form a coset j + m*Z_n of the subgroup of order len,
// puncturing onto them yields a cyclic code of length len whose zeros are the
// residues r mod len with every exponent e = r (mod len) in D. Returns the
// Hartmann-Tzeng bound of that code, or nullopt for other position sets.
std::optional<int> coset_cyclic_bound(const CyclicLRC& code, std::vector<int> positions) {
    const int n = code.length();
    const int len = static_cast<int>(positions.size());
    if (n % len != 0) return std::nullopt;
    const int m = n / len;
    std::sort(positions.begin(), positions.end());
    if (positions.front() >= m) return std::nullopt;
    for (int v = 0; v < len; ++v)
        if (positions[static_cast<std::size_t>(v)] != positions.front() + v * m) return std::nullopt;
    std::vector<bool> zero(static_cast<std::size_t>(len), true);
    for (int e = 0; e < n; ++e)
        if (!code.defining_set().contains(e)) zero[static_cast<std::size_t>(e % len)] = false;
    std::vector<int> exps;
    for (int r = 0; r < len; ++r)
        if (zero[static_cast<std::size_t>(r)]) exps.push_back(r);
    return ht_bound(DefiningSet(len, exps)).bound;
}

}  // namespace

LocalDistance local_distance(const CyclicLRC& code, const std::vector<int>& positions, LocalMethod method) {
    if (positions.empty()) throw std::invalid_argument("local_distance needs at least one position");
    std::set<int> distinct(positions.begin(), positions.end());
    if (distinct.size() != positions.size()) throw std::invalid_argument("local_distance positions must be distinct");
    std::vector<std::size_t> cols;
    for (int x : positions) {
        if (x < 0 || x >= code.length()) throw std::invalid_argument("position outside [0, n-1]");
        cols.push_back(static_cast<std::size_t>(x));
    }

    const auto ech = row_reduce(code.generator_matrix().columns(cols));
    const int kr = static_cast<int>(ech.rank());
    const int len = static_cast<int>(positions.size());
    if (method == LocalMethod::Auto)
        method = message_space_size(code.field()->order(), kr) <= kLocalEnumerationBudget ? LocalMethod::Enumerate
                                                                                          : LocalMethod::ParityRank;
    if (kr == 0) return {len + 1, true, method, 0};
    if (method == LocalMethod::Enumerate) return {min_weight_enumerate(ech.matrix), true, method, kr};

    // The subset search is exact within its budget. Beyond it, a cyclic bound
    // that meets the Singleton bound settles the distance; otherwise it can
    // only raise the inexact search result.
    const int singleton = len - kr + 1;
    std::uint64_t subsets = 0;
    for (int s = 1; s < singleton && subsets <= kParitySubsetBudget; ++s)
        subsets += binomial_saturating(static_cast<std::uint64_t>(len), static_cast<std::uint64_t>(s));
    if (subsets <= kParitySubsetBudget) return parity_rank_distance(null_space(ech.matrix), kr);
    const auto cyclic = coset_cyclic_bound(code, positions);
    if (cyclic && *cyclic >= singleton) return {singleton, true, LocalMethod::ParityRank, kr};
    auto r = parity_rank_distance(null_space(ech.matrix), kr);
    if (!r.exact && cyclic && *cyclic > r.distance) r.distance = *cyclic;
    return r;
}

bool AvailabilityReport::passed() const {
    return strongly_orthogonal && std::all_of(groups.begin(), groups.end(), [](const GroupCheck& g) { return g.pass; });
}

AvailabilityReport verify_availability(const CyclicLRC& code, const ConstructionParams& params, LocalMethod method) {
    const auto pf = build_partitions(params);
    if (pf.n != code.length()) throw ParamError("code length does not match the parameters");
    AvailabilityReport rep;
    for (std::size_t i = 0; i < params.t(); ++i) rep.localities.push_back(params.locality(i));
    rep.strongly_orthogonal = check_strong_orthogonality(pf, params.lengths);
    for (std::size_t i = 0; i < pf.partitions.size(); ++i)
        for (std::size_t j = 0; j < pf.partitions[i].size(); ++j) {
            GroupCheck g;
            g.partition = static_cast<int>(i);
            g.index = static_cast<int>(j);
            g.positions = pf.partitions[i][j];
            g.rho = params.rhos[i];
            g.local = local_distance(code, g.positions, method);
            g.pass = g.local.distance >= g.rho;
            rep.groups.push_back(std::move(g));
        }
    return rep;
}

LocalRepairer::LocalRepairer(const CyclicLRC& code, const ConstructionParams& params)
    : code_(code), rhos_(params.rhos), pf_(build_partitions(params)) {
    if (pf_.n != code.length()) throw ParamError("code length does not match the parameters");
    for (const auto& part : pf_.partitions) {
        std::vector<Matrix> mats;
        for (const auto& g : part) {
            std::vector<std::size_t> cols(g.begin(), g.end());
            const auto ech = row_reduce(code_.generator_matrix().columns(cols));
            if (ech.rank() == 0) {
                // Zero restriction: every symbol is pinned to zero.
                Matrix id(code_.field(), cols.size(), cols.size());
                for (std::size_t c = 0; c < cols.size(); ++c) id.at(c, c) = code_.field()->one();
                mats.push_back(std::move(id));
            } else {
                mats.push_back(null_space(ech.matrix));
            }
        }
        local_parity_.push_back(std::move(mats));
    }
}

std::vector<gf::Elem> LocalRepairer::repair(const ErasedWord& word, std::size_t partition) const {
    const auto& f = *code_.field();
    if (word.size() != static_cast<std::size_t>(code_.length()))
        throw RepairError("word length " + std::to_string(word.size()) + " does not match code length " +
                          std::to_string(code_.length()));
    if (partition >= pf_.partitions.size())
        throw RepairError("partition index " + std::to_string(partition + 1) + " out of range");

    std::vector<gf::Elem> out(word.size(), gf::Elem{0});
    for (std::size_t x = 0; x < word.size(); ++x) {
        if (word[x]) {
            if (!f.contains(*word[x])) throw RepairError("symbol outside the field");
            out[x] = *word[x];
        }
    }

    const auto& part = pf_.partitions[partition];
    for (std::size_t j = 0; j < part.size(); ++j) {
        const auto& g = part[j];
        std::vector<std::size_t> erased;
        std::vector<std::size_t> known;
        for (std::size_t v = 0; v < g.size(); ++v) (word[static_cast<std::size_t>(g[v])] ? known : erased).push_back(v);
        if (erased.empty()) continue;
        if (static_cast<int>(erased.size()) > rhos_[partition] - 1)
            throw RepairError("group " + std::to_string(j) + " of partition " + std::to_string(partition + 1) +
                              " has " + std::to_string(erased.size()) + " erasures, at most " +
                              std::to_string(rhos_[partition] - 1) + " are repairable");

        const Matrix& h = local_parity_[partition][j];
        // H_E x = -H_K c_K
        std::vector<gf::Elem> rhs(h.rows(), gf::Elem{0});
        for (std::size_t r = 0; r < h.rows(); ++r)
            for (auto v : known)
                rhs[r] = f.sub(rhs[r], f.mul(h.at(r, v), out[static_cast<std::size_t>(g[v])]));
        const Matrix he = h.columns(erased);
        if (rank(he) != erased.size())
            throw RepairError("erasures in group " + std::to_string(j) + " are not uniquely recoverable");
        const auto sol = solve(he, rhs);
        if (!sol) throw RepairError("inconsistent symbols in group " + std::to_string(j));
        for (std::size_t e = 0; e < erased.size(); ++e) out[static_cast<std::size_t>(g[erased[e]])] = (*sol)[e];
    }
    if (!code_.is_codeword(out)) throw RepairError("repaired word is not a codeword; the inputs are inconsistent");
    return out;
}

std::vector<gf::Elem> repair(const CyclicLRC& code, const ConstructionParams& params, const ErasedWord& word,
                             std::size_t partition) {
    return LocalRepairer(code, params).repair(word, partition);
}

}  // namespace lrc
