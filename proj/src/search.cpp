#include "lrc/search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "lrc/bounds.hpp"
#include "lrc/gf.hpp"
#include "lrc/parallel.hpp"

namespace lrc {

namespace {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;  // exact: r * num is a multiple of i
    }
    return r;
}

constexpr std::size_t kBatch = 4096;

}  // namespace

std::vector<std::pair<int, int>> affine_stabilizer(const DefiningSet& d) {
    const int n = d.modulus();
    std::vector<std::pair<int, int>> stab;
    const auto in = d.indicator();
    for (int a = 1; a < n || (n == 1 && a == 1); ++a) {
        if (std::gcd(a, n) != 1) continue;
        for (int c = 0; c < n; ++c) {
            const bool fixes = std::all_of(d.exponents().begin(), d.exponents().end(), [&](int e) {
                return in[static_cast<std::size_t>((static_cast<long long>(a) * e + c) % n)];
            });
            if (fixes) stab.emplace_back(a, c);
        }
    }
    return stab;
}

SearchResult optimize_dg(const ConstructionParams& base, int m, const SearchOptions& options) {
    base.validate();
    if (!base.global.empty()) throw SearchError("optimize_dg expects base parameters without global exponents");
    const int n = base.length();
    const DefiningSet local = local_union(base);
    const auto in_local = local.indicator();

    std::vector<int> pool;
    for (int e = 0; e < n; ++e)
        if (options.allow_overlap || !in_local[static_cast<std::size_t>(e)]) pool.push_back(e);
    if (m < 0 || static_cast<std::size_t>(m) > pool.size())
        throw SearchError("cannot choose " + std::to_string(m) + " global exponents from " +
                          std::to_string(pool.size()) + " candidates");
    const std::uint64_t total = binomial_saturating(pool.size(), static_cast<std::uint64_t>(m));
    if (total > options.max_candidates)
        throw SearchError("search space of " + std::to_string(total) + " subsets exceeds the cap of " +
                          std::to_string(options.max_candidates));

    std::vector<std::pair<int, int>> stab;
    for (auto ac : affine_stabilizer(local))
        if (ac != std::pair{1, 0}) stab.push_back(ac);

    SearchResult best;
    best.ht = -1;
    std::vector<int> best_set;

    auto evaluate = [&](const std::vector<int>& subset) {
        std::vector<int> all = local.exponents();
        all.insert(all.end(), subset.begin(), subset.end());
        return ht_bound(DefiningSet(n, all)).bound;
    };

    std::vector<std::vector<int>> batch;
    bool done = false;
    auto flush = [&] {
        std::vector<int> values(batch.size(), 0);
        parallel_blocks(batch.size(), worker_count(), [&](unsigned, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) values[i] = evaluate(batch[i]);
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            ++best.evaluated;
            if (values[i] > best.ht) {
                best.ht = values[i];
                best_set = batch[i];
                // The bound never exceeds |D| + 1 for a nonzero code.
                std::vector<int> all = local.exponents();
                all.insert(all.end(), batch[i].begin(), batch[i].end());
                const DefiningSet full(n, all);
                const int ceiling = static_cast<int>(full.size()) == n ? n + 1 : static_cast<int>(full.size()) + 1;
                if (!options.allow_overlap && best.ht >= ceiling) {
                    done = true;
                    break;
                }
            }
        }
        batch.clear();
    };

    // Lexicographic enumeration of m-subsets of the (sorted) pool.
    std::vector<std::size_t> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<int> subset(static_cast<std::size_t>(m));
    std::vector<int> image(static_cast<std::size_t>(m));
    while (!done) {
        ++best.candidates;
        for (std::size_t i = 0; i < idx.size(); ++i) subset[i] = pool[idx[i]];
        bool canonical = true;
        for (auto [a, c] : stab) {
            for (std::size_t i = 0; i < subset.size(); ++i)
                image[i] = static_cast<int>((static_cast<long long>(a) * subset[i] + c) % n);
            std::sort(image.begin(), image.end());
            if (image < subset) {
                canonical = false;
                break;
            }
        }
        if (canonical) {
            batch.push_back(subset);
            if (batch.size() == kBatch) flush();
        }
        // Advance to the next combination.
        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == pool.size() - static_cast<std::size_t>(m - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (!done && !batch.empty()) flush();

    best.global = DefiningSet(n, best_set);
    best.dimension = n - static_cast<int>(local.unite(best.global).size());
    return best;
}

const std::vector<Table1Row>& table1_printed() {
    static const std::vector<Table1Row> rows = {
        {15, 3, 5, {4}, 5, 7, 7},
        {15, 3, 5, {4, 7, 8, 11}, 11, 4, 4},
        {21, 3, 7, {8}, 5, 11, 11},
        {21, 3, 7, {4, 5}, 6, 10, 11},
        {21, 3, 7, {8, 10, 11, 13}, 11, 8, 8},
        {51, 3, 17, {16}, 5, 31, 31},
        {51, 3, 17, {14, 16}, 6, 30, 31},
        {51, 3, 17, {10, 11, 13, 14, 16}, 11, 27, 28},
        {35, 5, 7, {4}, 4, 23, 24},
        {35, 5, 7, {4, 6}, 5, 22, 23},
        {35, 5, 7, {8, 9, 11, 12, 13}, 10, 19, 20},
    };
    return rows;
}

ConstructionParams table1_params(const Table1Row& row) {
    ConstructionParams p;
    p.lengths = {row.n1, row.n2};
    p.rhos = {2, 2};
    p.offsets = {1, 1};
    p.shift = 0;
    p.global = row.dg;
    return p;
}

std::vector<Table1Result> table1_rows() {
    std::vector<Table1Result> out;
    for (const auto& row : table1_printed()) {
        const auto params = table1_params(row);
        const auto d = full_defining_set(params);
        Table1Result r;
        r.printed = row;
        r.ht = ht_bound(d).bound;
        r.k = params.length() - static_cast<int>(d.size());
        r.bound = dim_bound_thm4(params.lengths, 2, r.ht);
        r.field_order = gf::find_field_for_length(static_cast<std::uint32_t>(params.length()))->order();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace lrc
