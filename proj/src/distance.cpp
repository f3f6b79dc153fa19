#include "lrc/distance.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "lrc/bounds.hpp"
#include "lrc/parallel.hpp"

namespace lrc {

std::string to_string(DistanceMethod m) { return m == DistanceMethod::Exhaustive ? "exhaustive" : "sampled"; }

std::uint64_t message_space_size(std::uint32_t q, int k) {
    std::uint64_t s = 1;
    for (int i = 0; i < k; ++i) {
        if (s > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        s *= q;
    }
    return s;
}

namespace {

int weight(const std::vector<gf::Elem>& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](gf::Elem e) { return e.value != 0; }));
}

void axpy(const gf::FiniteField& f, std::vector<gf::Elem>& acc, gf::Elem a, std::span<const gf::Elem> row) {
    if (a.value == 0) return;
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] = f.add(acc[c], f.mul(a, row[c]));
}

// Minimum weight over messages (0, ..., 0, 1, x_{lead+1}, ..., x_{k-1}) whose
// free part, read as a base-q number with x_{k-1} least significant, lies in
// [begin, end).
int scan_lead(const Matrix& basis, std::size_t lead, std::uint64_t begin, std::uint64_t end,
              std::uint64_t& evaluations) {
    const auto& f = *basis.field();
    const std::uint32_t q = f.order();
    const std::size_t k = basis.rows();
    const std::size_t free = k - lead - 1;

    std::vector<std::uint32_t> digits(free, 0);
    auto idx = begin;
    for (std::size_t i = free; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(idx % q);
        idx /= q;
    }
    std::vector<gf::Elem> word(basis.row(lead).begin(), basis.row(lead).end());
    for (std::size_t i = 0; i < free; ++i) axpy(f, word, gf::Elem{digits[i]}, basis.row(lead + 1 + i));

    int best = std::numeric_limits<int>::max();
    for (auto cur = begin; cur < end; ++cur) {
        best = std::min(best, weight(word));
        ++evaluations;
        if (cur + 1 == end) break;
        // Odometer step on the least significant digit, carrying leftwards.
        for (std::size_t i = free; i-- > 0;) {
            const gf::Elem old{digits[i]};
            digits[i] = (digits[i] + 1) % q;
            axpy(f, word, f.sub(gf::Elem{digits[i]}, old), basis.row(lead + 1 + i));
            if (digits[i] != 0) break;
        }
    }
    return best;
}

}  // namespace

int min_weight_enumerate(const Matrix& basis, std::uint64_t* evaluations) {
    const std::size_t k = basis.rows();
    if (k == 0) {
        if (evaluations) *evaluations = 0;
        return static_cast<int>(basis.cols()) + 1;
    }
    const std::uint32_t q = basis.field()->order();
    const unsigned workers = worker_count();
    int best = std::numeric_limits<int>::max();
    std::uint64_t total = 0;
    for (std::size_t lead = 0; lead < k; ++lead) {
        const std::uint64_t space = message_space_size(q, static_cast<int>(k - lead - 1));
        std::vector<int> local_best(workers, std::numeric_limits<int>::max());
        std::vector<std::uint64_t> local_evals(workers, 0);
        parallel_blocks(space, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
            if (begin < end) local_best[w] = scan_lead(basis, lead, begin, end, local_evals[w]);
        });
        for (unsigned w = 0; w < workers; ++w) {
            best = std::min(best, local_best[w]);
            total += local_evals[w];
        }
    }
    if (evaluations) *evaluations = total;
    return best;
}

DistanceResult min_distance_exact(const CyclicLRC& code, std::uint64_t budget) {
    if (code.is_zero_code()) return {code.length() + 1, code.length() + 1, true, DistanceMethod::Exhaustive, 0};
    if (message_space_size(code.field()->order(), code.dimension()) > budget)
        return min_distance_bracket(code, kDefaultBracketTrials, 0);
    DistanceResult r;
    r.method = DistanceMethod::Exhaustive;
    r.exact = true;
    r.lower = r.upper = min_weight_enumerate(code.generator_matrix(), &r.evaluations);
    return r;
}

DistanceResult min_distance_bracket(const CyclicLRC& code, std::uint64_t trials, std::uint64_t seed) {
    DistanceResult r;
    r.method = DistanceMethod::Sampled;
    r.exact = false;
    r.lower = ht_bound(code.defining_set()).bound;
    if (code.is_zero_code()) {
        r.upper = code.length() + 1;
        return r;
    }
    const auto& g = code.generator_matrix();
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        std::vector<gf::Elem> row(g.row(i).begin(), g.row(i).end());
        best = std::min(best, weight(row));
        ++r.evaluations;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> symbol(0, code.field()->order() - 1);
    std::vector<gf::Elem> message(static_cast<std::size_t>(code.dimension()));
    for (std::uint64_t t = 0; t < trials; ++t) {
        bool nonzero = false;
        while (!nonzero) {
            for (auto& m : message) {
                m = gf::Elem{symbol(rng)};
                nonzero = nonzero || m.value != 0;
            }
        }
        best = std::min(best, weight(code.encode(message)));
        ++r.evaluations;
    }
    r.upper = best;
    return r;
}

}  // namespace lrc
