#pragma once

// Shared fixtures for the test binaries: the worked examples, random valid
// parameter sets, and a naive minimum-distance oracle that shares no code
// path with the library's enumerator.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "lrc/construction.hpp"

namespace testsupport {

inline lrc::ConstructionParams example1() {
    lrc::ConstructionParams p;
    p.lengths = {3, 5};
    p.rhos = {2, 2};
    p.offsets = {1, 1};
    p.global = {7, 8};
    p.field_order = 16;
    return p;
}

inline lrc::ConstructionParams example2() {
    lrc::ConstructionParams p;
    p.lengths = {3, 4};
    p.rhos = {2, 2};
    p.offsets = {1, 1};
    p.global = {5, 7};
    p.field_order = 13;
    return p;
}

/// n = 6 over GF(7), D = {0,2,4} u {0,3}.
inline lrc::ConstructionParams desk6() {
    lrc::ConstructionParams p;
    p.lengths = {2, 3};
    p.rhos = {2, 2};
    p.offsets = {1, 1};
    p.field_order = 7;
    return p;
}

inline lrc::ConstructionParams base(int n1, int n2) {
    lrc::ConstructionParams p;
    p.lengths = {n1, n2};
    p.rhos = {2, 2};
    p.offsets = {1, 1};
    return p;
}

/// Random valid parameters with n <= max_n and D_g empty.
inline lrc::ConstructionParams random_params(std::mt19937& rng, int max_n, int max_t = 3) {
    while (true) {
        std::uniform_int_distribution<int> tdist(1, max_t);
        const int t = tdist(rng);
        lrc::ConstructionParams p;
        int n = 1;
        bool ok = true;
        for (int i = 0; i < t && ok; ++i) {
            std::vector<int> choices;
            for (int c = 2; c * n <= max_n; ++c)
                if (std::all_of(p.lengths.begin(), p.lengths.end(), [&](int x) { return std::gcd(x, c) == 1; }))
                    choices.push_back(c);
            if (choices.empty()) {
                ok = false;
                break;
            }
            const int ni = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
            p.lengths.push_back(ni);
            n *= ni;
            p.rhos.push_back(std::uniform_int_distribution<int>(2, ni)(rng));
            std::vector<int> units;
            for (int b = 1; b < ni; ++b)
                if (std::gcd(b, ni) == 1) units.push_back(b);
            p.offsets.push_back(units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)]);
        }
        if (!ok || n < 2) continue;
        p.shift = std::uniform_int_distribution<int>(0, n - 1)(rng);
        return p;
    }
}

/// Minimum weight over all q^k messages, each encoded by direct convolution
/// with g(x) modulo x^n - 1 using only field add/mul.
inline int naive_min_distance(const lrc::CyclicLRC& code) {
    const auto& f = *code.field();
    const int n = code.length();
    const int k = code.dimension();
    const auto& g = code.generator_poly().coeffs();
    const std::uint32_t q = f.order();
    std::vector<std::uint32_t> msg(static_cast<std::size_t>(k), 0);
    int best = std::numeric_limits<int>::max();
    while (true) {
        std::size_t pos = 0;
        while (pos < msg.size() && msg[pos] == q - 1) msg[pos++] = 0;
        if (pos == msg.size()) break;
        ++msg[pos];
        std::vector<lrc::gf::Elem> word(static_cast<std::size_t>(n), lrc::gf::Elem{0});
        for (int i = 0; i < k; ++i)
            for (std::size_t j = 0; j < g.size(); ++j) {
                auto& w = word[(static_cast<std::size_t>(i) + j) % static_cast<std::size_t>(n)];
                w = f.add(w, f.mul(lrc::gf::Elem{msg[static_cast<std::size_t>(i)]}, g[j]));
            }
        int wt = 0;
        for (int x = 0; x < n; ++x) wt += word[static_cast<std::size_t>(x)].value != 0;
        best = std::min(best, wt);
    }
    return best;
}

}  // namespace testsupport
