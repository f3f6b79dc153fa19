#pragma once

// Minimum distance of a whole code: exact by message enumeration when the
// budget allows, otherwise bracketed between the Hartmann-Tzeng bound and the
// lightest codeword found by random sampling.

#include <cstdint>
#include <string>

#include "lrc/construction.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultBracketTrials = 100000;

enum class DistanceMethod { Exhaustive, Sampled };

std::string to_string(DistanceMethod m);

struct DistanceResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    DistanceMethod method = DistanceMethod::Exhaustive;
    /// Number of codeword weights computed.
    std::uint64_t evaluations = 0;
    friend bool operator==(const DistanceResult&, const DistanceResult&) = default;
};

/// Exact minimum nonzero weight of the row space of `basis` (rows linearly
/// independent). Only messages whose first nonzero entry is 1 are visited,
/// since scalar multiples share a weight. A basis with no rows yields
/// cols + 1. `evaluations` receives the number of weights computed.
int min_weight_enumerate(const Matrix& basis, std::uint64_t* evaluations = nullptr);

/// q^k, saturating at UINT64_MAX.
std::uint64_t message_space_size(std::uint32_t q, int k);

/// Exact when q^k <= budget; otherwise falls back to
/// min_distance_bracket(code, kDefaultBracketTrials, 0).
DistanceResult min_distance_exact(const CyclicLRC& code, std::uint64_t budget = kDefaultDistanceBudget);

/// Lower bound from the Hartmann-Tzeng search; upper bound from `trials`
/// random nonzero messages plus every generator row. Deterministic per seed.
DistanceResult min_distance_bracket(const CyclicLRC& code, std::uint64_t trials, std::uint64_t seed);

}  // namespace lrc
