#pragma once

// Repair groups of the construction and everything checked about them:
// strong orthogonality of the partitions, distance of each local code, and
// erasure repair inside a group.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/construction.hpp"

namespace lrc {

class RepairError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Group = std::vector<int>;
using Partition = std::vector<Group>;

/// Partition i (zero-based) consists of the groups
/// A_{i,j} = { j + v * n/n_i : 0 <= v < n_i } for 0 <= j < n/n_i.
struct PartitionFamily {
    int n = 0;
    std::vector<int> lengths;
    std::vector<Partition> partitions;
};

PartitionFamily build_partitions(const ConstructionParams& params);

/// (x mod n_1, ..., x mod n_t)
std::vector<int> crt_map(int x, const std::vector<int>& lengths);

/// Strong orthogonality under the residue map: every group of partition i
/// varies only coordinate i. Throws std::invalid_argument on malformed
/// partitions.
bool check_strong_orthogonality(const PartitionFamily& pf, const std::vector<int>& lengths);

/// Same check under an explicit position map onto Z/n_1 x ... x Z/n_t. The
/// map must be a bijection for the check to pass.
bool check_strong_orthogonality(const PartitionFamily& pf, const std::function<std::vector<int>(int)>& position_map);

enum class LocalMethod { Auto, Enumerate, ParityRank };

std::string to_string(LocalMethod m);

struct LocalDistance {
    /// Exact distance when `exact`, otherwise a lower bound. A restriction
    /// with no nonzero codeword reports |positions| + 1.
    int distance = 0;
    bool exact = false;
    LocalMethod method = LocalMethod::Enumerate;
    int restricted_dimension = 0;
    friend bool operator==(const LocalDistance&, const LocalDistance&) = default;
};

inline constexpr std::uint64_t kLocalEnumerationBudget = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kParitySubsetBudget = 2'000'000;

/// Distance of the code restricted (punctured) to `positions`.
/// Auto enumerates when q^(restricted dimension) fits the enumeration
/// budget; otherwise it searches for the smallest linearly dependent set of
/// parity-check columns, which is exact unless the subset budget runs out.
/// Past that budget, positions forming a coset of a subgroup of Z_n also get
/// the Hartmann-Tzeng bound of the punctured cyclic code; when it meets the
/// Singleton bound the result is exact.
LocalDistance local_distance(const CyclicLRC& code, const std::vector<int>& positions,
                             LocalMethod method = LocalMethod::Auto);

struct GroupCheck {
    int partition = 0;
    int index = 0;
    Group positions;
    int rho = 0;
    LocalDistance local;
    bool pass = false;
    friend bool operator==(const GroupCheck&, const GroupCheck&) = default;
};

struct AvailabilityReport {
    std::vector<GroupCheck> groups;  ///< ordered by (partition, index)
    std::vector<int> localities;     ///< r_i = n_i - rho_i + 1
    bool strongly_orthogonal = false;
    bool passed() const;
    friend bool operator==(const AvailabilityReport&, const AvailabilityReport&) = default;
};

AvailabilityReport verify_availability(const CyclicLRC& code, const ConstructionParams& params,
                                       LocalMethod method = LocalMethod::Auto);

using ErasedWord = std::vector<std::optional<gf::Elem>>;

/// Per-group erasure repair with the local parity checks cached.
class LocalRepairer {
public:
    LocalRepairer(const CyclicLRC& code, const ConstructionParams& params);

    const PartitionFamily& partitions() const { return pf_; }

    /// Repairs every group of partition i independently. Throws RepairError
    /// when a group holds more than rho_i - 1 erasures, when the local system
    /// has no unique solution, or when the result is not a codeword.
    std::vector<gf::Elem> repair(const ErasedWord& word, std::size_t partition) const;

private:
    CyclicLRC code_;
    std::vector<int> rhos_;
    PartitionFamily pf_;
    std::vector<std::vector<Matrix>> local_parity_;  // [i][j], columns follow group order
};

std::vector<gf::Elem> repair(const CyclicLRC& code, const ConstructionParams& params, const ErasedWord& word,
                             std::size_t partition);

}  // namespace lrc
