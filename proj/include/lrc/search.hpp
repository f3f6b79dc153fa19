#pragma once

// Choice of the global exponents D_g by exhaustive search against the
// Hartmann-Tzeng bound, and the reference parameter table built from it.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lrc/construction.hpp"

namespace lrc {

class SearchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SearchOptions {
    bool allow_overlap = false;
    /// Maximum number of m-subsets to enumerate.
    std::uint64_t max_candidates = 10'000'000;
};

struct SearchResult {
    DefiningSet global;
    int ht = 0;
    int dimension = 0;
    /// m-subsets enumerated.
    std::uint64_t candidates = 0;
    /// Subsets whose bound was computed; the rest are images of an earlier
    /// subset under an affine map fixing the local defining sets.
    std::uint64_t evaluated = 0;
};

/// Best m-subset D_g of [0, n-1] (minus the local exponents unless overlap
/// is allowed) for the Hartmann-Tzeng bound of the full defining set. Ties
/// go to the lexicographically smallest subset. `base.global` must be empty.
SearchResult optimize_dg(const ConstructionParams& base, int m, const SearchOptions& options = {});

/// Affine maps x -> a*x + c (a a unit mod n) that fix `d` setwise, as (a, c)
/// pairs; always contains the identity (1, 0).
std::vector<std::pair<int, int>> affine_stabilizer(const DefiningSet& d);

/// A row of the reference table as printed.
struct Table1Row {
    int n = 0;
    int n1 = 0;
    int n2 = 0;
    std::vector<int> dg;
    int ht = 0;
    int k = 0;
    int bound = 0;
};

const std::vector<Table1Row>& table1_printed();

struct Table1Result {
    Table1Row printed;
    int ht = 0;
    int k = 0;
    int bound = 0;
    std::uint32_t field_order = 0;
    bool matches() const { return ht == printed.ht && k == printed.k && bound == printed.bound; }
};

ConstructionParams table1_params(const Table1Row& row);

/// Recomputes the HT bound, dimension and dimension bound of every row.
std::vector<Table1Result> table1_rows();

}  // namespace lrc
