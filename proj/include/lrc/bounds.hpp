#pragma once

// Distance and dimension bounds for cyclic codes with locality.
//
// Lower bounds on the distance come from arithmetic progressions inside the
// defining set (BCH, Hartmann-Tzeng); upper bounds on the distance from the
// Singleton-like bound for (r, rho)-locality; upper bounds on the dimension
// from puncturing a hyperrectangle of at most d-1 positions in the product
// arrangement of the repair groups.

#include <optional>
#include <vector>

#include "lrc/construction.hpp"

namespace lrc {

/// Progression certificate: the exponents u + s1*z1 + s2*z2 (mod n) for
/// 0 <= s1 <= delta-2 and 0 <= s2 <= gamma all lie in the defining set, with
/// z1 and z2 units mod n. Certifies d >= delta + gamma.
struct HTWitness {
    int n = 1;
    int u = 0;
    int z1 = 1;
    int z2 = 1;
    int delta = 1;
    int gamma = 0;

    int value() const { return delta + gamma; }
    friend bool operator==(const HTWitness&, const HTWitness&) = default;
};

struct DistanceBound {
    int bound = 1;
    HTWitness witness;
    friend bool operator==(const DistanceBound&, const DistanceBound&) = default;
};

/// Largest delta such that D holds delta-1 exponents u, u+z, ..., u+(delta-2)z
/// with z a unit mod n. Empty D gives 1; the full set gives n+1.
DistanceBound bch_bound(const DefiningSet& d);

/// Exhaustive Hartmann-Tzeng search. Ties are broken by the lexicographically
/// smallest (u, z1, z2, delta).
DistanceBound ht_bound(const DefiningSet& d);

/// Independent re-check of a witness against a defining set.
bool validate_witness(const DefiningSet& d, const HTWitness& w);

/// d <= n - k + 1 - (ceil(k/r) - 1)(rho - 1)
int singleton_like(int n, int k, int r, int rho);

/// (j*q - i*p) mod pq
int sij(int i, int j, int p, int q);

struct XiValue {
    int xi = 0;
    int v = 0;
    friend bool operator==(const XiValue&, const XiValue&) = default;
};

/// Number of leading (smallest) lengths the d-1 punctured positions fill
/// completely, and the side length v of the remaining hypercube.
XiValue xi_value(const std::vector<int>& sorted_lengths, int rho, int d);

/// Dimension bound for strong availability with a uniform rho. Lengths are
/// sorted ascending internally.
int dim_bound_thm4(std::vector<int> lengths, int rho, int d);

struct RectBound {
    int bound = 0;
    std::vector<int> sides;
    friend bool operator==(const RectBound&, const RectBound&) = default;
};

/// Refined dimension bound: best single hyperrectangle (v_1..v_t) with
/// v_i <= n_i and prod v_i <= d-1, each side losing rho_i - 1 positions to
/// the local dependencies.
RectBound dim_bound_rect(const std::vector<int>& lengths, const std::vector<int>& rhos, int d);

/// prod rho_i
int product_distance_bound(const ConstructionParams& params);

struct BoundReport {
    DistanceBound bch;
    DistanceBound ht;
    int product = 0;
    /// Per locality i; empty for the zero code.
    std::vector<int> singleton_like;
    std::optional<int> singleton_like_min;
    /// Only for uniform rho; evaluated at design_distance.
    std::optional<int> thm4;
    std::optional<XiValue> thm4_xi;
    std::optional<RectBound> rect;
    /// max(ht, product) capped at n: the certified distance the dimension
    /// bounds are evaluated at.
    int design_distance = 0;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport compute_bounds(const ConstructionParams& params, const CyclicLRC& code);

}  // namespace lrc
