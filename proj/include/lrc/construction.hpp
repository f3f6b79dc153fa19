#pragma once

// Cyclic LRCs from defining sets: the local sets D_i that give each repair
// partition its locality, plus a global set D_g that raises the distance.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/gf.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters of the product-style cyclic construction.
struct ConstructionParams {
    std::vector<int> lengths;  ///< n_1..n_t, pairwise coprime, each >= 2
    std::vector<int> rhos;     ///< local distances, 2 <= rho_i <= n_i
    std::vector<int> offsets;  ///< b_i, coprime to n_i; empty means all 1
    int shift = 0;             ///< l
    std::vector<int> global;   ///< D_g, exponents in [0, n-1]
    std::optional<std::uint32_t> field_order;

    std::size_t t() const { return lengths.size(); }
    /// n = product of the n_i.
    int length() const;
    int offset(std::size_t i) const { return offsets.empty() ? 1 : offsets.at(i); }
    /// r_i = n_i - rho_i + 1
    int locality(std::size_t i) const { return lengths.at(i) - rhos.at(i) + 1; }

    /// Throws ParamError describing the first violated constraint.
    void validate() const;

    friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Sorted set of exponents modulo n.
class DefiningSet {
public:
    explicit DefiningSet(int modulus = 1) : modulus_(modulus) {}
    /// Reduces every exponent mod n and merges duplicates.
    DefiningSet(int modulus, const std::vector<int>& exponents);

    int modulus() const { return modulus_; }
    const std::vector<int>& exponents() const { return exps_; }
    std::size_t size() const { return exps_.size(); }
    bool empty() const { return exps_.empty(); }
    bool contains(int e) const;
    /// Membership table indexed by exponent.
    std::vector<bool> indicator() const;

    DefiningSet unite(const DefiningSet& other) const;
    DefiningSet intersect(const DefiningSet& other) const;

    friend bool operator==(const DefiningSet&, const DefiningSet&) = default;

private:
    int modulus_;
    std::vector<int> exps_;
};

std::string to_string(const DefiningSet& d);

/// D_i = { j*n_i + s*b_i + l mod n : 0 <= j < n/n_i, 0 <= s <= rho_i - 2 }, i zero-based.
DefiningSet local_defining_set(const ConstructionParams& params, std::size_t i);
/// Union of all D_i (without D_g).
DefiningSet local_union(const ConstructionParams& params);
/// Union of all D_i and D_g.
DefiningSet full_defining_set(const ConstructionParams& params);

/// Field used for the construction: the requested order, or the smallest
/// field containing the n-th roots of unity.
gf::FieldPtr field_for(const ConstructionParams& params);

class CyclicLRC {
public:
    CyclicLRC(gf::FieldPtr field, DefiningSet defining_set);

    const gf::FieldPtr& field() const { return field_; }
    int length() const { return n_; }
    int dimension() const { return k_; }
    gf::Elem alpha() const { return alpha_; }
    const DefiningSet& defining_set() const { return d_; }
    const gf::Poly& generator_poly() const { return g_; }
    /// Shift basis: row i holds the coefficients of x^i g(x).
    const Matrix& generator_matrix() const { return gen_; }
    /// Row-reduced generator matrix (information set on the pivot columns).
    Matrix systematic_generator() const;
    /// Parity-check matrix whose rows span the dual code.
    const Matrix& parity_check_matrix() const { return parity_; }
    bool is_zero_code() const { return k_ == 0; }

    /// Coefficients of m(x) g(x) mod (x^n - 1).
    std::vector<gf::Elem> encode(const std::vector<gf::Elem>& message) const;
    /// True iff the word polynomial vanishes at alpha^e for every e in D.
    bool is_codeword(const std::vector<gf::Elem>& word) const;

private:
    gf::FieldPtr field_;
    int n_;
    int k_;
    gf::Elem alpha_;
    DefiningSet d_;
    gf::Poly g_;
    Matrix gen_;
    Matrix parity_;
};

CyclicLRC build_code(const ConstructionParams& params);

}  // namespace lrc
