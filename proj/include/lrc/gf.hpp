#pragma once

// Finite fields GF(p^m) in a polynomial basis, and univariate polynomials over them.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc::gf {

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Largest supported field order.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// Raw element handle. The value is the base-p integer sum c_i p^i of the
/// coefficient vector (c_0, ..., c_{m-1}) in the polynomial basis, so 0 is the
/// zero element and 1 the unit. Only meaningful together with its field.
struct Elem {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

bool is_prime(std::uint64_t x);

class FiniteField {
public:
    /// GF(p^m) with the smallest monic irreducible modulus and the smallest
    /// primitive element, both ordered by their base-p integer encoding.
    static std::shared_ptr<const FiniteField> create(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    /// Monic modulus, lowest degree first, length m+1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem primitive() const { return primitive_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    /// Image of an integer under Z -> GF(p).
    Elem from_int(std::int64_t v) const;
    /// Element with the given polynomial-basis coefficients (low degree first).
    Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coefficients(Elem a) const;
    bool contains(Elem a) const { return a.value < q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t e) const;

    /// primitive()^e for any integer e.
    Elem exp(std::int64_t e) const;
    /// Discrete log base primitive(); a must be nonzero.
    std::uint32_t log(Elem a) const;
    /// Multiplicative order of a nonzero element.
    std::uint32_t multiplicative_order(Elem a) const;

    /// Element of multiplicative order exactly n, namely primitive()^((q-1)/n).
    Elem nth_root_of_unity(std::uint32_t n) const;

    std::string describe() const;
    std::string modulus_string() const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        return a.p_ == b.p_ && a.modulus_ == b.modulus_;
    }

private:
    FiniteField() = default;
    void check(Elem a) const;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Elem primitive_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = primitive^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // inverse of exp_ on nonzero values
};

using FieldPtr = std::shared_ptr<const FiniteField>;

FieldPtr field_new(std::uint32_t p, std::uint32_t m);

/// Field of smallest order q = p^m with q = 1 (mod n).
FieldPtr find_field_for_length(std::uint32_t n);

/// Prime-power decomposition of q, if q = p^m.
struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
};
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Value-semantic field element bound to its field. Arithmetic between
/// elements of different fields throws FieldError.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem e);
    FieldElement(FieldPtr field, std::int64_t v);

    const FieldPtr& field() const { return field_; }
    Elem raw() const { return e_; }
    std::vector<std::uint32_t> coefficients() const { return field_->coefficients(e_); }
    bool is_zero() const { return e_.value == 0; }

    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    FieldPtr field_;
    Elem e_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Polynomial over a finite field, coefficients lowest degree first with no
/// trailing zeros (the zero polynomial has no coefficients).
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly constant(FieldPtr field, Elem c);
    /// c * x^k
    static Poly monomial(FieldPtr field, std::size_t k, Elem c);
    /// x^n - 1
    static Poly x_pow_minus_one(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }
    Elem leading() const { return coeffs_.empty() ? Elem{0} : coeffs_.back(); }

    Elem eval(Elem x) const;

    friend bool operator==(const Poly& a, const Poly& b);

private:
    void trim();

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Elem c);

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};
PolyDivision poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Elem poly_eval(const Poly& f, Elem x);

}  // namespace lrc::gf
