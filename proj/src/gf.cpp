#include "lrc/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lrc::gf {

namespace {

// Slow reference arithmetic on base-p encoded coefficient vectors. Used only
// while building the log/exp tables.
struct SlowArith {
    std::uint32_t p;
    std::uint32_t m;
    std::vector<std::uint32_t> modulus;  // monic, length m+1

    std::vector<std::uint32_t> digits(std::uint32_t v) const {
        std::vector<std::uint32_t> d(m, 0);
        for (std::uint32_t i = 0; i < m; ++i) {
            d[i] = v % p;
            v /= p;
        }
        return d;
    }

    std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
        std::uint32_t v = 0;
        for (std::uint32_t i = m; i-- > 0;) v = v * p + d[i];
        return v;
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        auto da = digits(a);
        auto db = digits(b);
        std::vector<std::uint64_t> prod(2 * m, 0);
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
        for (std::uint32_t deg = 2 * m; deg-- > m;) {
            const auto c = prod[deg];
            if (c == 0) continue;
            // x^deg = x^(deg-m) * x^m, and x^m = -(modulus without leading term)
            for (std::uint32_t i = 0; i < m; ++i)
                prod[deg - m + i] = (prod[deg - m + i] + (p - c) * modulus[i]) % p;
            prod[deg] = 0;
        }
        std::vector<std::uint32_t> r(m);
        for (std::uint32_t i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
        return encode(r);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> f;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            f.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) f.push_back(x);
    return f;
}

// Remainder of a monic-or-not polynomial division over GF(p), dense vectors low first.
std::vector<std::uint32_t> mod_prime_poly(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                          std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    std::uint32_t lead_inv = 1;
    for (std::uint32_t c = 1; c < p; ++c)
        if ((std::uint64_t{c} * b[db]) % p == 1) lead_inv = c;
    for (std::size_t deg = a.size(); deg-- > db;) {
        if (a[deg] == 0) continue;
        const std::uint64_t f = (std::uint64_t{a[deg]} * lead_inv) % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = (f * b[i]) % p;
            auto& slot = a[deg - db + i];
            slot = static_cast<std::uint32_t>((slot + p - sub) % p);
        }
    }
    a.resize(std::min(a.size(), db));
    return a;
}

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            std::vector<std::uint32_t> g(d + 1, 0);
            auto v = low;
            for (std::uint32_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            auto r = mod_prime_poly(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
        }
    }
    return true;
}

std::string poly_to_string(const std::vector<std::uint32_t>& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{static_cast<std::uint32_t>(p), m};
}

std::shared_ptr<const FiniteField> FiniteField::create(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw FieldError("field extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds the size cap 2^20");
    }

    std::shared_ptr<FiniteField> f(new FiniteField());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<std::uint32_t>(q);

    // Monic degree-m polynomials in increasing order of their base-p encoding.
    for (std::uint64_t low = 0; low < q; ++low) {
        std::vector<std::uint32_t> cand(m + 1, 0);
        auto v = low;
        for (std::uint32_t i = 0; i < m; ++i) {
            cand[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        cand[m] = 1;
        if (is_irreducible(cand, p)) {
            f->modulus_ = std::move(cand);
            break;
        }
    }

    SlowArith slow{p, m, f->modulus_};
    const std::uint64_t group = q - 1;
    const auto factors = prime_factors(group);
    for (std::uint32_t g = 1; g < q; ++g) {
        const bool primitive = std::all_of(factors.begin(), factors.end(),
                                           [&](std::uint64_t r) { return slow.pow(g, group / r) != 1; });
        if (primitive) {
            f->primitive_ = Elem{g};
            break;
        }
    }

    f->exp_.resize(group);
    f->log_.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
        f->exp_[i] = x;
        f->log_[x] = static_cast<std::uint32_t>(i);
        x = slow.mul(x, f->primitive_.value);
    }
    return f;
}

FieldPtr field_new(std::uint32_t p, std::uint32_t m) { return FiniteField::create(p, m); }

FieldPtr find_field_for_length(std::uint32_t n) {
    if (n < 2) throw FieldError("code length must be at least 2");
    for (std::uint64_t q = n + 1; q <= kMaxFieldOrder; q += n) {
        if (auto pp = as_prime_power(q)) return FiniteField::create(pp->p, pp->m);
    }
    throw FieldError("no field of order at most 2^20 contains the " + std::to_string(n) + "-th roots of unity");
}

void FiniteField::check(Elem a) const {
    if (a.value >= q_) throw FieldError("element " + std::to_string(a.value) + " does not belong to " + describe());
}

Elem FiniteField::from_int(std::int64_t v) const {
    const auto pp = static_cast<std::int64_t>(p_);
    return Elem{static_cast<std::uint32_t>(((v % pp) + pp) % pp)};
}

Elem FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > m_) throw FieldError("too many coefficients for " + describe());
    std::uint32_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) throw FieldError("coefficient out of range for " + describe());
        v = v * p_ + coeffs[i];
    }
    return Elem{v};
}

std::vector<std::uint32_t> FiniteField::coefficients(Elem a) const {
    check(a);
    std::vector<std::uint32_t> c(m_);
    auto v = a.value;
    for (auto& d : c) {
        d = v % p_;
        v /= p_;
    }
    return c;
}

Elem FiniteField::add(Elem a, Elem b) const {
    check(a);
    check(b);
    if (p_ == 2) return Elem{a.value ^ b.value};
    if (m_ == 1) return Elem{(a.value + b.value) % p_};
    std::uint32_t r = 0;
    std::uint32_t scale = 1;
    auto x = a.value;
    auto y = b.value;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return Elem{r};
}

Elem FiniteField::neg(Elem a) const {
    check(a);
    if (p_ == 2) return a;
    if (m_ == 1) return Elem{(p_ - a.value) % p_};
    std::uint32_t r = 0;
    std::uint32_t scale = 1;
    auto x = a.value;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return Elem{r};
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::mul(Elem a, Elem b) const {
    check(a);
    check(b);
    if (a.value == 0 || b.value == 0) return Elem{0};
    const std::uint32_t group = q_ - 1;
    std::uint32_t e = log_[a.value] + log_[b.value];
    if (e >= group) e -= group;
    return Elem{exp_[e]};
}

Elem FiniteField::inv(Elem a) const {
    check(a);
    if (a.value == 0) throw FieldError("inverse of zero in " + describe());
    const std::uint32_t group = q_ - 1;
    return Elem{exp_[(group - log_[a.value]) % group]};
}

Elem FiniteField::pow(Elem a, std::int64_t e) const {
    check(a);
    if (a.value == 0) {
        if (e < 0) throw FieldError("negative power of zero in " + describe());
        return e == 0 ? one() : zero();
    }
    const auto group = static_cast<std::int64_t>(q_ - 1);
    std::int64_t r = (static_cast<std::int64_t>(log_[a.value]) * (((e % group) + group) % group)) % group;
    return Elem{exp_[static_cast<std::size_t>(r)]};
}

Elem FiniteField::exp(std::int64_t e) const {
    const auto group = static_cast<std::int64_t>(q_ - 1);
    return Elem{exp_[static_cast<std::size_t>(((e % group) + group) % group)]};
}

std::uint32_t FiniteField::log(Elem a) const {
    check(a);
    if (a.value == 0) throw FieldError("logarithm of zero in " + describe());
    return log_[a.value];
}

std::uint32_t FiniteField::multiplicative_order(Elem a) const {
    const std::uint32_t group = q_ - 1;
    const std::uint32_t l = log(a);
    return group / std::gcd(group, l);
}

Elem FiniteField::nth_root_of_unity(std::uint32_t n) const {
    if (n == 0 || (q_ - 1) % n != 0)
        throw FieldError("n = " + std::to_string(n) + " does not divide q - 1 = " + std::to_string(q_ - 1) + " in " +
                         describe());
    return exp((q_ - 1) / n);
}

std::string FiniteField::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    return os.str();
}

std::string FiniteField::modulus_string() const { return poly_to_string(modulus_); }

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

// FieldElement

FieldElement::FieldElement(FieldPtr field, Elem e) : field_(std::move(field)), e_(e) {
    if (!field_) throw FieldError("field element without a field");
    if (!field_->contains(e_)) throw FieldError("element does not belong to " + field_->describe());
}

FieldElement::FieldElement(FieldPtr field, std::int64_t v) : field_(std::move(field)) {
    if (!field_) throw FieldError("field element without a field");
    e_ = field_->from_int(v);
}

namespace {
const FieldPtr& common_field(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.field(), b.field()))
        throw FieldError("operands belong to different fields (" + a.field()->describe() + ", " +
                         b.field()->describe() + ")");
    return a.field();
}
}  // namespace

FieldElement FieldElement::inv() const { return {field_, field_->inv(e_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(e_, e)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(e_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->add(a.e_, b.e_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->sub(a.e_, b.e_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->mul(a.e_, b.e_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const auto& f = common_field(a, b);
    return {f, f->div(a.e_, b.e_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(a.field_, b.field_) && a.e_ == b.e_;
}

// Poly

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw FieldError("polynomial without a field");
    for (auto c : coeffs_)
        if (!field_->contains(c)) throw FieldError("polynomial coefficient outside " + field_->describe());
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, std::size_t k, Elem c) {
    std::vector<Elem> v(k + 1, Elem{0});
    v[k] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::x_pow_minus_one(FieldPtr field, std::size_t n) {
    std::vector<Elem> v(n + 1, Elem{0});
    v[0] = field->neg(field->one());
    v[n] = field->add(v[n], field->one());
    return Poly(std::move(field), std::move(v));
}

Elem Poly::eval(Elem x) const {
    Elem acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->add(field_->mul(acc, x), *it);
    return acc;
}

bool operator==(const Poly& a, const Poly& b) { return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_; }

namespace {
const FieldPtr& common_field(const Poly& a, const Poly& b) {
    if (!same_field(a.field(), b.field()))
        throw FieldError("polynomials over different fields (" + a.field()->describe() + ", " + b.field()->describe() +
                         ")");
    return a.field();
}
}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
    const auto& f = common_field(a, b);
    std::vector<Elem> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f->add(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    const auto& f = common_field(a, b);
    std::vector<Elem> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f->sub(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    const auto& f = common_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elem> r(a.coeffs().size() + b.coeffs().size() - 1, Elem{0});
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].value == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            r[i + j] = f->add(r[i + j], f->mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return Poly(f, std::move(r));
}

Poly poly_scale(const Poly& a, Elem c) {
    std::vector<Elem> r(a.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field()->mul(a.coeffs()[i], c);
    return Poly(a.field(), std::move(r));
}

PolyDivision poly_divmod(const Poly& a, const Poly& b) {
    const auto& f = common_field(a, b);
    if (b.is_zero()) throw FieldError("polynomial division by zero");
    std::vector<Elem> rem = a.coeffs();
    const std::size_t db = b.coeffs().size() - 1;
    if (rem.size() <= db) return {Poly(f), a};
    std::vector<Elem> quot(rem.size() - db, Elem{0});
    const Elem lead_inv = f->inv(b.leading());
    for (std::size_t deg = rem.size(); deg-- > db;) {
        if (rem[deg].value == 0) continue;
        const Elem factor = f->mul(rem[deg], lead_inv);
        quot[deg - db] = factor;
        for (std::size_t i = 0; i <= db; ++i)
            rem[deg - db + i] = f->sub(rem[deg - db + i], f->mul(factor, b.coeffs()[i]));
    }
    rem.resize(db);
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).remainder; }

Elem poly_eval(const Poly& f, Elem x) { return f.eval(x); }

}  // namespace lrc::gf
