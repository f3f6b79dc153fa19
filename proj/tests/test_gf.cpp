#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "lrc/gf.hpp"

using namespace lrc::gf;

namespace {

// Independent checks with plain integer arithmetic.

int smallest_primitive_mod(int p) {
    for (int g = 2; g < p; ++g) {
        int x = 1, order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1) return g;
    }
    return 1;
}

// Binary polynomials as bit masks; degree-4 monic irreducibles scanned in
// increasing integer order.
int bin_degree(int a) {
    int d = -1;
    while (a >> (d + 1)) ++d;
    return d;
}

int bin_mod(int a, int m) {
    const int dm = bin_degree(m);
    while (a && bin_degree(a) >= dm) a ^= m << (bin_degree(a) - dm);
    return a;
}

int first_binary_irreducible(int degree) {
    for (int f = 1 << degree; f < (2 << degree); ++f) {
        bool irreducible = true;
        for (int g = 2; g < (1 << (degree / 2 + 1)) && irreducible; ++g)
            if (bin_mod(f, g) == 0) irreducible = false;
        if (irreducible) return f;
    }
    return 0;
}

bool is_prime_power_scan(int q) {
    for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return false;
}

std::vector<FieldPtr> sample_fields() {
    return {field_new(2, 1), field_new(2, 4), field_new(3, 2), field_new(5, 2), field_new(7, 1),
            field_new(13, 1), field_new(2, 8), field_new(3, 5), field_new(2, 10)};
}

}  // namespace

TEST_CASE("prime field primitive element is the smallest generator") {
    auto f = field_new(7, 1);
    CHECK(f->order() == 7);
    CHECK(f->modulus().size() == 2);
    CHECK(f->primitive().value == static_cast<std::uint32_t>(smallest_primitive_mod(7)));
    CHECK(f->primitive().value == 3);
    for (int p : {3, 5, 11, 13, 43, 71, 103})
        CHECK(field_new(static_cast<std::uint32_t>(p), 1)->primitive().value ==
              static_cast<std::uint32_t>(smallest_primitive_mod(p)));
}

TEST_CASE("GF(16) modulus is the first irreducible quartic") {
    auto f = field_new(2, 4);
    const int expected = first_binary_irreducible(4);
    CHECK(expected == 0b10011);
    std::vector<std::uint32_t> bits;
    for (int i = 0; i <= 4; ++i) bits.push_back((expected >> i) & 1);
    CHECK(f->modulus() == bits);
    CHECK(f->modulus_string() == "x^4 + x + 1");
    CHECK(field_new(2, 8)->modulus()[8] == 1);
}

TEST_CASE("GF(16) multiplication reduces by the modulus") {
    auto f = field_new(2, 4);
    const Elem a3 = f->from_coefficients(std::vector<std::uint32_t>{0, 0, 0, 1});
    const Elem a2 = f->from_coefficients(std::vector<std::uint32_t>{0, 0, 1, 0});
    // x^5 = x * (x + 1) under x^4 = x + 1
    CHECK(f->coefficients(f->mul(a3, a2)) == std::vector<std::uint32_t>{0, 1, 1, 0});
    CHECK(f->add(a3, a3) == f->zero());
}

TEST_CASE("nth root of unity has the requested order") {
    auto f = field_new(2, 4);
    const Elem g = f->primitive();
    CHECK(f->multiplicative_order(g) == 15);
    CHECK(f->multiplicative_order(f->pow(g, 3)) == 5);
    CHECK(f->nth_root_of_unity(5) == f->pow(g, 3));
    CHECK(f->multiplicative_order(f->nth_root_of_unity(15)) == 15);
    CHECK(f->nth_root_of_unity(1) == f->one());
    CHECK_THROWS_AS(f->nth_root_of_unity(7), FieldError);
    CHECK_THROWS_AS(f->nth_root_of_unity(0), FieldError);
}

TEST_CASE("field construction rejects bad parameters") {
    CHECK_THROWS_AS(field_new(4, 1), FieldError);
    CHECK_THROWS_AS(field_new(1, 1), FieldError);
    CHECK_THROWS_AS(field_new(2, 0), FieldError);
    CHECK_THROWS_AS(field_new(2, 21), FieldError);
    CHECK_NOTHROW(field_new(2, 20));
}

TEST_CASE("inverse of zero throws") {
    auto f = field_new(5, 1);
    CHECK_THROWS_AS(f->inv(f->zero()), FieldError);
    CHECK_THROWS_AS(f->log(f->zero()), FieldError);
}

TEST_CASE("find_field_for_length picks the smallest prime power q = 1 mod n") {
    for (std::uint32_t n : {2u, 6u, 12u, 15u, 21u, 35u, 51u, 77u, 187u}) {
        int q = static_cast<int>(n) + 1;
        while (!is_prime_power_scan(q)) q += static_cast<int>(n);
        CHECK(find_field_for_length(n)->order() == static_cast<std::uint32_t>(q));
    }
    CHECK(find_field_for_length(15)->order() == 16);
    CHECK(find_field_for_length(12)->order() == 13);
    CHECK(find_field_for_length(21)->order() == 43);
    CHECK(find_field_for_length(35)->order() == 71);
    CHECK(find_field_for_length(51)->order() == 103);
    CHECK_THROWS_AS(find_field_for_length(0), FieldError);
}

TEST_CASE("prime power decomposition") {
    CHECK(as_prime_power(16)->p == 2);
    CHECK(as_prime_power(16)->m == 4);
    CHECK(as_prime_power(49)->p == 7);
    CHECK_FALSE(as_prime_power(12).has_value());
    CHECK_FALSE(as_prime_power(1).has_value());
    CHECK(as_prime_power(13)->m == 1);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(12345);
    for (const auto& f : sample_fields()) {
        CAPTURE(f->describe());
        std::uniform_int_distribution<std::uint32_t> pick(0, f->order() - 1);
        for (int trial = 0; trial < 300; ++trial) {
            const Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, f->neg(a)) == f->zero());
            CHECK(f->sub(f->add(a, b), b) == a);
            CHECK(f->mul(a, f->one()) == a);
            if (a != f->zero()) {
                CHECK(f->mul(a, f->inv(a)) == f->one());
                CHECK(f->exp(f->log(a)) == a);
                CHECK(f->pow(a, f->order() - 1) == f->one());
                CHECK(f->div(f->mul(a, b), a) == b);
            }
        }
        // Characteristic: p copies of one sum to zero.
        Elem s = f->zero();
        for (std::uint32_t i = 0; i < f->characteristic(); ++i) s = f->add(s, f->one());
        CHECK(s == f->zero());
        CHECK(f->multiplicative_order(f->primitive()) == f->order() - 1);
    }
}

TEST_CASE("from_int reduces into the prime field") {
    auto f = field_new(7, 1);
    CHECK(f->from_int(-1).value == 6);
    CHECK(f->from_int(15).value == 1);
    auto g = field_new(3, 2);
    CHECK(g->from_int(-1).value == 2);
}

TEST_CASE("FieldElement arithmetic and cross-field errors") {
    auto f = field_new(7, 1);
    auto g = field_new(2, 4);
    FieldElement a(f, 3), b(f, 5);
    CHECK((a + b).raw().value == 1);
    CHECK((a * b).raw().value == 1);
    CHECK((a - b).raw().value == 5);
    CHECK((a / a) == FieldElement(f, 1));
    CHECK((-a).raw().value == 4);
    CHECK(a.pow(6) == FieldElement(f, 1));
    CHECK_THROWS_AS(a + FieldElement(g, 1), FieldError);
    CHECK_THROWS_AS(FieldElement(f, 0).inv(), FieldError);
    // Equal fields built separately are interchangeable.
    CHECK_NOTHROW(a + FieldElement(field_new(7, 1), 2));
}

TEST_CASE("polynomial product (x - 1)(x - 2) over GF(7)") {
    auto f = field_new(7, 1);
    Poly a(f, {f->from_int(-1), f->one()});
    Poly b(f, {f->from_int(-2), f->one()});
    Poly prod = poly_mul(a, b);
    CHECK(prod == Poly(f, {Elem{2}, Elem{4}, Elem{1}}));
    CHECK(prod.eval(Elem{1}) == f->zero());
    CHECK(prod.eval(Elem{2}) == f->zero());
    CHECK(prod.eval(Elem{3}) != f->zero());
}

TEST_CASE("polynomial basics") {
    auto f = field_new(5, 1);
    Poly z(f);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(Poly(f, {Elem{1}, Elem{0}, Elem{0}}).degree() == 0);
    CHECK(Poly::x_pow_minus_one(f, 4).degree() == 4);
    CHECK(Poly::x_pow_minus_one(f, 4).coeff(0) == f->from_int(-1));
    CHECK(Poly::monomial(f, 3, Elem{2}).leading() == Elem{2});
    CHECK_THROWS_AS(poly_divmod(Poly::monomial(f, 2, Elem{1}), z), FieldError);
    CHECK_THROWS_AS(poly_add(z, Poly(field_new(7, 1))), FieldError);
}

TEST_CASE("division identity on random polynomials") {
    std::mt19937 rng(99);
    for (const auto& f : sample_fields()) {
        std::uniform_int_distribution<std::uint32_t> pick(0, f->order() - 1);
        auto random_poly = [&](int deg) {
            std::vector<Elem> c;
            for (int i = 0; i <= deg; ++i) c.push_back(Elem{pick(rng)});
            return Poly(f, c);
        };
        for (int trial = 0; trial < 40; ++trial) {
            Poly a = random_poly(std::uniform_int_distribution<int>(0, 12)(rng));
            Poly b = random_poly(std::uniform_int_distribution<int>(0, 6)(rng));
            if (b.is_zero()) continue;
            auto [qt, r] = poly_divmod(a, b);
            CHECK(poly_add(poly_mul(qt, b), r) == a);
            CHECK(r.degree() < b.degree());
            CHECK(poly_mod(poly_mul(a, b), b).is_zero());
            const Elem x{pick(rng)};
            CHECK(poly_eval(poly_mul(a, b), x) == f->mul(a.eval(x), b.eval(x)));
            CHECK(poly_sub(a, a).is_zero());
            CHECK(poly_scale(a, f->zero()).is_zero());
        }
    }
}
