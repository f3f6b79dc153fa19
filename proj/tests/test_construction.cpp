#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "lrc/construction.hpp"
#include "lrc/search.hpp"
#include "support.hpp"

using namespace lrc;
using gf::Elem;

namespace {

// Defining set straight from the residue description: e lies in D_i iff
// (e - l) mod n_i is s*b_i mod n_i for some 0 <= s <= rho_i - 2.
std::set<int> residue_oracle(const ConstructionParams& p) {
    const int n = p.length();
    std::set<int> out(p.global.begin(), p.global.end());
    for (int e = 0; e < n; ++e)
        for (std::size_t i = 0; i < p.t(); ++i) {
            const int ni = p.lengths[i];
            const int r = ((e - p.shift) % ni + ni) % ni;
            for (int s = 0; s <= p.rhos[i] - 2; ++s)
                if (s * p.offset(i) % ni == r) out.insert(e);
        }
    return out;
}

std::vector<int> as_vec(const DefiningSet& d) { return d.exponents(); }

}  // namespace

TEST_CASE("local defining sets of the worked examples") {
    const auto p1 = testsupport::example1();
    CHECK(as_vec(local_defining_set(p1, 0)) == std::vector<int>{0, 3, 6, 9, 12});
    CHECK(as_vec(local_defining_set(p1, 1)) == std::vector<int>{0, 5, 10});
    const auto p2 = testsupport::example2();
    CHECK(as_vec(local_defining_set(p2, 1)) == std::vector<int>{0, 4, 8});
    CHECK_THROWS_AS(local_defining_set(p1, 2), ParamError);
}

TEST_CASE("full defining sets of the worked examples") {
    CHECK(as_vec(full_defining_set(testsupport::example1())) == std::vector<int>{0, 3, 5, 6, 7, 8, 9, 10, 12});
    CHECK(as_vec(full_defining_set(testsupport::example2())) == std::vector<int>{0, 3, 4, 5, 6, 7, 8, 9});
    CHECK(as_vec(full_defining_set(testsupport::desk6())) == std::vector<int>{0, 2, 3, 4});

    ConstructionParams single;
    single.lengths = {7};
    single.rhos = {2};
    CHECK(as_vec(full_defining_set(single)) == std::vector<int>{0});
}

TEST_CASE("defining sets agree with the residue description") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = testsupport::random_params(rng, 120);
        const auto full = full_defining_set(p);
        const auto oracle = residue_oracle(p);
        CHECK(std::set<int>(full.exponents().begin(), full.exponents().end()) == oracle);
    }
}

TEST_CASE("DefiningSet reduces and merges") {
    DefiningSet d(10, {3, 13, -7, 4});
    CHECK(d.exponents() == std::vector<int>{3, 4});
    CHECK(d.contains(13));
    CHECK_FALSE(d.contains(5));
    DefiningSet e(10, {4, 5});
    CHECK(d.unite(e).exponents() == std::vector<int>{3, 4, 5});
    CHECK(d.intersect(e).exponents() == std::vector<int>{4});
    CHECK_THROWS_AS(d.unite(DefiningSet(11, {1})), ParamError);
    CHECK(to_string(e) == "{4,5}");
}

TEST_CASE("worked example codes have the stated dimensions") {
    auto c1 = build_code(testsupport::example1());
    CHECK(c1.length() == 15);
    CHECK(c1.dimension() == 6);
    CHECK(c1.field()->order() == 16);
    auto c2 = build_code(testsupport::example2());
    CHECK(c2.length() == 12);
    CHECK(c2.dimension() == 4);
    CHECK(c2.field()->order() == 13);
    auto c6 = build_code(testsupport::desk6());
    CHECK(c6.dimension() == 2);
    CHECK(c6.alpha().value == 3);
}

TEST_CASE("n = 6 generator polynomial over GF(7)") {
    auto c = build_code(testsupport::desk6());
    const auto& f = *c.field();
    // Expand prod (x - 3^e), e in {0,2,3,4}, with integers mod 7.
    std::vector<int> g{1};
    for (int e : {0, 2, 3, 4}) {
        int root = 1;
        for (int i = 0; i < e; ++i) root = root * 3 % 7;
        std::vector<int> next(g.size() + 1, 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            next[i + 1] = (next[i + 1] + g[i]) % 7;
            next[i] = (next[i] + (7 - root) * g[i]) % 7;
        }
        g = next;
    }
    CHECK(g == std::vector<int>{6, 6, 0, 1, 1});
    std::vector<Elem> expected;
    for (int v : g) expected.push_back(f.from_int(v));
    CHECK(c.generator_poly().coeffs() == expected);

    const auto word = c.encode({f.one(), f.zero()});
    int weight = 0;
    for (auto x : word) weight += x.value != 0;
    CHECK(weight == 4);
    CHECK(word == std::vector<Elem>{Elem{6}, Elem{6}, Elem{0}, Elem{1}, Elem{1}, Elem{0}});
}

TEST_CASE("encode and is_codeword basics") {
    auto c = build_code(testsupport::example1());
    const auto& f = *c.field();
    std::vector<Elem> zero(6, f.zero());
    CHECK(c.encode(zero) == std::vector<Elem>(15, f.zero()));
    std::vector<Elem> e0(6, f.zero());
    e0[0] = f.one();
    auto w = c.encode(e0);
    for (std::size_t i = 0; i < 15; ++i) CHECK(w[i] == c.generator_poly().coeff(i));
    CHECK(c.is_codeword(w));
    CHECK(c.is_codeword(std::vector<Elem>(15, f.zero())));
    std::vector<Elem> single(15, f.zero());
    single[4] = f.one();
    CHECK_FALSE(c.is_codeword(single));
    CHECK_THROWS_AS(c.encode(std::vector<Elem>(5, f.zero())), ParamError);
    CHECK_THROWS_AS(c.is_codeword(std::vector<Elem>(14, f.zero())), ParamError);
}

TEST_CASE("parameter validation") {
    auto good = testsupport::example1();
    CHECK_NOTHROW(good.validate());

    auto p = good;
    p.lengths = {3, 6};
    CHECK_THROWS_AS(p.validate(), ParamError);
    p = good;
    p.rhos = {2, 6};
    CHECK_THROWS_AS(p.validate(), ParamError);
    p = good;
    p.rhos = {1, 2};
    CHECK_THROWS_AS(p.validate(), ParamError);
    p = good;
    p.offsets = {3, 1};
    CHECK_THROWS_AS(p.validate(), ParamError);
    p = good;
    p.offsets = {1};
    CHECK_THROWS_AS(p.validate(), ParamError);
    p = good;
    p.global = {15};
    CHECK_THROWS_AS(p.validate(), ParamError);
    p = good;
    p.field_order = 12;
    CHECK_THROWS_AS(p.validate(), ParamError);
    p = good;
    p.field_order = 13;  // 15 does not divide 12
    CHECK_THROWS_AS(p.validate(), ParamError);
    CHECK_THROWS_AS(build_code(p), ParamError);
    p = good;
    p.lengths = {};
    p.rhos = {};
    CHECK_THROWS_AS(p.validate(), ParamError);
    p = good;
    p.field_order = 31;  // 15 divides 30
    CHECK_NOTHROW(p.validate());
    CHECK(build_code(p).dimension() == 6);
}

TEST_CASE("zero code is reported, not rejected") {
    ConstructionParams p;
    p.lengths = {3};
    p.rhos = {3};
    p.global = {2};
    auto c = build_code(p);
    CHECK(c.is_zero_code());
    CHECK(c.dimension() == 0);
    CHECK(c.parity_check_matrix().rows() == 3);
}

TEST_CASE("generator divides x^n - 1 and has degree |D|") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = testsupport::random_params(rng, 90);
        auto c = build_code(p);
        CAPTURE(p.lengths);
        const auto& g = c.generator_poly();
        CHECK(g.degree() == static_cast<long>(c.defining_set().size()));
        CHECK(poly_mod(gf::Poly::x_pow_minus_one(c.field(), static_cast<std::size_t>(c.length())), g).is_zero());
        // Roots exactly at alpha^e, e in D.
        for (int e = 0; e < c.length(); ++e)
            CHECK((g.eval(c.field()->pow(c.alpha(), e)).value == 0) == c.defining_set().contains(e));
    }
}

TEST_CASE("dimension identity with no global exponents") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = testsupport::random_params(rng, 200);
        int expected = 1;
        for (std::size_t i = 0; i < p.t(); ++i) expected *= p.locality(i);
        CHECK(p.length() - static_cast<int>(full_defining_set(p).size()) == expected);
    }
    for (const auto& row : table1_printed()) {
        auto p = testsupport::base(row.n1, row.n2);
        CHECK(build_code(p).dimension() == (row.n1 - 1) * (row.n2 - 1));
    }
}

TEST_CASE("generator matrix has full rank and the code is cyclic") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 25; ++trial) {
        auto p = testsupport::random_params(rng, 60);
        auto c = build_code(p);
        if (c.is_zero_code()) continue;
        const auto& f = *c.field();
        CHECK(rank(c.generator_matrix()) == static_cast<std::size_t>(c.dimension()));
        CHECK(rank(c.systematic_generator()) == static_cast<std::size_t>(c.dimension()));
        const auto& h = c.parity_check_matrix();
        CHECK(h.rows() == static_cast<std::size_t>(c.length() - c.dimension()));

        std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
        std::vector<Elem> msg(static_cast<std::size_t>(c.dimension()));
        for (auto& m : msg) m = Elem{pick(rng)};
        auto w = c.encode(msg);
        CHECK(c.is_codeword(w));
        std::vector<Elem> shifted(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) shifted[(i + 1) % w.size()] = w[i];
        CHECK(c.is_codeword(shifted));
        // Parity checks annihilate codewords.
        for (std::size_t r = 0; r < h.rows(); ++r) {
            Elem s = f.zero();
            for (std::size_t j = 0; j < h.cols(); ++j) s = f.add(s, f.mul(h.at(r, j), w[j]));
            CHECK(s == f.zero());
        }
    }
}
