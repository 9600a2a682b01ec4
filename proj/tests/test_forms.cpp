#include "doctest.h"
#include "oracles.hpp"
#include "pnil/binary_form.hpp"

#include <random>

using namespace pnil;

TEST_CASE("binary form arithmetic and division") {
    const Gf& F = Gf::get(3);
    BinaryForm a = BinaryForm::from_ints(F, {1, 0});   // a
    BinaryForm b = BinaryForm::from_ints(F, {0, 1});   // b
    BinaryForm ab = a * b;
    CHECK(ab.degree() == 2);
    CHECK(ab == BinaryForm::from_ints(F, {0, 1, 0}));
    CHECK(ab.divexact(a).has_value());
    CHECK(*ab.divexact(a) == b);
    CHECK(!(a * a).divexact(b).has_value());
    // b-valuation and homogenize/dehomogenize round trip
    BinaryForm f = BinaryForm::from_ints(F, {0, 2, 1, 0});  // 2a^2 b + a b^2
    CHECK(f.b_valuation() == 1);
    CHECK(BinaryForm::homogenize(F, f.dehomogenize(), 3) == f);
    // evaluation
    CHECK(F.equal(f.eval(F.from_int(1), F.from_int(1)), F.from_int(0)));  // 2+1=0
    CHECK(F.equal(f.eval(F.from_int(1), F.from_int(0)), F.zero()));
}

TEST_CASE("form gcd examples") {
    const Gf& F = Gf::get(3);
    // {a^2 b, a b^2} -> gcd ab with factors a, b
    BinaryForm f1 = BinaryForm::from_ints(F, {0, 1, 0, 0});  // a^2 b
    BinaryForm f2 = BinaryForm::from_ints(F, {0, 0, 1, 0});  // a b^2
    auto [g, factors] = form_gcd_factor({f1, f2}, 1);
    CHECK(g == BinaryForm::from_ints(F, {0, 1, 0}));
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].multiplicity == 1);
    CHECK(factors[1].multiplicity == 1);
    // {a, b} -> gcd 1
    BinaryForm a = BinaryForm::from_ints(F, {1, 0}), b = BinaryForm::from_ints(F, {0, 1});
    CHECK(form_gcd({a, b}) == BinaryForm::one(F));
    CHECK_THROWS_AS(form_gcd({BinaryForm::zero(F, 2)}), std::invalid_argument);
}

TEST_CASE("a^2+b^2 is irreducible over F_3") {
    const Gf& F = Gf::get(3);
    BinaryForm f = BinaryForm::from_ints(F, {1, 0, 1});
    // oracle: exhaustive root search over F_3 / F_9 plus divisor search
    CHECK(pnil_oracles::count_projective_roots(f, 1) == 0);
    CHECK(pnil_oracles::irreducible_by_divisor_search(f));
    auto factors = factor_form(f, 7);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].multiplicity == 1);
    CHECK(factors[0].factor.degree() == 2);
    // but it has roots over F_9 (a conjugate pair)
    CHECK(pnil_oracles::count_projective_roots(f, 2) == 2);
}

TEST_CASE("factorization reproduces the form and factors are irreducible") {
    for (u32 p : {3u, 5u}) {
        const Gf& F = Gf::get(p);
        std::mt19937_64 rng(42 + p);
        for (int iter = 0; iter < 40; ++iter) {
            size_t d = 1 + rng() % 6;
            BinaryForm f(F, d);
            for (size_t i = 0; i <= d; ++i) f.set_coeff(i, F.from_int(rng() % p));
            if (f.is_zero()) continue;
            auto factors = factor_form(f, 99);
            BinaryForm prod = BinaryForm::one(F);
            size_t total_deg = 0;
            for (auto& [g, m] : factors) {
                CHECK(pnil_oracles::irreducible_by_divisor_search(g));
                for (size_t k = 0; k < m; ++k) prod = prod * g;
                total_deg += g.degree() * m;
            }
            CHECK(total_deg == d);
            CHECK(prod == f.monic());
        }
    }
}

TEST_CASE("factorization over an extension coefficient field") {
    const Gf& F9 = Gf::get(3, 2);
    // a^2 + b^2 splits over F_9: (a - t b)(a + t b) with t^2 = -1
    BinaryForm f(F9, 2);
    f.set_coeff(0, F9.one());
    f.set_coeff(2, F9.one());
    auto factors = factor_form(f, 3);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].factor.degree() == 1);
    CHECK(factors[1].factor.degree() == 1);
    BinaryForm prod = factors[0].factor * factors[1].factor;
    CHECK(prod == f.monic());
}

TEST_CASE("factorization determinism across runs") {
    const Gf& F = Gf::get(5);
    BinaryForm f = BinaryForm::from_ints(F, {2, 0, 1, 3, 0, 4, 1});
    auto f1 = factor_form(f, 12345);
    auto f2 = factor_form(f, 12345);
    REQUIRE(f1.size() == f2.size());
    for (size_t i = 0; i < f1.size(); ++i) {
        CHECK(f1[i].factor == f2[i].factor);
        CHECK(f1[i].multiplicity == f2[i].multiplicity);
    }
}
