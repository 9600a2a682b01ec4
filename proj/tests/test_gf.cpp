#include "doctest.h"
#include "pnil/gf.hpp"

using namespace pnil;

TEST_CASE("prime field arithmetic") {
    const Gf& F = Gf::get(7);
    CHECK(F.add1(3, 5) == 1);
    CHECK(F.sub1(2, 5) == 4);
    CHECK(F.mul1(3, 5) == 1);
    CHECK(F.inv1(3) == 5);
    CHECK(F.pow1(3, 6) == 1);
    CHECK_THROWS_AS(F.inv1(0), std::domain_error);
    CHECK_THROWS_AS(Gf::get(6), std::invalid_argument);
}

TEST_CASE("extension field axioms and Frobenius") {
    for (u32 p : {3u, 5u}) {
        for (u32 e : {2u, 3u}) {
            const Gf& F = Gf::get(p, e);
            u64 q = F.order();
            // field axioms on the full multiplication table for small q
            for (u64 i = 0; i < q; ++i) {
                Fq a = F.from_index(i);
                if (!F.is_zero(a)) {
                    Fq ai = F.inv(a);
                    CHECK(F.equal(F.mul(a, ai), F.one()));
                }
                // Frobenius is additive: (a+b)^p = a^p + b^p on sampled pairs
                Fq b = F.from_index((i * 7 + 3) % q);
                Fq lhs = F.pow(F.add(a, b), p);
                Fq rhs = F.add(F.pow(a, p), F.pow(b, p));
                CHECK(F.equal(lhs, rhs));
            }
            // multiplicative order of the unit group divides q-1
            Fq g = F.from_index(1 + (q > 2 ? 1 : 0));
            CHECK(F.equal(F.pow(g, q - 1), F.one()));
        }
    }
}

TEST_CASE("deterministic defining polynomials") {
    const Gf& F9a = Gf::get(3, 2);
    const Gf& F9b = Gf::get(3, 2);
    CHECK(&F9a == &F9b);
    // t^2 + 1 is the first monic irreducible of degree 2 over F_3 in counting
    // order (tails 0,1,2,... -> t^2, t^2+1: t^2 reducible, t^2+1 irreducible)
    CHECK(F9a.modulus_tail() == std::vector<u32>{1, 0});
    // over F_5: t^2, t^2+1=(t+2)(t+3)? 2^2+1=5=0 -> reducible; t^2+2 irreducible
    const Gf& F25 = Gf::get(5, 2);
    CHECK(F25.modulus_tail() == std::vector<u32>{2, 0});
}

TEST_CASE("root field arithmetic") {
    const Gf& F = Gf::get(3);
    // h = t^2 + 1 over F_3 (irreducible)
    std::vector<u32> h = {1, 0, 1};
    RootField L(F, h, 2);
    std::vector<u32> t(2), t2(2), one(2);
    L.gen(t.data());
    L.mul(t.data(), t.data(), t2.data());
    L.set_one(one.data());
    // t^2 = -1
    std::vector<u32> m1(2);
    L.neg(one.data(), m1.data());
    CHECK(t2 == m1);
    // inverse: t * t^{-1} = 1
    std::vector<u32> ti(2), prod(2);
    L.inv(t.data(), ti.data());
    L.mul(t.data(), ti.data(), prod.data());
    CHECK(prod == one);
}

TEST_CASE("upoly irreducibility") {
    const Gf& F = Gf::get(3);
    using namespace pnil::detail;
    // x^2 + 1 irreducible over F_3, x^2 + 2 = (x+1)(x+2) is not
    UPoly f1 = upoly_from_coeffs(F, {F.from_int(1), F.zero(), F.one()});
    UPoly f2 = upoly_from_coeffs(F, {F.from_int(2), F.zero(), F.one()});
    CHECK(upoly_is_irreducible(F, f1));
    CHECK(!upoly_is_irreducible(F, f2));
}
