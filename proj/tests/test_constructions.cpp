#include "doctest.h"
#include "oracles.hpp"
#include "pnil/constructions.hpp"
#include "pnil/jordan.hpp"

#include <random>

using namespace pnil;

TEST_CASE("w_module dimensions, grading and Loewy length") {
    // (3,2,2) -> dim 3; (3,5,3) -> dim 12; (5,5,5) -> dim 15
    CHECK(w_module(Gf::get(3), 2, 2).dim() == 3);
    CHECK(w_module(Gf::get(3), 5, 3).dim() == 12);
    CHECK(w_module(Gf::get(5), 5, 5).dim() == 15);
    for (u32 p : {3u, 5u}) {
        const Gf& F = Gf::get(p);
        for (size_t d = 1; d <= p; ++d)
            for (size_t n = d; n <= d + 2; ++n) {
                Module W = w_module(F, n, d);
                CHECK(W.dim() == w_module_dim(p, n, d));
                REQUIRE(W.graded());
                // graded support [0, d-1] with dim (W)_i = n - i
                std::vector<size_t> comp(d, 0);
                for (int g : W.grading()) {
                    REQUIRE(g >= 0);
                    REQUIRE(size_t(g) < d);
                    ++comp[g];
                }
                for (size_t i = 0; i < d; ++i) CHECK(comp[i] == n - i);
                // Loewy length d
                CHECK(radical_socle_series(W).loewy_length == d);
            }
    }
    CHECK_THROWS_AS(w_module(Gf::get(3), 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(w_module(Gf::get(3), 1, 2), std::invalid_argument);
}

TEST_CASE("W_{2,2} radical and socle per the three-dimensional example") {
    const Gf& F = Gf::get(3);
    Module W = w_module(F, 2, 2);
    RadicalSocleSeries s = radical_socle_series(W);
    CHECK(s.rad[1].dim() == 1);
    CHECK(s.loewy_length == 2);
    CHECK(s.soc[1].dim() == 1);  // = n - d + 1
}

TEST_CASE("chain surjections W_{n,d} ->> W_{n-1,d}") {
    const Gf& F = Gf::get(3);
    // oracle: relation checking -- v_i -> v_i, v_n -> 0 defines a surjection,
    // realized here by verifying rank of some hom with full image
    for (size_t d = 2; d <= 3; ++d)
        for (size_t n = d + 1; n <= d + 3; ++n) {
            Module Wn = w_module(F, n, d), Wm = w_module(F, n - 1, d);
            auto homs = hom_space(Wn, Wm);
            bool found_surjection = false;
            // search the hom space for a full-rank-image element (combinations)
            u64 q = 3, total = 1;
            for (size_t i = 0; i < homs.size() && total <= 2187; ++i) total *= q;
            for (u64 idx = 1; idx < total && !found_surjection; ++idx) {
                Mat A(F, Wm.dim(), Wn.dim());
                u64 v = idx;
                for (auto& H : homs) {
                    Fq c = F.from_index(v % q);
                    v /= q;
                    if (!F.is_zero(c)) A = A + H.scaled(c);
                }
                if (rank(A) == Wm.dim()) found_surjection = true;
            }
            CHECK(found_surjection);
        }
}

TEST_CASE("kronecker families") {
    const Gf& F = Gf::get(3);
    // preinjective(2) ~ W_{3,2}
    Module Fi = kronecker_preinjective(F, 2);
    CHECK(Fi.dim() == 5);
    CHECK(is_isomorphic(Fi, w_module(F, 3, 2), 3).isomorphic);
    // preprojective(2): dims (2,3)
    Module Fp2 = kronecker_preprojective(F, 2);
    CHECK(Fp2.dim() == 5);
    CHECK(!is_isomorphic(Fp2, w_module(F, 3, 2), 3).isomorphic);
    // regular(1, 1): indecomposable of dim 2 (checked in module tests);
    // drop locus of the 1-rank sits exactly at [-lambda : 1]
    for (u32 lam : {0u, 1u, 2u}) {
        Module R = kronecker_regular(F, 1, F.from_int(lam));
        Certificate c = constancy_certificates(R, 9);
        CHECK(!c.ranks[0].constant);
        REQUIRE(c.ranks[0].evaluations.size() >= 1);
        bool found = false;
        for (auto& dp : c.ranks[0].evaluations) {
            if (!dp.dropped) continue;
            REQUIRE(dp.rational);
            // normalized point [a0 : b0] with a0 = -lambda * b0
            Fq expect_a = F.neg(F.from_int(lam));
            if (F.is_zero(expect_a)) {
                CHECK(F.is_zero(dp.a0));
                CHECK(F.equal(dp.b0, F.one()));
            } else {
                // normalization makes a0 = 1, b0 = -1/lambda... check a0 + lam*b0 = 0
                Fq t = F.add(dp.a0, F.mul(F.from_int(lam), dp.b0));
                CHECK(F.is_zero(t));
            }
            found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("quotient family members") {
    const Gf& F = Gf::get(3);
    Module M = w_module(F, 5, 3);
    Submodule soc = socle(M, 1);
    CHECK(soc.dim() == 3);  // n - d + 1
    // Gamma = span of the first two socle basis rows
    Submodule gamma{M.dim(), row_space(soc.basis.rows_slice(0, 2))};
    // f = 0: the member M/U_0 with U_0 = s(Soc/Gamma)
    Module q0 = quotient_family(M, gamma, Mat(F, 2, 1));
    CHECK(q0.dim() == M.dim() - 1);  // dim M - dim Soc + dim Gamma
    // spec dim formula for W_{5,3}/U with dim U = 1: 12 - 1 = 11
    CHECK(q0.dim() == 11);
    // distinct f give distinct U_f
    Mat f1(F, 2, 1), f2(F, 2, 1);
    f1.set1(0, 0, 1);
    f2.set1(1, 0, 2);
    Submodule u1 = family_socle_member(M, gamma, f1);
    Submodule u2 = family_socle_member(M, gamma, f2);
    CHECK(u1.dim() == 1);
    CHECK(!(u1 == u2));
    CHECK_THROWS_AS(quotient_family(M, full_submodule(M), Mat(F, 2, 1)), std::invalid_argument);
}

TEST_CASE("sl2 modules validate and have the expected weights") {
    for (u32 p : {3u, 5u}) {
        const Gf& F = Gf::get(p);
        for (u32 lam = 0; lam < p; ++lam) {
            Sl2Module L = sl2_simple(F, lam);
            CHECK(L.dim() == lam + 1);
            Sl2Module Z = sl2_baby_verma(F, lam);
            CHECK(Z.dim() == p);
        }
        CHECK_THROWS_AS(sl2_simple(F, p), std::invalid_argument);
    }
    // invalid relation rejected
    const Gf& F = Gf::get(3);
    Sl2Module L1 = sl2_simple(F, 1);
    CHECK_THROWS_AS(Sl2Module::make(F, L1.e(), L1.f(), L1.e()), Error);
}

TEST_CASE("sl2 nullcone chart is p-nilpotent everywhere") {
    const Gf& F = Gf::get(3);
    // natural representation: x(u,v)^2 = 0 as a 2x2 identity of degree-4 forms
    Sl2Module L1 = sl2_simple(F, 1);
    FormMatrix x = sl2_nullcone_operator(L1);
    FormMatrix x2 = x * x;
    CHECK(x2.is_zero());
    // sampled specializations are p-nilpotent on all lab modules
    std::mt19937_64 rng(5);
    for (u32 lam = 0; lam < 3; ++lam) {
        Sl2Module Z = sl2_baby_verma(F, lam);
        for (int iter = 0; iter < 50; ++iter) {
            Fq u0 = F.from_int(rng() % 3), v0 = F.from_int(rng() % 3);
            if (F.is_zero(u0) && F.is_zero(v0)) continue;
            Mat th = sl2_nullcone_element(Z, u0, v0);
            CHECK(th.pow(3).is_zero());
        }
    }
}
