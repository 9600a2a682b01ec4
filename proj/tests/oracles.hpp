// Test-only oracles, independent of the implementation paths they check.
#ifndef PNIL_TEST_ORACLES_HPP
#define PNIL_TEST_ORACLES_HPP

#include <vector>

#include "pnil/form_matrix.hpp"
#include "pnil/module.hpp"

namespace pnil_oracles {

using namespace pnil;

/// All points of P^1(F_{p^e}) as normalized (a0, b0) pairs.
inline std::vector<std::pair<Fq, Fq>> projective_line(const Gf& F) {
    std::vector<std::pair<Fq, Fq>> pts;
    u64 q = F.order();
    for (u64 i = 0; i < q; ++i) pts.emplace_back(F.from_index(i), F.one());  // [a : 1]
    pts.emplace_back(F.one(), F.zero());                                     // [1 : 0]
    return pts;
}

/// Generic rank by scanning every point of P^1 over an extension large
/// enough that some point misses every root of every maximal minor.
inline size_t generic_rank_by_scan(const FormMatrix& m, u32 ext_degree) {
    const Gf& F = m.field();
    const Gf& L = Gf::get(F.p(), ext_degree);
    size_t best = 0;
    for (auto& [a0, b0] : projective_line(L)) {
        // embed the matrix over L and evaluate
        Mat spec(L, m.rows(), m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) {
                const BinaryForm& f = m.at(i, j);
                Fq acc = L.zero(), apow = L.one();
                std::vector<Fq> apows(f.degree() + 1);
                for (size_t k = 0; k <= f.degree(); ++k) { apows[k] = apow; apow = L.mul(apow, a0); }
                Fq bpow = L.one();
                for (size_t k = 0; k <= f.degree(); ++k) {
                    Fq c = L.zero();
                    for (size_t w = 0; w < F.e(); ++w) c[w] = f.coeff_ptr(k)[w];  // prime-field coefficients embed as constants
                    Fq t = L.mul(c, bpow);
                    t = L.mul(t, apows[f.degree() - k]);
                    acc = L.add(acc, t);
                    bpow = L.mul(bpow, b0);
                }
                spec.set(i, j, acc);
            }
        best = std::max(best, rank(spec));
    }
    return best;
}

/// Brute-force irreducibility of a binary form of degree <= 8 over F_p:
/// search for a nontrivial homogeneous divisor by enumerating all forms of
/// degree 1..deg/2.
inline bool irreducible_by_divisor_search(const BinaryForm& f) {
    const Gf& F = f.field();
    size_t d = f.degree();
    if (d == 0 || f.is_zero()) return false;
    if (d == 1) return true;
    u64 q = F.order();
    for (size_t dd = 1; dd <= d / 2; ++dd) {
        // enumerate monic-normalized candidates by coefficient index
        u64 total = 1;
        for (size_t i = 0; i <= dd; ++i) total *= q;
        for (u64 idx = 0; idx < total; ++idx) {
            u64 v = idx;
            BinaryForm g(F, dd);
            for (size_t i = 0; i <= dd; ++i) {
                g.set_coeff(i, F.from_index(v % q));
                v /= q;
            }
            if (g.is_zero()) continue;
            if (g.b_valuation() == dd && F.is_zero(g.coeff(dd))) continue;
            if (f.divexact(g).has_value() && dd < d) return false;
        }
    }
    return true;
}

/// Exhaustive root scan of a form over F_{p^e}: list of projective roots.
inline size_t count_projective_roots(const BinaryForm& f, u32 ext_degree) {
    const Gf& L = Gf::get(f.field().p(), ext_degree);
    size_t count = 0;
    for (auto& [a0, b0] : projective_line(L)) {
        Fq acc = L.zero();
        std::vector<Fq> apows(f.degree() + 1);
        Fq apow = L.one();
        for (size_t k = 0; k <= f.degree(); ++k) { apows[k] = apow; apow = L.mul(apow, a0); }
        Fq bpow = L.one();
        for (size_t k = 0; k <= f.degree(); ++k) {
            Fq c = L.zero();
            for (size_t w = 0; w < f.field().e(); ++w) c[w] = f.coeff_ptr(k)[w];
            acc = L.add(acc, L.mul(L.mul(c, bpow), apows[f.degree() - k]));
            bpow = L.mul(bpow, b0);
        }
        if (L.is_zero(acc)) ++count;
    }
    return count;
}

/// Naive intertwiner solver: kernel of the Kronecker-product system
/// A X_M - X_N A = 0, A Y_M - Y_N A = 0 with A as n_N x n_M unknowns.
inline std::vector<Mat> hom_space_naive(const Module& M, const Module& N) {
    const Gf& F = M.field();
    size_t nM = M.dim(), nN = N.dim();
    if (nM == 0 || nN == 0) return {};
    size_t vars = nN * nM;
    Mat C(F, 2 * vars, vars);
    // equation (A X_M)_{i j} = (X_N A)_{i j}: sum_k A[i][k] XM[k][j] - XN[i][k] A[k][j]
    auto fill = [&](const Mat& XM, const Mat& XN, size_t row0) {
        for (size_t i = 0; i < nN; ++i)
            for (size_t j = 0; j < nM; ++j) {
                size_t r = row0 + i * nM + j;
                for (size_t k = 0; k < nM; ++k)
                    F.add(C.at(r, i * nM + k), XM.at(k, j), C.at(r, i * nM + k));
                for (size_t k = 0; k < nN; ++k) {
                    std::vector<u32> neg(F.e());
                    F.neg(XN.at(i, k), neg.data());
                    F.add(C.at(r, k * nM + j), neg.data(), C.at(r, k * nM + j));
                }
            }
    };
    fill(M.x(), N.x(), 0);
    fill(M.y(), N.y(), vars);
    Mat K = kernel(C);
    std::vector<Mat> out;
    for (size_t r = 0; r < K.rows(); ++r) {
        Mat A(F, nN, nM);
        for (size_t i = 0; i < nN; ++i)
            for (size_t j = 0; j < nM; ++j)
                F.assign(K.at(r, i * nM + j), A.at(i, j));
        out.push_back(std::move(A));
    }
    return out;
}

/// Exhaustive idempotent count in the span of an End basis (small q^h only).
inline size_t count_idempotents(const Gf& F, const std::vector<Mat>& basis) {
    size_t n = basis.empty() ? 0 : basis[0].rows();
    u64 q = F.order(), total = 1;
    for (size_t i = 0; i < basis.size(); ++i) total *= q;
    size_t count = 0;
    for (u64 idx = 0; idx < total; ++idx) {
        Mat A(F, n, n);
        u64 v = idx;
        for (const auto& B : basis) {
            Fq c = F.from_index(v % q);
            v /= q;
            if (!F.is_zero(c)) A = A + B.scaled(c);
        }
        if (A * A == A) ++count;
    }
    return count;
}

}  // namespace pnil_oracles

#endif
