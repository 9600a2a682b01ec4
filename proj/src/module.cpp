#include "pnil/module.hpp"

#include <algorithm>
#include <random>

namespace pnil {

namespace {

void ensure_same_field(const Module& A, const Module& B, const char* who) {
    if (&A.field() != &B.field())
        throw std::invalid_argument(std::string(who) + ": modules over different fields");
}

void check_nilpotent(const Gf& F, const Mat& A, const char* which) {
    Mat P = A.pow(F.p());
    if (P.is_zero()) return;
    for (size_t i = 0; i < P.rows(); ++i)
        for (size_t j = 0; j < P.cols(); ++j)
            if (!F.is_zero(P.at(i, j))) throw NotPNilpotent(which, i, j);
}

void check_graded_op(const Gf& F, const Mat& A, const std::vector<int>& g, const char* which) {
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j)
            if (!F.is_zero(A.at(i, j)) && g[i] != g[j] + 1)
                throw GradingNotHomogeneous(which, i, j);
}

}  // namespace

Module Module::make(const Gf& F, Mat X, Mat Y, std::optional<std::vector<int>> grading, std::string name) {
    if (X.rows() != X.cols() || Y.rows() != Y.cols() || X.rows() != Y.rows())
        throw std::invalid_argument("Module: x and y must be square of equal size");
    size_t n = X.rows();
    Mat C = X * Y - Y * X;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!F.is_zero(C.at(i, j))) throw CommutatorNonzero(i, j);
    check_nilpotent(F, X, "x");
    check_nilpotent(F, Y, "y");
    if (grading) {
        if (grading->size() != n) throw std::invalid_argument("Module: grading length mismatch");
        check_graded_op(F, X, *grading, "x");
        check_graded_op(F, Y, *grading, "y");
    }
    Module m;
    m.F_ = &F;
    m.dim_ = n;
    m.X_ = std::move(X);
    m.Y_ = std::move(Y);
    m.grading_ = std::move(grading);
    m.name_ = std::move(name);
    return m;
}

Mat Module::monomial(size_t a, size_t b) const {
    Mat m = Mat::identity(*F_, dim_);
    for (size_t i = 0; i < a; ++i) m = X_ * m;
    for (size_t i = 0; i < b; ++i) m = Y_ * m;
    return m;
}

std::vector<Mat> monomial_table(const Module& M) {
    const Gf& F = M.field();
    u32 p = F.p();
    std::vector<Mat> xp(p), yp(p);
    xp[0] = Mat::identity(F, M.dim());
    yp[0] = xp[0];
    for (u32 i = 1; i < p; ++i) {
        xp[i] = M.x() * xp[i - 1];
        yp[i] = M.y() * yp[i - 1];
    }
    std::vector<Mat> mon(size_t(p) * p);
    for (u32 a = 0; a < p; ++a)
        for (u32 b = 0; b < p; ++b)
            mon[size_t(a) * p + b] = (b == 0) ? xp[a] : (a == 0 ? yp[b] : xp[a] * yp[b]);
    return mon;
}

// ---------------------------------------------------------------------------
// submodules, radical/socle
// ---------------------------------------------------------------------------

Submodule full_submodule(const Module& M) {
    return Submodule{M.dim(), Mat::identity(M.field(), M.dim())};
}

Submodule zero_submodule(const Module& M) {
    return Submodule{M.dim(), Mat(M.field(), 0, M.dim())};
}

bool submodule_contains(const Submodule& big, const Submodule& small) {
    if (big.parent_dim != small.parent_dim)
        throw std::invalid_argument("submodule_contains: different parents");
    return rows_contained(big.basis, small.basis);
}

Submodule submodule_closure(const Module& M, const Mat& generators) {
    const Gf& F = M.field();
    Mat XT = M.x().transpose(), YT = M.y().transpose();
    Mat S = row_space(generators);
    while (true) {
        Mat grown = S.vstack(S * XT).vstack(S * YT);
        Mat S2 = row_space(grown);
        if (S2.rows() == S.rows()) return Submodule{M.dim(), S2};
        S = S2;
    }
}

Submodule radical(const Module& M, size_t j) {
    const Gf& F = M.field();
    Mat XT = M.x().transpose(), YT = M.y().transpose();
    Mat S = Mat::identity(F, M.dim());
    for (size_t i = 0; i < j; ++i) {
        if (S.rows() == 0) break;
        S = row_space((S * XT).vstack(S * YT));
    }
    return Submodule{M.dim(), S};
}

Submodule socle(const Module& M, size_t j) {
    const Gf& F = M.field();
    size_t n = M.dim();
    u32 p = F.p();
    if (j == 0) return zero_submodule(M);
    // stack all monomials of total degree j (only exponents < p contribute)
    Mat stack(F, 0, n);
    bool any = false;
    for (size_t a = 0; a <= j && a < p; ++a) {
        size_t b = j - a;
        if (b >= p) continue;
        stack = any ? stack.vstack(M.monomial(a, b)) : M.monomial(a, b);
        any = true;
    }
    if (!any) return full_submodule(M);  // all degree-j monomials vanish in the algebra
    return Submodule{n, kernel(stack)};
}

RadicalSocleSeries radical_socle_series(const Module& M) {
    RadicalSocleSeries s;
    u32 p = M.p();
    size_t jmax = 2 * size_t(p) - 2;
    const Gf& F = M.field();
    Mat XT = M.x().transpose(), YT = M.y().transpose();
    Mat R = Mat::identity(F, M.dim());
    for (size_t j = 0; j <= jmax; ++j) {
        s.rad.push_back(Submodule{M.dim(), row_space(R)});
        R = row_space((R * XT).vstack(R * YT));
    }
    for (size_t j = 0; j <= jmax; ++j) s.soc.push_back(socle(M, j));
    size_t L = 0;
    while (L < s.rad.size() && s.rad[L].dim() > 0) ++L;
    s.loewy_length = L;  // least d with Rad^d = 0 (grid is long enough: Rad^{2p-1} = 0 always)
    return s;
}

Module sub_as_module(const Module& M, const Submodule& U, std::string name) {
    const Gf& F = M.field();
    if (U.parent_dim != M.dim()) throw std::invalid_argument("sub_as_module: wrong parent");
    const Mat& B = U.basis;  // k x n, RREF
    size_t k = B.rows();
    // restricted action: rows of B*X^T expressed in the basis B
    Mat BXt = B * M.x().transpose();
    Mat BYt = B * M.y().transpose();
    auto express = [&](const Mat& rows_in_U) {
        // solve C * B = rows_in_U  =>  B^T C^T = rows_in_U^T
        auto sol = solve(B.transpose(), rows_in_U.transpose());
        if (!sol) throw std::invalid_argument("sub_as_module: subspace not x,y-stable");
        return sol->transpose();
    };
    Mat Xs = express(BXt).transpose();  // action on coordinates: columns transform
    Mat Ys = express(BYt).transpose();
    // rows of BXt are images of basis vectors; express() returns coefficient rows C
    // with C*B = BXt, i.e. x(b_i) = sum_j C[i][j] b_j. As an operator matrix acting
    // on coordinate columns we need Xs[j][i] = C[i][j].
    std::optional<std::vector<int>> grading;
    if (M.graded()) {
        std::vector<int> g(k);
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i) {
            int deg = 0;
            bool found = false;
            for (size_t j = 0; j < B.cols(); ++j) {
                if (F.is_zero(B.at(i, j))) continue;
                if (!found) { deg = M.grading()[j]; found = true; }
                else if (M.grading()[j] != deg) { ok = false; break; }
            }
            g[i] = deg;
        }
        if (ok) grading = g;
    }
    return Module::make(F, Xs, Ys, grading, std::move(name));
}

Module quotient(const Module& M, const Submodule& U, std::string name) {
    return quotient_with_data(M, U, std::move(name)).mod;
}

QuotientData quotient_with_data(const Module& M, const Submodule& U, std::string name) {
    const Gf& F = M.field();
    if (U.parent_dim != M.dim()) throw std::invalid_argument("quotient: wrong parent");
    const Mat& B = U.basis;
    size_t n = M.dim(), k = B.rows();
    // pivot columns of B
    std::vector<size_t> piv;
    std::vector<bool> is_piv(n, false);
    for (size_t i = 0; i < k; ++i) {
        size_t c = 0;
        while (c < n && F.is_zero(B.at(i, c))) ++c;
        piv.push_back(c);
        is_piv[c] = true;
    }
    std::vector<size_t> comp;
    for (size_t j = 0; j < n; ++j)
        if (!is_piv[j]) comp.push_back(j);
    size_t m = comp.size();
    auto reduce_col = [&](Mat col) {
        // subtract U-rows to kill pivot coordinates of the column vector
        std::vector<u32> c(F.e()), t(F.e());
        for (size_t i = 0; i < k; ++i) {
            const u32* lead = col.at(piv[i], 0);
            if (F.is_zero(lead)) continue;
            F.assign(lead, c.data());
            for (size_t j = 0; j < n; ++j) {
                F.mul(c.data(), B.at(i, j), t.data());
                F.sub(col.at(j, 0), t.data(), col.at(j, 0));
            }
        }
        return col;
    };
    Mat Xq(F, m, m), Yq(F, m, m);
    for (size_t jj = 0; jj < m; ++jj) {
        Mat ex(F, n, 1);
        F.set_one(ex.at(comp[jj], 0));
        Mat xcol = reduce_col(M.x() * ex);
        Mat ycol = reduce_col(M.y() * ex);
        for (size_t ii = 0; ii < m; ++ii) {
            F.assign(xcol.at(comp[ii], 0), Xq.at(ii, jj));
            F.assign(ycol.at(comp[ii], 0), Yq.at(ii, jj));
        }
    }
    std::optional<std::vector<int>> grading;
    if (M.graded()) {
        bool homog = true;
        for (size_t i = 0; i < k && homog; ++i) {
            int deg = 0;
            bool found = false;
            for (size_t j = 0; j < n; ++j) {
                if (F.is_zero(B.at(i, j))) continue;
                if (!found) { deg = M.grading()[j]; found = true; }
                else if (M.grading()[j] != deg) { homog = false; break; }
            }
        }
        if (homog) {
            std::vector<int> g(m);
            for (size_t j = 0; j < m; ++j) g[j] = M.grading()[comp[j]];
            grading = g;
        }
    }
    QuotientData qd;
    qd.mod = Module::make(F, Xq, Yq, grading, std::move(name));
    qd.complement = comp;
    // projection: reduce each standard basis vector modulo U, read complement coords
    qd.projection = Mat(F, m, n);
    for (size_t j = 0; j < n; ++j) {
        Mat ex(F, n, 1);
        F.set_one(ex.at(j, 0));
        Mat red = reduce_col(std::move(ex));
        for (size_t ii = 0; ii < m; ++ii) F.assign(red.at(comp[ii], 0), qd.projection.at(ii, j));
    }
    return qd;
}

Module direct_sum(const Module& A, const Module& B, std::string name) {
    ensure_same_field(A, B, "direct_sum");
    const Gf& F = A.field();
    size_t n = A.dim(), m = B.dim();
    Mat X(F, n + m, n + m), Y(F, n + m, n + m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            F.assign(A.x().at(i, j), X.at(i, j));
            F.assign(A.y().at(i, j), Y.at(i, j));
        }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            F.assign(B.x().at(i, j), X.at(n + i, n + j));
            F.assign(B.y().at(i, j), Y.at(n + i, n + j));
        }
    std::optional<std::vector<int>> grading;
    if (A.graded() && B.graded()) {
        std::vector<int> g = A.grading();
        g.insert(g.end(), B.grading().begin(), B.grading().end());
        grading = g;
    }
    if (name.empty() && !A.name().empty() && !B.name().empty()) name = A.name() + " + " + B.name();
    return Module::make(F, X, Y, grading, std::move(name));
}

std::vector<size_t> top_basis_indices(const Module& M) {
    const Gf& F = M.field();
    Submodule R = radical(M, 1);
    std::vector<bool> is_piv(M.dim(), false);
    for (size_t i = 0; i < R.basis.rows(); ++i) {
        size_t c = 0;
        while (c < M.dim() && F.is_zero(R.basis.at(i, c))) ++c;
        is_piv[c] = true;
    }
    std::vector<size_t> out;
    for (size_t j = 0; j < M.dim(); ++j)
        if (!is_piv[j]) out.push_back(j);
    return out;
}

// ---------------------------------------------------------------------------
// Hom spaces via projective presentations
// ---------------------------------------------------------------------------

namespace {

// coordinates of Lambda^t: slot i, monomial x^a y^b at index a*p+b
Mat lambda_shift(const Gf& F, const Mat& K, size_t t, bool by_x) {
    u32 p = F.p();
    size_t L = size_t(p) * p;
    Mat S(F, K.rows(), K.cols());
    for (size_t r = 0; r < K.rows(); ++r)
        for (size_t i = 0; i < t; ++i)
            for (u32 a = 0; a < p; ++a)
                for (u32 b = 0; b < p; ++b) {
                    const u32* v = K.at(r, i * L + a * p + b);
                    if (F.is_zero(v)) continue;
                    if (by_x) {
                        if (a + 1 < p) F.assign(v, S.at(r, i * L + (a + 1) * p + b));
                    } else {
                        if (b + 1 < p) F.assign(v, S.at(r, i * L + a * p + (b + 1)));
                    }
                }
    return S;
}

}  // namespace

std::vector<Mat> hom_space(const Module& M, const Module& N) {
    ensure_same_field(M, N, "hom_space");
    const Gf& F = M.field();
    size_t nM = M.dim(), nN = N.dim();
    if (nM == 0 || nN == 0) return {};
    u32 p = F.p();
    size_t L = size_t(p) * p;
    std::vector<size_t> gens = top_basis_indices(M);
    size_t t = gens.size();
    std::vector<Mat> monM = monomial_table(M), monN = monomial_table(N);

    // presentation P : Lambda^t -> M
    Mat P(F, nM, t * L);
    for (size_t i = 0; i < t; ++i)
        for (size_t m = 0; m < L; ++m)
            for (size_t r = 0; r < nM; ++r)
                F.assign(monM[m].at(r, gens[i]), P.at(r, i * L + m));

    Mat K = kernel(P);                                   // relations as a subspace
    Mat RadK = row_space(lambda_shift(F, K, t, true).vstack(lambda_shift(F, K, t, false)));
    // relation generators: rows of K extending RadK
    std::vector<size_t> rel_rows;
    Mat cur = RadK;
    for (size_t r = 0; r < K.rows(); ++r) {
        Mat cand = cur.vstack(K.rows_slice(r, r + 1));
        Mat rs = row_space(cand);
        if (rs.rows() > cur.rows()) {
            cur = rs;
            rel_rows.push_back(r);
        }
    }
    size_t s = rel_rows.size();

    // constraints: sum_i rho_N(rel_i) w_i = 0
    std::vector<Mat> sols;
    Mat W;
    if (s == 0) {
        // free module of rank t: every (w_1..w_t) works
        W = Mat::identity(F, t * nN);
    } else {
        Mat C(F, s * nN, t * nN);
        for (size_t l = 0; l < s; ++l) {
            for (size_t i = 0; i < t; ++i) {
                // block = sum_m K[rel_rows[l]][i*L+m] * monN[m]
                Mat blk(F, nN, nN);
                for (size_t m = 0; m < L; ++m) {
                    const u32* c = K.at(rel_rows[l], i * L + m);
                    if (F.is_zero(c)) continue;
                    for (size_t rr = 0; rr < nN; ++rr)
                        for (size_t cc = 0; cc < nN; ++cc)
                            F.addmul(c, monN[m].at(rr, cc), blk.at(rr, cc));
                }
                for (size_t rr = 0; rr < nN; ++rr)
                    for (size_t cc = 0; cc < nN; ++cc)
                        F.assign(blk.at(rr, cc), C.at(l * nN + rr, i * nN + cc));
            }
        }
        W = kernel(C);
    }

    // Lambda-coordinates of the standard basis of M
    auto Lc = solve(P, Mat::identity(F, nM));
    if (!Lc) throw std::logic_error("hom_space: presentation not surjective");

    std::vector<Mat> result;
    for (size_t r = 0; r < W.rows(); ++r) {
        // V: nN x (t*L), column (i,m) = monN[m] * w_i
        Mat V(F, nN, t * L);
        for (size_t i = 0; i < t; ++i) {
            Mat wi(F, nN, 1);
            for (size_t rr = 0; rr < nN; ++rr) F.assign(W.at(r, i * nN + rr), wi.at(rr, 0));
            for (size_t m = 0; m < L; ++m) {
                Mat col = monN[m] * wi;
                for (size_t rr = 0; rr < nN; ++rr) F.assign(col.at(rr, 0), V.at(rr, i * L + m));
            }
        }
        result.push_back(V * *Lc);
    }

    // echelon-canonical basis of the space of intertwiners
    if (result.empty()) return result;
    Mat flat(F, result.size(), nN * nM);
    for (size_t r = 0; r < result.size(); ++r)
        for (size_t i = 0; i < nN; ++i)
            for (size_t j = 0; j < nM; ++j)
                F.assign(result[r].at(i, j), flat.at(r, i * nM + j));
    flat = row_space(flat);
    std::vector<Mat> canon;
    for (size_t r = 0; r < flat.rows(); ++r) {
        Mat A(F, nN, nM);
        for (size_t i = 0; i < nN; ++i)
            for (size_t j = 0; j < nM; ++j)
                F.assign(flat.at(r, i * nM + j), A.at(i, j));
        canon.push_back(std::move(A));
    }
    return canon;
}

// ---------------------------------------------------------------------------
// duals and twists
// ---------------------------------------------------------------------------

namespace {

Mat antipode_series(const Gf& F, const Mat& A) {
    // sum_{i=1}^{p-1} (-1)^i A^i
    u32 p = F.p();
    Mat acc(F, A.rows(), A.cols());
    Mat pw = Mat::identity(F, A.rows());
    for (u32 i = 1; i < p; ++i) {
        pw = pw * A;
        acc = (i % 2) ? acc - pw : acc + pw;
    }
    return acc;
}

}  // namespace

Module dual(const Module& M) {
    const Gf& F = M.field();
    Mat Xd = antipode_series(F, M.x()).transpose();
    Mat Yd = antipode_series(F, M.y()).transpose();
    std::string nm = M.name().empty() ? std::string{} : M.name() + "*";
    return Module::make(F, Xd, Yd, std::nullopt, nm);
}

Module contragredient(const Module& M) {
    const Gf& F = M.field();
    std::optional<std::vector<int>> g;
    if (M.graded()) {
        std::vector<int> gg = M.grading();
        for (int& d : gg) d = -d;
        g = gg;
    }
    std::string nm = M.name().empty() ? std::string{} : M.name() + "^";
    return Module::make(F, (-M.x()).transpose(), (-M.y()).transpose(), g, nm);
}

Module twist(const Module& M, const Mat& g) {
    const Gf& F = M.field();
    if (g.rows() != 2 || g.cols() != 2) throw std::invalid_argument("twist: g must be 2x2");
    auto gi = inverse(g);
    if (!gi) throw std::invalid_argument("twist: singular g");
    // x -> gi[0][0] x + gi[1][0] y, y -> gi[0][1] x + gi[1][1] y
    Mat Xt = M.x().scaled(gi->get(0, 0)) + M.y().scaled(gi->get(1, 0));
    Mat Yt = M.x().scaled(gi->get(0, 1)) + M.y().scaled(gi->get(1, 1));
    std::optional<std::vector<int>> grading;
    if (M.graded()) grading = M.grading();
    std::string nm = M.name().empty() ? std::string{} : M.name() + "^(g)";
    return Module::make(F, Xt, Yt, grading, nm);
}

// ---------------------------------------------------------------------------
// algebra radical (characteristic-p trace algorithms)
// ---------------------------------------------------------------------------

namespace {

/// The left regular representation of the F_p-algebra spanned by an F_q-basis
/// of n x n matrices (the span must be multiplicatively closed and unital).
/// F_p-basis vectors are u_{(a,j)} = basis[a] * t^j, index a*e + j.
struct RegularRep {
    const Gf* Fq_field;
    size_t s, e, S;           // S = s*e
    std::vector<Mat> left;    // S left-multiplication matrices over F_p
    std::vector<Fq> tpowers;  // t^0..t^{e-1}

    /// Element from F_p coordinates back to an F_q matrix.
    Mat to_matrix(const std::vector<Mat>& basis, const Mat& coords, size_t row) const {
        const Gf& F = *Fq_field;
        Mat A(F, basis[0].rows(), basis[0].cols());
        for (size_t u = 0; u < S; ++u) {
            u32 c = coords.at(row, u)[0];
            if (!c) continue;
            Fq coef = F.mul(tpowers[u % e], F.from_int(c));
            A = A + basis[u / e].scaled(coef);
        }
        return A;
    }
};

RegularRep build_regular_rep(const Gf& F, const std::vector<Mat>& basis) {
    const Gf& Fp = Gf::get(F.p(), 1);
    size_t s = basis.size(), e = F.e(), S = s * e;
    size_t n = basis[0].rows();
    RegularRep rep;
    rep.Fq_field = &F;
    rep.s = s;
    rep.e = e;
    rep.S = S;
    rep.tpowers.resize(e);
    rep.tpowers[0] = F.one();
    Fq tgen = F.from_index(e > 1 ? F.p() : 0);
    for (size_t k = 1; k < e; ++k) rep.tpowers[k] = F.mul(rep.tpowers[k - 1], tgen);

    // structure constants over F_q: basis[a]*basis[b] = sum_d c_{ab}^d basis[d],
    // solved in one batch against the flattened basis
    Mat BT(F, n * n, s);
    for (size_t d = 0; d < s; ++d)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                F.assign(basis[d].at(i, j), BT.at(i * n + j, d));
    Mat P(F, n * n, s * s);
    for (size_t a = 0; a < s; ++a)
        for (size_t b = 0; b < s; ++b) {
            Mat prod = basis[a] * basis[b];
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    F.assign(prod.at(i, j), P.at(i * n + j, a * s + b));
        }
    auto sc = solve(BT, P);  // s x (s*s): sc(d, a*s+b) = c_{ab}^d
    if (!sc) throw std::logic_error("build_regular_rep: span not multiplicatively closed");

    // left multiplication by u_{(a,j)} on u_{(b,k)}:
    //   basis[a] t^j basis[b] t^k = sum_d (c_{ab}^d t^{j+k}) basis[d]
    rep.left.assign(S, Mat(Fp, S, S));
    Fq tmp(F.e());
    for (size_t a = 0; a < s; ++a)
        for (size_t j = 0; j < e; ++j) {
            Mat& L = rep.left[a * e + j];
            for (size_t b = 0; b < s; ++b)
                for (size_t k = 0; k < e; ++k) {
                    Fq tjk = (j + k < e) ? rep.tpowers[j + k]
                                         : F.mul(rep.tpowers[j], rep.tpowers[k]);
                    for (size_t d = 0; d < s; ++d) {
                        const u32* c = sc->at(d, a * s + b);
                        if (F.is_zero(c)) continue;
                        F.mul(c, tjk.data(), tmp.data());
                        for (size_t l = 0; l < e; ++l)
                            L.at(d * e + l, b * e + k)[0] = Fp.add1(L.at(d * e + l, b * e + k)[0], tmp[l]);
                    }
                }
        }
    return rep;
}

// integer matrices mod m (m = p^{i+1} is tiny, so u64 suffices)
struct ZmMat {
    size_t n;
    u64 m;
    std::vector<u64> a;
    ZmMat(size_t n_, u64 m_) : n(n_), m(m_), a(n_ * n_, 0) {}
    u64& at(size_t i, size_t j) { return a[i * n + j]; }
    u64 at(size_t i, size_t j) const { return a[i * n + j]; }
};

ZmMat zm_mul(const ZmMat& A, const ZmMat& B) {
    ZmMat C(A.n, A.m);
    for (size_t i = 0; i < A.n; ++i)
        for (size_t k = 0; k < A.n; ++k) {
            u64 v = A.at(i, k);
            if (!v) continue;
            for (size_t j = 0; j < A.n; ++j)
                C.at(i, j) = (C.at(i, j) + v * B.at(k, j)) % A.m;
        }
    return C;
}

ZmMat zm_pow(ZmMat A, u64 e) {
    ZmMat R(A.n, A.m);
    for (size_t i = 0; i < A.n; ++i) R.at(i, i) = 1 % A.m;
    while (e) {
        if (e & 1) R = zm_mul(R, A);
        A = zm_mul(A, A);
        e >>= 1;
    }
    return R;
}

/// Radical coordinates (rows over F_p, length S) within a regular rep.
/// Characteristic-p radical algorithm: iterated kernels of the lifted trace
/// forms tau_i(z) = Tr(z_hat^{p^i}) / p^i mod p, evaluated over Z/p^{i+1};
/// the plain trace form alone is degenerate whenever p divides the relevant
/// traces.
Mat radical_coords(const RegularRep& rep) {
    u32 p = rep.Fq_field->p();
    const Gf& Fp = Gf::get(p, 1);
    size_t S = rep.S;
    Mat I = Mat::identity(Fp, S);
    u64 pk = 1;
    while (pk <= S && I.rows() > 0) {
        u64 mod = pk * p;
        size_t r = I.rows();
        // lifted matrices of the current basis elements
        std::vector<ZmMat> lifts;
        lifts.reserve(r);
        for (size_t a = 0; a < r; ++a) {
            ZmMat x(S, mod);
            for (size_t u = 0; u < S; ++u) {
                u32 c = I.at(a, u)[0];
                if (!c) continue;
                for (size_t ii = 0; ii < S; ++ii)
                    for (size_t jj = 0; jj < S; ++jj)
                        x.at(ii, jj) = (x.at(ii, jj) + u64(c) * rep.left[u].at(ii, jj)[0]) % mod;
            }
            lifts.push_back(std::move(x));
        }
        Mat T(Fp, r, r);
        for (size_t a = 0; a < r; ++a)
            for (size_t b = 0; b < r; ++b) {
                ZmMat z = zm_mul(lifts[a], lifts[b]);
                // reduce entries mod p, then relift: tau_i is well defined on
                // the current ideal for any lift, so the canonical one will do
                for (auto& v : z.a) v %= mod;
                ZmMat zp = zm_pow(z, pk);
                u64 tr = 0;
                for (size_t d = 0; d < S; ++d) tr = (tr + zp.at(d, d)) % mod;
                if (tr % pk != 0) throw std::logic_error("radical_coords: trace not divisible by p^i");
                T.at(a, b)[0] = u32((tr / pk) % p);
            }
        I = row_space(kernel(T) * I);
        pk *= p;
    }
    return I;
}

}  // namespace

std::vector<Mat> algebra_radical(const Gf& F, const std::vector<Mat>& basis) {
    if (basis.empty()) return {};
    RegularRep rep = build_regular_rep(F, basis);
    Mat I = radical_coords(rep);
    std::vector<Mat> out;
    if (I.rows() == 0) return out;
    size_t n = basis[0].rows();
    Mat flat(F, I.rows(), n * n);
    for (size_t a = 0; a < I.rows(); ++a) {
        Mat A = rep.to_matrix(basis, I, a);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                F.assign(A.at(i, j), flat.at(a, i * n + j));
    }
    flat = row_space(flat);
    for (size_t a = 0; a < flat.rows(); ++a) {
        Mat A(F, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                F.assign(flat.at(a, i * n + j), A.at(i, j));
        out.push_back(std::move(A));
    }
    return out;
}

// ---------------------------------------------------------------------------
// local End test / Fitting decomposition / isomorphism
// ---------------------------------------------------------------------------

namespace {

/// Localness of the algebra spanned by `basis` (mult. closed, unital) and a
/// coordinate description of its radical (rows over F_p of length s*e).
struct AlgebraHead {
    Mat radical_coords_fp;
    bool local = false;
    size_t head_dim_fp = 0;
};

AlgebraHead algebra_head(const Gf& F, const std::vector<Mat>& basis) {
    const Gf& Fp = Gf::get(F.p(), 1);
    AlgebraHead res;
    RegularRep rep = build_regular_rep(F, basis);
    size_t S = rep.S;
    Mat J = radical_coords(rep);  // F_p rows in coordinate space
    res.radical_coords_fp = J;
    size_t sdim = S - J.rows();
    res.head_dim_fp = sdim;

    // coordinate-space coset reps: standard vectors extending J
    std::vector<size_t> reps;
    {
        Mat cur = row_space(J);
        for (size_t u = 0; u < S && reps.size() < sdim; ++u) {
            Mat cand(Fp, 1, S);
            cand.at(0, u)[0] = 1;
            Mat rs = row_space(cur.vstack(cand));
            if (rs.rows() > cur.rows()) { cur = rs; reps.push_back(u); }
        }
    }
    Mat basis_mat(Fp, S, S);  // rows: reps then J basis
    for (size_t i = 0; i < sdim; ++i) basis_mat.at(i, reps[i])[0] = 1;
    for (size_t r = 0; r < J.rows(); ++r)
        for (size_t u = 0; u < S; ++u) basis_mat.at(sdim + r, u)[0] = J.at(r, u)[0];
    Mat basis_T = basis_mat.transpose();

    // batch: products of coset reps, reduced mod J
    Mat prods(Fp, S, sdim * sdim);
    for (size_t i = 0; i < sdim; ++i)
        for (size_t j = 0; j < sdim; ++j) {
            // column reps[j] of left[reps[i]]
            for (size_t u = 0; u < S; ++u)
                prods.at(u, i * sdim + j)[0] = rep.left[reps[i]].at(u, reps[j])[0];
        }
    auto sol = solve(basis_T, prods);
    if (!sol) throw std::logic_error("end_is_local: product outside span");
    // S-algebra multiplication table: mul(i,j) coordinates = sol(0..sdim, i*sdim+j)
    auto smul = [&](const std::vector<u32>& a, const std::vector<u32>& b) {
        std::vector<u32> out(sdim, 0);
        for (size_t i = 0; i < sdim; ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < sdim; ++j) {
                if (!b[j]) continue;
                u32 c = Fp.mul1(a[i], b[j]);
                for (size_t d = 0; d < sdim; ++d)
                    out[d] = Fp.add1(out[d], Fp.mul1(c, sol->at(d, i * sdim + j)[0]));
            }
        }
        return out;
    };
    // commutativity of the semisimple quotient
    for (size_t i = 0; i < sdim; ++i)
        for (size_t j = i + 1; j < sdim; ++j)
            for (size_t d = 0; d < sdim; ++d)
                if (sol->at(d, i * sdim + j)[0] != sol->at(d, j * sdim + i)[0]) {
                    res.local = false;  // a noncommutative semisimple algebra has idempotents
                    return res;
                }
    // commutative semisimple over F_p: number of field factors =
    // dim of the Frobenius fixed space
    Mat Frob(Fp, sdim, sdim);
    for (size_t j = 0; j < sdim; ++j) {
        std::vector<u32> ej(sdim, 0), pw;
        ej[j] = 1;
        pw = ej;
        for (u32 k = 1; k < Fp.p(); ++k) pw = smul(pw, ej);
        for (size_t i = 0; i < sdim; ++i) Frob.at(i, j)[0] = pw[i];
    }
    Mat FmI = Frob - Mat::identity(Fp, sdim);
    res.local = (sdim - rank(FmI)) == 1;
    return res;
}

}  // namespace

EndAnalysis analyze_end(const Module& M) {
    const Gf& F = M.field();
    EndAnalysis res;
    res.end_basis = hom_space(M, M);
    size_t s = res.end_basis.size();
    if (M.dim() == 0) {
        res.local = true;
        return res;
    }
    if (s == 1) {
        res.local = true;
        res.head_dim_fp = F.e();
        return res;
    }
    size_t n = M.dim();
    // project onto the induced action on Top(M); the kernel consists of maps
    // with image inside Rad(M) and is nilpotent of order <= Loewy length
    QuotientData top = quotient_with_data(M, radical(M, 1));
    size_t t = top.mod.dim();
    Mat lift(F, n, t);
    for (size_t j = 0; j < t; ++j) F.set_one(lift.at(top.complement[j], j));
    std::vector<Mat> projected(s);
    Mat flat(F, s, t * t);
    for (size_t b = 0; b < s; ++b) {
        projected[b] = top.projection * res.end_basis[b] * lift;
        for (size_t i = 0; i < t; ++i)
            for (size_t j = 0; j < t; ++j)
                F.assign(projected[b].at(i, j), flat.at(b, i * t + j));
    }
    Mat ker_pi = kernel(flat);  // coefficient rows of End combos landing in Rad
    Mat Brows = row_space(flat);
    size_t sB = Brows.rows();
    std::vector<Mat> Bbasis(sB, Mat(F, t, t));
    for (size_t b = 0; b < sB; ++b)
        for (size_t i = 0; i < t; ++i)
            for (size_t j = 0; j < t; ++j)
                F.assign(Brows.at(b, i * t + j), Bbasis[b].at(i, j));
    AlgebraHead head = algebra_head(F, Bbasis);
    res.local = head.local;
    res.head_dim_fp = head.head_dim_fp;
    // radical of End = ker(pi) + preimages of rad(B)
    std::vector<Mat> radE;
    for (size_t r = 0; r < ker_pi.rows(); ++r) {
        Mat A(F, n, n);
        for (size_t b = 0; b < s; ++b) {
            const u32* c = ker_pi.at(r, b);
            if (!F.is_zero(c)) A = A + res.end_basis[b].scaled(Fq(c, c + F.e()));
        }
        radE.push_back(std::move(A));
    }
    if (head.radical_coords_fp.rows() > 0) {
        // rad(B) elements as t x t matrices, then preimages under flat
        const Gf& Fp = Gf::get(F.p(), 1);
        Fq tgen = F.from_index(F.e() > 1 ? F.p() : 0);
        std::vector<Fq> tpow(F.e());
        tpow[0] = F.one();
        for (size_t k = 1; k < F.e(); ++k) tpow[k] = F.mul(tpow[k - 1], tgen);
        (void)Fp;
        Mat flat_T = flat.transpose();
        for (size_t r = 0; r < head.radical_coords_fp.rows(); ++r) {
            Mat relem(F, t, t);
            for (size_t u = 0; u < head.radical_coords_fp.cols(); ++u) {
                u32 c = head.radical_coords_fp.at(r, u)[0];
                if (!c) continue;
                Fq coef = F.mul(tpow[u % F.e()], F.from_int(c));
                relem = relem + Bbasis[u / F.e()].scaled(coef);
            }
            Mat rv(F, t * t, 1);
            for (size_t i = 0; i < t; ++i)
                for (size_t j = 0; j < t; ++j)
                    F.assign(relem.at(i, j), rv.at(i * t + j, 0));
            auto coords = solve(flat_T, rv);
            if (!coords) throw std::logic_error("analyze_end: radical element outside the projected algebra");
            Mat A(F, n, n);
            for (size_t b = 0; b < s; ++b)
                if (!F.is_zero(coords->at(b, 0))) A = A + res.end_basis[b].scaled(coords->get(b, 0));
            radE.push_back(std::move(A));
        }
    }
    // canonicalize the radical basis
    if (!radE.empty()) {
        Mat rflat(F, radE.size(), n * n);
        for (size_t b = 0; b < radE.size(); ++b)
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    F.assign(radE[b].at(i, j), rflat.at(b, i * n + j));
        rflat = row_space(rflat);
        radE.clear();
        for (size_t b = 0; b < rflat.rows(); ++b) {
            Mat A(F, n, n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    F.assign(rflat.at(b, i * n + j), A.at(i, j));
            radE.push_back(std::move(A));
        }
    }
    res.radical = std::move(radE);
    return res;
}

LocalEndResult end_is_local(const Module& M) {
    EndAnalysis a = analyze_end(M);
    return LocalEndResult{a.local, a.end_basis.size(), a.radical.size(), a.head_dim_fp};
}

std::vector<FittingSummand> fitting_decompose(const Module& M, u64 seed) {
    const Gf& F = M.field();
    std::vector<Module> pieces;
    std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbull);

    std::vector<Module> work{M};
    std::vector<size_t> loc_dims;
    std::vector<Module> done;
    std::vector<size_t> done_srank;
    while (!work.empty()) {
        Module cur = std::move(work.back());
        work.pop_back();
        if (cur.dim() == 0) continue;
        LocalEndResult loc = end_is_local(cur);
        if (loc.local) {
            done.push_back(cur);
            done_srank.push_back(loc.simple_quotient_dim);
            continue;
        }
        // find a Fitting splitter
        std::vector<Mat> E = hom_space(cur, cur);
        bool split = false;
        u64 q = F.order();
        for (size_t trial = 0; trial < 2000 && !split; ++trial) {
            Mat f(F, cur.dim(), cur.dim());
            if (trial < E.size()) {
                f = E[trial];
            } else {
                for (const auto& A : E) {
                    Fq c = F.from_index(rng() % q);
                    f = f + A.scaled(c);
                }
            }
            Mat fn = f.pow(cur.dim());
            size_t r = rank(fn);
            if (r == 0 || r == cur.dim()) continue;
            Submodule ker_sub{cur.dim(), kernel(fn)};
            Submodule im_sub{cur.dim(), col_space(fn)};
            work.push_back(sub_as_module(cur, ker_sub));
            work.push_back(sub_as_module(cur, im_sub));
            split = true;
        }
        if (!split) throw std::logic_error("fitting_decompose: non-local End but no Fitting splitter found");
    }

    // group by isomorphism
    std::vector<FittingSummand> out;
    std::vector<bool> used(done.size(), false);
    for (size_t i = 0; i < done.size(); ++i) {
        if (used[i]) continue;
        size_t mult = 1;
        for (size_t j = i + 1; j < done.size(); ++j) {
            if (used[j] || done[j].dim() != done[i].dim()) continue;
            if (is_isomorphic(done[i], done[j], seed).isomorphic) {
                used[j] = true;
                ++mult;
            }
        }
        out.push_back(FittingSummand{done[i], mult, done_srank[i]});
    }
    std::sort(out.begin(), out.end(), [](const FittingSummand& a, const FittingSummand& b) {
        return a.summand.dim() > b.summand.dim();
    });
    return out;
}

IsoResult is_isomorphic(const Module& M, const Module& N, u64 seed) {
    ensure_same_field(M, N, "is_isomorphic");
    const Gf& F = M.field();
    IsoResult res;
    if (M.dim() != N.dim()) {
        res.method = "dim-mismatch";
        return res;
    }
    size_t n = M.dim();
    if (n == 0) {
        res.isomorphic = true;
        res.method = "trivial";
        res.witness = Mat(F, 0, 0);
        return res;
    }
    // invariant prefilter: radical series dimensions
    for (size_t j = 1; j < 2 * size_t(F.p()) - 1; ++j) {
        if (radical(M, j).dim() != radical(N, j).dim()) {
            res.method = "invariant-mismatch(rad^" + std::to_string(j) + ")";
            return res;
        }
    }
    std::vector<Mat> H = hom_space(M, N);
    {
        size_t h2 = hom_space(N, M).size();
        size_t eM = hom_space(M, M).size(), eN = hom_space(N, N).size();
        if (H.size() != h2 || eM != eN) {
            res.method = "hom-dims";
            return res;
        }
    }
    if (H.empty()) {
        res.method = "hom-empty";
        return res;
    }
    size_t h = H.size();
    u64 q = F.order();
    auto try_combo = [&](const std::vector<Fq>& c) -> bool {
        Mat A(F, n, n);
        for (size_t b = 0; b < h; ++b)
            if (!F.is_zero(c[b])) A = A + H[b].scaled(c[b]);
        if (rank(A) == n) {
            res.isomorphic = true;
            res.witness = A;
            return true;
        }
        return false;
    };
    // exhaustive when feasible: definitive either way
    double budget = 1;
    for (size_t i = 0; i < h && budget <= 4096; ++i) budget *= double(q);
    if (budget <= 4096) {
        u64 total = 1;
        for (size_t i = 0; i < h; ++i) total *= q;
        for (u64 idx = 1; idx < total; ++idx) {
            u64 v = idx;
            std::vector<Fq> c(h);
            for (size_t b = 0; b < h; ++b) { c[b] = F.from_index(v % q); v /= q; }
            if (try_combo(c)) {
                res.method = "exhaustive";
                return res;
            }
        }
        res.method = "exhaustive";
        res.isomorphic = false;
        return res;
    }
    // random rational trials
    std::mt19937_64 rng(seed ^ 0x8f1bbcdcbfa53e0bull);
    for (size_t trial = 0; trial < 512; ++trial) {
        std::vector<Fq> c(h);
        for (size_t b = 0; b < h; ++b) c[b] = F.from_index(rng() % q);
        if (try_combo(c)) {
            res.method = "random";
            return res;
        }
    }
    // extension-field trials; an invertible combination over an extension
    // proves isomorphism over the coefficient field (Noether-Deuring), the
    // witness just lives upstairs
    size_t k = 1;
    double ord = double(q);
    while (ord < 4.0 * double(n)) { ord *= double(q); ++k; }
    if (k > 1) {
        // deterministic irreducible over F of degree k
        detail::UPoly hpol;
        {
            u64 total = 1;
            bool found = false;
            for (size_t i = 0; i < k && total < (u64(1) << 40); ++i) total *= q;
            for (u64 m = 0; m < total && !found; ++m) {
                std::vector<Fq> coeffs(k + 1, F.zero());
                u64 v = m;
                for (size_t i = 0; i < k; ++i) { coeffs[i] = F.from_index(v % q); v /= q; }
                coeffs[k] = F.one();
                detail::UPoly f = detail::upoly_from_coeffs(F, coeffs);
                if (detail::upoly_is_irreducible(F, f)) { hpol = f; found = true; }
            }
        }
        RootField Lf(F, hpol.c, k);
        size_t w = Lf.words();
        size_t trials = 64;
        for (size_t trial = 0; trial < trials; ++trial) {
            // random combination over L
            std::vector<u32> data(n * n * w, 0);
            std::vector<u32> coef(w), t(w), emb(w);
            for (size_t b = 0; b < h; ++b) {
                for (size_t u = 0; u < w; ++u) coef[u] = u32(rng() % F.p());
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j) {
                        const u32* a = H[b].at(i, j);
                        if (F.is_zero(a)) continue;
                        Lf.embed(a, emb.data());
                        Lf.mul(coef.data(), emb.data(), t.data());
                        Lf.add(data.data() + (i * n + j) * w, t.data(), data.data() + (i * n + j) * w);
                    }
            }
            if (rank_flat(Lf, data, n, n) == n) {
                res.isomorphic = true;
                res.witness_over_extension = true;
                res.method = "random+extension";
                // try a little harder for a rational witness
                for (size_t more = 0; more < 2048; ++more) {
                    std::vector<Fq> c(h);
                    for (size_t b = 0; b < h; ++b) c[b] = F.from_index(rng() % q);
                    if (try_combo(c)) {
                        res.witness_over_extension = false;
                        break;
                    }
                }
                return res;
            }
        }
        res.method = "random+extension";
        res.false_negative_bound = std::pow(double(n) / ord, double(trials));
    } else {
        res.method = "random";
        res.false_negative_bound = std::pow(double(n) / double(q), 512.0);
    }
    res.isomorphic = false;
    return res;
}

}  // namespace pnil
