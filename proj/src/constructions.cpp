#include "pnil/constructions.hpp"

#include <algorithm>

namespace pnil {

Module regular_module(const Gf& F) {
    u32 p = F.p();
    size_t n = size_t(p) * p;
    Mat X(F, n, n), Y(F, n, n);
    std::vector<int> grading(n);
    for (u32 a = 0; a < p; ++a)
        for (u32 b = 0; b < p; ++b) {
            size_t idx = size_t(a) * p + b;
            grading[idx] = int(a + b);
            if (a + 1 < p) F.set_one(X.at(size_t(a + 1) * p + b, idx));
            if (b + 1 < p) F.set_one(Y.at(size_t(a) * p + b + 1, idx));
        }
    return Module::make(F, X, Y, grading, "kG");
}

Module trivial_module(const Gf& F) {
    return Module::make(F, Mat(F, 1, 1), Mat(F, 1, 1), std::vector<int>{0}, "k");
}

Module xy2_module(const Gf& F) {
    Mat X(F, 2, 2), Y(F, 2, 2);
    F.set_one(Y.at(1, 0));
    return Module::make(F, X, Y, std::vector<int>{0, 1}, "k[x,y]/(x,y^2)");
}

size_t w_module_dim(u32 /*p*/, size_t n, size_t d) {
    return (n - d + 1) * d + d * (d - 1) / 2;
}

Module w_module(const Gf& F, size_t n, size_t d) {
    u32 p = F.p();
    if (d < 1 || d > p || n < d)
        throw std::invalid_argument("w_module: need 1 <= d <= p and n >= d");
    // free module kG^n, basis (i, a, b) = x^a y^b v_i
    size_t L = size_t(p) * p;
    size_t N = n * L;
    auto idx = [&](size_t i, u32 a, u32 b) { return i * L + size_t(a) * p + b; };
    Mat X(F, N, N), Y(F, N, N);
    std::vector<int> grading(N);
    for (size_t i = 0; i < n; ++i)
        for (u32 a = 0; a < p; ++a)
            for (u32 b = 0; b < p; ++b) {
                grading[idx(i, a, b)] = int(a + b);
                if (a + 1 < p) F.set_one(X.at(idx(i, a + 1, b), idx(i, a, b)));
                if (b + 1 < p) F.set_one(Y.at(idx(i, a, b + 1), idx(i, a, b)));
            }
    Module freeM = Module::make(F, X, Y, grading);
    // relation generators of the defining submodule
    std::vector<std::vector<long long>> rel_rows;
    auto row = [&](std::initializer_list<std::pair<size_t, long long>> terms) {
        std::vector<long long> r(N, 0);
        for (auto& [pos, c] : terms) r[pos] = c;
        rel_rows.push_back(std::move(r));
    };
    row({{idx(0, 1, 0), 1}});           // x.v_1
    row({{idx(n - 1, 0, 1), 1}});       // y.v_n
    for (size_t i = 0; i + 1 < n; ++i)  // y.v_i - x.v_{i+1}
        row({{idx(i, 0, 1), 1}, {idx(i + 1, 1, 0), -1}});
    if (d < p)
        for (size_t i = 1; i < n; ++i)  // x^d.v_i, 2 <= i <= n
            row({{idx(i, u32(d), 0), 1}});
    Submodule rel = submodule_closure(freeM, Mat::from_rows(F, rel_rows));
    Module W = quotient(freeM, rel, "W(" + std::to_string(n) + "," + std::to_string(d) + ")");
    if (W.dim() != w_module_dim(p, n, d))
        throw std::logic_error("w_module: unexpected dimension");
    return W;
}

// ---------------------------------------------------------------------------
// Kronecker functor
// ---------------------------------------------------------------------------

Module kronecker(const Gf& F, const KroneckerRep& rep, std::string name) {
    size_t n1 = rep.phi_x.cols(), n2 = rep.phi_x.rows();
    if (rep.phi_y.rows() != n2 || rep.phi_y.cols() != n1)
        throw std::invalid_argument("kronecker: mismatched map shapes");
    size_t n = n1 + n2;
    Mat X(F, n, n), Y(F, n, n);
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n1; ++j) {
            F.assign(rep.phi_x.at(i, j), X.at(n1 + i, j));
            F.assign(rep.phi_y.at(i, j), Y.at(n1 + i, j));
        }
    std::vector<int> grading(n, 0);
    for (size_t i = 0; i < n2; ++i) grading[n1 + i] = 1;
    return Module::make(F, X, Y, grading, std::move(name));
}

Module kronecker_preinjective(const Gf& F, size_t n) {
    // dims (n+1, n): phi_x = [I_n | 0], phi_y = [0 | I_n]
    Mat px(F, n, n + 1), py(F, n, n + 1);
    for (size_t i = 0; i < n; ++i) {
        F.set_one(px.at(i, i));
        F.set_one(py.at(i, i + 1));
    }
    return kronecker(F, {px, py}, "F(preinj " + std::to_string(n) + ")");
}

Module kronecker_preprojective(const Gf& F, size_t n) {
    // dims (n, n+1): transposes of the preinjective maps
    Mat px(F, n + 1, n), py(F, n + 1, n);
    for (size_t i = 0; i < n; ++i) {
        F.set_one(px.at(i, i));
        F.set_one(py.at(i + 1, i));
    }
    return kronecker(F, {px, py}, "F(preproj " + std::to_string(n) + ")");
}

Module kronecker_regular(const Gf& F, size_t n, const Fq& lambda) {
    Mat px = Mat::identity(F, n), py(F, n, n);
    for (size_t i = 0; i < n; ++i) {
        F.assign(lambda.data(), py.at(i, i));
        if (i + 1 < n) F.set_one(py.at(i, i + 1));  // Jordan block J_n(lambda)
    }
    return kronecker(F, {px, py}, "F(regular " + std::to_string(n) + ")");
}

// ---------------------------------------------------------------------------
// quotient family
// ---------------------------------------------------------------------------

Submodule family_socle_member(const Module& M, const Submodule& gamma, const Mat& f) {
    const Gf& F = M.field();
    Submodule soc = socle(M, 1);
    if (!submodule_contains(soc, gamma))
        throw std::invalid_argument("quotient_family: gamma is not contained in the socle");
    size_t gdim = gamma.dim(), cdim = soc.dim() - gdim;
    if (f.rows() != gdim || f.cols() != cdim)
        throw std::invalid_argument("quotient_family: f has wrong shape");
    // echelon-complement section: rows of soc.basis extending gamma.basis
    std::vector<size_t> comp_rows;
    Mat cur = gamma.basis;
    for (size_t r = 0; r < soc.basis.rows() && comp_rows.size() < cdim; ++r) {
        Mat cand = cur.vstack(soc.basis.rows_slice(r, r + 1));
        Mat rs = row_space(cand);
        if (rs.rows() > cur.rows()) {
            cur = rs;
            comp_rows.push_back(r);
        }
    }
    // U_f spanned by s(c_j) + f(c_j) = c_j + sum_i f[i][j] gamma_i
    Mat U(F, cdim, M.dim());
    for (size_t j = 0; j < cdim; ++j) {
        for (size_t c = 0; c < M.dim(); ++c)
            F.assign(soc.basis.at(comp_rows[j], c), U.at(j, c));
        for (size_t i = 0; i < gdim; ++i) {
            if (F.is_zero(f.at(i, j))) continue;
            for (size_t c = 0; c < M.dim(); ++c)
                F.addmul(f.at(i, j), gamma.basis.at(i, c), U.at(j, c));
        }
    }
    return Submodule{M.dim(), row_space(U)};
}

Module quotient_family(const Module& M, const Submodule& gamma, const Mat& f) {
    Submodule U = family_socle_member(M, gamma, f);
    return quotient(M, U, M.name().empty() ? std::string{} : M.name() + "/U_f");
}

// ---------------------------------------------------------------------------
// sl(2)
// ---------------------------------------------------------------------------

Sl2Module Sl2Module::make(const Gf& F, Mat E, Mat Fop, Mat H, std::string name) {
    if (F.p() < 3) throw std::invalid_argument("Sl2Module: requires p >= 3");
    size_t n = E.rows();
    if (E.cols() != n || Fop.rows() != n || Fop.cols() != n || H.rows() != n || H.cols() != n)
        throw std::invalid_argument("Sl2Module: shape mismatch");
    Fq two = F.from_int(2);
    if (H * E - E * H != E.scaled(two)) throw Error("Sl2Module: [h,e] != 2e");
    if (H * Fop - Fop * H != (-Fop).scaled(two)) throw Error("Sl2Module: [h,f] != -2f");
    if (E * Fop - Fop * E != H) throw Error("Sl2Module: [e,f] != h");
    if (!E.pow(F.p()).is_zero()) throw Error("Sl2Module: e^p != 0");
    if (!Fop.pow(F.p()).is_zero()) throw Error("Sl2Module: f^p != 0");
    if (H.pow(F.p()) != H) throw Error("Sl2Module: h^p != h");
    Sl2Module m;
    m.F_ = &F;
    m.E_ = std::move(E);
    m.F_op_ = std::move(Fop);
    m.H_ = std::move(H);
    m.name_ = std::move(name);
    return m;
}

Sl2Module sl2_simple(const Gf& F, u32 lambda) {
    u32 p = F.p();
    if (lambda >= p) throw std::invalid_argument("sl2_simple: need 0 <= lambda <= p-1");
    size_t n = lambda + 1;
    Mat E(F, n, n), Fop(F, n, n), H(F, n, n);
    long long lam = lambda;
    for (size_t i = 0; i < n; ++i) {
        long long w = (lam - 2 * (long long)i) % p;
        if (w < 0) w += p;
        H.set1(i, i, u32(w));
        if (i + 1 < n) {
            Fop.set1(i + 1, i, 1);  // f.v_i = v_{i+1}
            long long c = ((long long)(i + 1) * (lam - (long long)i)) % p;
            if (c < 0) c += p;
            E.set1(i, i + 1, u32(c));  // e.v_{i+1} = (i+1)(lambda-i) v_i
        }
    }
    return Sl2Module::make(F, E, Fop, H, "L(" + std::to_string(lambda) + ")");
}

Sl2Module sl2_baby_verma(const Gf& F, u32 lambda) {
    u32 p = F.p();
    if (lambda >= p) throw std::invalid_argument("sl2_baby_verma: need 0 <= lambda <= p-1");
    size_t n = p;
    Mat E(F, n, n), Fop(F, n, n), H(F, n, n);
    long long lam = lambda;
    for (size_t i = 0; i < n; ++i) {
        long long w = (lam - 2 * (long long)i) % p;
        if (w < 0) w += p;
        H.set1(i, i, u32(w));
        if (i + 1 < n) Fop.set1(i + 1, i, 1);  // f.(f^i x 1) = f^{i+1} x 1
        if (i >= 1) {
            long long c = ((long long)i * (lam - (long long)i + 1)) % p;
            if (c < 0) c += p;
            E.set1(i - 1, i, u32(c));  // e.(f^i x 1) = i(lambda-i+1) f^{i-1} x 1
        }
    }
    return Sl2Module::make(F, E, Fop, H, "Z(" + std::to_string(lambda) + ")");
}

FormMatrix sl2_nullcone_operator(const Sl2Module& N) {
    const Gf& F = N.field();
    size_t n = N.dim();
    FormMatrix m(F, n, n, 2);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            BinaryForm f(F, 2);
            f.set_coeff(0, N.e().get(i, j));         // u^2 e
            f.set_coeff(1, N.h().get(i, j));         // uv h
            f.set_coeff(2, F.neg(N.f().get(i, j)));  // -v^2 f
            m.at(i, j) = f;
        }
    return m;
}

Mat sl2_nullcone_element(const Sl2Module& N, const Fq& u0, const Fq& v0) {
    const Gf& F = N.field();
    Fq uu = F.mul(u0, u0), uv = F.mul(u0, v0), vv = F.neg(F.mul(v0, v0));
    return N.e().scaled(uu) + N.h().scaled(uv) + N.f().scaled(vv);
}

}  // namespace pnil
