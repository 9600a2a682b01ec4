#include "pnil/form_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace pnil {

FormMatrix::FormMatrix(const Gf& F, size_t rows, size_t cols, size_t deg)
    : F_(&F), rows_(rows), cols_(cols), deg_(deg),
      e_(rows * cols, BinaryForm(F, deg)) {}

FormMatrix FormMatrix::from_ints(const Gf& F, size_t deg,
                                 const std::vector<std::vector<std::vector<long long>>>& entries) {
    size_t nr = entries.size(), nc = nr ? entries[0].size() : 0;
    FormMatrix m(F, nr, nc, deg);
    for (size_t i = 0; i < nr; ++i) {
        if (entries[i].size() != nc) throw std::invalid_argument("FormMatrix: ragged rows");
        for (size_t j = 0; j < nc; ++j) {
            BinaryForm f = BinaryForm::from_ints(F, entries[i][j]);
            if (f.degree() != deg) throw std::invalid_argument("FormMatrix: entry degree mismatch");
            m.at(i, j) = f;
        }
    }
    return m;
}

FormMatrix FormMatrix::pencil(const Mat& X, const Mat& Y) {
    const Gf& F = X.field();
    if (X.rows() != Y.rows() || X.cols() != Y.cols())
        throw std::invalid_argument("FormMatrix::pencil: shape mismatch");
    FormMatrix m(F, X.rows(), X.cols(), 1);
    for (size_t i = 0; i < X.rows(); ++i)
        for (size_t j = 0; j < X.cols(); ++j) {
            BinaryForm f(F, 1);
            f.set_coeff(0, X.get(i, j));  // coefficient of a
            f.set_coeff(1, Y.get(i, j));  // coefficient of b
            m.at(i, j) = f;
        }
    return m;
}

FormMatrix FormMatrix::operator*(const FormMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("FormMatrix: shape mismatch in *");
    FormMatrix r(*F_, rows_, o.cols_, deg_ + o.deg_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const BinaryForm& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
            }
        }
    return r;
}

FormMatrix FormMatrix::pow(size_t n, size_t dim_check) const {
    if (rows_ != cols_ || rows_ != dim_check)
        throw std::invalid_argument("FormMatrix::pow: not square");
    if (n == 0) throw std::invalid_argument("FormMatrix::pow: n must be >= 1");
    FormMatrix acc = *this;
    for (size_t i = 1; i < n; ++i) acc = acc * *this;
    return acc;
}

FormMatrix FormMatrix::submatrix(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
    FormMatrix r(*F_, rs.size(), cs.size(), deg_);
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j)
            r.at(i, j) = at(rs[i], cs[j]);
    return r;
}

Mat FormMatrix::specialize(const Fq& a0, const Fq& b0) const {
    Mat m(*F_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            m.set(i, j, at(i, j).eval(a0, b0));
    return m;
}

size_t FormMatrix::rank_at_root(const std::vector<u32>& h_coeffs, size_t h_deg) const {
    const Gf& F = *F_;
    RootField L(F, h_coeffs, h_deg);
    const size_t w = L.words(), e = F.e();
    // evaluate each entry at (t, 1), t = class of the variable in L
    std::vector<u32> root(w);
    L.gen(root.data());
    // powers of the root
    std::vector<std::vector<u32>> pw(deg_ + 1, std::vector<u32>(w, 0));
    L.set_one(pw[0].data());
    for (size_t i = 1; i <= deg_; ++i) L.mul(pw[i - 1].data(), root.data(), pw[i].data());
    std::vector<u32> data(rows_ * cols_ * w, 0), t(w), c(w);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const BinaryForm& f = at(i, j);
            u32* out = data.data() + (i * cols_ + j) * w;
            for (size_t kk = 0; kk <= deg_; ++kk) {
                const u32* co = f.coeff_ptr(kk);
                if (F.is_zero(co)) continue;
                L.set_zero(c.data());
                std::copy(co, co + e, c.begin());  // embed base coefficient
                L.mul(c.data(), pw[deg_ - kk].data(), t.data());
                L.add(out, t.data(), out);
            }
        }
    return rank_flat(L, std::move(data), rows_, cols_);
}

bool FormMatrix::is_zero() const {
    for (const auto& f : e_)
        if (!f.is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// fraction-free elimination
// ---------------------------------------------------------------------------

FfgeResult ffge_rank(const FormMatrix& m) {
    const Gf& F = m.field();
    FfgeResult res;
    res.pivot_minor = BinaryForm::one(F);
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return res;

    size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<BinaryForm>> w(nr, std::vector<BinaryForm>(nc));
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) w[i][j] = m.at(i, j);
    std::vector<size_t> row_of(nr);              // current row order -> original index
    for (size_t i = 0; i < nr; ++i) row_of[i] = i;
    std::vector<bool> col_used(nc, false);

    BinaryForm prev = BinaryForm::one(F);
    size_t k = 0;
    while (k < nr) {
        // deterministic pivot: first nonzero entry of the active submatrix in
        // row-major order (all active entries share one degree, so the
        // lowest-degree rule reduces to position order)
        size_t pr = nr, pc = nc;
        for (size_t i = k; i < nr && pr == nr; ++i)
            for (size_t j = 0; j < nc; ++j) {
                if (col_used[j]) continue;
                if (!w[i][j].is_zero()) { pr = i; pc = j; break; }
            }
        if (pr == nr) break;
        std::swap(w[k], w[pr]);
        std::swap(row_of[k], row_of[pr]);
        col_used[pc] = true;
        res.pivot_rows.push_back(row_of[k]);
        res.pivot_cols.push_back(pc);
        const BinaryForm piv = w[k][pc];
        for (size_t i = k + 1; i < nr; ++i) {
            const BinaryForm lead = w[i][pc];
            for (size_t j = 0; j < nc; ++j) {
                if (col_used[j] && j != pc) {
                    // stale column, value no longer used
                    continue;
                }
                if (j == pc) continue;
                BinaryForm num = piv * w[i][j] - lead * w[k][j];
                auto q = num.divexact(prev);
                if (!q) throw std::logic_error("ffge_rank: non-exact Bareiss division");
                w[i][j] = *q;
            }
            w[i][pc] = BinaryForm::zero(F, w[i][pc].degree());
        }
        prev = piv;
        ++k;
    }
    res.generic_rank = k;
    if (k > 0) res.pivot_minor = prev.monic();
    return res;
}

// ---------------------------------------------------------------------------
// drop locus
// ---------------------------------------------------------------------------

std::vector<DropPoint> evaluate_candidate_roots(const FormMatrix& m, size_t r,
                                                const std::vector<FormFactor>& factors) {
    const Gf& F = m.field();
    std::vector<DropPoint> out;
    if (r == 0) return out;  // zero matrix never drops below 0
    for (const auto& ff : factors) {
        DropPoint dp;
        dp.factor = ff.factor;
        dp.multiplicity = ff.multiplicity;
        const BinaryForm& h = ff.factor;
        if (h.degree() == 1) {
            dp.rational = true;
            // h = c0 a + c1 b vanishes at [a0:b0] = [-c1 : c0]
            Fq c0 = h.coeff(0), c1 = h.coeff(1);
            if (F.is_zero(c0)) {
                // factor b: the point at infinity [1:0]
                dp.a0 = F.one();
                dp.b0 = F.zero();
            } else {
                // normalize: a0 = -c1/c0, b0 = 1
                dp.a0 = F.neg(F.mul(c1, F.inv(c0)));
                dp.b0 = F.one();
                if (!F.is_zero(dp.a0)) {
                    // projective normalization: first nonzero coordinate = 1
                    Fq ai = F.inv(dp.a0);
                    dp.b0 = F.mul(dp.b0, ai);
                    dp.a0 = F.one();
                }
            }
            dp.rank_at = rank(m.specialize(dp.a0, dp.b0));
        } else {
            // evaluate over the residue field F_q[a]/(h^), root (t, 1)
            detail::UPoly hh = detail::upoly_monic(F, h.dehomogenize());
            size_t hd = hh.ncoeff(F) - 1;
            dp.rank_at = m.rank_at_root(hh.c, hd);
        }
        dp.dropped = dp.rank_at < r;
        out.push_back(std::move(dp));
    }
    return out;
}

std::vector<DropPoint> drop_locus_full(const FormMatrix& m, size_t r,
                                       const BinaryForm& pivot_minor, u64 seed) {
    FfgeResult check = ffge_rank(m);
    if (check.generic_rank != r)
        throw std::invalid_argument("drop_locus: r is not the generic rank");
    if (r == 0) return {};
    return evaluate_candidate_roots(m, r, factor_form(pivot_minor, seed));
}

std::vector<DropPoint> drop_locus(const FormMatrix& m, size_t r,
                                  const BinaryForm& pivot_minor, u64 seed) {
    std::vector<DropPoint> all = drop_locus_full(m, r, pivot_minor, seed);
    std::vector<DropPoint> out;
    for (auto& dp : all)
        if (dp.dropped) out.push_back(std::move(dp));
    return out;
}

}  // namespace pnil
