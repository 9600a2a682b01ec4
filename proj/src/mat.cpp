#include "pnil/mat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pnil {

Mat Mat::identity(const Gf& F, size_t n) {
    Mat I(F, n, n);
    for (size_t i = 0; i < n; ++i) F.set_one(I.at(i, i));
    return I;
}

Mat Mat::from_ints(const Gf& F, std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> r;
    for (auto& row : rows) r.emplace_back(row);
    return from_rows(F, r);
}

Mat Mat::from_rows(const Gf& F, const std::vector<std::vector<long long>>& rows) {
    size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
    Mat A(F, nr, nc);
    long long p = F.p();
    for (size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw std::invalid_argument("Mat::from_rows: ragged rows");
        for (size_t j = 0; j < nc; ++j) {
            long long v = rows[i][j] % p;
            if (v < 0) v += p;
            A.set1(i, j, u32(v));
        }
    }
    return A;
}

bool Mat::is_zero() const {
    for (u32 v : a_)
        if (v) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch in +");
    Mat r(*F_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = F_->add1(a_[k], o.a_[k]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch in -");
    Mat r(*F_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = F_->sub1(a_[k], o.a_[k]);
    return r;
}

Mat Mat::operator-() const {
    Mat r(*F_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = F_->neg1(a_[k]);
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in *");
    const Gf& F = *F_;
    Mat r(F, rows_, o.cols_);
    if (F.e() == 1) {
        u64 p = F.p();
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t k = 0; k < cols_; ++k) {
                u64 aik = at(i, k)[0];
                if (!aik) continue;
                const u32* orow = o.row(k);
                u32* rrow = r.row(i);
                for (size_t j = 0; j < o.cols_; ++j)
                    rrow[j] = u32((aik * orow[j] + rrow[j]) % p);
            }
        }
    } else {
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const u32* aik = at(i, k);
                if (F.is_zero(aik)) continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    F.addmul(aik, o.at(k, j), r.at(i, j));
            }
    }
    return r;
}

Mat Mat::scaled(const Fq& c) const {
    Mat r(*F_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            F_->mul(at(i, j), c.data(), r.at(i, j));
    return r;
}

Mat Mat::transpose() const {
    Mat r(*F_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            F_->assign(at(i, j), r.at(j, i));
    return r;
}

Mat Mat::pow(u64 n) const {
    if (rows_ != cols_) throw std::invalid_argument("Mat::pow: not square");
    Mat acc = identity(*F_, rows_);
    Mat b = *this;
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

Mat Mat::vstack(const Mat& o) const {
    if (empty()) return o;
    if (o.empty()) return *this;
    if (cols_ != o.cols_) throw std::invalid_argument("Mat::vstack: column mismatch");
    Mat r(*F_, rows_ + o.rows_, cols_);
    std::copy(a_.begin(), a_.end(), r.a_.begin());
    std::copy(o.a_.begin(), o.a_.end(), r.a_.begin() + a_.size());
    return r;
}

Mat Mat::hstack(const Mat& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("Mat::hstack: row mismatch");
    Mat r(*F_, rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        std::copy(row(i), row(i) + cols_ * F_->e(), r.row(i));
        std::copy(o.row(i), o.row(i) + o.cols_ * F_->e(), r.row(i) + cols_ * F_->e());
    }
    return r;
}

Mat Mat::submatrix(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
    Mat r(*F_, rs.size(), cs.size());
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j)
            F_->assign(at(rs[i], cs[j]), r.at(i, j));
    return r;
}

Mat Mat::rows_slice(size_t r0, size_t r1) const {
    Mat r(*F_, r1 - r0, cols_);
    std::copy(a_.begin() + r0 * cols_ * F_->e(), a_.begin() + r1 * cols_ * F_->e(), r.a_.begin());
    return r;
}

void Mat::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    std::swap_ranges(row(i), row(i) + cols_ * F_->e(), row(j));
}

std::string Mat::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << F_->to_string(get(i, j));
        os << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

std::vector<size_t> rref_in_place(Mat& A) {
    const Gf& F = A.field();
    const size_t rows = A.rows(), cols = A.cols(), e = F.e();
    std::vector<size_t> pivots;
    size_t rk = 0;
    if (e == 1) {
        const u64 p = F.p();
        for (size_t col = 0; col < cols && rk < rows; ++col) {
            size_t piv = rows;
            for (size_t i = rk; i < rows; ++i)
                if (A.at(i, col)[0]) { piv = i; break; }
            if (piv == rows) continue;
            A.swap_rows(piv, rk);
            u64 inv = F.inv1(A.at(rk, col)[0]);
            u32* prow = A.row(rk);
            for (size_t j = col; j < cols; ++j) prow[j] = u32((inv * prow[j]) % p);
            for (size_t i = 0; i < rows; ++i) {
                if (i == rk) continue;
                u64 lead = A.at(i, col)[0];
                if (!lead) continue;
                u64 c = p - lead;
                u32* irow = A.row(i);
                for (size_t j = col; j < cols; ++j)
                    irow[j] = u32((c * prow[j] + irow[j]) % p);
            }
            pivots.push_back(col);
            ++rk;
        }
    } else {
        std::vector<u32> t(e), c(e);
        for (size_t col = 0; col < cols && rk < rows; ++col) {
            size_t piv = rows;
            for (size_t i = rk; i < rows; ++i)
                if (!F.is_zero(A.at(i, col))) { piv = i; break; }
            if (piv == rows) continue;
            A.swap_rows(piv, rk);
            F.inv(A.at(rk, col), t.data());
            for (size_t j = col; j < cols; ++j) F.mul(A.at(rk, j), t.data(), A.at(rk, j));
            for (size_t i = 0; i < rows; ++i) {
                if (i == rk || F.is_zero(A.at(i, col))) continue;
                F.assign(A.at(i, col), c.data());
                for (size_t j = col; j < cols; ++j) {
                    F.mul(c.data(), A.at(rk, j), t.data());
                    F.sub(A.at(i, j), t.data(), A.at(i, j));
                }
            }
            pivots.push_back(col);
            ++rk;
        }
    }
    return pivots;
}

size_t rank(Mat A) { return rref_in_place(A).size(); }

Mat kernel(const Mat& A) {
    const Gf& F = A.field();
    Mat R = A;
    std::vector<size_t> pivots = rref_in_place(R);
    size_t cols = A.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat K(F, free_cols.size(), cols);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        F.set_one(K.at(k, fc));
        for (size_t r = 0; r < pivots.size(); ++r)
            F.neg(R.at(r, fc), K.at(k, pivots[r]));
    }
    // already in (column-permuted) echelon; canonicalize
    rref_in_place(K);
    return K;
}

Mat row_space(Mat A) {
    size_t rk = rref_in_place(A).size();
    return A.rows_slice(0, rk);
}

Mat col_space(const Mat& A) { return row_space(A.transpose()); }

std::optional<Mat> solve(const Mat& A, const Mat& b) {
    if (A.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    const Gf& F = A.field();
    Mat aug = A.hstack(b);
    std::vector<size_t> pivots = rref_in_place(aug);
    for (size_t c : pivots)
        if (c >= A.cols()) return std::nullopt;
    Mat x(F, A.cols(), b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t j = 0; j < b.cols(); ++j)
            F.assign(aug.at(r, A.cols() + j), x.at(pivots[r], j));
    return x;
}

std::optional<Mat> inverse(const Mat& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("inverse: not square");
    const Gf& F = A.field();
    Mat aug = A.hstack(Mat::identity(F, A.rows()));
    std::vector<size_t> pivots = rref_in_place(aug);
    if (pivots.size() != A.rows()) return std::nullopt;
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] != r) return std::nullopt;
    Mat inv(F, A.rows(), A.rows());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.rows(); ++j)
            F.assign(aug.at(i, A.rows() + j), inv.at(i, j));
    return inv;
}

Fq det(Mat A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("det: not square");
    const Gf& F = A.field();
    size_t n = A.rows();
    Fq d = F.one();
    std::vector<u32> t(F.e()), c(F.e());
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t i = col; i < n; ++i)
            if (!F.is_zero(A.at(i, col))) { piv = i; break; }
        if (piv == n) return F.zero();
        if (piv != col) {
            A.swap_rows(piv, col);
            F.neg(d.data(), d.data());
        }
        F.mul(d.data(), A.at(col, col), d.data());
        F.inv(A.at(col, col), t.data());
        for (size_t i = col + 1; i < n; ++i) {
            if (F.is_zero(A.at(i, col))) continue;
            F.mul(A.at(i, col), t.data(), c.data());
            for (size_t j = col; j < n; ++j) {
                std::vector<u32> tmp(F.e());
                F.mul(c.data(), A.at(col, j), tmp.data());
                F.sub(A.at(i, j), tmp.data(), A.at(i, j));
            }
        }
    }
    return d;
}

bool row_in_space(const Mat& space_rref, const u32* v, size_t ncols) {
    const Gf& F = space_rref.field();
    if (space_rref.cols() != ncols) throw std::invalid_argument("row_in_space: shape");
    std::vector<u32> w(v, v + ncols * F.e());
    std::vector<u32> c(F.e()), t(F.e());
    // reduce w against the RREF rows
    for (size_t r = 0; r < space_rref.rows(); ++r) {
        size_t pc = 0;
        while (pc < ncols && F.is_zero(space_rref.at(r, pc))) ++pc;
        if (pc == ncols) continue;
        if (F.is_zero(w.data() + pc * F.e())) continue;
        F.assign(w.data() + pc * F.e(), c.data());
        for (size_t j = pc; j < ncols; ++j) {
            F.mul(c.data(), space_rref.at(r, j), t.data());
            F.sub(w.data() + j * F.e(), t.data(), w.data() + j * F.e());
        }
    }
    for (u32 x : w)
        if (x) return false;
    return true;
}

bool rows_contained(const Mat& space, const Mat& sub) {
    Mat S = row_space(space);
    for (size_t i = 0; i < sub.rows(); ++i)
        if (!row_in_space(S, sub.row(i), sub.cols())) return false;
    return true;
}

Mat row_space_sum(const Mat& A, const Mat& B) {
    if (A.empty()) return row_space(B);
    if (B.empty()) return row_space(A);
    return row_space(A.vstack(B));
}

Mat row_space_intersection(const Mat& A, const Mat& B) {
    // Zassenhaus: rref of [A A; B 0]; rows with zero left half give intersection
    const Gf& F = A.field();
    Mat Ar = row_space(A), Br = row_space(B);
    size_t n = A.cols();
    if (Ar.rows() == 0 || Br.rows() == 0) return Mat(F, 0, n);
    Mat top = Ar.hstack(Ar);
    Mat bot = Br.hstack(Mat(F, Br.rows(), n));
    Mat Z = top.vstack(bot);
    rref_in_place(Z);
    std::vector<size_t> keep;
    for (size_t i = 0; i < Z.rows(); ++i) {
        bool left_zero = true, right_zero = true;
        for (size_t j = 0; j < n && left_zero; ++j)
            if (!F.is_zero(Z.at(i, j))) left_zero = false;
        for (size_t j = n; j < 2 * n && right_zero; ++j)
            if (!F.is_zero(Z.at(i, j))) right_zero = false;
        if (left_zero && !right_zero) keep.push_back(i);
    }
    Mat R(F, keep.size(), n);
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < n; ++j)
            F.assign(Z.at(keep[i], n + j), R.at(i, j));
    return row_space(R);
}

}  // namespace pnil
