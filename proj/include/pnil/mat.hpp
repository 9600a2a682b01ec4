#ifndef PNIL_MAT_HPP
#define PNIL_MAT_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "pnil/gf.hpp"

namespace pnil {

/// Dense matrix over an interned Gf.  Row-major, field.e() words per entry.
class Mat {
public:
    Mat() : F_(nullptr), rows_(0), cols_(0) {}
    Mat(const Gf& F, size_t rows, size_t cols)
        : F_(&F), rows_(rows), cols_(cols), a_(rows * cols * F.e(), 0) {}

    static Mat identity(const Gf& F, size_t n);
    /// e()==1 convenience; entries are reduced mod p (negatives allowed).
    static Mat from_ints(const Gf& F, std::initializer_list<std::initializer_list<long long>> rows);
    static Mat from_rows(const Gf& F, const std::vector<std::vector<long long>>& rows);

    const Gf& field() const { return *F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    u32* at(size_t i, size_t j) { return a_.data() + (i * cols_ + j) * F_->e(); }
    const u32* at(size_t i, size_t j) const { return a_.data() + (i * cols_ + j) * F_->e(); }
    u32* row(size_t i) { return a_.data() + i * cols_ * F_->e(); }
    const u32* row(size_t i) const { return a_.data() + i * cols_ * F_->e(); }

    u32 get1(size_t i, size_t j) const { return at(i, j)[0]; }
    void set1(size_t i, size_t j, u32 v) { F_->set_zero(at(i, j)); at(i, j)[0] = v % F_->p(); }
    Fq get(size_t i, size_t j) const { return Fq(at(i, j), at(i, j) + F_->e()); }
    void set(size_t i, size_t j, const Fq& v) { F_->assign(v.data(), at(i, j)); }

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Fq& c) const;
    Mat operator-() const;
    Mat transpose() const;
    Mat pow(u64 n) const;

    /// Vertical stack [this; other].
    Mat vstack(const Mat& o) const;
    Mat hstack(const Mat& o) const;
    Mat submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;
    Mat rows_slice(size_t r0, size_t r1) const;

    void swap_rows(size_t i, size_t j);
    std::string to_string() const;

private:
    const Gf* F_;
    size_t rows_, cols_;
    std::vector<u32> a_;
};

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> rref_in_place(Mat& A);
size_t rank(Mat A);
/// Basis of {x : A x = 0} (x column vectors), returned as rows, RREF-canonical.
Mat kernel(const Mat& A);
/// Canonical RREF basis of the row space (zero rows dropped).
Mat row_space(Mat A);
/// Canonical RREF basis of the column space, as rows.
Mat col_space(const Mat& A);
/// One solution x of A x = b (column), if any.
std::optional<Mat> solve(const Mat& A, const Mat& b);
std::optional<Mat> inverse(const Mat& A);
Fq det(Mat A);

/// True if the rows of sub lie in the row space of space (both over same field).
bool rows_contained(const Mat& space, const Mat& sub);
/// Row-space membership for a single row vector.
bool row_in_space(const Mat& space_rref, const u32* v, size_t ncols);
/// Intersection of two row spaces, canonical.
Mat row_space_intersection(const Mat& A, const Mat& B);
/// Sum of two row spaces, canonical.
Mat row_space_sum(const Mat& A, const Mat& B);

/// Rank over an arbitrary field-like type (used for residue fields of
/// drop-locus roots).  Data is rows*cols elements, each L.words() words.
template <class L>
size_t rank_flat(const L& K, std::vector<u32> data, size_t rows, size_t cols) {
    const size_t w = K.words();
    std::vector<u32> t(w), c(w);
    size_t rk = 0;
    for (size_t col = 0; col < cols && rk < rows; ++col) {
        size_t piv = rows;
        for (size_t i = rk; i < rows; ++i)
            if (!K.is_zero(data.data() + (i * cols + col) * w)) { piv = i; break; }
        if (piv == rows) continue;
        if (piv != rk)
            for (size_t j = 0; j < cols; ++j)
                std::swap_ranges(data.begin() + (piv * cols + j) * w,
                                 data.begin() + (piv * cols + j + 1) * w,
                                 data.begin() + (rk * cols + j) * w);
        K.inv(data.data() + (rk * cols + col) * w, t.data());
        for (size_t j = col; j < cols; ++j)
            K.mul(data.data() + (rk * cols + j) * w, t.data(), data.data() + (rk * cols + j) * w);
        for (size_t i = rk + 1; i < rows; ++i) {
            u32* lead = data.data() + (i * cols + col) * w;
            if (K.is_zero(lead)) continue;
            K.assign(lead, c.data());
            for (size_t j = col; j < cols; ++j) {
                K.mul(c.data(), data.data() + (rk * cols + j) * w, t.data());
                K.sub(data.data() + (i * cols + j) * w, t.data(), data.data() + (i * cols + j) * w);
            }
        }
        ++rk;
    }
    return rk;
}

}  // namespace pnil

#endif
