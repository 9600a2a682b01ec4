#ifndef PNIL_FORM_MATRIX_HPP
#define PNIL_FORM_MATRIX_HPP

#include <vector>

#include "pnil/binary_form.hpp"
#include "pnil/mat.hpp"

namespace pnil {

/// Matrix of binary forms, all entries homogeneous of one common degree.
class FormMatrix {
public:
    FormMatrix() : F_(nullptr), rows_(0), cols_(0), deg_(0) {}
    FormMatrix(const Gf& F, size_t rows, size_t cols, size_t deg);

    static FormMatrix from_ints(const Gf& F, size_t deg,
                                const std::vector<std::vector<std::vector<long long>>>& entries);
    /// a*X + b*Y for n x n scalar matrices X, Y.
    static FormMatrix pencil(const Mat& X, const Mat& Y);

    const Gf& field() const { return *F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t degree() const { return deg_; }

    const BinaryForm& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    BinaryForm& at(size_t i, size_t j) { return e_[i * cols_ + j]; }

    FormMatrix operator*(const FormMatrix& o) const;
    FormMatrix pow(size_t n, size_t dim_check) const;
    FormMatrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;

    /// Specialize at a closed point (a0, b0) over the coefficient field.
    Mat specialize(const Fq& a0, const Fq& b0) const;
    /// Rank of the specialization at the class of t in Gf[t]/(h).
    size_t rank_at_root(const std::vector<u32>& h_coeffs, size_t h_deg) const;

    bool is_zero() const;

private:
    const Gf* F_;
    size_t rows_, cols_, deg_;
    std::vector<BinaryForm> e_;
};

/// Result of fraction-free (Bareiss) elimination over Gf[a,b].
struct FfgeResult {
    size_t generic_rank = 0;
    BinaryForm pivot_minor;             // monic normalized; 1 for rank 0
    std::vector<size_t> pivot_rows;     // rows/cols of the witnessed minor
    std::vector<size_t> pivot_cols;
};

/// Generic rank over Frac(Gf[a,b]) plus a nonzero generic_rank-sized minor
/// (the final Bareiss pivot on the selected rows/columns).  Every rank-drop
/// point of m is a projective root of pivot_minor.
FfgeResult ffge_rank(const FormMatrix& m);

/// One evaluated candidate root of the pivot minor.
struct DropPoint {
    BinaryForm factor;       // monic irreducible factor of the pivot minor
    size_t multiplicity = 0;
    bool rational = false;   // root lies in the coefficient field (incl. [1:0])
    Fq a0, b0;               // set when rational, normalized first nonzero = 1
    size_t rank_at = 0;
    bool dropped = false;    // rank_at < generic rank
};

/// Evaluate the rank of m at every projective root of the given factors
/// (soundness relies on the factors covering all roots of a witness minor).
std::vector<DropPoint> evaluate_candidate_roots(const FormMatrix& m, size_t r,
                                                const std::vector<FormFactor>& factors);

/// Evaluate every projective root of pivot_minor over the algebraic closure;
/// entries with dropped=true constitute the full drop locus of m.
/// Throws if r is not the generic rank of m.
std::vector<DropPoint> drop_locus_full(const FormMatrix& m, size_t r,
                                       const BinaryForm& pivot_minor, u64 seed);
/// Only the genuine drop points.
std::vector<DropPoint> drop_locus(const FormMatrix& m, size_t r,
                                  const BinaryForm& pivot_minor, u64 seed);

}  // namespace pnil

#endif
