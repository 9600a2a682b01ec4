#ifndef PNIL_MODULE_HPP
#define PNIL_MODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pnil/errors.hpp"
#include "pnil/mat.hpp"

namespace pnil {

/// A module over k[x,y]/(x^p, y^p), k = F_{p^e}: a pair of commuting
/// p-nilpotent operators, optionally Z-graded (x, y homogeneous of degree +1).
/// Immutable after construction; all invariants checked eagerly.
class Module {
public:
    Module() = default;
    /// Validates commutation, p-nilpotency, grading homogeneity.
    static Module make(const Gf& F, Mat X, Mat Y,
                       std::optional<std::vector<int>> grading = std::nullopt,
                       std::string name = {});

    const Gf& field() const { return *F_; }
    size_t dim() const { return dim_; }
    const Mat& x() const { return X_; }
    const Mat& y() const { return Y_; }
    bool graded() const { return grading_.has_value(); }
    const std::vector<int>& grading() const { return *grading_; }
    const std::string& name() const { return name_; }
    Module renamed(std::string n) const { Module m = *this; m.name_ = std::move(n); return m; }
    /// Same module with the grading dropped.
    Module ungraded() const { Module m = *this; m.grading_.reset(); return m; }

    /// Action of the monomial x^a y^b.
    Mat monomial(size_t a, size_t b) const;
    /// u32 p shortcut.
    u32 p() const { return F_->p(); }

private:
    const Gf* F_ = nullptr;
    size_t dim_ = 0;
    Mat X_, Y_;
    std::optional<std::vector<int>> grading_;
    std::string name_;
};

/// A subspace stable under x and y, stored as a canonical RREF row basis.
/// Two submodules of the same module are equal iff their bases are identical.
struct Submodule {
    size_t parent_dim = 0;
    Mat basis;  // RREF rows
    size_t dim() const { return basis.rows(); }
    bool operator==(const Submodule& o) const { return parent_dim == o.parent_dim && basis == o.basis; }
};

struct RadicalSocleSeries {
    std::vector<Submodule> rad;  // rad[j] = Rad^j(M), j = 0..2p-2
    std::vector<Submodule> soc;  // soc[j] = Soc_j(M), j = 0..2p-2
    size_t loewy_length = 0;
};

RadicalSocleSeries radical_socle_series(const Module& M);
Submodule radical(const Module& M, size_t j = 1);
Submodule socle(const Module& M, size_t j = 1);

/// Least x,y-stable subspace containing the given row vectors.
Submodule submodule_closure(const Module& M, const Mat& generators);
Submodule full_submodule(const Module& M);
Submodule zero_submodule(const Module& M);
bool submodule_contains(const Submodule& big, const Submodule& small);

/// Quotient M/U on the echelon-complement basis; graded when U is a graded
/// subspace of a graded M.
Module quotient(const Module& M, const Submodule& U, std::string name = {});
struct QuotientData {
    Module mod;
    Mat projection;                  // dim(M/U) x dim(M)
    std::vector<size_t> complement;  // standard basis indices representing M/U
};
QuotientData quotient_with_data(const Module& M, const Submodule& U, std::string name = {});
/// U with the restricted action, in the basis given by U.basis rows.
Module sub_as_module(const Module& M, const Submodule& U, std::string name = {});
/// Image of a set of column vectors under closure, as a module map helper:
/// rows of `vectors` are module elements.
Module direct_sum(const Module& A, const Module& B, std::string name = {});

/// Echelon-canonical basis of the intertwiner space
/// {A : A X_M = X_N A, A Y_M = Y_N A}, each element an n_N x n_M matrix.
std::vector<Mat> hom_space(const Module& M, const Module& N);

/// Lift of Top(M): indices of standard basis vectors complementing Rad(M).
std::vector<size_t> top_basis_indices(const Module& M);

struct IsoResult {
    bool isomorphic = false;
    std::optional<Mat> witness;       // invertible intertwiner when found over the coefficient field
    bool witness_over_extension = false;
    std::string method;               // "dim-mismatch", "hom-dims", "exhaustive", "random", ...
    double false_negative_bound = 0;  // for probabilistic "false": P(missed iso) <= bound
};

IsoResult is_isomorphic(const Module& M, const Module& N, u64 seed = 0);

struct FittingSummand {
    Module summand;
    size_t multiplicity;
    /// dim over the coefficient field of End/J(End) for the summand
    size_t end_over_radical_dim;
};

/// Decomposition into indecomposables with multiplicities; each summand
/// certified indecomposable by a local-endomorphism-ring test.
std::vector<FittingSummand> fitting_decompose(const Module& M, u64 seed = 0);

/// True together with dim_Fq(End/J) == 1 certificate data.
struct LocalEndResult {
    bool local;
    size_t end_dim;
    size_t radical_dim;
    size_t simple_quotient_dim;  // over F_p
};
LocalEndResult end_is_local(const Module& M);

/// End(M) together with its radical and localness data.  The radical is
/// computed on the image of End in End(Top M): endomorphisms landing in the
/// radical of M form a nil ideal, so only the small quotient needs the
/// characteristic-p trace algorithm.
struct EndAnalysis {
    std::vector<Mat> end_basis;
    std::vector<Mat> radical;
    bool local = false;
    size_t head_dim_fp = 0;  // dim over F_p of End/J
};
EndAnalysis analyze_end(const Module& M);

/// F_q-basis of the Jacobson radical of the matrix algebra spanned by
/// `basis` (which must be multiplicatively closed and contain the identity).
std::vector<Mat> algebra_radical(const Gf& F, const std::vector<Mat>& basis);

/// Dual with the group-algebra antipode: x* = (sum_{i>=1} (-1)^i x^i)^T.
Module dual(const Module& M);
/// Dual with the linear anti-involution x -> -x; preserves gradings
/// (degrees negate).  Isomorphic functor image for all derived constructions.
Module contragredient(const Module& M);
/// Twist by g in GL_2: x, y are replaced by the g^{-1}-substituted
/// combinations.  Throws on singular g.
Module twist(const Module& M, const Mat& g);

/// x^a y^b monomial matrices for all a, b < p (index a*p+b).
std::vector<Mat> monomial_table(const Module& M);

}  // namespace pnil

#endif
