#ifndef PNIL_CONSTRUCTIONS_HPP
#define PNIL_CONSTRUCTIONS_HPP

#include "pnil/form_matrix.hpp"
#include "pnil/module.hpp"

namespace pnil {

/// The group algebra k[x,y]/(x^p,y^p) as a graded module over itself
/// (monomial basis x^a y^b at index a*p+b, degree a+b).
Module regular_module(const Gf& F);
/// The trivial one-dimensional module.
Module trivial_module(const Gf& F);
/// k[x,y]/(x, y^2): x acts by zero, y by the 2-dimensional Jordan block.
Module xy2_module(const Gf& F);

/// The equal-images module W_{n,d} (1 <= d <= p, n >= d), built as the graded
/// quotient of the free module on v_1..v_n by the defining relations
/// x.v_1, y.v_n, x^d.v_i, y.v_i - x.v_{i+1}; generators sit in degree 0.
Module w_module(const Gf& F, size_t n, size_t d);
size_t w_module_dim(u32 p, size_t n, size_t d);

/// A representation of the Kronecker quiver: two parallel maps V1 -> V2.
struct KroneckerRep {
    Mat phi_x, phi_y;  // n2 x n1
};

/// The Loewy-length-<=2 module on V1 + V2 with x, y acting by phi_x, phi_y
/// from the degree-0 part to the degree-1 part.
Module kronecker(const Gf& F, const KroneckerRep& rep, std::string name = {});
Module kronecker_preinjective(const Gf& F, size_t n);  // dims (n+1, n)
Module kronecker_preprojective(const Gf& F, size_t n);  // dims (n, n+1)
Module kronecker_regular(const Gf& F, size_t n, const Fq& lambda);

/// The member M/U_f of the quotient family attached to a socle submodule
/// Gamma and f : Soc(M)/Gamma -> Gamma.  The section s_Gamma is the echelon
/// complement of Gamma in Soc(M); f is given on that complement basis as a
/// (dim Gamma) x (dim Soc - dim Gamma) coefficient matrix.
Module quotient_family(const Module& M, const Submodule& gamma, const Mat& f);
/// The subspace U_f itself (for bookkeeping and tests).
Submodule family_socle_member(const Module& M, const Submodule& gamma, const Mat& f);

// ---------------------------------------------------------------------------
// sl(2) laboratory
// ---------------------------------------------------------------------------

/// A restricted sl(2)-representation: [H,E] = 2E, [H,F] = -2F, [E,F] = H,
/// E^p = F^p = 0, H^p = H.
class Sl2Module {
public:
    static Sl2Module make(const Gf& F, Mat E, Mat Fop, Mat H, std::string name = {});
    const Gf& field() const { return *F_; }
    size_t dim() const { return E_.rows(); }
    const Mat& e() const { return E_; }
    const Mat& f() const { return F_op_; }
    const Mat& h() const { return H_; }
    const std::string& name() const { return name_; }

private:
    const Gf* F_ = nullptr;
    Mat E_, F_op_, H_;
    std::string name_;
};

/// Simple module L(lambda) of highest weight 0 <= lambda <= p-1 (dim lambda+1).
Sl2Module sl2_simple(const Gf& F, u32 lambda);
/// Baby Verma module Z(lambda) of dimension p, basis f^i (x) 1.
Sl2Module sl2_baby_verma(const Gf& F, u32 lambda);

/// The symbolic nullcone operator x(u,v) = u^2 E + uv H - v^2 F acting on N;
/// entries are degree-2 forms in (u, v).  The chart [u:v] covers the
/// projectivized nullcone of sl(2) exactly once.
FormMatrix sl2_nullcone_operator(const Sl2Module& N);
/// Specialized nullcone element at (u0, v0) as a matrix on N.
Mat sl2_nullcone_element(const Sl2Module& N, const Fq& u0, const Fq& v0);

}  // namespace pnil

#endif
