#ifndef PNIL_JORDAN_HPP
#define PNIL_JORDAN_HPP

#include <string>
#include <variant>
#include <vector>

#include "pnil/constructions.hpp"
#include "pnil/form_matrix.hpp"
#include "pnil/module.hpp"

namespace pnil {

/// Jordan block multiplicities of a p-nilpotent operator: mult[i] blocks of
/// size i+1, sizes 1..p.
struct JordanType {
    u32 p = 0;
    std::vector<size_t> mult;

    size_t dim() const;
    std::vector<size_t> stable() const;  // multiplicities of sizes 1..p-1
    size_t max_part() const;             // largest block size present (0 for dim 0)
    std::string to_string() const;
    bool operator==(const JordanType& o) const { return p == o.p && mult == o.mult; }
    bool operator!=(const JordanType& o) const { return !(*this == o); }

    /// From the rank sequence ranks[j-1] = rk(theta^j), j = 1..p-1.
    static JordanType from_ranks(u32 p, size_t dim, const std::vector<size_t>& ranks);
    static JordanType single(u32 p, size_t block, size_t count = 1);
};

struct GenericPoint {};
/// A closed point [a0 : b0] over F_{p^ext}, normalized so the first nonzero
/// coordinate is 1.
struct ClosedPoint {
    u32 ext_degree = 1;
    Fq a0, b0;
};
using PiPoint = std::variant<GenericPoint, ClosedPoint>;

ClosedPoint make_closed_point(const Gf& L, const Fq& a0, const Fq& b0);

/// Per-power certificate: generic rank, witness minor, factorization and all
/// candidate-root evaluations.  `constant` holds iff no genuine drop exists,
/// quantified over the whole projective line over the algebraic closure.
struct RankCertificate {
    size_t j = 0;
    size_t generic_rank = 0;
    BinaryForm pivot_minor;
    std::vector<FormFactor> factors;
    std::vector<DropPoint> evaluations;
    bool constant = false;
};

enum class CertKind { ConstantJRank, CJT, EIP, EKP, Sl2CJT, Sl2EIP };

struct Certificate {
    CertKind kind = CertKind::CJT;
    u32 p = 0;
    size_t dim = 0;
    u64 seed = 0;
    std::string domain;  // quantifier domain of the certified statement
    std::vector<RankCertificate> ranks;  // j = 1..p-1
    std::vector<size_t> rad_dims;        // EIP: dim Rad^j for j = 1..p-1
    std::vector<Mat> kernels;            // EKP: candidate common kernels V_j
    std::vector<bool> kernel_constant;
    std::vector<Mat> images;             // equal-images side: spans of all coefficient images
    std::vector<bool> image_constant;
    bool verdict = false;
    size_t eip_class = 0;

    JordanType generic_jordan_type() const;
    bool cjt() const;
};

/// The symbolic operator family a x + b y on M.
FormMatrix theta_matrix(const Module& M);
/// (a x + b y)^j.
FormMatrix theta_power(const Module& M, size_t j);

/// Jordan type at a closed point.  The point may live over an extension of a
/// prime coefficient field; modules over proper extensions take points over
/// their own field only.
JordanType jordan_type_closed(const Module& M, const Gf& L, const Fq& a0, const Fq& b0);
JordanType jordan_type_at(const Module& M, const PiPoint& pt, u64 seed = 0);

/// Generic ranks and drop loci for all powers j = 1..p-1 (CJT certificate).
Certificate constancy_certificates(const Module& M, u64 seed = 0);

struct EipResult {
    bool eip = false;
    size_t cls = 0;  // least d with all Jordan blocks of size <= d
    Certificate cert;
};
/// Equal images: constant j-rank and rk(theta^j) = dim Rad^j for every j.
EipResult is_eip(const Module& M, u64 seed = 0);

struct EkpResult {
    bool ekp = false;
    Certificate cert;
};
/// Equal kernels: constant j-rank and the common symbolic kernel of theta^j
/// has the full generic kernel dimension, for every j.
EkpResult is_ekp(const Module& M, u64 seed = 0);

struct GenericKernelResult {
    Submodule sub;
    bool verified_eip = false;
    size_t eip_class = 0;
    bool heuristic = false;  // generator bound N' = dim Soc_d + d used
};
/// Largest submodule with the equal images property in class d: the sum of
/// the images of a basis of Hom(W_{N,d}, M) with N = max(d, dim M)
/// (or the heuristic bound when requested).
GenericKernelResult generic_kernel(const Module& M, size_t d, bool heuristic = false, u64 seed = 0);

/// Basis of Hom(W_{N,d}, M) as tuples (m_1..m_N) of columns, solved from the
/// defining relations without materializing W_{N,d}; each tuple is returned
/// as an N x dim(M) matrix whose rows are the generator images.
std::vector<Mat> hom_from_w(size_t N, size_t d, const Module& M);

// ---------------------------------------------------------------------------
// sl(2) analytics over the nullcone chart [u:v]
// ---------------------------------------------------------------------------

JordanType sl2_jordan_type_at(const Sl2Module& N, const Fq& u0, const Fq& v0);
std::pair<JordanType, Certificate> sl2_generic_jordan_type(const Sl2Module& N, u64 seed = 0);
/// Equal-images analog over the full nullcone: constant ranks plus constant
/// image spaces of every power.
std::pair<bool, Certificate> sl2_has_equal_images(const Sl2Module& N, u64 seed = 0);

}  // namespace pnil

#endif
