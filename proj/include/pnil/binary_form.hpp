#ifndef PNIL_BINARY_FORM_HPP
#define PNIL_BINARY_FORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "pnil/gf.hpp"

namespace pnil {

/// Homogeneous polynomial of degree d in two parameters (a, b) over a Gf:
///   c_0 a^d + c_1 a^{d-1} b + ... + c_d b^d.
/// The zero form keeps its nominal degree slot (all coefficients zero).
class BinaryForm {
public:
    BinaryForm() : F_(nullptr), deg_(0) {}
    BinaryForm(const Gf& F, size_t deg) : F_(&F), deg_(deg), c_((deg + 1) * F.e(), 0) {}

    static BinaryForm zero(const Gf& F, size_t deg = 0) { return BinaryForm(F, deg); }
    static BinaryForm one(const Gf& F);
    static BinaryForm constant(const Gf& F, const Fq& v);
    /// c0 a^d + ... + cd b^d from integer coefficients (base-field convenience).
    static BinaryForm from_ints(const Gf& F, const std::vector<long long>& coeffs);
    static BinaryForm from_coeffs(const Gf& F, const std::vector<Fq>& coeffs);
    /// a^i b^j scaled by v.
    static BinaryForm monomial(const Gf& F, size_t a_pow, size_t b_pow, const Fq& v);

    const Gf& field() const { return *F_; }
    size_t degree() const { return deg_; }
    Fq coeff(size_t i) const { return Fq(c_.data() + i * F_->e(), c_.data() + (i + 1) * F_->e()); }
    const u32* coeff_ptr(size_t i) const { return c_.data() + i * F_->e(); }
    u32* coeff_ptr(size_t i) { return c_.data() + i * F_->e(); }
    void set_coeff(size_t i, const Fq& v) { F_->assign(v.data(), coeff_ptr(i)); }

    bool is_zero() const;
    bool operator==(const BinaryForm& o) const { return deg_ == o.deg_ && c_ == o.c_; }

    BinaryForm operator+(const BinaryForm& o) const;  // equal degrees required
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm scaled(const Fq& v) const;

    /// Exact division; nullopt when o does not divide this form.
    std::optional<BinaryForm> divexact(const BinaryForm& o) const;

    Fq eval(const Fq& a0, const Fq& b0) const;

    /// Largest i such that b^i divides (0 for nonzero forms with c_0 != 0);
    /// zero form returns degree+1 by convention.
    size_t b_valuation() const;
    /// Coefficients of f(a, 1) as a univariate polynomial in a, low-to-high.
    detail::UPoly dehomogenize() const;
    /// Homogenize a univariate polynomial (in a) to the given total degree.
    static BinaryForm homogenize(const Gf& F, const detail::UPoly& f, size_t deg);

    /// Scale so the leading coefficient (highest surviving a-power) is 1.
    BinaryForm monic() const;

    std::string to_string() const;

private:
    const Gf* F_;
    size_t deg_;
    std::vector<u32> c_;
};

struct FormFactor {
    BinaryForm factor;  // monic irreducible
    size_t multiplicity;
};

/// Monic gcd of a set of forms (at least one nonzero; all same field).
BinaryForm form_gcd(const std::vector<BinaryForm>& forms);
/// Complete factorization into monic irreducibles (unit discarded).
std::vector<FormFactor> factor_form(const BinaryForm& f, u64 seed);
/// gcd + its factorization, per the field-core contract.
std::pair<BinaryForm, std::vector<FormFactor>> form_gcd_factor(const std::vector<BinaryForm>& forms, u64 seed);

namespace detail {
/// Factorization of a nonconstant monic univariate polynomial over Gf.
std::vector<std::pair<UPoly, size_t>> factor_upoly(const Gf& F, const UPoly& f, u64 seed);
}

}  // namespace pnil

#endif
