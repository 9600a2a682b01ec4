#ifndef PNIL_GF_HPP
#define PNIL_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnil {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Dense coefficient vector of a field element (length = extension degree).
using Fq = std::vector<u32>;

/// The finite field F_{p^e}, p prime, e >= 1.
///
/// Instances are interned: Gf::get(p, e) always returns the same object, with
/// the defining irreducible chosen deterministically (least monic irreducible
/// of degree e in counting order of the non-leading coefficient vector), so
/// identical runs produce identical element representations.
///
/// Elements are vectors of e words, each < p, representing the residue class
/// of c[0] + c[1] t + ... + c[e-1] t^{e-1} modulo the defining polynomial.
/// Hot loops use the raw (const u32*) interface; Fq overloads are provided
/// for convenience.
class Gf {
public:
    static const Gf& get(u32 p, u32 e = 1);

    u32 p() const { return p_; }
    u32 e() const { return e_; }
    size_t words() const { return e_; }
    /// p^e as u64; throws if it does not fit.
    u64 order() const;
    /// Defining polynomial coefficients c0..c_{e-1} of t^e = -(c0 + ... + c_{e-1} t^{e-1}).
    const std::vector<u32>& modulus_tail() const { return mod_tail_; }

    // -- word-level arithmetic in F_p ---------------------------------------
    u32 add1(u32 a, u32 b) const { u32 s = a + b; return s >= p_ ? s - p_ : s; }
    u32 sub1(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
    u32 neg1(u32 a) const { return a == 0 ? 0 : p_ - a; }
    u32 mul1(u32 a, u32 b) const { return u32((u64(a) * b) % p_); }
    u32 inv1(u32 a) const;
    u32 pow1(u32 a, u64 n) const;

    // -- element arithmetic (e words per element) ---------------------------
    void set_zero(u32* x) const;
    void set_one(u32* x) const;
    bool is_zero(const u32* x) const;
    bool equal(const u32* a, const u32* b) const;
    void assign(const u32* a, u32* out) const;
    void add(const u32* a, const u32* b, u32* out) const;
    void sub(const u32* a, const u32* b, u32* out) const;
    void neg(const u32* a, u32* out) const;
    void mul(const u32* a, const u32* b, u32* out) const;       // out may alias a or b
    void mul_base(const u32* a, u32 c, u32* out) const;
    /// out += c * a  (c in F_p)
    void addmul_base(const u32* a, u32 c, u32* out) const;
    /// out += a * b
    void addmul(const u32* a, const u32* b, u32* out) const;
    void inv(const u32* a, u32* out) const;                      // throws on zero
    void pow(const u32* a, u64 n, u32* out) const;
    void frobenius(const u32* a, u32* out) const;                // x -> x^p

    // -- Fq conveniences -----------------------------------------------------
    Fq zero() const { return Fq(e_, 0); }
    Fq one() const { Fq x(e_, 0); set_one(x.data()); return x; }
    Fq from_int(u64 c) const;                  // image of an integer (base field)
    Fq from_words(std::vector<u32> w) const;   // reduce mod p, must have size e
    /// Element with coefficient vector given by the base-p digits of idx.
    Fq from_index(u64 idx) const;
    u64 to_index(const Fq& x) const;
    Fq add(const Fq& a, const Fq& b) const { Fq r(e_); add(a.data(), b.data(), r.data()); return r; }
    Fq sub(const Fq& a, const Fq& b) const { Fq r(e_); sub(a.data(), b.data(), r.data()); return r; }
    Fq neg(const Fq& a) const { Fq r(e_); neg(a.data(), r.data()); return r; }
    Fq mul(const Fq& a, const Fq& b) const { Fq r(e_); mul(a.data(), b.data(), r.data()); return r; }
    Fq inv(const Fq& a) const { Fq r(e_); inv(a.data(), r.data()); return r; }
    Fq pow(const Fq& a, u64 n) const { Fq r(e_); pow(a.data(), n, r.data()); return r; }
    bool is_zero(const Fq& a) const { return is_zero(a.data()); }
    bool equal(const Fq& a, const Fq& b) const { return equal(a.data(), b.data()); }

    std::string to_string(const Fq& x) const;

    Gf(const Gf&) = delete;
    Gf& operator=(const Gf&) = delete;

private:
    Gf(u32 p, u32 e);
    u32 p_;
    u32 e_;
    std::vector<u32> mod_tail_;  // e words: t^e = -(mod_tail_[0] + ... + mod_tail_[e-1] t^{e-1})
};

/// Residue field Gf[t]/(h) for h irreducible over the base Gf; used to
/// evaluate matrix ranks at the roots of drop-locus factors without building
/// a flattened primitive representation.  Elements are deg(h)*base.e() words.
class RootField {
public:
    /// h: monic polynomial over base, coefficients low-to-high, length deg+1,
    /// each coefficient base.e() words.
    RootField(const Gf& base, std::vector<u32> h_coeffs, size_t deg);

    const Gf& base() const { return base_; }
    size_t degree() const { return deg_; }
    size_t words() const { return deg_ * base_.e(); }

    void set_zero(u32* x) const;
    void set_one(u32* x) const;
    bool is_zero(const u32* x) const;
    void assign(const u32* a, u32* out) const;
    void add(const u32* a, const u32* b, u32* out) const;
    void sub(const u32* a, const u32* b, u32* out) const;
    void neg(const u32* a, u32* out) const;
    void mul(const u32* a, const u32* b, u32* out) const;
    void inv(const u32* a, u32* out) const;   // throws on zero (h irreducible => field)
    /// Embedding of the base field.
    void embed(const u32* a, u32* out) const;
    /// The class of t (a root of h).
    void gen(u32* out) const;

private:
    const Gf& base_;
    std::vector<u32> h_;   // (deg_+1) coefficients, monic
    size_t deg_;
};

namespace detail {

/// Dense univariate polynomials over a Gf, coefficients low-to-high,
/// stride = field.e() words per coefficient.  Trailing zero coefficients are
/// trimmed by the operations that produce normalized results.
struct UPoly {
    std::vector<u32> c;  // size = (deg+1) * e, empty = zero polynomial
    size_t ncoeff(const Gf& F) const { return c.size() / F.e(); }
    bool is_zero() const { return c.empty(); }
};

UPoly upoly_from_coeffs(const Gf& F, const std::vector<Fq>& coeffs);
Fq upoly_coeff(const Gf& F, const UPoly& f, size_t i);
void upoly_trim(const Gf& F, UPoly& f);
UPoly upoly_add(const Gf& F, const UPoly& a, const UPoly& b);
UPoly upoly_sub(const Gf& F, const UPoly& a, const UPoly& b);
UPoly upoly_mul(const Gf& F, const UPoly& a, const UPoly& b);
UPoly upoly_scalar_mul(const Gf& F, const UPoly& a, const Fq& s);
/// Quotient and remainder by a nonzero divisor.
void upoly_divmod(const Gf& F, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly upoly_mod(const Gf& F, const UPoly& a, const UPoly& b);
UPoly upoly_gcd(const Gf& F, UPoly a, UPoly b);  // monic result
UPoly upoly_monic(const Gf& F, const UPoly& a);
UPoly upoly_derivative(const Gf& F, const UPoly& a);
UPoly upoly_powmod(const Gf& F, const UPoly& base, u64 n, const UPoly& mod);
/// x^(q^k) mod f via iterated Frobenius, q = |F|.
UPoly upoly_frobenius_power(const Gf& F, const UPoly& f, u64 k, const UPoly& x_start);
Fq upoly_eval(const Gf& F, const UPoly& f, const Fq& x);
bool upoly_equal(const Gf& F, const UPoly& a, const UPoly& b);
bool upoly_is_irreducible(const Gf& F, const UPoly& f);

}  // namespace detail

}  // namespace pnil

#endif
