#include "pnil/binary_form.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pnil {

using detail::UPoly;

BinaryForm BinaryForm::one(const Gf& F) {
    BinaryForm f(F, 0);
    F.set_one(f.coeff_ptr(0));
    return f;
}

BinaryForm BinaryForm::constant(const Gf& F, const Fq& v) {
    BinaryForm f(F, 0);
    f.set_coeff(0, v);
    return f;
}

BinaryForm BinaryForm::from_ints(const Gf& F, const std::vector<long long>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("BinaryForm: empty coefficient list");
    BinaryForm f(F, coeffs.size() - 1);
    long long p = F.p();
    for (size_t i = 0; i < coeffs.size(); ++i) {
        long long v = coeffs[i] % p;
        if (v < 0) v += p;
        f.set_coeff(i, F.from_int(u64(v)));
    }
    return f;
}

BinaryForm BinaryForm::from_coeffs(const Gf& F, const std::vector<Fq>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("BinaryForm: empty coefficient list");
    BinaryForm f(F, coeffs.size() - 1);
    for (size_t i = 0; i < coeffs.size(); ++i) f.set_coeff(i, coeffs[i]);
    return f;
}

BinaryForm BinaryForm::monomial(const Gf& F, size_t a_pow, size_t b_pow, const Fq& v) {
    BinaryForm f(F, a_pow + b_pow);
    f.set_coeff(b_pow, v);
    return f;
}

bool BinaryForm::is_zero() const {
    for (u32 v : c_)
        if (v) return false;
    return true;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (deg_ != o.deg_) throw std::invalid_argument("BinaryForm: degree mismatch in +");
    BinaryForm r(*F_, deg_);
    for (size_t i = 0; i <= deg_; ++i) F_->add(coeff_ptr(i), o.coeff_ptr(i), r.coeff_ptr(i));
    return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    if (deg_ != o.deg_) throw std::invalid_argument("BinaryForm: degree mismatch in -");
    BinaryForm r(*F_, deg_);
    for (size_t i = 0; i <= deg_; ++i) F_->sub(coeff_ptr(i), o.coeff_ptr(i), r.coeff_ptr(i));
    return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    BinaryForm r(*F_, deg_ + o.deg_);
    size_t e = F_->e();
    if (e == 1) {
        u64 p = F_->p();
        for (size_t i = 0; i <= deg_; ++i) {
            u64 ci = c_[i];
            if (!ci) continue;
            for (size_t j = 0; j <= o.deg_; ++j)
                r.c_[i + j] = u32((ci * o.c_[j] + r.c_[i + j]) % p);
        }
    } else {
        for (size_t i = 0; i <= deg_; ++i) {
            if (F_->is_zero(coeff_ptr(i))) continue;
            for (size_t j = 0; j <= o.deg_; ++j)
                F_->addmul(coeff_ptr(i), o.coeff_ptr(j), r.coeff_ptr(i + j));
        }
    }
    return r;
}

BinaryForm BinaryForm::scaled(const Fq& v) const {
    BinaryForm r(*F_, deg_);
    for (size_t i = 0; i <= deg_; ++i) F_->mul(coeff_ptr(i), v.data(), r.coeff_ptr(i));
    return r;
}

Fq BinaryForm::eval(const Fq& a0, const Fq& b0) const {
    // sum_i c_i a0^{deg-i} b0^i
    const Gf& F = *F_;
    std::vector<Fq> a_powers(deg_ + 1);
    Fq apow = F.one();
    for (size_t i = 0; i <= deg_; ++i) { a_powers[i] = apow; apow = F.mul(apow, a0); }
    Fq acc = F.zero(), bpow = F.one(), t(F.e());
    for (size_t i = 0; i <= deg_; ++i) {
        F.mul(coeff_ptr(i), bpow.data(), t.data());
        F.mul(t.data(), a_powers[deg_ - i].data(), t.data());
        F.add(acc.data(), t.data(), acc.data());
        bpow = F.mul(bpow, b0);
    }
    return acc;
}

size_t BinaryForm::b_valuation() const {
    for (size_t i = 0; i <= deg_; ++i)
        if (!F_->is_zero(coeff_ptr(i))) return i;
    return deg_ + 1;
}

UPoly BinaryForm::dehomogenize() const {
    // f(a,1) = sum c_i a^{deg-i}: coefficient of a^k is c_{deg-k}
    std::vector<Fq> coeffs(deg_ + 1);
    for (size_t k = 0; k <= deg_; ++k) coeffs[k] = coeff(deg_ - k);
    return detail::upoly_from_coeffs(*F_, coeffs);
}

BinaryForm BinaryForm::homogenize(const Gf& F, const UPoly& f, size_t deg) {
    size_t n = f.ncoeff(F);
    if (n > deg + 1) throw std::invalid_argument("BinaryForm::homogenize: degree too small");
    BinaryForm r(F, deg);
    for (size_t k = 0; k < n; ++k)
        r.set_coeff(deg - k, detail::upoly_coeff(F, f, k));
    return r;
}

BinaryForm BinaryForm::monic() const {
    size_t v = b_valuation();
    if (v > deg_) return *this;
    Fq li = F_->inv(coeff(v));
    return scaled(li);
}

std::optional<BinaryForm> BinaryForm::divexact(const BinaryForm& o) const {
    if (o.is_zero()) throw std::domain_error("BinaryForm: division by zero form");
    if (o.deg_ > deg_) return std::nullopt;
    size_t D = deg_ - o.deg_;
    if (is_zero()) return BinaryForm(*F_, D);
    UPoly fa = dehomogenize(), ga = o.dehomogenize();
    UPoly q, r;
    detail::upoly_divmod(*F_, fa, ga, q, r);
    if (!r.is_zero()) return std::nullopt;
    if (q.ncoeff(*F_) > D + 1) return std::nullopt;
    return homogenize(*F_, q, D);
}

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i <= deg_; ++i) {
        if (F_->is_zero(coeff_ptr(i))) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = F_->to_string(coeff(i));
        size_t ap = deg_ - i, bp = i;
        if (cs != "1" || (ap == 0 && bp == 0)) os << cs;
        if (ap) os << "a" << (ap > 1 ? "^" + std::to_string(ap) : "");
        if (bp) os << "b" << (bp > 1 ? "^" + std::to_string(bp) : "");
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd and factorization
// ---------------------------------------------------------------------------

BinaryForm form_gcd(const std::vector<BinaryForm>& forms) {
    if (forms.empty()) throw std::invalid_argument("form_gcd: empty input");
    const Gf& F = forms[0].field();
    bool any = false;
    size_t bval = SIZE_MAX;
    UPoly g;  // gcd of dehomogenizations
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        any = true;
        bval = std::min(bval, f.b_valuation());
        g = g.is_zero() ? detail::upoly_monic(F, f.dehomogenize()) : detail::upoly_gcd(F, g, f.dehomogenize());
    }
    if (!any) throw std::invalid_argument("form_gcd: all forms are zero");
    size_t gdeg = g.ncoeff(F) - 1;
    BinaryForm core = BinaryForm::homogenize(F, g, gdeg);
    BinaryForm bpow = BinaryForm::monomial(F, 0, bval, F.one());
    return (core * bpow).monic();
}

namespace detail {

namespace {

UPoly upoly_x(const Gf& F) {
    UPoly x;
    x.c.assign(2 * F.e(), 0);
    F.set_one(x.c.data() + F.e());
    return x;
}

UPoly upoly_one(const Gf& F) {
    UPoly o;
    o.c.assign(F.e(), 0);
    F.set_one(o.c.data());
    return o;
}

bool upoly_is_one(const Gf& F, const UPoly& f) {
    return f.ncoeff(F) == 1 && F.equal(f.c.data(), F.one().data());
}

UPoly upoly_pth_root(const Gf& F, const UPoly& f) {
    // f = g(x^p); coefficients of g are p-th roots (c^{p^{e-1}})
    size_t e = F.e(), n = f.ncoeff(F);
    std::vector<Fq> coeffs;
    for (size_t i = 0; i < n; i += F.p()) {
        Fq c = upoly_coeff(F, f, i);
        Fq r(e);
        u64 exp = 1;
        for (u32 k = 0; k + 1 < e; ++k) exp *= F.p();
        F.pow(c.data(), exp, r.data());
        coeffs.push_back(r);
    }
    return upoly_from_coeffs(F, coeffs);
}

UPoly random_upoly(const Gf& F, size_t max_deg, std::mt19937_64& rng) {
    std::vector<Fq> coeffs(max_deg + 1);
    u64 q = F.order();
    for (auto& c : coeffs) c = F.from_index(rng() % q);
    return upoly_from_coeffs(F, coeffs);
}

// Cantor-Zassenhaus equal-degree splitting: f monic squarefree, all
// irreducible factors of degree k.
void equal_degree_split(const Gf& F, const UPoly& f, size_t k,
                        std::mt19937_64& rng, std::vector<UPoly>& out) {
    size_t d = f.ncoeff(F) - 1;
    if (d == k) { out.push_back(upoly_monic(F, f)); return; }
    UPoly g;
    while (true) {
        UPoly r = random_upoly(F, d - 1, rng);
        if (r.ncoeff(F) <= 1) continue;
        g = upoly_gcd(F, r, f);
        if (g.ncoeff(F) > 1 && g.ncoeff(F) - 1 < d) break;  // lucky split
        if (F.p() == 2) {
            // trace map: r + r^q + ... + r^{q^{k-1}}
            UPoly s = upoly_mod(F, r, f), term = s;
            u64 q = F.order();
            for (size_t i = 1; i < k; ++i) {
                term = upoly_powmod(F, term, q, f);
                s = upoly_add(F, s, term);
            }
            g = upoly_gcd(F, s, f);
        } else {
            // r^((q^k-1)/2) - 1
            u64 qk = 1;
            bool overflow = false;
            for (size_t i = 0; i < k; ++i) {
                if (qk > (u64(1) << 62) / F.order()) { overflow = true; break; }
                qk *= F.order();
            }
            if (overflow) throw std::overflow_error("equal_degree_split: field too large");
            UPoly s = upoly_powmod(F, r, (qk - 1) / 2, f);
            s = upoly_sub(F, s, upoly_one(F));
            g = upoly_gcd(F, s, f);
        }
        if (g.ncoeff(F) > 1 && g.ncoeff(F) - 1 < d) break;
    }
    UPoly q1, r1;
    upoly_divmod(F, f, g, q1, r1);
    equal_degree_split(F, g, k, rng, out);
    equal_degree_split(F, upoly_monic(F, q1), k, rng, out);
}

// Distinct-degree then equal-degree factorization of a monic squarefree poly.
void factor_squarefree(const Gf& F, UPoly f, std::mt19937_64& rng,
                       std::vector<UPoly>& out) {
    UPoly x = upoly_x(F);
    UPoly h = upoly_mod(F, x, f);
    u64 q = F.order();
    size_t k = 0;
    while (f.ncoeff(F) - 1 >= 2 * (k + 1)) {
        ++k;
        h = upoly_powmod(F, h, q, f);
        UPoly g = upoly_gcd(F, upoly_sub(F, h, x), f);
        if (g.ncoeff(F) > 1) {
            equal_degree_split(F, g, k, rng, out);
            UPoly qq, rr;
            upoly_divmod(F, f, g, qq, rr);
            f = upoly_monic(F, qq);
            h = upoly_mod(F, h, f);
        }
    }
    if (f.ncoeff(F) > 1) out.push_back(upoly_monic(F, f));
}

void factor_rec(const Gf& F, UPoly f, size_t outer_mult, std::mt19937_64& rng,
                std::vector<std::pair<UPoly, size_t>>& out) {
    f = upoly_monic(F, f);
    if (f.ncoeff(F) <= 1) return;
    UPoly fp = upoly_derivative(F, f);
    if (fp.is_zero()) {
        factor_rec(F, upoly_pth_root(F, f), outer_mult * F.p(), rng, out);
        return;
    }
    UPoly c = upoly_gcd(F, f, fp);
    UPoly w, rr;
    upoly_divmod(F, f, c, w, rr);
    w = upoly_monic(F, w);
    size_t i = 1;
    while (!upoly_is_one(F, w)) {
        UPoly y = upoly_gcd(F, w, c);
        UPoly z, r2;
        upoly_divmod(F, w, y, z, r2);
        z = upoly_monic(F, z);
        if (!upoly_is_one(F, z)) {
            std::vector<UPoly> irr;
            factor_squarefree(F, z, rng, irr);
            for (auto& g : irr) out.emplace_back(g, i * outer_mult);
        }
        w = y;
        UPoly cq, cr;
        upoly_divmod(F, c, y, cq, cr);
        c = upoly_monic(F, cq);
        ++i;
    }
    if (!upoly_is_one(F, c)) factor_rec(F, upoly_pth_root(F, c), outer_mult * F.p(), rng, out);
}

}  // namespace

std::vector<std::pair<UPoly, size_t>> factor_upoly(const Gf& F, const UPoly& f, u64 seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::pair<UPoly, size_t>> out;
    factor_rec(F, f, 1, rng, out);
    // deterministic order: by degree, then coefficient index
    std::sort(out.begin(), out.end(), [&](const auto& A, const auto& B) {
        size_t da = A.first.ncoeff(F), db = B.first.ncoeff(F);
        if (da != db) return da < db;
        return A.first.c < B.first.c;
    });
    return out;
}

}  // namespace detail

std::vector<FormFactor> factor_form(const BinaryForm& f, u64 seed) {
    if (f.is_zero()) throw std::invalid_argument("factor_form: zero form");
    const Gf& F = f.field();
    std::vector<FormFactor> out;
    size_t bval = f.b_valuation();
    if (bval > 0)
        out.push_back({BinaryForm::monomial(F, 0, 1, F.one()), bval});
    UPoly fa = f.dehomogenize();
    if (fa.ncoeff(F) > 1) {
        auto irr = detail::factor_upoly(F, fa, seed);
        for (auto& [g, m] : irr)
            out.push_back({BinaryForm::homogenize(F, g, g.ncoeff(F) - 1).monic(), m});
    }
    return out;
}

std::pair<BinaryForm, std::vector<FormFactor>> form_gcd_factor(const std::vector<BinaryForm>& forms, u64 seed) {
    BinaryForm g = form_gcd(forms);
    return {g, factor_form(g, seed)};
}

}  // namespace pnil
