#include "pnil/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace pnil {

namespace {

bool is_prime(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; u64(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// word-level
// ---------------------------------------------------------------------------

u32 Gf::inv1(u32 a) const {
    if (a == 0) throw std::domain_error("Gf: inverse of zero");
    // extended Euclid
    long long t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p_;
    return u32(t);
}

u32 Gf::pow1(u32 a, u64 n) const {
    u64 r = 1, b = a % p_;
    while (n) {
        if (n & 1) r = (r * b) % p_;
        b = (b * b) % p_;
        n >>= 1;
    }
    return u32(r);
}

// ---------------------------------------------------------------------------
// element-level
// ---------------------------------------------------------------------------

void Gf::set_zero(u32* x) const { std::fill(x, x + e_, 0u); }
void Gf::set_one(u32* x) const { std::fill(x, x + e_, 0u); x[0] = 1; }

bool Gf::is_zero(const u32* x) const {
    for (u32 i = 0; i < e_; ++i)
        if (x[i] != 0) return false;
    return true;
}

bool Gf::equal(const u32* a, const u32* b) const {
    for (u32 i = 0; i < e_; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

void Gf::assign(const u32* a, u32* out) const { std::copy(a, a + e_, out); }

void Gf::add(const u32* a, const u32* b, u32* out) const {
    for (u32 i = 0; i < e_; ++i) out[i] = add1(a[i], b[i]);
}

void Gf::sub(const u32* a, const u32* b, u32* out) const {
    for (u32 i = 0; i < e_; ++i) out[i] = sub1(a[i], b[i]);
}

void Gf::neg(const u32* a, u32* out) const {
    for (u32 i = 0; i < e_; ++i) out[i] = neg1(a[i]);
}

void Gf::mul_base(const u32* a, u32 c, u32* out) const {
    for (u32 i = 0; i < e_; ++i) out[i] = mul1(a[i], c);
}

void Gf::addmul_base(const u32* a, u32 c, u32* out) const {
    for (u32 i = 0; i < e_; ++i) out[i] = u32((u64(a[i]) * c + out[i]) % p_);
}

void Gf::mul(const u32* a, const u32* b, u32* out) const {
    if (e_ == 1) { out[0] = mul1(a[0], b[0]); return; }
    // schoolbook product followed by reduction via t^e = -mod_tail
    u32 n = e_;
    std::vector<u64> prod(2 * n - 1, 0);
    for (u32 i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (u32 j = 0; j < n; ++j) prod[i + j] += u64(a[i]) * b[j];
    }
    for (auto& v : prod) v %= p_;
    for (u32 k = 2 * n - 2; k >= n; --k) {
        u64 c = prod[k] % p_;
        if (c) {
            u64 cneg = p_ - c;
            for (u32 i = 0; i < n; ++i)
                prod[k - n + i] = (prod[k - n + i] + cneg * mod_tail_[i]) % p_;
        }
        prod[k] = 0;
        if (k == n) break;
    }
    for (u32 i = 0; i < n; ++i) out[i] = u32(prod[i] % p_);
}

void Gf::addmul(const u32* a, const u32* b, u32* out) const {
    if (e_ == 1) { out[0] = u32((u64(a[0]) * b[0] + out[0]) % p_); return; }
    std::vector<u32> t(e_);
    mul(a, b, t.data());
    add(out, t.data(), out);
}

void Gf::inv(const u32* a, u32* out) const {
    if (is_zero(a)) throw std::domain_error("Gf: inverse of zero");
    if (e_ == 1) { out[0] = inv1(a[0]); return; }
    // a^(q-2) with q = p^e
    pow(a, order() - 2, out);
}

void Gf::pow(const u32* a, u64 n, u32* out) const {
    std::vector<u32> base(a, a + e_), acc(e_);
    set_one(acc.data());
    while (n) {
        if (n & 1) mul(acc.data(), base.data(), acc.data());
        mul(base.data(), base.data(), base.data());
        n >>= 1;
    }
    assign(acc.data(), out);
}

void Gf::frobenius(const u32* a, u32* out) const { pow(a, p_, out); }

u64 Gf::order() const {
    u64 q = 1;
    for (u32 i = 0; i < e_; ++i) {
        if (q > u64(1) << 62) throw std::overflow_error("Gf: order too large");
        q *= p_;
    }
    return q;
}

Fq Gf::from_int(u64 c) const {
    Fq x(e_, 0);
    x[0] = u32(c % p_);
    return x;
}

Fq Gf::from_words(std::vector<u32> w) const {
    if (w.size() != e_) throw std::invalid_argument("Gf::from_words: wrong length");
    for (auto& v : w) v %= p_;
    return w;
}

Fq Gf::from_index(u64 idx) const {
    Fq x(e_, 0);
    for (u32 i = 0; i < e_; ++i) { x[i] = u32(idx % p_); idx /= p_; }
    return x;
}

u64 Gf::to_index(const Fq& x) const {
    u64 idx = 0;
    for (u32 i = e_; i-- > 0;) idx = idx * p_ + x[i];
    return idx;
}

std::string Gf::to_string(const Fq& x) const {
    if (e_ == 1) return std::to_string(x[0]);
    std::ostringstream os;
    os << "[";
    for (u32 i = 0; i < e_; ++i) os << (i ? "," : "") << x[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// univariate polynomials over Gf
// ---------------------------------------------------------------------------

namespace detail {

UPoly upoly_from_coeffs(const Gf& F, const std::vector<Fq>& coeffs) {
    UPoly f;
    f.c.reserve(coeffs.size() * F.e());
    for (const auto& co : coeffs) f.c.insert(f.c.end(), co.begin(), co.end());
    upoly_trim(F, f);
    return f;
}

Fq upoly_coeff(const Gf& F, const UPoly& f, size_t i) {
    Fq r(F.e(), 0);
    if (i < f.ncoeff(F)) std::copy(f.c.begin() + i * F.e(), f.c.begin() + (i + 1) * F.e(), r.begin());
    return r;
}

void upoly_trim(const Gf& F, UPoly& f) {
    size_t e = F.e();
    size_t n = f.c.size() / e;
    while (n > 0 && F.is_zero(f.c.data() + (n - 1) * e)) --n;
    f.c.resize(n * e);
}

UPoly upoly_add(const Gf& F, const UPoly& a, const UPoly& b) {
    size_t e = F.e(), na = a.ncoeff(F), nb = b.ncoeff(F), n = std::max(na, nb);
    UPoly r;
    r.c.assign(n * e, 0);
    std::copy(a.c.begin(), a.c.end(), r.c.begin());
    for (size_t i = 0; i < nb; ++i) F.add(r.c.data() + i * e, b.c.data() + i * e, r.c.data() + i * e);
    upoly_trim(F, r);
    return r;
}

UPoly upoly_sub(const Gf& F, const UPoly& a, const UPoly& b) {
    size_t e = F.e(), na = a.ncoeff(F), nb = b.ncoeff(F), n = std::max(na, nb);
    UPoly r;
    r.c.assign(n * e, 0);
    std::copy(a.c.begin(), a.c.end(), r.c.begin());
    for (size_t i = 0; i < nb; ++i) F.sub(r.c.data() + i * e, b.c.data() + i * e, r.c.data() + i * e);
    upoly_trim(F, r);
    return r;
}

UPoly upoly_mul(const Gf& F, const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly{};
    size_t e = F.e(), na = a.ncoeff(F), nb = b.ncoeff(F);
    UPoly r;
    r.c.assign((na + nb - 1) * e, 0);
    std::vector<u32> t(e);
    for (size_t i = 0; i < na; ++i) {
        if (F.is_zero(a.c.data() + i * e)) continue;
        for (size_t j = 0; j < nb; ++j) {
            F.mul(a.c.data() + i * e, b.c.data() + j * e, t.data());
            F.add(r.c.data() + (i + j) * e, t.data(), r.c.data() + (i + j) * e);
        }
    }
    upoly_trim(F, r);
    return r;
}

UPoly upoly_scalar_mul(const Gf& F, const UPoly& a, const Fq& s) {
    size_t e = F.e(), na = a.ncoeff(F);
    UPoly r;
    r.c.assign(na * e, 0);
    for (size_t i = 0; i < na; ++i) F.mul(a.c.data() + i * e, s.data(), r.c.data() + i * e);
    upoly_trim(F, r);
    return r;
}

void upoly_divmod(const Gf& F, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw std::domain_error("upoly: division by zero");
    size_t e = F.e(), nb = b.ncoeff(F);
    r = a;
    upoly_trim(F, r);
    q = UPoly{};
    size_t nr = r.ncoeff(F);
    if (nr < nb) return;
    q.c.assign((nr - nb + 1) * e, 0);
    Fq lead_inv(e);
    F.inv(b.c.data() + (nb - 1) * e, lead_inv.data());
    std::vector<u32> coef(e), t(e);
    for (size_t i = nr; i-- > 0;) {
        if (i + 1 < nb) break;
        const u32* ri = r.c.data() + i * e;
        if (F.is_zero(ri)) continue;
        F.mul(ri, lead_inv.data(), coef.data());
        F.assign(coef.data(), q.c.data() + (i - nb + 1) * e);
        for (size_t j = 0; j < nb; ++j) {
            F.mul(coef.data(), b.c.data() + j * e, t.data());
            F.sub(r.c.data() + (i - nb + 1 + j) * e, t.data(), r.c.data() + (i - nb + 1 + j) * e);
        }
    }
    upoly_trim(F, q);
    upoly_trim(F, r);
}

UPoly upoly_mod(const Gf& F, const UPoly& a, const UPoly& b) {
    UPoly q, r;
    upoly_divmod(F, a, b, q, r);
    return r;
}

UPoly upoly_monic(const Gf& F, const UPoly& a) {
    if (a.is_zero()) return a;
    size_t e = F.e(), n = a.ncoeff(F);
    Fq li(e);
    F.inv(a.c.data() + (n - 1) * e, li.data());
    return upoly_scalar_mul(F, a, li);
}

UPoly upoly_gcd(const Gf& F, UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = upoly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(F, a);
}

UPoly upoly_derivative(const Gf& F, const UPoly& a) {
    size_t e = F.e(), n = a.ncoeff(F);
    if (n <= 1) return UPoly{};
    UPoly r;
    r.c.assign((n - 1) * e, 0);
    for (size_t i = 1; i < n; ++i)
        F.mul_base(a.c.data() + i * e, u32(i % F.p()), r.c.data() + (i - 1) * e);
    upoly_trim(F, r);
    return r;
}

UPoly upoly_powmod(const Gf& F, const UPoly& base, u64 n, const UPoly& mod) {
    UPoly acc;
    acc.c.assign(F.e(), 0);
    F.set_one(acc.c.data());
    UPoly b = upoly_mod(F, base, mod);
    while (n) {
        if (n & 1) acc = upoly_mod(F, upoly_mul(F, acc, b), mod);
        b = upoly_mod(F, upoly_mul(F, b, b), mod);
        n >>= 1;
    }
    return acc;
}

UPoly upoly_frobenius_power(const Gf& F, const UPoly& f, u64 k, const UPoly& x_start) {
    // returns x_start^(q^k) mod f by k successive q-th powers
    UPoly r = upoly_mod(F, x_start, f);
    u64 q = F.order();
    for (u64 i = 0; i < k; ++i) r = upoly_powmod(F, r, q, f);
    return r;
}

Fq upoly_eval(const Gf& F, const UPoly& f, const Fq& x) {
    size_t e = F.e(), n = f.ncoeff(F);
    Fq acc(e, 0);
    for (size_t i = n; i-- > 0;) {
        F.mul(acc.data(), x.data(), acc.data());
        F.add(acc.data(), f.c.data() + i * e, acc.data());
    }
    return acc;
}

bool upoly_equal(const Gf& F, const UPoly& a, const UPoly& b) {
    UPoly d = upoly_sub(F, a, b);
    return d.is_zero();
}

bool upoly_is_irreducible(const Gf& F, const UPoly& f) {
    size_t n = f.ncoeff(F);
    if (n < 2) return false;
    size_t d = n - 1;
    if (d == 1) return true;
    UPoly x;
    x.c.assign(2 * F.e(), 0);
    F.set_one(x.c.data() + F.e());
    // x^(q^d) == x mod f
    UPoly xq = upoly_frobenius_power(F, f, d, x);
    if (!upoly_equal(F, xq, upoly_mod(F, x, f))) return false;
    // gcd(x^(q^(d/r)) - x, f) == 1 for every prime r | d
    for (size_t r = 2; r <= d; ++r) {
        if (d % r != 0) continue;
        bool rprime = true;
        for (size_t s = 2; s * s <= r; ++s)
            if (r % s == 0) { rprime = false; break; }
        if (!rprime) continue;
        UPoly xr = upoly_frobenius_power(F, f, d / r, x);
        UPoly g = upoly_gcd(F, upoly_sub(F, xr, x), f);
        if (g.ncoeff(F) != 1) return false;
    }
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// construction / interning
// ---------------------------------------------------------------------------

Gf::Gf(u32 p, u32 e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("Gf: characteristic must be prime, got " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("Gf: extension degree must be >= 1");
    mod_tail_.assign(e_, 0);
    if (e_ == 1) return;
    // least monic irreducible t^e + sum a_i t^i, tails enumerated in counting
    // order (a_0 least significant digit)
    const Gf& base = Gf::get(p, 1);
    u64 total = 1;
    for (u32 i = 0; i < e; ++i) total *= p;
    for (u64 m = 0; m < total; ++m) {
        std::vector<Fq> coeffs(e + 1, Fq{0});
        u64 v = m;
        for (u32 i = 0; i < e; ++i) { coeffs[i] = Fq{u32(v % p)}; v /= p; }
        coeffs[e] = Fq{1};
        detail::UPoly f = detail::upoly_from_coeffs(base, coeffs);
        if (detail::upoly_is_irreducible(base, f)) {
            u64 w = m;
            for (u32 i = 0; i < e; ++i) { mod_tail_[i] = u32(w % p); w /= p; }
            return;
        }
    }
    throw std::logic_error("Gf: no irreducible found");  // unreachable
}

const Gf& Gf::get(u32 p, u32 e) {
    // recursive: constructing an extension interns its prime field first
    static std::recursive_mutex mu;
    static std::map<std::pair<u32, u32>, std::unique_ptr<Gf>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<Gf>(new Gf(p, e))).first;
    return *it->second;
}

// ---------------------------------------------------------------------------
// RootField
// ---------------------------------------------------------------------------

RootField::RootField(const Gf& base, std::vector<u32> h_coeffs, size_t deg)
    : base_(base), h_(std::move(h_coeffs)), deg_(deg) {
    if (deg_ < 1 || h_.size() != (deg_ + 1) * base_.e())
        throw std::invalid_argument("RootField: bad modulus");
    if (!base_.equal(h_.data() + deg_ * base_.e(), base_.one().data())) {
        // normalize to monic
        Fq li(base_.e());
        base_.inv(h_.data() + deg_ * base_.e(), li.data());
        for (size_t i = 0; i <= deg_; ++i)
            base_.mul(h_.data() + i * base_.e(), li.data(), h_.data() + i * base_.e());
    }
}

void RootField::set_zero(u32* x) const { std::fill(x, x + words(), 0u); }

void RootField::set_one(u32* x) const {
    set_zero(x);
    base_.set_one(x);
}

bool RootField::is_zero(const u32* x) const {
    for (size_t i = 0; i < words(); ++i)
        if (x[i]) return false;
    return true;
}

void RootField::assign(const u32* a, u32* out) const { std::copy(a, a + words(), out); }

void RootField::add(const u32* a, const u32* b, u32* out) const {
    size_t e = base_.e();
    for (size_t i = 0; i < deg_; ++i) base_.add(a + i * e, b + i * e, out + i * e);
}

void RootField::sub(const u32* a, const u32* b, u32* out) const {
    size_t e = base_.e();
    for (size_t i = 0; i < deg_; ++i) base_.sub(a + i * e, b + i * e, out + i * e);
}

void RootField::neg(const u32* a, u32* out) const {
    size_t e = base_.e();
    for (size_t i = 0; i < deg_; ++i) base_.neg(a + i * e, out + i * e);
}

void RootField::mul(const u32* a, const u32* b, u32* out) const {
    size_t e = base_.e();
    std::vector<u32> prod((2 * deg_ - 1) * e, 0), t(e);
    for (size_t i = 0; i < deg_; ++i) {
        if (base_.is_zero(a + i * e)) continue;
        for (size_t j = 0; j < deg_; ++j) {
            base_.mul(a + i * e, b + j * e, t.data());
            base_.add(prod.data() + (i + j) * e, t.data(), prod.data() + (i + j) * e);
        }
    }
    // reduce by monic h: t^deg = -(h_0 + ... + h_{deg-1} t^{deg-1})
    for (size_t k = 2 * deg_ - 2; k + 1 > deg_; --k) {
        u32* ck = prod.data() + k * e;
        if (!base_.is_zero(ck)) {
            for (size_t i = 0; i < deg_; ++i) {
                base_.mul(ck, h_.data() + i * e, t.data());
                base_.sub(prod.data() + (k - deg_ + i) * e, t.data(), prod.data() + (k - deg_ + i) * e);
            }
            base_.set_zero(ck);
        }
        if (k == deg_) break;
    }
    std::copy(prod.begin(), prod.begin() + words(), out);
}

void RootField::inv(const u32* a, u32* out) const {
    if (is_zero(a)) throw std::domain_error("RootField: inverse of zero");
    // extended Euclid in base[t] between h and a
    detail::UPoly f;
    f.c = h_;
    detail::UPoly g;
    g.c.assign(a, a + words());
    detail::upoly_trim(base_, g);
    detail::UPoly r0 = f, r1 = g;
    detail::UPoly s0, s1;
    s0.c.clear();
    s1.c.assign(base_.e(), 0);
    base_.set_one(s1.c.data());
    while (!r1.is_zero()) {
        detail::UPoly q, r;
        detail::upoly_divmod(base_, r0, r1, q, r);
        detail::UPoly s = detail::upoly_sub(base_, s0, detail::upoly_mul(base_, q, s1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
    }
    // r0 = gcd (degree 0 since h irreducible and a nonzero mod h)
    if (r0.ncoeff(base_) != 1) throw std::domain_error("RootField: modulus not irreducible");
    Fq li(base_.e());
    base_.inv(r0.c.data(), li.data());
    detail::UPoly inv_poly = detail::upoly_scalar_mul(base_, s0, li);
    set_zero(out);
    size_t n = std::min(inv_poly.ncoeff(base_), deg_);
    std::copy(inv_poly.c.begin(), inv_poly.c.begin() + n * base_.e(), out);
}

void RootField::embed(const u32* a, u32* out) const {
    set_zero(out);
    base_.assign(a, out);
}

void RootField::gen(u32* out) const {
    set_zero(out);
    if (deg_ == 1) {
        // t = -h_0
        base_.neg(h_.data(), out);
    } else {
        base_.set_one(out + base_.e());
    }
}

}  // namespace pnil
