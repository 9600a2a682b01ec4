#include "pnil/jordan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pnil {

// ---------------------------------------------------------------------------
// JordanType
// ---------------------------------------------------------------------------

size_t JordanType::dim() const {
    size_t d = 0;
    for (size_t i = 0; i < mult.size(); ++i) d += (i + 1) * mult[i];
    return d;
}

std::vector<size_t> JordanType::stable() const {
    std::vector<size_t> s(mult.begin(), mult.end());
    if (!s.empty()) s.pop_back();
    return s;
}

size_t JordanType::max_part() const {
    for (size_t i = mult.size(); i-- > 0;)
        if (mult[i]) return i + 1;
    return 0;
}

std::string JordanType::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < mult.size(); ++i) {
        if (!mult[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (mult[i] > 1) os << mult[i];
        os << "[" << (i + 1) << "]";
    }
    if (first) os << "0";
    return os.str();
}

JordanType JordanType::from_ranks(u32 p, size_t dim, const std::vector<size_t>& ranks) {
    if (ranks.size() != size_t(p) - 1) throw std::invalid_argument("JordanType: need ranks for j = 1..p-1");
    auto r = [&](size_t j) -> size_t {
        if (j == 0) return dim;
        if (j >= p) return 0;
        return ranks[j - 1];
    };
    JordanType jt;
    jt.p = p;
    jt.mult.assign(p, 0);
    for (size_t i = 1; i <= p; ++i) {
        long long a = (long long)r(i - 1) - 2 * (long long)r(i) + (long long)r(i + 1);
        if (a < 0) throw std::logic_error("JordanType: rank sequence is not that of a p-nilpotent operator");
        jt.mult[i - 1] = size_t(a);
    }
    if (jt.dim() != dim) throw std::logic_error("JordanType: dimension mismatch");
    return jt;
}

JordanType JordanType::single(u32 p, size_t block, size_t count) {
    JordanType jt;
    jt.p = p;
    jt.mult.assign(p, 0);
    if (block >= 1 && block <= p) jt.mult[block - 1] = count;
    return jt;
}

JordanType Certificate::generic_jordan_type() const {
    std::vector<size_t> rr;
    for (const auto& rc : ranks) rr.push_back(rc.generic_rank);
    return JordanType::from_ranks(p, dim, rr);
}

bool Certificate::cjt() const {
    for (const auto& rc : ranks)
        if (!rc.constant) return false;
    return true;
}

// ---------------------------------------------------------------------------
// symbolic operators and closed points
// ---------------------------------------------------------------------------

FormMatrix theta_matrix(const Module& M) { return FormMatrix::pencil(M.x(), M.y()); }

FormMatrix theta_power(const Module& M, size_t j) {
    FormMatrix t = theta_matrix(M);
    return j == 1 ? t : t.pow(j, M.dim());
}

ClosedPoint make_closed_point(const Gf& L, const Fq& a0, const Fq& b0) {
    if (L.is_zero(a0) && L.is_zero(b0)) throw std::invalid_argument("pi-point: (0,0) is not projective");
    ClosedPoint pt;
    pt.ext_degree = L.e();
    if (!L.is_zero(a0)) {
        Fq ai = L.inv(a0);
        pt.a0 = L.one();
        pt.b0 = L.mul(b0, ai);
    } else {
        pt.a0 = L.zero();
        pt.b0 = L.one();
    }
    return pt;
}

namespace {

Mat embed_matrix(const Gf& L, const Mat& A) {
    // constant-polynomial embedding of a prime-field matrix
    Mat B(L, A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j)
            B.at(i, j)[0] = A.at(i, j)[0];
    return B;
}

std::vector<size_t> power_ranks_at(const Mat& theta, u32 p) {
    std::vector<size_t> ranks;
    Mat pw = theta;
    for (u32 j = 1; j < p; ++j) {
        ranks.push_back(rank(pw));
        pw = pw * theta;
    }
    if (!pw.is_zero()) throw std::logic_error("power_ranks_at: operator is not p-nilpotent");
    return ranks;
}

}  // namespace

JordanType jordan_type_closed(const Module& M, const Gf& L, const Fq& a0, const Fq& b0) {
    const Gf& F = M.field();
    u32 p = F.p();
    if (&L != &F && F.e() != 1)
        throw std::invalid_argument("jordan_type_closed: extension points require a prime coefficient field");
    if (L.p() != p) throw std::invalid_argument("jordan_type_closed: characteristic mismatch");
    if (L.is_zero(a0) && L.is_zero(b0)) throw std::invalid_argument("jordan_type_closed: (0,0)");
    Mat X = (&L == &F) ? M.x() : embed_matrix(L, M.x());
    Mat Y = (&L == &F) ? M.y() : embed_matrix(L, M.y());
    Mat theta = X.scaled(a0) + Y.scaled(b0);
    return JordanType::from_ranks(p, M.dim(), power_ranks_at(theta, p));
}

JordanType jordan_type_at(const Module& M, const PiPoint& pt, u64 seed) {
    if (std::holds_alternative<GenericPoint>(pt))
        return constancy_certificates(M, seed).generic_jordan_type();
    const ClosedPoint& cp = std::get<ClosedPoint>(pt);
    const Gf& L = Gf::get(M.p(), cp.ext_degree);
    return jordan_type_closed(M, L, cp.a0, cp.b0);
}

// ---------------------------------------------------------------------------
// rank certificates
// ---------------------------------------------------------------------------

namespace {

struct GradedBlock {
    std::vector<size_t> rows, cols;
};

std::vector<GradedBlock> graded_blocks(const Module& M, size_t j) {
    std::map<int, std::vector<size_t>> by_deg;
    const std::vector<int>& g = M.grading();
    for (size_t i = 0; i < g.size(); ++i) by_deg[g[i]].push_back(i);
    std::vector<GradedBlock> blocks;
    for (auto& [deg, cols] : by_deg) {
        auto it = by_deg.find(deg + int(j));
        if (it == by_deg.end()) continue;
        blocks.push_back(GradedBlock{it->second, cols});
    }
    return blocks;
}

RankCertificate rank_certificate(const Module& M, const FormMatrix& tj, size_t j, u64 seed) {
    const Gf& F = M.field();
    RankCertificate rc;
    rc.j = j;
    rc.pivot_minor = BinaryForm::one(F);
    if (M.dim() == 0) {
        rc.constant = true;
        return rc;
    }
    if (M.graded()) {
        // theta^j is homogeneous of degree j for the grading: one elimination
        // per graded block keeps the Bareiss degrees small
        for (const auto& b : graded_blocks(M, j)) {
            if (b.rows.empty() || b.cols.empty()) continue;
            FfgeResult fr = ffge_rank(tj.submatrix(b.rows, b.cols));
            rc.generic_rank += fr.generic_rank;
            if (fr.generic_rank > 0) rc.pivot_minor = rc.pivot_minor * fr.pivot_minor;
        }
    } else {
        FfgeResult fr = ffge_rank(tj);
        rc.generic_rank = fr.generic_rank;
        rc.pivot_minor = fr.pivot_minor;
    }
    if (rc.generic_rank > 0) {
        rc.factors = factor_form(rc.pivot_minor, seed);
        rc.evaluations = evaluate_candidate_roots(tj, rc.generic_rank, rc.factors);
    }
    rc.constant = true;
    for (const auto& dp : rc.evaluations)
        if (dp.dropped) rc.constant = false;
    return rc;
}

const char* kLinearFamilyDomain =
    "the family a x + b y over all [a:b] in P^1 of the algebraic closure";

Certificate power_certificates(const Module& M, u64 seed, CertKind kind) {
    const Gf& F = M.field();
    u32 p = F.p();
    Certificate cert;
    cert.kind = kind;
    cert.p = p;
    cert.dim = M.dim();
    cert.seed = seed;
    cert.domain = kLinearFamilyDomain;
    if (M.dim() == 0) {
        for (u32 j = 1; j < p; ++j) cert.ranks.push_back(rank_certificate(M, FormMatrix(), j, seed));
        cert.verdict = true;
        return cert;
    }
    FormMatrix theta = theta_matrix(M);
    FormMatrix tpow = theta;
    for (u32 j = 1; j < p; ++j) {
        cert.ranks.push_back(rank_certificate(M, tpow, j, seed + j));
        if (j + 1 < p) tpow = tpow * theta;
    }
    cert.verdict = cert.cjt();
    return cert;
}

}  // namespace

Certificate constancy_certificates(const Module& M, u64 seed) {
    return power_certificates(M, seed, CertKind::CJT);
}

EipResult is_eip(const Module& M, u64 seed) {
    const Gf& F = M.field();
    u32 p = F.p();
    EipResult res;
    res.cert = power_certificates(M, seed, CertKind::EIP);
    // dim Rad^j for j = 1..p-1
    Mat XT = M.x().transpose(), YT = M.y().transpose();
    Mat R = Mat::identity(F, M.dim());
    for (u32 j = 1; j < p; ++j) {
        R = row_space((R * XT).vstack(R * YT));
        res.cert.rad_dims.push_back(R.rows());
    }
    bool ok = true;
    for (u32 j = 1; j < p; ++j) {
        const RankCertificate& rc = res.cert.ranks[j - 1];
        if (!rc.constant || rc.generic_rank != res.cert.rad_dims[j - 1]) ok = false;
    }
    res.eip = ok;
    res.cert.verdict = ok;
    size_t mp = M.dim() == 0 ? 0 : res.cert.generic_jordan_type().max_part();
    res.cls = std::max<size_t>(1, mp);
    res.cert.eip_class = res.cls;
    return res;
}

EkpResult is_ekp(const Module& M, u64 seed) {
    const Gf& F = M.field();
    u32 p = F.p();
    EkpResult res;
    res.cert = power_certificates(M, seed, CertKind::EKP);
    size_t n = M.dim();
    bool ok = true;
    if (n > 0) {
        FormMatrix theta = theta_matrix(M);
        FormMatrix tpow = theta;
        for (u32 j = 1; j < p; ++j) {
            // common kernel of all coefficient matrices of theta^j: constant
            // vectors killed identically in (a, b) are killed by every
            // specialization; a dimension match forces equality everywhere
            Mat stacked(F, 0, n);
            for (size_t w = 0; w <= tpow.degree(); ++w) {
                Mat C(F, n, n);
                for (size_t r = 0; r < n; ++r)
                    for (size_t c = 0; c < n; ++c)
                        F.assign(tpow.at(r, c).coeff_ptr(w), C.at(r, c));
                stacked = stacked.rows() ? stacked.vstack(C) : C;
            }
            Mat V = kernel(stacked);
            const RankCertificate& rc = res.cert.ranks[j - 1];
            bool const_j = rc.constant && V.rows() == n - rc.generic_rank;
            res.cert.kernels.push_back(V);
            res.cert.kernel_constant.push_back(const_j);
            if (!const_j) ok = false;
            if (j + 1 < p) tpow = tpow * theta;
        }
    }
    res.ekp = ok;
    res.cert.verdict = ok;
    return res;
}

// ---------------------------------------------------------------------------
// generic kernels
// ---------------------------------------------------------------------------

std::vector<Mat> hom_from_w(size_t N, size_t d, const Module& M) {
    const Gf& F = M.field();
    u32 p = F.p();
    if (d < 1 || d > p || N < d) throw std::invalid_argument("hom_from_w: need 1 <= d <= p <= N");
    size_t n = M.dim();
    if (n == 0) return {};
    const Mat& X = M.x();
    const Mat& Y = M.y();
    bool with_xd = d < p;
    Mat Xd = with_xd ? M.monomial(d, 0) : Mat(F, 0, 0);
    size_t rows = n * (2 + (N - 1) + (with_xd ? N : 0));
    Mat C(F, rows, N * n);
    size_t r0 = 0;
    auto put_block = [&](size_t row0, size_t colblk, const Mat& A, bool negate) {
        for (size_t i = 0; i < n; ++i)
            for (size_t jj = 0; jj < n; ++jj) {
                if (F.is_zero(A.at(i, jj))) continue;
                if (negate)
                    F.neg(A.at(i, jj), C.at(row0 + i, colblk * n + jj));
                else
                    F.assign(A.at(i, jj), C.at(row0 + i, colblk * n + jj));
            }
    };
    put_block(r0, 0, X, false);  // x.m_1 = 0
    r0 += n;
    put_block(r0, N - 1, Y, false);  // y.m_N = 0
    r0 += n;
    for (size_t i = 0; i + 1 < N; ++i) {  // y.m_i = x.m_{i+1}
        put_block(r0, i, Y, false);
        put_block(r0, i + 1, X, true);
        r0 += n;
    }
    if (with_xd)
        for (size_t i = 0; i < N; ++i) {  // x^d.m_i = 0
            put_block(r0, i, Xd, false);
            r0 += n;
        }
    Mat K = kernel(C);
    std::vector<Mat> out;
    for (size_t r = 0; r < K.rows(); ++r) {
        Mat sol(F, N, n);
        for (size_t i = 0; i < N; ++i)
            for (size_t c = 0; c < n; ++c)
                F.assign(K.at(r, i * n + c), sol.at(i, c));
        out.push_back(std::move(sol));
    }
    return out;
}

GenericKernelResult generic_kernel(const Module& M, size_t d, bool heuristic, u64 seed) {
    const Gf& F = M.field();
    u32 p = F.p();
    if (d < 1 || d > p) throw std::invalid_argument("generic_kernel: need 1 <= d <= p");
    GenericKernelResult res;
    res.heuristic = heuristic;
    if (M.dim() == 0) {
        res.sub = zero_submodule(M);
        res.verified_eip = true;
        res.eip_class = 1;
        return res;
    }
    size_t N = heuristic ? socle(M, d).dim() + d : std::max(d, M.dim());
    std::vector<Mat> sols = hom_from_w(N, d, M);
    Mat gens(F, 0, M.dim());
    for (const auto& sol : sols) gens = gens.rows() ? gens.vstack(sol) : sol;
    res.sub = gens.rows() ? submodule_closure(M, gens) : zero_submodule(M);
    Module K = sub_as_module(M, res.sub);
    EipResult e = is_eip(K, seed);
    res.verified_eip = e.eip && e.cls <= d;
    res.eip_class = e.cls;
    return res;
}

// ---------------------------------------------------------------------------
// sl(2) analytics
// ---------------------------------------------------------------------------

JordanType sl2_jordan_type_at(const Sl2Module& N, const Fq& u0, const Fq& v0) {
    const Gf& F = N.field();
    if (F.is_zero(u0) && F.is_zero(v0)) throw std::invalid_argument("sl2_jordan_type_at: (0,0)");
    Mat theta = sl2_nullcone_element(N, u0, v0);
    return JordanType::from_ranks(F.p(), N.dim(), power_ranks_at(theta, F.p()));
}

namespace {

const char* kNullconeDomain =
    "the full projectivized nullcone of sl(2), via the chart [u:v] -> u^2 e + uv h - v^2 f";

Certificate sl2_power_certificates(const Sl2Module& N, u64 seed, CertKind kind) {
    const Gf& F = N.field();
    u32 p = F.p();
    Certificate cert;
    cert.kind = kind;
    cert.p = p;
    cert.dim = N.dim();
    cert.seed = seed;
    cert.domain = kNullconeDomain;
    FormMatrix theta = sl2_nullcone_operator(N);
    // chart sanity: every power past p-1 vanishes identically
    FormMatrix tpow = theta;
    for (u32 j = 1; j < p; ++j) {
        RankCertificate rc;
        rc.j = j;
        rc.pivot_minor = BinaryForm::one(F);
        FfgeResult fr = ffge_rank(tpow);
        rc.generic_rank = fr.generic_rank;
        rc.pivot_minor = fr.pivot_minor;
        if (rc.generic_rank > 0) {
            rc.factors = factor_form(rc.pivot_minor, seed + j);
            rc.evaluations = evaluate_candidate_roots(tpow, rc.generic_rank, rc.factors);
        }
        rc.constant = true;
        for (const auto& dp : rc.evaluations)
            if (dp.dropped) rc.constant = false;
        cert.ranks.push_back(std::move(rc));
        tpow = tpow * theta;
    }
    if (!tpow.is_zero()) throw std::logic_error("sl2: nullcone operator is not p-nilpotent");
    cert.verdict = cert.cjt();
    return cert;
}

}  // namespace

std::pair<JordanType, Certificate> sl2_generic_jordan_type(const Sl2Module& N, u64 seed) {
    Certificate cert = sl2_power_certificates(N, seed, CertKind::Sl2CJT);
    return {cert.generic_jordan_type(), cert};
}

std::pair<bool, Certificate> sl2_has_equal_images(const Sl2Module& N, u64 seed) {
    const Gf& F = N.field();
    u32 p = F.p();
    Certificate cert = sl2_power_certificates(N, seed, CertKind::Sl2EIP);
    size_t n = N.dim();
    bool ok = true;
    FormMatrix theta = sl2_nullcone_operator(N);
    FormMatrix tpow = theta;
    for (u32 j = 1; j < p; ++j) {
        // span of all coefficient-matrix columns contains every image; a
        // dimension match with the constant rank forces image equality at
        // every nullcone point over every extension
        Mat stacked(F, 0, n);
        for (size_t w = 0; w <= tpow.degree(); ++w) {
            Mat Cw(F, n, n);
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c)
                    F.assign(tpow.at(r, c).coeff_ptr(w), Cw.at(r, c));
            stacked = stacked.rows() ? stacked.vstack(Cw.transpose()) : Cw.transpose();
        }
        Mat V = row_space(stacked);  // column span of all coefficient matrices
        const RankCertificate& rc = cert.ranks[j - 1];
        bool const_j = rc.constant && V.rows() == rc.generic_rank;
        cert.images.push_back(V);
        cert.image_constant.push_back(const_j);
        if (!const_j) ok = false;
        if (j + 1 < p) tpow = tpow * theta;
    }
    cert.verdict = ok;
    return {ok, cert};
}

}  // namespace pnil
