// Randomized invariant batteries: the "properties" suite.
#include <chrono>
#include <random>
#include <sstream>

#include "pnil/homological.hpp"
#include "pnil/suites.hpp"

namespace pnil {
namespace checks {

namespace {

struct Battery {
    SuiteReport& rep;
    void record(const std::string& id, const std::string& claim, const std::string& inputs,
                size_t cases, size_t failures, double secs) {
        CheckRecord c;
        c.id = id;
        c.claim = claim;
        c.inputs = inputs;
        c.expected = "0 failures / " + std::to_string(cases) + " cases";
        c.computed = std::to_string(failures) + " failures / " + std::to_string(cases) + " cases";
        c.verdict = failures == 0 ? Verdict::Pass : Verdict::Fail;
        c.seconds = secs;
        rep.checks.push_back(std::move(c));
    }
    template <class Fn>
    void run(const std::string& id, const std::string& claim, const std::string& inputs, Fn fn) {
        auto t0 = std::chrono::steady_clock::now();
        size_t cases = 0, failures = 0;
        try {
            fn(cases, failures);
        } catch (const std::exception& ex) {
            ++cases;
            ++failures;
            rep.checks.push_back(CheckRecord{id + ".exception", claim, inputs, "(no exception)",
                                             std::string("exception: ") + ex.what(), Verdict::Fail, 0});
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        record(id, claim, inputs, cases, failures, secs);
    }
};

std::vector<Module> small_catalog(const Gf& F) {
    u32 p = F.p();
    std::vector<Module> cat = {trivial_module(F), xy2_module(F), w_module(F, 2, 2),
                               w_module(F, 3, 2), w_module(F, 3, 3),
                               kronecker_preinjective(F, 2), kronecker_preprojective(F, 2),
                               kronecker_regular(F, 2, F.one()), regular_module(F)};
    if (p >= 5) cat.push_back(w_module(F, 4, 4));
    return cat;
}

std::vector<Module> eip_catalog_small(const Gf& F) {
    u32 p = F.p();
    std::vector<Module> cat = {trivial_module(F), w_module(F, 2, 2), w_module(F, 3, 2),
                               w_module(F, 4, 2), w_module(F, 3, 3), w_module(F, 4, 3),
                               kronecker_preinjective(F, 3)};
    if (p >= 5) cat.push_back(w_module(F, 5, 4));
    return cat;
}

Mat random_matrix(const Gf& F, size_t rows, size_t cols, std::mt19937_64& rng) {
    Mat A(F, rows, cols);
    u64 q = F.order();
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) A.set(i, j, F.from_index(rng() % q));
    return A;
}

FormMatrix random_form_matrix(const Gf& F, size_t n, size_t deg, std::mt19937_64& rng) {
    FormMatrix m(F, n, n, deg);
    u64 q = F.order();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            BinaryForm f(F, deg);
            for (size_t k = 0; k <= deg; ++k) f.set_coeff(k, F.from_index(rng() % q));
            m.at(i, j) = f;
        }
    return m;
}

}  // namespace

void property_batteries(SuiteReport& rep, const SuiteParams& pr) {
    Battery bat{rep};
    const Gf& F = Gf::get(pr.p);
    u32 p = pr.p;
    std::mt19937_64 rng(pr.seed ^ 0xabcdef987654ull);
    const Gf& L = Gf::get(p, std::max(1u, pr.ext_degree));
    std::vector<Module> catalog = small_catalog(F);
    std::vector<Module> eip_cat = eip_catalog_small(F);

    // ---- field-core -------------------------------------------------------
    bat.run("prop.field.semicontinuity",
            "rank of a specialization never exceeds the generic rank", "random form matrices",
            [&](size_t& cases, size_t& fails) {
                for (size_t iter = 0; iter < 10; ++iter) {
                    FormMatrix m = random_form_matrix(F, 2 + rng() % 3, 1 + rng() % 2, rng);
                    FfgeResult r = ffge_rank(m);
                    for (size_t k = 0; k < pr.cases / 5; ++k) {
                        Fq a0 = L.from_index(rng() % L.order()), b0 = L.from_index(rng() % L.order());
                        if (L.is_zero(a0) && L.is_zero(b0)) continue;
                        // embed and evaluate over L
                        Mat spec(L, m.rows(), m.cols());
                        for (size_t i = 0; i < m.rows(); ++i)
                            for (size_t j = 0; j < m.cols(); ++j) {
                                const BinaryForm& f = m.at(i, j);
                                Fq acc = L.zero(), apow = L.one(), bpow = L.one();
                                std::vector<Fq> apows(f.degree() + 1);
                                for (size_t t = 0; t <= f.degree(); ++t) { apows[t] = apow; apow = L.mul(apow, a0); }
                                for (size_t t = 0; t <= f.degree(); ++t) {
                                    Fq c = L.zero();
                                    c[0] = f.coeff_ptr(t)[0];
                                    acc = L.add(acc, L.mul(L.mul(c, bpow), apows[f.degree() - t]));
                                    bpow = L.mul(bpow, b0);
                                }
                                spec.set(i, j, acc);
                            }
                        ++cases;
                        if (rank(spec) > r.generic_rank) ++fails;
                    }
                }
            });

    bat.run("prop.field.drop-locus",
            "drop points evaluate below the generic rank; points off the minor have full rank",
            "random form matrices over the scan field",
            [&](size_t& cases, size_t& fails) {
                for (size_t iter = 0; iter < 8; ++iter) {
                    FormMatrix m = random_form_matrix(F, 2 + rng() % 3, 1, rng);
                    FfgeResult r = ffge_rank(m);
                    if (r.generic_rank == 0) continue;
                    auto evals = drop_locus_full(m, r.generic_rank, r.pivot_minor, pr.seed);
                    for (const auto& dp : evals) {
                        ++cases;
                        if (dp.dropped && dp.rank_at >= r.generic_rank) ++fails;
                        if (dp.rational && rank(m.specialize(dp.a0, dp.b0)) != dp.rank_at) ++fails;
                    }
                    for (size_t k = 0; k < pr.cases / 4; ++k) {
                        Fq a0 = F.from_index(rng() % F.order()), b0 = F.one();
                        Fq minor_val = r.pivot_minor.eval(a0, b0);
                        if (F.is_zero(minor_val)) continue;
                        ++cases;
                        if (rank(m.specialize(a0, b0)) != r.generic_rank) ++fails;
                    }
                }
            });

    bat.run("prop.field.gcd-factor", "the factorization multiplies back to the gcd; factors are irreducible",
            "random form sets", [&](size_t& cases, size_t& fails) {
                for (size_t iter = 0; iter < pr.cases / 2; ++iter) {
                    size_t deg = 1 + rng() % 5;
                    std::vector<BinaryForm> forms;
                    BinaryForm common(F, 1);
                    common.set_coeff(0, F.from_int(1 + rng() % (p - 1)));
                    common.set_coeff(1, F.from_int(rng() % p));
                    for (size_t t = 0; t < 2; ++t) {
                        BinaryForm f(F, deg);
                        for (size_t k = 0; k <= deg; ++k) f.set_coeff(k, F.from_int(rng() % p));
                        if (f.is_zero()) f.set_coeff(0, F.one());
                        forms.push_back(f * common);
                    }
                    auto [g, factors] = form_gcd_factor(forms, pr.seed + iter);
                    ++cases;
                    BinaryForm prod = BinaryForm::one(F);
                    for (auto& [fac, mult] : factors)
                        for (size_t k = 0; k < mult; ++k) prod = prod * fac;
                    bool ok = (prod == g.monic());
                    for (auto& [fac, mult] : factors) {
                        detail::UPoly u = fac.dehomogenize();
                        if (u.ncoeff(F) > 1 && !detail::upoly_is_irreducible(F, u)) ok = false;
                        for (const auto& f : forms)
                            if (!f.divexact(fac).has_value()) ok = false;
                    }
                    if (!ok) ++fails;
                }
            });

    bat.run("prop.field.determinism", "identical inputs and seeds give identical certificates",
            "repeated runs", [&](size_t& cases, size_t& fails) {
                for (size_t iter = 0; iter < 10; ++iter) {
                    FormMatrix m = random_form_matrix(F, 3, 1, rng);
                    FfgeResult r1 = ffge_rank(m), r2 = ffge_rank(m);
                    ++cases;
                    bool same = r1.generic_rank == r2.generic_rank && r1.pivot_minor == r2.pivot_minor &&
                                r1.pivot_rows == r2.pivot_rows && r1.pivot_cols == r2.pivot_cols;
                    if (r1.generic_rank > 0) {
                        auto f1 = factor_form(r1.pivot_minor, 42), f2 = factor_form(r1.pivot_minor, 42);
                        same = same && f1.size() == f2.size();
                        for (size_t i = 0; same && i < f1.size(); ++i)
                            same = f1[i].factor == f2[i].factor && f1[i].multiplicity == f2[i].multiplicity;
                    }
                    if (!same) ++fails;
                }
            });

    // ---- module-core ------------------------------------------------------
    bat.run("prop.module.canonical-bases", "equal submodules have bit-identical echelon bases",
            "random generating sets", [&](size_t& cases, size_t& fails) {
                for (size_t iter = 0; iter < pr.cases / 2; ++iter) {
                    const Module& M = catalog[rng() % catalog.size()];
                    if (M.dim() == 0) continue;
                    Mat gens = random_matrix(F, 1 + rng() % 3, M.dim(), rng);
                    Submodule S1 = submodule_closure(M, gens);
                    // a different generating set of the same subspace: row mix
                    Mat mixed = row_space(gens).vstack(gens);
                    Submodule S2 = submodule_closure(M, mixed);
                    ++cases;
                    if (!(S1 == S2)) ++fails;
                }
            });

    bat.run("prop.module.hom-duality", "dim Hom(M, N) = dim Hom(N*, M*)", "50 random catalog pairs",
            [&](size_t& cases, size_t& fails) {
                for (size_t iter = 0; iter < 50; ++iter) {
                    const Module& A = catalog[rng() % catalog.size()];
                    const Module& B = catalog[rng() % catalog.size()];
                    ++cases;
                    if (hom_space(A, B).size() != hom_space(dual(B), dual(A)).size()) ++fails;
                }
            });

    bat.run("prop.module.fitting", "summands rebuild the module; small endomorphism rings are local",
            "random direct sums", [&](size_t& cases, size_t& fails) {
                for (size_t iter = 0; iter < 12; ++iter) {
                    const Module& A = catalog[rng() % catalog.size()];
                    const Module& B = catalog[rng() % catalog.size()];
                    if (A.dim() + B.dim() > 20) continue;
                    Module M = direct_sum(A, B);
                    auto dec = fitting_decompose(M, pr.seed + iter);
                    bool first = true;
                    Module acc;
                    for (const auto& s : dec)
                        for (size_t k = 0; k < s.multiplicity; ++k) {
                            acc = first ? s.summand : direct_sum(acc, s.summand);
                            first = false;
                        }
                    ++cases;
                    if (first || !is_isomorphic(acc, M, pr.seed).isomorphic) ++fails;
                    // exhaustive idempotent check on small summands
                    for (const auto& s : dec) {
                        if (s.summand.dim() > 12) continue;
                        auto E = hom_space(s.summand, s.summand);
                        if (E.size() > 7) continue;
                        u64 total = 1;
                        for (size_t i = 0; i < E.size(); ++i) total *= F.order();
                        size_t idem = 0;
                        for (u64 idx = 0; idx < total; ++idx) {
                            Mat X(F, s.summand.dim(), s.summand.dim());
                            u64 v = idx;
                            for (const auto& bmat : E) {
                                Fq c = F.from_index(v % F.order());
                                v /= F.order();
                                if (!F.is_zero(c)) X = X + bmat.scaled(c);
                            }
                            if (X * X == X) ++idem;
                        }
                        ++cases;
                        if (idem != 2) ++fails;  // exactly 0 and 1
                    }
                }
            });

    bat.run("prop.module.twist", "twists compose as a left action and preserve constancy",
            "random GL2 pairs on catalog modules", [&](size_t& cases, size_t& fails) {
                for (size_t iter = 0; iter < 20; ++iter) {
                    const Module& M = catalog[rng() % catalog.size()];
                    if (M.dim() > 12) continue;
                    Mat g(F, 2, 2), h(F, 2, 2);
                    do {
                        g = random_matrix(F, 2, 2, rng);
                        h = random_matrix(F, 2, 2, rng);
                    } while (!inverse(g) || !inverse(h));
                    Module tg = twist(twist(M, g), h);
                    Module th = twist(M, h * g);
                    ++cases;
                    if (tg.x() != th.x() || tg.y() != th.y()) ++fails;
                    ++cases;
                    bool c1 = constancy_certificates(M, pr.seed).cjt();
                    bool c2 = constancy_certificates(twist(M, g), pr.seed).cjt();
                    if (c1 != c2) ++fails;
                }
            });

    bat.run("prop.module.graded-radicals", "radical submodules of graded modules have homogeneous bases",
            "graded catalog", [&](size_t& cases, size_t& fails) {
                for (const auto& M : catalog) {
                    if (!M.graded()) continue;
                    RadicalSocleSeries s = radical_socle_series(M);
                    for (const auto& sub : s.rad) {
                        ++cases;
                        for (size_t r = 0; r < sub.basis.rows(); ++r) {
                            int deg = -100000;
                            for (size_t c = 0; c < sub.basis.cols(); ++c)
                                if (!F.is_zero(sub.basis.at(r, c))) {
                                    if (deg == -100000) deg = M.grading()[c];
                                    else if (deg != M.grading()[c]) ++fails;
                                }
                        }
                    }
                }
            });

    // ---- jordan analytics -------------------------------------------------
    bat.run("prop.jordan.points", "Jordan types at random closed points partition the dimension",
            std::to_string(pr.cases) + " random points per module", [&](size_t& cases, size_t& fails) {
                for (const auto& M : catalog) {
                    if (M.dim() == 0) continue;
                    Certificate cert = constancy_certificates(M, pr.seed);
                    for (size_t k = 0; k < pr.cases / 4; ++k) {
                        Fq a0 = L.from_index(rng() % L.order()), b0 = L.from_index(rng() % L.order());
                        if (L.is_zero(a0) && L.is_zero(b0)) continue;
                        ++cases;
                        try {
                            JordanType t = jordan_type_closed(M, L, a0, b0);
                            if (t.dim() != M.dim()) ++fails;
                            // dominated by the generic ranks
                            Mat XL(L, M.dim(), M.dim()), YL(L, M.dim(), M.dim());
                            for (size_t i = 0; i < M.dim(); ++i)
                                for (size_t j = 0; j < M.dim(); ++j) {
                                    XL.at(i, j)[0] = M.x().at(i, j)[0];
                                    YL.at(i, j)[0] = M.y().at(i, j)[0];
                                }
                            Mat theta = XL.scaled(a0) + YL.scaled(b0);
                            Mat pw = theta;
                            for (u32 j = 1; j < p; ++j) {
                                if (rank(pw) > cert.ranks[j - 1].generic_rank) ++fails;
                                pw = pw * theta;
                            }
                        } catch (const std::exception&) {
                            ++fails;
                        }
                    }
                }
            });

    bat.run("prop.jordan.eip-implies-cjt", "equal images implies constant Jordan type; EIP+EKP forces [1]^dim",
            "catalog", [&](size_t& cases, size_t& fails) {
                for (const auto& M : catalog) {
                    EipResult e = is_eip(M, pr.seed);
                    EkpResult k = is_ekp(M, pr.seed);
                    ++cases;
                    if (e.eip && !e.cert.cjt()) ++fails;
                    if (e.eip && k.ekp) {
                        JordanType t = e.cert.generic_jordan_type();
                        if (t != JordanType::single(p, 1, M.dim())) ++fails;
                    }
                }
            });

    bat.run("prop.jordan.closure", "quotients and summands of equal images modules are equal images",
            "random quotients of the EIP catalog", [&](size_t& cases, size_t& fails) {
                for (const auto& M : eip_cat) {
                    EipResult e0 = is_eip(M, pr.seed);
                    if (!e0.eip) { ++cases; ++fails; continue; }
                    for (size_t iter = 0; iter < 4; ++iter) {
                        Mat gens = random_matrix(F, 1, M.dim(), rng);
                        Submodule U = submodule_closure(M, gens);
                        if (U.dim() == M.dim()) continue;
                        Module Q = quotient(M, U);
                        EipResult e = is_eip(Q, pr.seed);
                        ++cases;
                        if (!e.eip || e.cls > e0.cls) ++fails;
                    }
                    for (const auto& s : fitting_decompose(M, pr.seed)) {
                        EipResult e = is_eip(s.summand, pr.seed);
                        ++cases;
                        if (!e.eip || e.cls > e0.cls) ++fails;
                    }
                }
            });

    bat.run("prop.jordan.kernel-functorial", "intertwiners map generic kernels into generic kernels",
            "random hom images", [&](size_t& cases, size_t& fails) {
                std::vector<Module> pool = {w_module(F, 3, 2), w_module(F, 3, 3), xy2_module(F),
                                            regular_module(F)};
                for (size_t iter = 0; iter < 12; ++iter) {
                    const Module& M = pool[rng() % pool.size()];
                    const Module& N = pool[rng() % pool.size()];
                    size_t d = 1 + rng() % p;
                    Submodule km = generic_kernel(M, d, false, pr.seed).sub;
                    Submodule kn = generic_kernel(N, d, false, pr.seed).sub;
                    auto homs = hom_space(M, N);
                    if (homs.empty()) continue;
                    const Mat& phi = homs[rng() % homs.size()];
                    ++cases;
                    Mat img = km.basis * phi.transpose();
                    if (!rows_contained(kn.basis, img)) ++fails;
                }
            });

    bat.run("prop.jordan.kernel-maximal", "images of maps from W(n,d) land inside the generic kernel",
            "50 random equal-images submodules", [&](size_t& cases, size_t& fails) {
                Module kG = regular_module(F);
                for (size_t d = 2; d <= std::min<size_t>(p, 3); ++d) {
                    Submodule kk = generic_kernel(kG, d, false, pr.seed).sub;
                    auto homs = hom_from_w(2 * d, d, kG);
                    for (size_t iter = 0; iter < 25; ++iter) {
                        if (homs.empty()) break;
                        Mat gens(F, 0, kG.dim());
                        for (const auto& sol : homs) {
                            Fq c = F.from_index(rng() % F.order());
                            if (F.is_zero(c)) continue;
                            Mat scaled = sol.scaled(c);
                            gens = gens.rows() ? gens.vstack(scaled) : scaled;
                        }
                        if (!gens.rows()) continue;
                        Submodule img = submodule_closure(kG, gens);
                        ++cases;
                        if (!submodule_contains(kk, img)) ++fails;
                    }
                }
            });

    bat.run("prop.jordan.projective-free", "equal images modules are projective-free",
            "EIP catalog", [&](size_t& cases, size_t& fails) {
                for (const auto& M : eip_cat) {
                    ++cases;
                    if (projective_free_part(M).dim() != M.dim()) ++fails;
                }
            });

    bat.run("prop.jordan.shape", "a nonzero equal images module has blocks of every size up to its class",
            "EIP catalog", [&](size_t& cases, size_t& fails) {
                for (const auto& M : eip_cat) {
                    EipResult e = is_eip(M, pr.seed);
                    if (!e.eip || M.dim() == 0) continue;
                    JordanType t = e.cert.generic_jordan_type();
                    ++cases;
                    for (size_t i = 1; i <= e.cls; ++i)
                        if (t.mult[i - 1] == 0) ++fails;
                }
            });

    // ---- constructions ----------------------------------------------------
    bat.run("prop.constructions.kronecker-dims", "F(preinjective n) has dim 2n+1, top n+1, Jt [1]+n[2]",
            "n = 1..4", [&](size_t& cases, size_t& fails) {
                for (size_t n = 1; n <= 4; ++n) {
                    Module M = kronecker_preinjective(F, n);
                    ++cases;
                    bool ok = M.dim() == 2 * n + 1;
                    ok = ok && (M.dim() - radical(M, 1).dim() == n + 1);
                    JordanType t = constancy_certificates(M, pr.seed).generic_jordan_type();
                    JordanType expect;
                    expect.p = p;
                    expect.mult.assign(p, 0);
                    expect.mult[0] = 1;
                    expect.mult[1] = n;
                    ok = ok && t == expect;
                    if (!ok) ++fails;
                }
            });

    bat.run("prop.constructions.family-constancy",
            "family members share dimension and Jordan type and are indecomposable",
            "W(5,3) family, sampled f", [&](size_t& cases, size_t& fails) {
                Module M = w_module(F, 5, 3);
                Submodule soc = socle(M, 1);
                Submodule gamma{M.dim(), row_space(soc.basis.rows_slice(0, soc.dim() - 1))};
                size_t cdim = soc.dim() - gamma.dim();
                JordanType ref;
                bool have_ref = false;
                for (size_t iter = 0; iter < 9; ++iter) {
                    Mat f = random_matrix(F, gamma.dim(), cdim, rng);
                    Module Q = quotient_family(M, gamma, f);
                    JordanType t = constancy_certificates(Q, pr.seed).generic_jordan_type();
                    ++cases;
                    bool ok = Q.dim() == M.dim() - cdim && end_is_local(Q).local;
                    if (!have_ref) { ref = t; have_ref = true; }
                    ok = ok && t == ref;
                    if (!ok) ++fails;
                }
            });

    bat.run("prop.constructions.sl2-chart", "the nullcone chart squares to zero and is p-nilpotent pointwise",
            "50 random (u,v)", [&](size_t& cases, size_t& fails) {
                Sl2Module nat = sl2_simple(F, 1);
                FormMatrix x = sl2_nullcone_operator(nat);
                ++cases;
                if (!(x * x).is_zero()) ++fails;
                Sl2Module Z = sl2_baby_verma(F, p - 1);
                for (size_t k = 0; k < 50; ++k) {
                    Fq u0 = F.from_int(rng() % p), v0 = F.from_int(rng() % p);
                    if (F.is_zero(u0) && F.is_zero(v0)) continue;
                    ++cases;
                    if (!sl2_nullcone_element(Z, u0, v0).pow(p).is_zero()) ++fails;
                }
            });

    // ---- homological ------------------------------------------------------
    bat.run("prop.homological.minimality", "covers have rank dim Top and land inside the radical",
            "catalog", [&](size_t& cases, size_t& fails) {
                size_t Lm = size_t(p) * p;
                for (const auto& M : catalog) {
                    if (M.dim() == 0) continue;
                    SyzygyStep s = cover_and_kernel(M);
                    ++cases;
                    bool ok = s.cover.rank == M.dim() - radical(M, 1).dim();
                    ok = ok && rank(s.cover.map) == M.dim();
                    for (size_t c = 0; c < s.inclusion.cols() && ok; ++c)
                        for (size_t i = 0; i < s.cover.rank; ++i)
                            if (!F.is_zero(s.inclusion.at(i * Lm, c))) ok = false;
                    if (!ok) ++fails;
                }
            });

    bat.run("prop.homological.stable-jt", "Omega^2 preserves and Omega reflects stable Jordan types",
            "catalog", [&](size_t& cases, size_t& fails) {
                for (const auto& M : catalog) {
                    if (M.dim() == 0 || M.dim() > 15) continue;
                    JordanType t0 = constancy_certificates(M, pr.seed).generic_jordan_type();
                    JordanType t2 = constancy_certificates(syzygy(M, 2), pr.seed).generic_jordan_type();
                    JordanType t1 = constancy_certificates(syzygy(M, 1), pr.seed).generic_jordan_type();
                    ++cases;
                    bool ok = t0.stable() == t2.stable();
                    for (size_t i = 1; i < p; ++i)
                        if (t1.mult[i - 1] != t0.mult[p - i - 1]) ok = false;
                    if (!ok) ++fails;
                }
            });

    bat.run("prop.homological.ar-validity", "almost split sequences are exact with non-split ends",
            "indecomposable non-projective catalog", [&](size_t& cases, size_t& fails) {
                for (const auto& M : eip_cat) {
                    if (M.dim() == 0 || M.dim() > 12) continue;
                    if (projective_free_part(M).dim() == 0) continue;
                    if (!end_is_local(M).local) continue;
                    ++cases;
                    ARSequence seq = ar_sequence(M, pr.seed);
                    if (!validate_ar_sequence(seq).ok()) ++fails;
                }
            });

    // ---- report reproducibility ------------------------------------------
    bat.run("prop.cli.reproducible", "equal seeds give equal reports up to timing",
            "kronecker suite twice", [&](size_t& cases, size_t& fails) {
                SuiteParams q = pr;
                SuiteReport r1 = run_suite("kronecker", q);
                SuiteReport r2 = run_suite("kronecker", q);
                json j1 = r1.to_json(), j2 = r2.to_json();
                for (auto* j : {&j1, &j2})
                    for (auto& c : (*j)["checks"]) c.erase("seconds");
                ++cases;
                if (j1 != j2) ++fails;
                // claim ids unique
                ++cases;
                std::vector<std::string> ids;
                for (const auto& c : r1.checks) ids.push_back(c.id);
                std::sort(ids.begin(), ids.end());
                if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) ++fails;
            });
}

}  // namespace checks
}  // namespace pnil
