// Acceptance harness: one pass/fail line per criterion.
#include <cstdio>
#include <string>
#include <vector>

#include "pnil/suites.hpp"

using namespace pnil;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::pair<std::string, SuiteReport>> parts;
    bool pass = true;
    size_t checks = 0, failed = 0;

    void add(const std::string& label, SuiteReport rep) {
        checks += rep.checks.size();
        for (const auto& c : rep.checks)
            if (c.verdict == Verdict::Fail) ++failed;
        pass = pass && !rep.any_fail();
        parts.emplace_back(label, std::move(rep));
    }
};

SuiteReport fresh(const char* tag, u32 p, u64 seed) {
    SuiteReport rep;
    rep.suite = tag;
    rep.p = p;
    rep.seed = seed;
    return rep;
}

}  // namespace

int main() {
    const u64 seed = 1;
    std::vector<Criterion> rows;

    auto run_part = [&](Criterion& cr, const char* tag, u32 p, void (*fn)(SuiteReport&, const SuiteParams&),
                        size_t cases = 100) {
        SuiteParams params;
        params.p = p;
        params.seed = seed;
        params.cases = cases;
        SuiteReport rep = fresh(tag, p, seed);
        fn(rep, params);
        cr.add(std::string(tag) + "@p" + std::to_string(p), std::move(rep));
    };

    {
        Criterion c{1, "W Jordan types and equal images classes (p = 3, 5)"};
        run_part(c, "w-jordan", 3, checks::w_jordan);
        run_part(c, "w-jordan", 5, checks::w_jordan);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{2, "W(d,d) identified with radical layers of kG (p = 3, 5)"};
        run_part(c, "radical-id", 3, checks::radical_identification);
        run_part(c, "radical-id", 5, checks::radical_identification);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{3, "generic kernels of kG and k[x,y]/(x,y^2) (p = 3, 5)"};
        run_part(c, "generic-kernel", 3, checks::generic_kernels);
        run_part(c, "generic-kernel", 5, checks::generic_kernels);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{4, "Heller squares of W modules (p = 3, 5)"};
        run_part(c, "heller", 3, checks::heller_core);
        run_part(c, "heller", 5, checks::heller_core);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{5, "socle-quotient family: indecomposable, constant type, pairwise distinct (p = 3)"};
        run_part(c, "families", 3, checks::families);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{6, "Kronecker trichotomy (p = 3)"};
        run_part(c, "kronecker", 3, checks::kronecker_trichotomy);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{7, "even Heller shifts leave the equal images category (p = 3, 5)"};
        run_part(c, "omega-exclusion", 3, checks::omega_exclusion);
        run_part(c, "omega-exclusion", 5, checks::omega_exclusion);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{8, "Ext^{2n}(M,M) growth (p = 3)"};
        run_part(c, "ext-growth", 3, checks::ext_growth);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{9, "AR component windows (p = 3)"};
        run_part(c, "ar-components", 3, checks::ar_components);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{10, "sl(2) laboratory over the nullcone (p = 3, 5)"};
        run_part(c, "sl2", 3, checks::sl2_lab);
        run_part(c, "sl2", 5, checks::sl2_lab);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{11, "GL2 stability of W modules (p = 3)"};
        run_part(c, "gl2", 3, checks::gl2_stability);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{12, "graded resolutions have the alternating generation degrees (p = 3)"};
        run_part(c, "koszul", 3, checks::koszul_degrees);
        rows.push_back(std::move(c));
    }
    {
        Criterion c{13, "randomized invariant batteries (p = 3, 5)"};
        run_part(c, "properties", 3, checks::property_batteries, 100);
        run_part(c, "properties", 5, checks::property_batteries, 60);
        rows.push_back(std::move(c));
    }

    bool all = true;
    for (const auto& c : rows) {
        std::printf("criterion %2d: %s  [%zu checks%s]  %s\n", c.number,
                    c.pass ? "PASS" : "FAIL", c.checks,
                    c.failed ? (", " + std::to_string(c.failed) + " failed").c_str() : "",
                    c.title.c_str());
        if (!c.pass) {
            all = false;
            for (const auto& [label, rep] : c.parts)
                for (const auto& ck : rep.checks)
                    if (ck.verdict == Verdict::Fail)
                        std::printf("    FAIL %s (%s): expected %s, computed %s\n", ck.id.c_str(),
                                    label.c_str(), ck.expected.c_str(), ck.computed.c_str());
        }
    }
    std::printf("%s\n", all ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT");
    return all ? 0 : 1;
}
