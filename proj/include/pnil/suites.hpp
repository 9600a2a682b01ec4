#ifndef PNIL_SUITES_HPP
#define PNIL_SUITES_HPP

#include <string>
#include <vector>

#include "pnil/io.hpp"

namespace pnil {

enum class Verdict { Pass, Fail, InconclusiveWindow };

struct CheckRecord {
    std::string id;        // stable sort key
    std::string claim;     // the mathematical statement being checked
    std::string inputs;
    std::string expected;
    std::string computed;
    Verdict verdict = Verdict::Fail;
    double seconds = 0;
};

struct SuiteParams {
    u32 p = 3;
    u64 seed = 0;
    u32 ext_degree = 3;  // largest extension degree for closed-point scans
    size_t cases = 100;  // randomized instances per property battery
};

struct SuiteReport {
    std::string suite;
    u32 p = 3;
    u64 seed = 0;
    u32 ext_degree = 3;
    std::string toolchain;
    std::vector<CheckRecord> checks;  // sorted by id

    bool all_pass() const;
    bool any_fail() const;
    bool any_inconclusive() const;
    json to_json() const;
    std::string to_table() const;
    /// 0 pass, 1 fail, 3 inconclusive-window present (with strict)
    int exit_code(bool strict) const;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

/// Individual criterion runners (shared between suites and the acceptance
/// harness); each appends its records to the report.
namespace checks {
void w_jordan(SuiteReport& rep, const SuiteParams& pr);           // W Jordan types + EIP classes
void radical_identification(SuiteReport& rep, const SuiteParams& pr);  // W_{d,d} vs Rad^{2p-d-1}(kG)
void generic_kernels(SuiteReport& rep, const SuiteParams& pr);
void heller_core(SuiteReport& rep, const SuiteParams& pr);        // Omega^2 identifications
void omega_exclusion(SuiteReport& rep, const SuiteParams& pr);    // Omega^{2n} not EIP
void ext_growth(SuiteReport& rep, const SuiteParams& pr);
void koszul_degrees(SuiteReport& rep, const SuiteParams& pr);
void families(SuiteReport& rep, const SuiteParams& pr);
void kronecker_trichotomy(SuiteReport& rep, const SuiteParams& pr);
void sl2_lab(SuiteReport& rep, const SuiteParams& pr);
void ar_components(SuiteReport& rep, const SuiteParams& pr);
void gl2_stability(SuiteReport& rep, const SuiteParams& pr);
void property_batteries(SuiteReport& rep, const SuiteParams& pr);
}  // namespace checks

}  // namespace pnil

#endif
