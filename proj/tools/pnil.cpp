// pnil: exact laboratory for commuting p-nilpotent operator pairs.
#include <iostream>

#include "CLI11.hpp"
#include "pnil/io.hpp"
#include "pnil/suites.hpp"

using namespace pnil;

namespace {

int emit_module(const Module& M, const std::string& out) {
    json j = module_to_json(M);
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_file(out, j.dump(2) + "\n");
    return 0;
}

void print_summary(const Module& M, u64 seed) {
    std::cout << "name:        " << (M.name().empty() ? "(unnamed)" : M.name()) << "\n";
    std::cout << "p:           " << M.p() << (M.field().e() > 1 ? " (ext degree " + std::to_string(M.field().e()) + ")" : "")
              << "\n";
    std::cout << "dim:         " << M.dim() << "\n";
    std::cout << "graded:      " << (M.graded() ? "yes" : "no") << "\n";
    Certificate c = constancy_certificates(M, seed);
    std::cout << "generic Jt:  " << c.generic_jordan_type().to_string() << "\n";
    std::cout << "constant Jt: " << (c.cjt() ? "yes" : "no") << "\n";
    EipResult e = is_eip(M, seed);
    std::cout << "equal images: " << (e.eip ? "yes (class " + std::to_string(e.cls) + ")" : "no") << "\n";
    std::cout << "equal kernels: " << (is_ekp(M, seed).ekp ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pnil: exact modules over k[x,y]/(x^p,y^p) and restricted sl(2)"};
    app.require_subcommand(1);

    // ---- make -------------------------------------------------------------
    auto* make = app.add_subcommand("make", "construct a module and emit its JSON");
    make->require_subcommand(1);
    u32 p = 3, ext = 1;
    std::string out;

    auto* mw = make->add_subcommand("w", "equal images module W(n,d)");
    size_t wn = 3, wd = 2;
    mw->add_option("--p", p, "characteristic")->capture_default_str();
    mw->add_option("--ext", ext, "coefficient field extension degree")->capture_default_str();
    mw->add_option("--n", wn, "generator count")->required();
    mw->add_option("--d", wd, "Loewy length / class")->required();
    mw->add_option("--out", out, "output path (stdout when omitted)");

    auto* mk = make->add_subcommand("kronecker", "image of a Kronecker-quiver representation");
    std::string family = "preinjective";
    size_t kn = 2;
    long long klambda = 0;
    mk->add_option("--p", p, "characteristic")->capture_default_str();
    mk->add_option("--ext", ext, "coefficient field extension degree")->capture_default_str();
    mk->add_option("--family", family, "preinjective|preprojective|regular")->capture_default_str();
    mk->add_option("--n", kn, "size parameter")->required();
    mk->add_option("--lambda", klambda, "eigenvalue for the regular family")->capture_default_str();
    mk->add_option("--out", out, "output path");

    auto* ms = make->add_subcommand("sl2", "restricted sl(2) laboratory module");
    std::string kind = "simple";
    u32 slambda = 0;
    ms->add_option("--p", p, "characteristic")->capture_default_str();
    ms->add_option("--kind", kind, "simple|verma")->capture_default_str();
    ms->add_option("--lambda", slambda, "highest weight")->capture_default_str();
    ms->add_option("--out", out, "output path");

    // ---- show -------------------------------------------------------------
    auto* show = app.add_subcommand("show", "validate a module file and print invariants");
    std::string in_path;
    u64 seed = 0;
    show->add_option("--in", in_path, "module JSON path")->required();
    show->add_option("--seed", seed, "run seed")->capture_default_str();

    // ---- slice ------------------------------------------------------------
    auto* slice_cmd = app.add_subcommand("slice", "window of the AR component around a module");
    long sw = 1;
    size_t sh = 2;
    std::string sformat = "dot";
    slice_cmd->add_option("--in", in_path, "module JSON path")->required();
    slice_cmd->add_option("--width", sw, "tau radius")->capture_default_str();
    slice_cmd->add_option("--height", sh, "quasi-length bound")->capture_default_str();
    slice_cmd->add_option("--format", sformat, "dot|json")->capture_default_str();
    slice_cmd->add_option("--seed", seed, "run seed")->capture_default_str();
    slice_cmd->add_option("--out", out, "output path");

    // ---- run --------------------------------------------------------------
    auto* run = app.add_subcommand("run", "run a verification suite");
    std::string suite;
    SuiteParams params;
    std::string rformat = "table";
    bool strict = false;
    run->add_option("suite", suite, "one of: w-jordan generic-kernel heller families kronecker sl2 ar-components properties")
        ->required();
    run->add_option("--p", params.p, "characteristic")->capture_default_str();
    run->add_option("--seed", params.seed, "run seed")->capture_default_str();
    run->add_option("--ext-degree", params.ext_degree, "max extension degree for closed-point scans")
        ->capture_default_str();
    run->add_option("--cases", params.cases, "randomized cases per property")->capture_default_str();
    run->add_option("--out", out, "write the JSON report here");
    run->add_option("--format", rformat, "json|table")->capture_default_str();
    run->add_flag("--strict", strict, "exit 3 when inconclusive-window verdicts are present");

    CLI11_PARSE(app, argc, argv);

    try {
        if (make->parsed()) {
            const Gf& F = Gf::get(p, ext);
            if (mw->parsed()) return emit_module(w_module(F, wn, wd), out);
            if (mk->parsed()) {
                Module M = family == "preinjective"   ? kronecker_preinjective(F, kn)
                           : family == "preprojective" ? kronecker_preprojective(F, kn)
                           : family == "regular"
                               ? kronecker_regular(F, kn, F.from_int(u64(((klambda % p) + p) % p)))
                               : throw std::invalid_argument("unknown family: " + family);
                return emit_module(M, out);
            }
            if (ms->parsed()) {
                Sl2Module N = kind == "simple"  ? sl2_simple(Gf::get(p), slambda)
                              : kind == "verma" ? sl2_baby_verma(Gf::get(p), slambda)
                                                : throw std::invalid_argument("unknown kind: " + kind);
                json j = sl2_to_json(N);
                if (out.empty())
                    std::cout << j.dump(2) << "\n";
                else
                    write_file(out, j.dump(2) + "\n");
                return 0;
            }
        }
        if (show->parsed()) {
            Module M = module_from_json(json::parse(read_file(in_path)));
            print_summary(M, seed);
            return 0;
        }
        if (slice_cmd->parsed()) {
            Module M = module_from_json(json::parse(read_file(in_path)));
            ComponentSlice s = component_slice(M, sw, sh, seed);
            std::string payload = sformat == "dot" ? slice_to_dot(s) : slice_to_json(s).dump(2) + "\n";
            if (out.empty())
                std::cout << payload;
            else
                write_file(out, payload);
            return 0;
        }
        if (run->parsed()) {
            SuiteReport rep = run_suite(suite, params);
            if (rformat == "json")
                std::cout << rep.to_json().dump(2) << "\n";
            else
                std::cout << rep.to_table();
            if (!out.empty()) write_file(out, rep.to_json().dump(2) + "\n");
            return rep.exit_code(strict);
        }
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
