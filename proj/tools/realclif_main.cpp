#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "realclif/extension.hpp"
#include "realclif/suites.hpp"
#include "realclif/textio.hpp"
#include "realclif/thom.hpp"

namespace {

using namespace realclif;

struct GlobalOptions {
    bool json = false;
    std::string dump_file;
    int cap = 12;
    int jobs = 1;
    std::uint64_t seed = 0;
};

int emit_reports(const GlobalOptions& g, const std::vector<Report>& reports,
                 double elapsed_seconds) {
    std::string json = render_json(reports, g.seed);
    if (!g.dump_file.empty()) {
        std::ofstream out(g.dump_file);
        if (!out) {
            std::cerr << "cannot write " << g.dump_file << "\n";
            return 2;
        }
        out << json;
    }
    bool pass = true;
    for (const Report& r : reports) pass = pass && r.all_pass();
    if (g.json) {
        std::cout << json;
    } else {
        std::cout << "realclif verification, seed=" << g.seed << "\n";
        for (const Report& r : reports) print_text(std::cout, r, false);
        std::cout << (pass ? "all suites passed" : "FAILURES present") << " ("
                  << elapsed_seconds << "s)\n";
    }
    return pass ? 0 : 1;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Real Clifford algebra identities"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_flag("--json", g.json, "emit the JSON report on stdout");
    app.add_option("--dump", g.dump_file, "also write the JSON report to a file");
    app.add_option("--cap", g.cap, "generator count cap (basis size 2^cap)")
        ->envname("REALCLIF_CAP");
    app.add_option("--jobs", g.jobs, "suite-level parallelism; output is unaffected");

    // verify -----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->require_subcommand(1);

    int p = 1, q = 0, k = 2, j = 1, samples = 5, max_total = 6;

    auto* thm = verify->add_subcommand("theorem-a", "power operations preserve Thom families");
    thm->add_option("--p", p)->required();
    thm->add_option("--q", q)->required();
    thm->add_option("--k", k)->required();
    thm->add_option("--samples", samples);
    thm->add_option("--seed", g.seed);

    auto* pow = verify->add_subcommand("power-axioms", "additivity and iteration of powers");
    pow->add_option("--p", p)->required();
    pow->add_option("--q", q)->required();
    pow->add_option("--j", j)->required();
    pow->add_option("--k", k)->required();
    pow->add_option("--seed", g.seed);

    auto* all = verify->add_subcommand("all", "every suite up to a total dimension");
    all->add_option("--max-total", max_total);
    all->add_option("--samples", samples);
    all->add_option("--seed", g.seed);

    auto* morita = verify->add_subcommand("morita", "Cl_{p+1,q+1} ~ Cl_{p,q} (x) End(C^{1|1})");
    morita->add_option("--p", p)->required();
    morita->add_option("--q", q)->required();

    // extension ---------------------------------------------------------
    auto* ext_cmd = app.add_subcommand("extension", "finite graded central extensions");
    ext_cmd->require_subcommand(1);
    int ext_n = 2;
    std::string ext_file;

    auto* ext_build = ext_cmd->add_subcommand("build", "build the B_n Pin-lift extension");
    ext_build->add_option("--n", ext_n)->required();
    ext_build->add_option("--p", p)->required();
    ext_build->add_option("--q", q)->required();

    auto* ext_audit = ext_cmd->add_subcommand("audit", "re-verify a dumped extension");
    ext_audit->add_option("file", ext_file)->required();

    // calc ---------------------------------------------------------------
    auto* calc = app.add_subcommand("calc", "element-level calculators");
    calc->require_subcommand(1);
    std::string arg_a, arg_b;

    auto* calc_mul = calc->add_subcommand("mul", "Clifford product of two elements");
    calc_mul->add_option("a", arg_a)->required();
    calc_mul->add_option("b", arg_b)->required();
    calc_mul->add_option("--p", p)->required();
    calc_mul->add_option("--q", q)->required();

    auto* calc_bar = calc->add_subcommand("bar", "real involution of an element");
    calc_bar->add_option("a", arg_a)->required();
    calc_bar->add_option("--p", p)->required();
    calc_bar->add_option("--q", q)->required();

    auto* calc_adjoint = calc->add_subcommand("adjoint", "adjoint of an operator dump");
    calc_adjoint->add_option("file", arg_a)->required();

    auto* calc_kernel = calc->add_subcommand("kernel", "graded kernel of an operator dump");
    calc_kernel->add_option("file", arg_a)->required();

    auto* calc_lift = calc->add_subcommand("lift", "Pin lift of a signed permutation");
    calc_lift->add_option("notation", arg_a)->required();
    calc_lift->add_option("--p", p)->required();
    calc_lift->add_option("--q", q)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        set_dimension_cap(g.cap);
        auto start = std::chrono::steady_clock::now();
        auto elapsed = [&] {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        };

        if (thm->parsed()) {
            std::vector<Report> reports{verify_theorem_a(p, q, k, samples, g.seed)};
            return emit_reports(g, reports, elapsed());
        }
        if (pow->parsed()) {
            std::vector<Report> reports{verify_power_axioms(p, q, j, k, g.seed)};
            return emit_reports(g, reports, elapsed());
        }
        if (all->parsed()) {
            SuiteOptions opt;
            opt.max_total = max_total;
            opt.samples = samples;
            opt.seed = g.seed;
            opt.jobs = g.jobs;
            std::vector<Report> reports = run_all_suites(opt);
            return emit_reports(g, reports, elapsed());
        }
        if (morita->parsed()) {
            Report r;
            r.suite = "morita";
            std::string detail;
            bool ok = true;
            try {
                auto failures = verify_morita(morita_one_one(Signature{p, q}));
                ok = failures.empty();
                if (!ok) detail = failures.front();
            } catch (const std::exception& e) {
                ok = false;
                detail = e.what();
            }
            r.add("p" + std::to_string(p) + "q" + std::to_string(q), ok, detail);
            std::vector<Report> reports{r};
            return emit_reports(g, reports, elapsed());
        }
        if (ext_build->parsed()) {
            FiniteGradedExtension ext = from_pin_lifts(ext_n, Signature{p, q});
            if (!g.dump_file.empty()) {
                std::ofstream out(g.dump_file);
                if (!out) {
                    std::cerr << "cannot write " << g.dump_file << "\n";
                    return 2;
                }
                out << extension_to_json(ext);
            }
            GlobalOptions g2 = g;
            g2.dump_file.clear();  // report dump would clobber the extension dump
            std::vector<Report> reports{verify_cocycle(ext)};
            return emit_reports(g2, reports, elapsed());
        }
        if (ext_audit->parsed()) {
            FiniteGradedExtension ext = extension_from_json(read_input(ext_file));
            std::vector<Report> reports{verify_cocycle(ext)};
            return emit_reports(g, reports, elapsed());
        }
        if (calc_mul->parsed()) {
            Signature sig{p, q};
            std::cout << to_string(parse_clifford(arg_a, sig) * parse_clifford(arg_b, sig))
                      << "\n";
            return 0;
        }
        if (calc_bar->parsed()) {
            Signature sig{p, q};
            std::cout << to_string(parse_clifford(arg_a, sig).real_involution()) << "\n";
            return 0;
        }
        if (calc_adjoint->parsed()) {
            std::cout << operator_dump(adjoint(parse_operator_dump(read_input(arg_a))));
            return 0;
        }
        if (calc_kernel->parsed()) {
            Operator op = parse_operator_dump(read_input(arg_a));
            GradedKernel ker = kernel(op);
            std::cout << "even_dim: " << ker.even_dim << "\nodd_dim: " << ker.odd_dim << "\n";
            for (const auto& v : ker.basis) {
                std::cout << "vector:";
                for (std::size_t i = 0; i < v.size(); ++i)
                    std::cout << (i ? " ; " : " ") << to_string(v[i]);
                std::cout << "\n";
            }
            return 0;
        }
        if (calc_lift->parsed()) {
            Signature sig{p, q};
            SignedPermutation sp = parse_signed_permutation(arg_a, sig.dim());
            PinElement w = lift_signed_permutation(sig, sp);
            std::cout << "lift: " << to_string(w.value()) << "\n";
            std::cout << "parity: " << w.parity() << "\n";
            Membership mem = w.membership();
            std::cout << "membership: Pin^c" << (mem.pin ? " Pin" : "")
                      << (mem.spin_c ? " Spin^c" : "") << (mem.spin ? " Spin" : "") << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
