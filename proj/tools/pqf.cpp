// pqf - binomial Thue equations a^4 - g b^4 = +-1 and power integral bases
// in pure quartic fields, from the command line.
//
// Exit codes: 0 success, 2 invalid arguments or malformed input,
// 3 precision failure present in output, 4 audit or verification mismatch.

#include <pqf/pqf.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr const char* kProfilePaper = "paper";
constexpr const char* kProfileDesk = "desk";

pqf::BigInt height_or_profile(const std::string& height_arg, const std::string& profile,
                              const char* paper_default, const char* desk_default) {
    if (!height_arg.empty()) return pqf::parse_magnitude(height_arg);
    if (profile == kProfileDesk) return pqf::parse_magnitude(desk_default);
    return pqf::parse_magnitude(paper_default);
}

void print_thue_result(const pqf::ThueResult& r) {
    std::cout << "g: " << pqf::to_dec(r.g) << '\n';
    std::cout << "status: " << pqf::to_string(r.status) << '\n';
    std::cout << "precision_digits: " << r.precision_used << '\n';
    for (const pqf::ThueSolution& s : r.solutions)
        std::cout << "solution: a=" << pqf::to_dec(s.a) << " b=" << pqf::to_dec(s.b)
                  << " sign=" << (s.sign > 0 ? "+1" : "-1") << '\n';
}

void print_generators(const pqf::GeneratorsResult& r) {
    std::cout << "m: " << pqf::to_dec(r.field.m) << '\n';
    std::cout << "admissible: true\n";
    std::cout << "status: " << pqf::to_string(r.status) << '\n';
    std::cout << "precision_digits: " << r.precision_used << '\n';
    for (const pqf::Generator& g : r.generators)
        std::cout << "generator: x=" << pqf::to_dec(g.x) << " y=" << pqf::to_dec(g.y)
                  << " z=" << pqf::to_dec(g.z) << '\n';
}

void print_summary(const pqf::SweepSummary& s) {
    std::cout << "written: " << s.total_written << '\n';
    for (const auto& [status, n] : s.by_status) std::cout << "status " << status << ": " << n << '\n';
    std::cout << "wall_ms: " << s.wall_ms << '\n';
    if (s.stopped_early) std::cout << "stopped_early: true\n";
}

int exit_for_summary(const pqf::SweepSummary& s) {
    auto it = s.by_status.find("precision_failure");
    return (it != s.by_status.end() && it->second > 0) ? 3 : 0;
}

struct SweepArgs {
    std::string from, to, height, profile;
    unsigned jobs = 1;
    std::string out, checkpoint, timing;
    bool resume = false, odd = false;
    std::optional<unsigned long> precision;
    unsigned long checkpoint_every = 4096;
    unsigned long stop_after = 0;
};

void add_sweep_options(CLI::App* cmd, SweepArgs& a, const char* height_flag) {
    cmd->add_option("--from", a.from, "first index, inclusive")->required();
    cmd->add_option("--to", a.to, "last index, inclusive")->required();
    auto* h = cmd->add_option(height_flag, a.height, "height bound (plain digits or 1e-notation)");
    cmd->add_option("--profile", a.profile, "height preset: paper or desk")
        ->check(CLI::IsMember({kProfilePaper, kProfileDesk}))
        ->excludes(h);
    cmd->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", a.out, "output records path (JSONL)")->required();
    cmd->add_option("--checkpoint", a.checkpoint, "checkpoint path");
    cmd->add_flag("--resume", a.resume, "resume from the checkpoint if present");
    cmd->add_flag("--odd", a.odd, "restrict the range to odd indices");
    cmd->add_option("--precision", a.precision, "fixed decimal precision (skips the retry ladder)");
    cmd->add_option("--checkpoint-every", a.checkpoint_every, "records between checkpoint updates");
    cmd->add_option("--timing-out", a.timing, "elapsed_ms sidecar path");
    cmd->add_option("--stop-after", a.stop_after, "abort after N records (crash simulation)")
        ->group("");  // hidden
}

pqf::SweepConfig to_config(const SweepArgs& a, pqf::SweepMode mode) {
    pqf::SweepConfig cfg;
    cfg.mode = mode;
    cfg.from = pqf::from_dec(a.from);
    cfg.to = pqf::from_dec(a.to);
    cfg.height = height_or_profile(a.height, a.profile,
                                   mode == pqf::SweepMode::thue ? "1e500" : "1e1000",
                                   mode == pqf::SweepMode::thue ? "1e100" : "1e200");
    cfg.jobs = a.jobs;
    cfg.out_path = a.out;
    cfg.checkpoint_path = a.checkpoint;
    cfg.precision = a.precision;
    cfg.odd_only = a.odd;
    cfg.resume = a.resume;
    cfg.checkpoint_every = a.checkpoint_every;
    cfg.timing_path = a.timing;
    cfg.test_stop_after = a.stop_after;
    return cfg;
}

template <typename Item, typename Printer>
int finish_audit(const pqf::AuditReport<Item>& rep, const char* label, Printer print_item) {
    std::cout << "subject " << label << ": " << pqf::to_dec(rep.subject) << '\n';
    std::cout << "oracle set: " << rep.oracle_set.size() << '\n';
    std::cout << "solver set: " << rep.solver_set.size() << '\n';
    std::cout << "agreement: " << (rep.agreement ? "yes" : "no") << '\n';
    for (const Item& it : rep.only_in_oracle) {
        std::cout << "only in oracle: ";
        print_item(it);
    }
    for (const Item& it : rep.only_in_solver) {
        std::cout << "only in solver: ";
        print_item(it);
    }
    return rep.agreement ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"small solutions of a^4 - g b^4 = +-1 and power integral bases of Q(m^(1/4))"};
    app.require_subcommand(1);

    // thue solve / thue sweep
    auto* thue = app.add_subcommand("thue", "binomial Thue equation commands");
    thue->require_subcommand(1);

    std::string solve_g, solve_height, solve_profile;
    std::optional<unsigned long> solve_precision;
    auto* solve = thue->add_subcommand("solve", "solve a^4 - g b^4 = +-1 up to a height");
    solve->add_option("--g", solve_g, "coefficient g >= 2")->required();
    auto* sh = solve->add_option("--height", solve_height, "height bound (plain digits or 1e-notation)");
    solve->add_option("--profile", solve_profile, "height preset: paper or desk")
        ->check(CLI::IsMember({kProfilePaper, kProfileDesk}))
        ->excludes(sh);
    solve->add_option("--precision", solve_precision, "fixed decimal precision");

    SweepArgs tsw;
    auto* thue_sweep = thue->add_subcommand("sweep", "solve a range of g, appending JSONL records");
    add_sweep_options(thue_sweep, tsw, "--height");

    // pib generators / sweep / family
    auto* pib = app.add_subcommand("pib", "power integral basis commands");
    pib->require_subcommand(1);

    std::string gen_m, gen_height, gen_profile;
    std::optional<unsigned long> gen_precision;
    auto* gens = pib->add_subcommand("generators", "generators of power integral bases for one m");
    gens->add_option("--m", gen_m, "field parameter m (|m| >= 2)")->required();
    auto* gh = gens->add_option("--height-gen", gen_height, "coordinate bound (plain digits or 1e-notation)");
    gens->add_option("--profile", gen_profile, "height preset: paper or desk")
        ->check(CLI::IsMember({kProfilePaper, kProfileDesk}))
        ->excludes(gh);
    gens->add_option("--precision", gen_precision, "fixed decimal precision");

    SweepArgs psw;
    auto* pib_sweep = pib->add_subcommand("sweep", "process a range of m, appending JSONL records");
    add_sweep_options(pib_sweep, psw, "--height-gen");

    unsigned long fam_s = 0, fam_t = 0;
    std::string fam_sign;
    auto* family = pib->add_subcommand("family", "parametric family m = ((s^4 t +- 1)^4 - 1)/s^4");
    family->add_option("--s", fam_s, "parameter s >= 1")->required()->check(CLI::PositiveNumber);
    family->add_option("--t", fam_t, "parameter t >= 1")->required()->check(CLI::PositiveNumber);
    family->add_option("--sign", fam_sign, "+ or -")->required()->check(CLI::IsMember({"+", "-"}));

    // audit thue / audit pib
    auto* audit = app.add_subcommand("audit", "brute-force cross-checks");
    audit->require_subcommand(1);

    std::string audit_g;
    unsigned long audit_bound = 0;
    auto* audit_thue_cmd = audit->add_subcommand("thue", "compare solver against direct enumeration");
    audit_thue_cmd->add_option("--g", audit_g, "coefficient g")->required();
    audit_thue_cmd->add_option("--bound", audit_bound, "enumerate b <= bound")->required();

    std::string audit_m;
    unsigned long audit_box = 0;
    auto* audit_pib_cmd = audit->add_subcommand("pib", "compare generators against box enumeration");
    audit_pib_cmd->add_option("--m", audit_m, "field parameter m >= 2")->required();
    audit_pib_cmd->add_option("--box", audit_box, "coordinate box bound, at most 100")->required();

    // report
    std::string rep_in, rep_format = "markdown", rep_out;
    auto* report = app.add_subcommand("report", "render sweep records as a table");
    report->add_option("--in", rep_in, "records path (JSONL)")->required();
    report->add_option("--format", rep_format, "markdown, latex, or csv")
        ->check(CLI::IsMember({"markdown", "latex", "csv"}));
    report->add_option("--out", rep_out, "output path, or - for stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (solve->parsed()) {
            pqf::SolveOptions opt;
            opt.precision = solve_precision;
            pqf::BigInt h = height_or_profile(solve_height, solve_profile, "1e500", "1e100");
            pqf::ThueResult r = pqf::solve_small(pqf::from_dec(solve_g), h, opt);
            print_thue_result(r);
            return r.status == pqf::ThueStatus::precision_failure ? 3 : 0;
        }
        if (thue_sweep->parsed()) {
            pqf::SweepSummary s = pqf::run_sweep(to_config(tsw, pqf::SweepMode::thue));
            print_summary(s);
            return exit_for_summary(s);
        }
        if (gens->parsed()) {
            pqf::BigInt m = pqf::from_dec(gen_m);
            pqf::FieldParam field = pqf::classify_m_direct(m);
            if (!field.admissible) {
                std::cout << "m: " << pqf::to_dec(m) << '\n';
                std::cout << "admissible: false\n";
                for (pqf::AdmissReason r : field.reasons)
                    std::cout << "reason: " << pqf::to_string(r) << '\n';
                return 0;
            }
            if (m < 0) {
                print_generators(pqf::generators_negative_m(field));
                return 0;
            }
            pqf::SolveOptions opt;
            opt.precision = gen_precision;
            pqf::BigInt h = height_or_profile(gen_height, gen_profile, "1e1000", "1e200");
            pqf::GeneratorsResult r = pqf::generators_for_m(field, h, opt);
            print_generators(r);
            return r.status == pqf::ThueStatus::precision_failure ? 3 : 0;
        }
        if (pib_sweep->parsed()) {
            pqf::SweepSummary s = pqf::run_sweep(to_config(psw, pqf::SweepMode::pib));
            print_summary(s);
            return exit_for_summary(s);
        }
        if (family->parsed()) {
            pqf::FamilyPoint fp = pqf::family_m(fam_s, fam_t, fam_sign == "+" ? +1 : -1);
            std::cout << "s: " << fam_s << " t: " << fam_t << " sign: " << fam_sign << '\n';
            std::cout << "m: " << pqf::to_dec(fp.m) << '\n';
            std::cout << "predicted: a=" << pqf::to_dec(fp.predicted.a)
                      << " b=" << pqf::to_dec(fp.predicted.b) << " sign=+1\n";
            pqf::FieldParam field = pqf::classify_m_direct(fp.m);
            std::cout << "admissible: " << (field.admissible ? "true" : "false");
            for (pqf::AdmissReason r : field.reasons) std::cout << ' ' << pqf::to_string(r);
            std::cout << '\n';
            if (!field.admissible) {
                std::cout << "verdict: not_applicable\n";
                return 0;
            }
            // Verify the prediction against the solver at a height that
            // covers it, and against the generator construction.
            pqf::ThueResult tr = pqf::solve_small(fp.m, fp.predicted.a);
            bool found = false;
            for (const pqf::ThueSolution& s : tr.solutions) found = found || s == fp.predicted;
            pqf::GeneratorsResult gr =
                pqf::generators_for_m(field, fp.predicted.a * fp.predicted.a);
            pqf::Generator plus{fp.predicted.a * fp.predicted.a, fp.predicted.a * fp.predicted.b,
                                fp.predicted.b * fp.predicted.b};
            pqf::Generator minus{plus.x, -plus.y, plus.z};
            bool gp = false, gm = false;
            for (const pqf::Generator& g : gr.generators) {
                gp = gp || g == plus;
                gm = gm || g == minus;
            }
            if (tr.status == pqf::ThueStatus::precision_failure ||
                gr.status == pqf::ThueStatus::precision_failure) {
                std::cout << "verdict: precision_failure\n";
                return 3;
            }
            if (found && gp && gm) {
                std::cout << "verdict: confirmed\n";
                return 0;
            }
            std::cout << "verdict: mismatch\n";
            return 4;
        }
        if (audit_thue_cmd->parsed()) {
            auto rep = pqf::audit_thue(pqf::from_dec(audit_g), audit_bound);
            return finish_audit(rep, "g", [](const pqf::ThueSolution& s) {
                std::cout << "a=" << pqf::to_dec(s.a) << " b=" << pqf::to_dec(s.b)
                          << " sign=" << (s.sign > 0 ? "+1" : "-1") << '\n';
            });
        }
        if (audit_pib_cmd->parsed()) {
            auto rep = pqf::audit_generators(pqf::from_dec(audit_m), audit_box);
            return finish_audit(rep, "m", [](const pqf::Generator& g) {
                std::cout << "x=" << pqf::to_dec(g.x) << " y=" << pqf::to_dec(g.y)
                          << " z=" << pqf::to_dec(g.z) << '\n';
            });
        }
        if (report->parsed()) {
            std::string doc;
            try {
                doc = pqf::render_report_file(rep_in, pqf::parse_report_format(rep_format));
            } catch (const std::runtime_error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 2;
            }
            if (rep_out == "-") {
                std::cout << doc;
            } else {
                std::ofstream f(rep_out, std::ios::binary);
                if (!f) {
                    std::cerr << "error: cannot open " << rep_out << '\n';
                    return 2;
                }
                f << doc;
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
