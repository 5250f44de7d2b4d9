// hnflag: HN filtrations, flag-bundle cones and Seshadri constants from a JSON problem file.
//
// Exit codes: 0 success, 2 parse/validation error, 3 mathematical precondition violated,
// 4 internal invariant failure.

#include "hnflag/hnflag.hpp"
#include "hnflag/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace hnflag;

struct Options {
    bool machine = false;
    Integer oracle_cap = kDefaultOracleCap;
    std::uint64_t seed = 1;
    std::string config_path;
    std::string example_name;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int report_error(const Error& e, const std::string& echo) {
    std::cerr << "error: " << e.what() << "\n";
    if (!echo.empty()) std::cerr << "input: " << echo << "\n";
    return exit_code(e.kind());
}

std::string echo_problem(const ProblemConfig& config) {
    std::string echo;
    if (config.is_split()) {
        echo = "summand degrees [";
        const auto degrees = expand_summands(std::get<std::vector<Summand>>(config.bundle));
        for (std::size_t i = 0; i < degrees.size(); ++i) echo += (i ? "," : "") + std::to_string(degrees[i]);
        echo += "]";
    } else {
        echo = "hn_steps [";
        for (const auto& s : std::get<std::vector<HNStep>>(config.bundle)) {
            echo += "(" + std::to_string(s.rank) + "," + std::to_string(s.degree) + ")";
        }
        echo += "]";
    }
    if (config.flag) echo += ", flag " + flag_name(*config.flag);
    return echo;
}

int run_pipeline(const Options& opt, Depth depth) {
    ProblemConfig config;
    try {
        config = parse_config(read_file(opt.config_path));
    } catch (const Error& e) {
        return report_error(e, opt.config_path);
    }
    try {
        if (depth == Depth::hn && config.is_split()) {
            const SplitBundle bundle(expand_summands(std::get<std::vector<Summand>>(config.bundle)), config.curve);
            if (bundle.rank() <= opt.oracle_cap && hn_filtration(bundle) != hn_brute_force_oracle(bundle, opt.oracle_cap)) {
                throw Error(ErrorKind::InvariantFailure, "HN filtration disagrees with the brute-force oracle");
            }
        }
        const ReportDocument doc = run(config, depth);
        std::cout << render(doc, opt.machine ? RenderMode::machine : RenderMode::human);
        const int code = item_exit_code(doc);
        for (const auto& d : doc.divisors) {
            if (d.error) {
                std::cerr << "error: divisor " << d.name << ": " << d.error->message << "\n";
                std::cerr << "input: " << to_string(d.input.basis) << " " << detail::tuple_text(d.input.coords) << "\n";
            }
        }
        return code;
    } catch (const Error& e) {
        return report_error(e, echo_problem(config));
    }
}

int run_examples(const Options& opt) {
    bool found = false;
    bool all_ok = true;
    for (const auto& fixture : paper_examples()) {
        if (!opt.example_name.empty() && fixture.name != opt.example_name) continue;
        found = true;
        const ReportDocument doc = run(fixture.config);
        const FixtureDigest got = digest_of(doc);
        const bool ok = got == fixture.expected;
        all_ok = all_ok && ok;
        if (!opt.example_name.empty()) {
            std::cout << render(doc, opt.machine ? RenderMode::machine : RenderMode::human);
            if (opt.machine) continue;
            std::cout << "\n";
        }
        std::cout << (ok ? "PASS " : "FAIL ") << fixture.name << ": " << describe(got) << "\n";
        if (!ok) std::cout << "     expected: " << describe(fixture.expected) << "\n";
    }
    if (!found) {
        std::cerr << "error: no built-in example named \"" << opt.example_name << "\"\n";
        return 2;
    }
    return all_ok ? 0 : 4;
}

int run_selftest_command(const Options& opt) {
    SelftestOptions so;
    so.seed = opt.seed;
    so.oracle_cap = opt.oracle_cap;
    bool all_ok = true;
    for (const auto& r : run_selftest(so)) {
        all_ok = all_ok && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " checks)";
        if (!r.passed) std::cout << ": " << r.detail;
        std::cout << "\n";
    }
    return all_ok ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harder-Narasimhan data, flag-bundle cones and Seshadri constants"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--machine", opt.machine, "Emit the structured JSON report");
    app.add_option("--oracle-cap", opt.oracle_cap, "Largest rank checked by the brute-force HN oracle")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "Seed for the randomized self-test");

    auto* hn = app.add_subcommand("hn", "HN filtration of the bundle");
    hn->add_option("config", opt.config_path, "Problem file")->required();
    auto* cones = app.add_subcommand("cones", "Nef and curve cone generators with the pairing matrix");
    cones->add_option("config", opt.config_path, "Problem file")->required();
    auto* seshadri = app.add_subcommand("seshadri", "Seshadri constant reports for the listed divisors");
    seshadri->add_option("config", opt.config_path, "Problem file")->required();
    auto* examples = app.add_subcommand("examples", "Replay the built-in worked examples");
    examples->add_option("name", opt.example_name, "Run a single example, e.g. 5.4/Fl(2,1)");
    auto* selftest = app.add_subcommand("selftest", "Oracle equivalence and invariant suite");
    for (auto* sub : {hn, cones, seshadri, examples, selftest}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*hn) return run_pipeline(opt, Depth::hn);
        if (*cones) return run_pipeline(opt, Depth::cones);
        if (*seshadri) return run_pipeline(opt, Depth::full);
        if (*examples) return run_examples(opt);
        if (*selftest) return run_selftest_command(opt);
    } catch (const Error& e) {
        return report_error(e, "");
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
