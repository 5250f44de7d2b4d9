// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "hnflag/hnflag.hpp"
#include "hnflag/random.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace hnflag;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    long cases = 0;

    void expect(bool cond, const std::string& what) {
        ++cases;
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

bool report(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && seconds >= limit_seconds) {
        out.expect(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (out.ok ? "PASS" : "FAIL") << " " << id << " " << title << " (" << out.cases << " checks, " << timing << ")";
    if (!out.ok) std::cout << ": " << out.detail;
    std::cout << "\n";
    return out.ok;
}

std::string degrees_text(const std::vector<Integer>& degrees) {
    std::string s;
    for (const Integer d : degrees) s += (s.empty() ? "" : ",") + std::to_string(d);
    return "[" + s + "]";
}

Outcome fixtures() {
    Outcome out;
    for (const auto& f : paper_examples()) {
        const FixtureDigest got = digest_of(run(f.config));
        out.expect(got == f.expected, f.name + ": got " + describe(got) + ", expected " + describe(f.expected));
    }
    return out;
}

Outcome oracle() {
    Outcome out;
    gen::Rng rng(20240501);
    for (int t = 0; t < 5000; ++t) {
        const SplitBundle b = gen::split_bundle(rng, 1, 8, -5, 5);
        out.expect(hn_filtration(b) == hn_brute_force_oracle(b, 8), "bundle " + degrees_text(b.summand_degrees()));
    }
    for (int n = 1; n <= 4; ++n) {
        std::vector<Integer> degrees(static_cast<std::size_t>(n), -2);
        for (;;) {
            const SplitBundle b(degrees);
            out.expect(hn_filtration(b) == hn_brute_force_oracle(b, 4), "bundle " + degrees_text(degrees));
            std::size_t i = 0;
            while (i < degrees.size() && degrees[i] == 2) degrees[i++] = -2;
            if (i == degrees.size()) break;
            ++degrees[i];
        }
    }
    return out;
}

Outcome duality() {
    Outcome out;
    gen::Rng rng(7);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t gamma = static_cast<std::size_t>(1 + t % 5);
        const FlagModel model = gen::flag_model_with_gamma(rng, gamma, 10, -6, 6);
        out.expect(model.gamma() == gamma, "γ mismatch");
        out.expect(is_identity(pairing_matrix(model)), flag_name(model.spec().quotient_ranks));
    }
    return out;
}

DivisorClass scaled(const DivisorClass& d, const Rational& t) {
    DivisorClass out = d;
    for (auto& c : out.coords) c *= t;
    return out;
}

DivisorClass plus(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

Outcome seshadri_suite() {
    Outcome out;
    gen::Rng rng(11);
    for (int m = 0; m < 20; ++m) {
        const FlagModel model = gen::flag_model_with_gamma(rng, static_cast<std::size_t>(1 + m % 5), 10, -6, 6);
        const AssumptionStatus status = assumption_check(model);
        const auto curves = curve_generators(model);
        const std::string where = flag_name(model.spec().quotient_ranks);
        for (int t = 0; t < 1000; ++t) {
            const DivisorClass d = gen::nef_divisor(rng, model.gamma());
            const SeshadriBounds bounds = seshadri_bounds(d, model);
            const Rational global = epsilon_global(d, model);
            out.expect(bounds.lower <= bounds.upper, where + ": lower > upper");

            Rational best = seshadri_ratio(curves.front().curve, d, 1);
            for (const auto& c : curves) best = std::min(best, seshadri_ratio(c.curve, d, 1));
            out.expect(best == global, where + ": min curve ratio " + to_string(best) + " vs ε(L) " + to_string(global));
            out.expect(epsilon_at_section(d, model) == global, where + ": section value differs from ε(L)");

            if (d.coords.back() >= bounds.upper) {
                out.expect(bounds.lower == bounds.upper, where + ": b ≥ min(a) but bounds differ");
                const GeneralPointValue g = epsilon_general_point(d, model, status);
                out.expect(g.value == bounds.upper, where + ": constant case general value");
            }

            const Rational s = gen::positive_rational(rng, 12, 7);
            const DivisorClass sd = scaled(d, s);
            out.expect(seshadri_bounds(sd, model) == SeshadriBounds{s * bounds.lower, s * bounds.upper}, where + ": scaling bounds");
            out.expect(epsilon_global(sd, model) == s * global, where + ": scaling ε(L)");
            const GeneralPointValue g = epsilon_general_point(d, model, status);
            const GeneralPointValue gs = epsilon_general_point(sd, model, status);
            out.expect(g.known() == gs.known() && (!g.known() || *gs.value == s * *g.value), where + ": scaling ε(L,1)");

            const DivisorClass bigger = plus(d, gen::nef_divisor(rng, model.gamma()));
            const SeshadriBounds bb = seshadri_bounds(bigger, model);
            out.expect(bb.lower >= bounds.lower && bb.upper >= bounds.upper, where + ": bounds not monotone");
            out.expect(epsilon_global(bigger, model) >= global, where + ": ε(L) not monotone");
            out.expect(epsilon_at_section(bigger, model) >= epsilon_at_section(d, model), where + ": section value not monotone");
        }
    }
    return out;
}

Outcome gaps() {
    Outcome out;
    gen::Rng rng(5);
    for (int t = 0; t < 500; ++t) {
        const FlagModel model = gen::assumption_model(rng, 10, -6, 6, 5);
        const AssumptionStatus status = assumption_check(model);
        out.expect(status.holds, "generated model fails the assumption");
        if (!status.holds) continue;
        for (const Integer g : zeta_theta_gaps(model, status)) {
            out.expect(g >= 1, flag_name(model.spec().quotient_ranks) + ": gap " + std::to_string(g));
        }
    }
    return out;
}

Outcome round_trips() {
    Outcome out;
    gen::Rng rng(3);
    for (int t = 0; t < 1000; ++t) {
        const FlagModel model = gen::flag_model(rng, 10, -6, 6, 5);
        const Basis basis = t % 2 ? Basis::nef : Basis::pluecker;
        const DivisorClass d = gen::any_divisor(rng, model.gamma(), basis);
        const DivisorClass there = convert_basis(d, model);
        out.expect(there.basis != d.basis && convert_basis(there, model) == d, "basis round trip");
    }
    for (int t = 0; t < 1000; ++t) {
        ProblemConfig config;
        if (t % 2) {
            const FlagModel model = gen::flag_model(rng, 8, -5, 5, 4);
            config.bundle = std::vector<HNStep>(model.hn().steps());
            config.flag = model.spec().quotient_ranks;
        } else {
            const SplitBundle b = gen::non_semistable_bundle(rng, 8, -5, 5);
            std::vector<Summand> summands;
            for (const Integer d : b.summand_degrees()) summands.push_back({d, 1});
            config.bundle = summands;
            config.flag = gen::subset(rng, quotient_ranks(hn_filtration(b)), 4);
        }
        config.curve = CurveInfo{static_cast<Integer>(t % 4), "X"};
        const std::size_t gamma = config.flag->size();
        config.divisors.push_back({"nef", Basis::nef, gen::nef_divisor(rng, gamma).coords});
        config.divisors.push_back({"any", Basis::pluecker, gen::any_divisor(rng, gamma, Basis::pluecker).coords});
        const ReportDocument doc = run(config);
        const std::string text = render_machine(doc);
        out.expect(parse_report(text) == doc, "machine round trip for " + flag_name(*config.flag));
        out.expect(render_machine(parse_report(text)) == text, "machine text not reproduced");
    }
    return out;
}

struct CliResult {
    int code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    const std::string command = std::string("\"") + HNFLAG_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    char buffer[4096];
    while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) r.output.append(buffer, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Outcome cli_errors() {
    Outcome out;
    const auto dir = std::filesystem::temp_directory_path() / ("hnflag_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    struct Case {
        std::string name, subcommand, config, diagnostic;
    };
    const std::vector<Case> cases{
        {"semistable", "cones",
         R"({"bundle": {"summands": [{"degree": 5, "multiplicity": 4}]}, "flag": {"quotient_ranks": [2]}})",
         "SemistableBundle"},
        {"non_hn_rank", "seshadri",
         R"({"bundle": {"summands": [{"degree": 1}, {"degree": -1}, {"degree": 0, "multiplicity": 3}]},
             "flag": {"quotient_ranks": [3]}})",
         "RankNotInHNProfile"},
        {"not_nef", "seshadri",
         R"({"bundle": {"summands": [{"degree": 4}, {"degree": 0, "multiplicity": 3}, {"degree": -1}]},
             "flag": {"quotient_ranks": [4, 1]},
             "divisors": [{"name": "bad", "basis": "nef", "coords": ["-1", "0", "0"]}]})",
         "NotNef"},
    };
    for (const auto& c : cases) {
        const auto path = dir / (c.name + ".json");
        std::ofstream(path) << c.config;
        const CliResult r = run_cli(c.subcommand + " \"" + path.string() + "\"");
        out.expect(r.code == 3, c.name + ": exit code " + std::to_string(r.code));
        out.expect(r.output.find(c.diagnostic) != std::string::npos, c.name + ": missing diagnostic " + c.diagnostic);
    }
    std::filesystem::remove_all(dir);
    return out;
}

} // namespace

int main() {
    bool ok = true;
    ok &= report(1, "example fixtures reproduced exactly", 1.0, fixtures);
    ok &= report(2, "HN filtration equals brute-force oracle", 30.0, oracle);
    ok &= report(3, "pairing matrix is the identity", 5.0, duality);
    ok &= report(4, "Seshadri formula suite", 0, seshadri_suite);
    ok &= report(5, "ζ − θ ≥ 1 under the divisibility assumption", 0, gaps);
    ok &= report(6, "basis and machine-output round trips", 0, round_trips);
    ok &= report(7, "error paths exit 3 with diagnostics", 0, cli_errors);
    return ok ? 0 : 1;
}
