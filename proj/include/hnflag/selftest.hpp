#pragma once

// Randomized consistency suite behind `hnflag selftest`.

#include "hnflag/fixtures.hpp"
#include "hnflag/random.hpp"
#include "hnflag/render.hpp"
#include "hnflag/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hnflag {

struct SelftestOptions {
    std::uint64_t seed = 1;
    Integer oracle_cap = kDefaultOracleCap;
    int instances = 500;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    int cases = 0;
    std::string detail;  // first failure
};

namespace detail {

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::string& what) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what;
        }
    }

    CheckResult result() const { return result_; }

private:
    CheckResult result_;
};

inline std::string degrees_text(const SplitBundle& b) {
    std::string s;
    for (const Integer d : b.summand_degrees()) s += (s.empty() ? "" : ",") + std::to_string(d);
    return "[" + s + "]";
}

} // namespace detail

inline std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
    gen::Rng rng(options.seed);
    std::vector<CheckResult> results;
    const Integer max_rank = std::min<Integer>(options.oracle_cap, 8);

    detail::Check oracle("HN filtration matches brute-force oracle");
    for (int t = 0; t < options.instances; ++t) {
        const SplitBundle b = gen::split_bundle(rng, 1, max_rank, -5, 5);
        oracle.expect(hn_filtration(b) == hn_brute_force_oracle(b, options.oracle_cap), "bundle " + detail::degrees_text(b));
    }
    results.push_back(oracle.result());

    detail::Check duality("pairing matrix is the identity");
    detail::Check conversion("nef/Plücker conversion round-trips");
    detail::Check seshadri("Seshadri report invariants");
    for (int t = 0; t < options.instances; ++t) {
        const FlagModel model = gen::flag_model(rng, 10, -6, 6, 5);
        duality.expect(is_identity(pairing_matrix(model)), flag_name(model.spec().quotient_ranks));
        const DivisorClass any = gen::any_divisor(rng, model.gamma(), Basis::nef);
        conversion.expect(convert_basis(convert_basis(any, model), model) == any, "nef divisor round trip");
        const DivisorClass nef = gen::nef_divisor(rng, model.gamma());
        const SeshadriReport report = full_report(nef, model);
        seshadri.expect(report_violation(report).empty(), report_violation(report));
        Rational best = pairing(curve_generators(model).front().curve, nef);
        for (const auto& c : curve_generators(model)) best = std::min(best, seshadri_ratio(c.curve, nef, 1));
        seshadri.expect(best == report.epsilon_global, "minimum generator ratio differs from ε(L)");
    }
    results.push_back(duality.result());
    results.push_back(conversion.result());
    results.push_back(seshadri.result());

    detail::Check gaps("ζ − θ ≥ 1 under the divisibility assumption");
    for (int t = 0; t < options.instances; ++t) {
        const FlagModel model = gen::assumption_model(rng, 10, -6, 6, 5);
        const AssumptionStatus status = assumption_check(model);
        gaps.expect(status.holds, "generated model fails the assumption");
        if (!status.holds) continue;
        for (const Integer g : zeta_theta_gaps(model, status)) gaps.expect(g >= 1, "gap " + std::to_string(g));
    }
    results.push_back(gaps.result());

    detail::Check machine("machine output round-trips");
    for (int t = 0; t < options.instances / 10 + 1; ++t) {
        const FlagModel model = gen::flag_model(rng, 8, -4, 4, 4);
        ProblemConfig config;
        config.bundle = std::vector<HNStep>(model.hn().steps());
        config.flag = model.spec().quotient_ranks;
        config.divisors.push_back({"random", Basis::nef, gen::nef_divisor(rng, model.gamma()).coords});
        config.divisors.push_back({"negative", Basis::nef, gen::any_divisor(rng, model.gamma(), Basis::nef).coords});
        const ReportDocument doc = run(config);
        machine.expect(parse_report(render_machine(doc)) == doc, "report for " + flag_name(model.spec().quotient_ranks));
    }
    results.push_back(machine.result());

    detail::Check fixtures("built-in examples reproduce their digests");
    for (const auto& f : paper_examples()) {
        fixtures.expect(digest_of(run(f.config)) == f.expected, f.name);
    }
    results.push_back(fixtures.result());
    return results;
}

} // namespace hnflag
