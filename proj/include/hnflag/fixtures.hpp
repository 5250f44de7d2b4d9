#pragma once

// Built-in worked examples: split bundles of rank 5 and 7 with their HN filtrations,
// slopes, Picard ranks and divisibility-assumption verdicts.

#include "hnflag/config.hpp"
#include "hnflag/report.hpp"

#include <string>
#include <vector>

namespace hnflag {

struct FixtureDigest {
    std::vector<HNStep> hn_steps;
    Rational mu;
    std::size_t picard_rank = 0;
    bool assumption_holds = false;

    bool operator==(const FixtureDigest&) const = default;
};

struct Fixture {
    std::string name;
    ProblemConfig config;
    FixtureDigest expected;
};

inline FixtureDigest digest_of(const ReportDocument& doc) {
    FixtureDigest d;
    d.hn_steps = doc.bundle.hn_steps;
    d.mu = doc.bundle.mu;
    d.picard_rank = doc.flag ? doc.flag->picard_rank : 0;
    d.assumption_holds = doc.assumption && doc.assumption->status.holds;
    return d;
}

inline std::string describe(const FixtureDigest& d) {
    std::string steps;
    for (const auto& s : d.hn_steps) steps += "(" + std::to_string(s.rank) + "," + std::to_string(s.degree) + ")";
    return "steps " + steps + ", μ " + to_string(d.mu) + ", Picard rank " + std::to_string(d.picard_rank) + ", assumption " +
           (d.assumption_holds ? "holds" : "fails");
}

namespace detail {

inline std::vector<DivisorSpec> sample_divisors(std::size_t gamma) {
    DivisorSpec ones{"ones", Basis::nef, std::vector<Rational>(gamma + 1, Rational(1))};
    DivisorSpec steep{"steep", Basis::nef, {}};
    for (std::size_t i = 0; i < gamma; ++i) steep.coords.emplace_back(static_cast<Integer>(i + 3));
    steep.coords.emplace_back(1);
    return {ones, steep};
}

inline Fixture make_fixture(std::string name, std::vector<Summand> summands, std::vector<Integer> flag,
                            std::vector<HNStep> steps, Rational mu, bool holds) {
    Fixture f;
    f.name = std::move(name);
    f.config.curve = CurveInfo{0, "X"};
    f.config.bundle = std::move(summands);
    f.config.divisors = sample_divisors(flag.size());
    f.expected = FixtureDigest{std::move(steps), std::move(mu), flag.size() + 1, holds};
    f.config.flag = std::move(flag);
    return f;
}

} // namespace detail

inline std::vector<Fixture> paper_examples() {
    using detail::make_fixture;
    std::vector<Fixture> out;
    // E = L₁ ⊕ L₂ ⊕ 𝒪³, deg L₁ = 1, deg L₂ = 2
    out.push_back(make_fixture("5.1", {{1, 1}, {2, 1}, {0, 3}}, {4, 3}, {{1, 2}, {2, 3}, {5, 3}}, make_rational(3, 5), false));
    // deg L₁ = 1, deg L₂ = −1
    out.push_back(make_fixture("5.2", {{1, 1}, {-1, 1}, {0, 3}}, {4, 1}, {{1, 1}, {4, 1}, {5, 0}}, make_rational(0), false));
    // E = L₁ ⊕ 𝒪³ ⊕ L₂, deg L₁ = 4, deg L₂ = −1
    out.push_back(make_fixture("5.3", {{4, 1}, {0, 3}, {-1, 1}}, {4, 1}, {{1, 4}, {4, 4}, {5, 3}}, make_rational(3, 5), true));

    // E = L₁ ⊕ L₂ ⊕ L₃ ⊕ L₄ ⊕ 𝒪³ with degrees 3, 1, −1, −2
    const std::vector<Summand> rank7a{{3, 1}, {1, 1}, {-1, 1}, {-2, 1}, {0, 3}};
    const std::vector<HNStep> steps7a{{1, 3}, {2, 4}, {5, 4}, {6, 3}, {7, 1}};
    const std::vector<std::pair<std::vector<Integer>, bool>> flags7a{
        {{2, 1}, true},     {{5, 1}, false},    {{5, 2}, false},       {{6, 5}, false},    {{6, 2}, false},
        {{6, 1}, false},    {{5, 2, 1}, false}, {{6, 2, 1}, false},    {{6, 5, 2, 1}, false},
    };
    for (const auto& [flag, holds] : flags7a) {
        std::string label = "Fl(";
        for (std::size_t i = 0; i < flag.size(); ++i) label += (i ? "," : "") + std::to_string(flag[i]);
        out.push_back(make_fixture("5.4/" + label + ")", rank7a, flag, steps7a, make_rational(1, 7), holds));
    }

    // degrees 8, 2, −4, −5
    out.push_back(make_fixture("5.5", {{8, 1}, {2, 1}, {-4, 1}, {-5, 1}, {0, 3}}, {6, 5, 2, 1},
                               {{1, 8}, {2, 10}, {5, 10}, {6, 6}, {7, 1}}, make_rational(1, 7), true));
    return out;
}

} // namespace hnflag
