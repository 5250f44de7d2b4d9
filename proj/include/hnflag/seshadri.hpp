#pragma once

// Seshadri constants of nef line bundles L = (a_1, ..., a_γ, b) on Fl(E), in nef-basis
// coordinates:
//
//   min(a, b) <= ε(L, y) <= min(a)          at every point y
//   ε(L, y)   =  min(a, b)                  for y on the section s(X), hence ε(L) = min(a, b)
//   ε(L, y)   =  min(a)                     everywhere when b >= min(a)
//   ε(L, 1)   =  min(a)                     at general points, when the divisibility
//                                           assumption below holds
//
// Divisibility assumption: for each i there is an HN step E_{c_i} of rank r_{k_i}, and
// ζ_i = deg E_{c_i} is a multiple of r_{k_i}.

#include "hnflag/error.hpp"
#include "hnflag/flag_geometry.hpp"
#include "hnflag/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hnflag {

struct AssumptionWitness {
    std::size_t hn_index = 0;  // c_i, 1-based
    Integer zeta = 0;          // deg E_{c_i}

    bool operator==(const AssumptionWitness&) const = default;
};

enum class AssumptionFailureReason { no_rank_match, not_divisible };

constexpr std::string_view to_string(AssumptionFailureReason r) noexcept {
    return r == AssumptionFailureReason::no_rank_match ? "no_rank_match" : "not_divisible";
}

struct AssumptionFailure {
    std::size_t index = 0;  // i, 1-based
    AssumptionFailureReason reason = AssumptionFailureReason::no_rank_match;

    bool operator==(const AssumptionFailure&) const = default;
};

struct AssumptionStatus {
    bool holds = false;
    std::vector<std::optional<AssumptionWitness>> witnesses;  // one slot per i
    std::vector<AssumptionFailure> failures;

    bool operator==(const AssumptionStatus&) const = default;
};

inline AssumptionStatus assumption_check(const FlagModel& model) {
    AssumptionStatus status;
    const HNFiltration& hn = model.hn();
    for (std::size_t i = 0; i < model.gamma(); ++i) {
        const Integer r = model.spec().quotient_ranks[i];
        std::optional<AssumptionWitness> witness;
        for (std::size_t c = 1; c <= hn.length(); ++c) {
            if (hn.step(c).rank == r) witness = AssumptionWitness{c, hn.step(c).degree};
        }
        if (!witness) {
            status.failures.push_back({i + 1, AssumptionFailureReason::no_rank_match});
        } else if (witness->zeta % r != 0) {
            status.failures.push_back({i + 1, AssumptionFailureReason::not_divisible});
        }
        status.witnesses.push_back(witness);
    }
    status.holds = status.failures.empty();
    return status;
}

namespace detail {

inline DivisorClass require_nef(const DivisorClass& divisor, const FlagModel& model) {
    DivisorClass nef = to_nef_basis(divisor, model);
    if (classify_divisor(nef, model) == DivisorPositivity::not_nef) {
        std::string coords;
        for (const auto& c : nef.coords) coords += (coords.empty() ? "" : ", ") + to_string(c);
        throw Error(ErrorKind::NotNef, "divisor (" + coords + ") in the nef basis has a negative coordinate");
    }
    return nef;
}

inline std::span<const Rational> a_part(const DivisorClass& nef) {
    return std::span<const Rational>(nef.coords).first(nef.coords.size() - 1);
}

inline const Rational& b_part(const DivisorClass& nef) { return nef.coords.back(); }

} // namespace detail

struct SeshadriBounds {
    Rational lower;
    Rational upper;

    bool operator==(const SeshadriBounds&) const = default;
};

inline SeshadriBounds seshadri_bounds(const DivisorClass& divisor, const FlagModel& model) {
    const DivisorClass nef = detail::require_nef(divisor, model);
    return {min_of(nef.coords), min_of(detail::a_part(nef))};
}

inline Rational epsilon_at_section(const DivisorClass& divisor, const FlagModel& model) {
    return min_of(detail::require_nef(divisor, model).coords);
}

inline Rational epsilon_global(const DivisorClass& divisor, const FlagModel& model) {
    return min_of(detail::require_nef(divisor, model).coords);
}

/// min(a) when b >= min(a); the bounds then agree at every point.
inline std::optional<Rational> epsilon_constant_case(const DivisorClass& divisor, const FlagModel& model) {
    const DivisorClass nef = detail::require_nef(divisor, model);
    Rational upper = min_of(detail::a_part(nef));
    if (detail::b_part(nef) >= upper) return upper;
    return std::nullopt;
}

enum class GeneralPointRule { constant_case, divisibility_assumption, unknown };

constexpr std::string_view to_string(GeneralPointRule r) noexcept {
    switch (r) {
    case GeneralPointRule::constant_case: return "constant_case";
    case GeneralPointRule::divisibility_assumption: return "divisibility_assumption";
    case GeneralPointRule::unknown: return "unknown";
    }
    return "?";
}

inline constexpr std::string_view kCiteLower = "lower bound min(a₁,…,a_γ,b), valid at every point";
inline constexpr std::string_view kCiteUpper = "upper bound min(a₁,…,a_γ), from the fibre lines L_i through every point";
inline constexpr std::string_view kCiteGlobal = "ε(L) = min(a₁,…,a_γ,b): the infimum over points is attained on s(X)";
inline constexpr std::string_view kCiteSection = "ε(L,y) = min(a₁,…,a_γ,b) for y on the section s(X)";
inline constexpr std::string_view kCiteConstant = "b ≥ min(a₁,…,a_γ): bounds coincide, ε(L,y) = min(a₁,…,a_γ) at every point";
inline constexpr std::string_view kCiteAssumption =
    "divisibility assumption holds: ε(L,y) = min(a₁,…,a_γ) for y off the exceptional locus, so ε(L,1) = min(a₁,…,a_γ)";
inline constexpr std::string_view kCiteUnknown =
    "open question: the general-point value is unknown when the divisibility assumption fails and b < min(a₁,…,a_γ); "
    "only the bounds are established";

struct GeneralPointValue {
    std::optional<Rational> value;  // empty means Unknown
    GeneralPointRule rule = GeneralPointRule::unknown;
    SeshadriBounds bounds;

    bool known() const noexcept { return value.has_value(); }
    bool operator==(const GeneralPointValue&) const = default;
};

inline std::string_view citation(GeneralPointRule rule) noexcept {
    switch (rule) {
    case GeneralPointRule::constant_case: return kCiteConstant;
    case GeneralPointRule::divisibility_assumption: return kCiteAssumption;
    case GeneralPointRule::unknown: return kCiteUnknown;
    }
    return kCiteUnknown;
}

/// The unconditional constant case is checked first, so it never reports Unknown.
inline GeneralPointValue epsilon_general_point(const DivisorClass& divisor, const FlagModel& model,
                                               const AssumptionStatus& status) {
    const SeshadriBounds bounds = seshadri_bounds(divisor, model);
    if (bounds.lower == bounds.upper) return {bounds.upper, GeneralPointRule::constant_case, bounds};
    if (status.holds) return {bounds.upper, GeneralPointRule::divisibility_assumption, bounds};
    return {std::nullopt, GeneralPointRule::unknown, bounds};
}

inline GeneralPointValue epsilon_general_point(const DivisorClass& divisor, const FlagModel& model) {
    return epsilon_general_point(divisor, model, assumption_check(model));
}

/// (L·C) / mult_y C for one candidate curve.
inline Rational seshadri_ratio(const CurveClass& curve, const DivisorClass& divisor, Integer multiplicity) {
    if (multiplicity < 1) {
        throw Error(ErrorKind::ZeroMultiplicity, "multiplicity must be at least 1, got " + std::to_string(multiplicity));
    }
    return pairing(curve, divisor) / multiplicity;
}

/// [ζ_i − θ_i]; each entry is at least 1 for a non-semistable bundle.
inline std::vector<Integer> zeta_theta_gaps(const FlagModel& model, const AssumptionStatus& status) {
    if (!status.holds) throw Error(ErrorKind::AssumptionNotSatisfied, "ζ is only defined when the divisibility assumption holds");
    std::vector<Integer> gaps;
    for (std::size_t i = 0; i < model.gamma(); ++i) gaps.push_back(status.witnesses[i]->zeta - model.theta()[i]);
    return gaps;
}

/// Generators of the pseudo-effective cone of the Grassmann bundle Gr_{r_{k_i}}(E).
struct PseffGenerators {
    std::size_t index = 0;  // i, 1-based
    Integer zeta = 0;
    std::string boundary;   // 𝒪(1) − ζ_i𝓛_i
    std::string pullback;   // 𝓛_i
    std::string note;

    bool operator==(const PseffGenerators&) const = default;
};

inline PseffGenerators grassmann_pseff_generators(const FlagModel& model, const AssumptionStatus& status, std::size_t i) {
    if (!status.holds) {
        throw Error(ErrorKind::AssumptionNotSatisfied, "pseudo-effective generators need the divisibility assumption");
    }
    if (i < 1 || i > model.gamma()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "index " + std::to_string(i) + " outside 1.." + std::to_string(model.gamma()));
    }
    const Integer zeta = status.witnesses[i - 1]->zeta;
    const std::string line = "𝓛" + subscript(i);
    PseffGenerators out{i, zeta, {}, line, {}};
    if (zeta == 0) {
        out.boundary = "𝒪(1)";
    } else if (zeta > 0) {
        out.boundary = "𝒪(1) − " + std::to_string(zeta) + line;
    } else {
        out.boundary = "𝒪(1) + " + std::to_string(-zeta) + line;
    }
    out.note = "the linear system |" + out.boundary + "| contains a unique effective divisor (h⁰ = 1)";
    return out;
}

struct SeshadriCitations {
    std::string lower{kCiteLower};
    std::string upper{kCiteUpper};
    std::string global{kCiteGlobal};
    std::string section{kCiteSection};
    std::string general{kCiteUnknown};

    bool operator==(const SeshadriCitations&) const = default;
};

struct SeshadriReport {
    DivisorClass divisor;  // nef basis
    DivisorPositivity positivity = DivisorPositivity::nef_not_ample;
    Rational lower;
    Rational upper;
    Rational epsilon_global;
    Rational epsilon_at_section;
    std::optional<Rational> epsilon_general;
    GeneralPointRule general_rule = GeneralPointRule::unknown;
    AssumptionStatus assumption;
    SeshadriCitations notes;

    bool operator==(const SeshadriReport&) const = default;
};

inline SeshadriReport full_report(const DivisorClass& divisor, const FlagModel& model, const AssumptionStatus& status) {
    SeshadriReport report;
    report.divisor = detail::require_nef(divisor, model);
    report.positivity = classify_divisor(report.divisor, model);
    const SeshadriBounds bounds = seshadri_bounds(report.divisor, model);
    report.lower = bounds.lower;
    report.upper = bounds.upper;
    report.epsilon_global = epsilon_global(report.divisor, model);
    report.epsilon_at_section = epsilon_at_section(report.divisor, model);
    const GeneralPointValue general = epsilon_general_point(report.divisor, model, status);
    report.epsilon_general = general.value;
    report.general_rule = general.rule;
    report.assumption = status;
    report.notes.general = std::string(citation(general.rule));
    return report;
}

inline SeshadriReport full_report(const DivisorClass& divisor, const FlagModel& model) {
    return full_report(divisor, model, assumption_check(model));
}

/// Checks the report invariants; returns an empty string when they hold.
inline std::string report_violation(const SeshadriReport& r) {
    if (r.lower > r.upper) return "lower bound exceeds upper bound";
    if (r.epsilon_global != r.lower) return "ε(L) differs from the lower bound";
    if (r.epsilon_at_section != r.lower) return "section value differs from the lower bound";
    if (r.epsilon_general && *r.epsilon_general != r.upper) return "general-point value differs from the upper bound";
    if (r.divisor.coords.back() >= r.upper && (r.lower != r.upper || !r.epsilon_general)) {
        return "b ≥ min(a) but the report is not constant";
    }
    return {};
}

} // namespace hnflag
