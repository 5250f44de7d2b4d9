#pragma once

#include "hnflag/bundle.hpp"
#include "hnflag/config.hpp"
#include "hnflag/error.hpp"
#include "hnflag/flag_geometry.hpp"
#include "hnflag/rational.hpp"
#include "hnflag/seshadri.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hnflag {

inline constexpr int kReportSchemaVersion = 1;

struct BundleSection {
    CurveInfo curve;
    std::optional<std::vector<Integer>> summand_degrees;  // present for split input
    std::vector<HNStep> hn_steps;
    std::vector<Rational> quotient_slopes;
    Rational mu;
    bool semistable = false;
    std::vector<Integer> hn_quotient_ranks;

    bool operator==(const BundleSection&) const = default;
};

struct FlagSection {
    std::vector<Integer> quotient_ranks;
    std::vector<std::size_t> hn_indices;
    std::vector<Integer> subspace_dims;
    std::vector<Integer> theta;
    std::size_t picard_rank = 0;
    Integer fiber_dimension = 0;
    Integer total_dimension = 0;

    bool operator==(const FlagSection&) const = default;
};

struct ConeSection {
    std::vector<LabeledDivisor> nef_generators;
    std::vector<LabeledCurve> curve_generators;
    RationalMatrix pairing;

    bool operator==(const ConeSection&) const = default;
};

struct AssumptionSection {
    AssumptionStatus status;
    std::vector<Integer> zeta_theta_gaps;     // filled when status.holds
    std::vector<PseffGenerators> pseff;       // filled when status.holds

    bool operator==(const AssumptionSection&) const = default;
};

struct ItemError {
    ErrorKind kind = ErrorKind::ValidationError;
    std::string message;

    bool operator==(const ItemError&) const = default;
};

struct DivisorEntry {
    std::string name;
    DivisorClass input;
    std::optional<SeshadriReport> report;
    std::optional<ItemError> error;

    bool operator==(const DivisorEntry&) const = default;
};

struct ReportDocument {
    int spec_version = kReportSchemaVersion;
    BundleSection bundle;
    std::optional<FlagSection> flag;
    std::optional<ConeSection> cones;
    std::optional<AssumptionSection> assumption;
    std::vector<DivisorEntry> divisors;
    std::map<std::string, std::string> citations;

    bool operator==(const ReportDocument&) const = default;
};

/// How far the pipeline runs: HN data only, the cone geometry, or full Seshadri reports.
enum class Depth { hn, cones, full };

inline HNFiltration filtration_of(const ProblemConfig& config) {
    if (config.is_split()) return hn_filtration(SplitBundle(expand_summands(std::get<std::vector<Summand>>(config.bundle)), config.curve));
    return validate_hn(std::get<std::vector<HNStep>>(config.bundle));
}

inline FlagModel model_of(const ProblemConfig& config) {
    if (!config.flag) throw Error(ErrorKind::ValidationError, "the config has no \"flag\" section");
    const HNFiltration hn = filtration_of(config);
    return build_model(hn, make_flag_spec(hn, *config.flag));
}

/// Throws for problems with the bundle or the flag; per-divisor problems are recorded in
/// the divisor's entry and do not stop the run.
inline ReportDocument run(const ProblemConfig& config, Depth depth = Depth::full) {
    ReportDocument doc;
    const HNFiltration hn = filtration_of(config);
    doc.bundle.curve = config.curve;
    if (config.is_split()) doc.bundle.summand_degrees = expand_summands(std::get<std::vector<Summand>>(config.bundle));
    doc.bundle.hn_steps = hn.steps();
    doc.bundle.quotient_slopes = hn.quotient_slopes();
    doc.bundle.mu = hn.bundle_slope();
    doc.bundle.semistable = hn.is_semistable();
    doc.bundle.hn_quotient_ranks = quotient_ranks(hn);
    doc.citations["hn_steps"] = config.is_split() ? "split bundle: summands grouped by degree, largest degree first"
                                                  : "user-asserted HN data, checked for increasing ranks and decreasing slopes";
    doc.citations["mu"] = "μ(E) = deg E / rank E";
    doc.citations["hn_quotient_ranks"] = "r_j = rank(E/E_j), j = 1..d-1";
    if (depth == Depth::hn) return doc;

    if (!config.flag) throw Error(ErrorKind::ValidationError, "the config has no \"flag\" section");
    const FlagModel model = build_model(hn, make_flag_spec(hn, *config.flag));
    FlagSection& flag = doc.flag.emplace();
    flag.quotient_ranks = model.spec().quotient_ranks;
    flag.hn_indices = model.spec().hn_indices;
    flag.subspace_dims = model.spec().subspace_dims;
    flag.theta = model.theta();
    flag.picard_rank = model.picard_rank();
    flag.fiber_dimension = model.fiber_dimension();
    flag.total_dimension = model.total_dimension();
    doc.citations["theta"] = "θ_i = deg(E/E_{k_i})";
    doc.citations["picard_rank"] = "γ+1 nef generators ω̃_1..ω̃_γ, 𝓛";
    doc.citations["subspace_dims"] = "s_{k_j} = n − r_{k_{γ−j+1}}";
    doc.citations["dimension"] = "flag-variety dimension count (metadata only)";

    ConeSection& cones = doc.cones.emplace();
    cones.nef_generators = nef_generators(model);
    cones.curve_generators = curve_generators(model);
    cones.pairing = pairing_matrix(model);
    if (!is_identity(cones.pairing)) throw Error(ErrorKind::InvariantFailure, "pairing matrix is not the identity");
    doc.citations["nef_generators"] = "ω̃_i = Φ_i*(𝒪(1) − θ_i𝓛_i) and 𝓛 generate the nef cone";
    doc.citations["curve_generators"] = "L_1..L_γ and s(X) generate the closed cone of curves";
    doc.citations["pairing"] = "L_i·ω̃_j = δ_ij, L_i·𝓛 = 0, s(X)·ω̃_j = θ_j − θ_j = 0, s(X)·𝓛 = 1";
    if (depth == Depth::cones) return doc;

    AssumptionSection& assumption = doc.assumption.emplace();
    assumption.status = assumption_check(model);
    if (assumption.status.holds) {
        assumption.zeta_theta_gaps = zeta_theta_gaps(model, assumption.status);
        for (const Integer gap : assumption.zeta_theta_gaps) {
            if (gap < 1) throw Error(ErrorKind::InvariantFailure, "ζ_i − θ_i < 1 for a non-semistable bundle");
        }
        for (std::size_t i = 1; i <= model.gamma(); ++i) {
            assumption.pseff.push_back(grassmann_pseff_generators(model, assumption.status, i));
        }
    }
    doc.citations["assumption"] = "for each i an HN step E_{c_i} of rank r_{k_i} with r_{k_i} | ζ_i = deg E_{c_i}";
    doc.citations["zeta_theta_gaps"] = "ζ_i − θ_i ≥ 1 when E is not semistable";
    doc.citations["pseff"] = "pseudo-effective cone of Gr_{r_{k_i}}(E): 𝒪(1) − ζ_i𝓛_i and 𝓛_i";

    for (const auto& spec : config.divisors) {
        DivisorEntry entry{spec.name, DivisorClass{spec.basis, spec.coords}, std::nullopt, std::nullopt};
        try {
            entry.report = full_report(entry.input, model, assumption.status);
            if (const std::string bad = report_violation(*entry.report); !bad.empty()) {
                throw Error(ErrorKind::InvariantFailure, bad);
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::InvariantFailure) throw;
            entry.error = ItemError{e.kind(), e.what()};
        }
        doc.divisors.push_back(std::move(entry));
    }
    return doc;
}

/// Worst exit code over per-divisor errors (0 when none).
inline int item_exit_code(const ReportDocument& doc) {
    int code = 0;
    for (const auto& d : doc.divisors) {
        if (d.error) code = std::max(code, exit_code(d.error->kind));
    }
    return code;
}

} // namespace hnflag
