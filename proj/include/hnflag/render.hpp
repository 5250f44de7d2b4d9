#pragma once

// Human-readable tables and the machine-readable JSON form of a ReportDocument.
// Machine output has top-level keys spec_version, model, cones, assumption, divisors,
// citations; rationals are integers or "p/q" strings. parse_report inverts render_machine.

#include "hnflag/config.hpp"
#include "hnflag/error.hpp"
#include "hnflag/rational.hpp"
#include "hnflag/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hnflag {

enum class RenderMode { human, machine };

namespace detail {

template <typename Enum, std::size_t N>
Enum enum_from(std::string_view text, const std::array<Enum, N>& values, std::string_view what) {
    for (const Enum v : values) {
        if (to_string(v) == text) return v;
    }
    throw Error(ErrorKind::ParseError, "unknown " + std::string(what) + " \"" + std::string(text) + "\"");
}

inline constexpr std::array kAllErrorKinds = {
    ErrorKind::ParseError,         ErrorKind::ValidationError,    ErrorKind::EmptyInput,
    ErrorKind::NonIncreasingRank,  ErrorKind::NonDecreasingSlope, ErrorKind::NotStrictlyDecreasing,
    ErrorKind::DimensionMismatch,  ErrorKind::BasisMismatch,      ErrorKind::ZeroMultiplicity,
    ErrorKind::IndexOutOfRange,    ErrorKind::CapExceeded,        ErrorKind::SemistableBundle,
    ErrorKind::RankNotInHNProfile, ErrorKind::NotNef,             ErrorKind::AssumptionNotSatisfied,
    ErrorKind::InvariantFailure,
};
inline constexpr std::array kAllBases = {Basis::nef, Basis::pluecker};
inline constexpr std::array kAllPositivity = {DivisorPositivity::ample, DivisorPositivity::nef_not_ample,
                                              DivisorPositivity::not_nef};
inline constexpr std::array kAllRules = {GeneralPointRule::constant_case, GeneralPointRule::divisibility_assumption,
                                         GeneralPointRule::unknown};
inline constexpr std::array kAllReasons = {AssumptionFailureReason::no_rank_match, AssumptionFailureReason::not_divisible};

inline Json encode_rationals(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(encode_rational(v));
    return out;
}

inline std::vector<Rational> decode_rationals(const Json& j, const std::string& where) {
    std::vector<Rational> out;
    expect_array(j, where);
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(expect_rational(j[i], where + "/" + std::to_string(i)));
    return out;
}

template <typename Int>
std::vector<Int> decode_integers(const Json& j, const std::string& where) {
    std::vector<Int> out;
    expect_array(j, where);
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(static_cast<Int>(expect_integer(j[i], where + "/" + std::to_string(i))));
    return out;
}

inline Json encode_divisor(const DivisorClass& d) {
    return {{"basis", std::string(to_string(d.basis))}, {"coords", encode_rationals(d.coords)}};
}

inline DivisorClass decode_divisor(const Json& j, const std::string& where) {
    return DivisorClass{enum_from(expect_string(member(j, "basis", where), where + "/basis"), kAllBases, "basis"),
                        decode_rationals(member(j, "coords", where), where + "/coords")};
}

inline Json encode_status(const AssumptionStatus& s) {
    Json witnesses = Json::array();
    for (const auto& w : s.witnesses) {
        if (w) {
            witnesses.push_back({{"hn_index", w->hn_index}, {"zeta", w->zeta}});
        } else {
            witnesses.push_back(nullptr);
        }
    }
    Json failures = Json::array();
    for (const auto& f : s.failures) failures.push_back({{"index", f.index}, {"reason", std::string(to_string(f.reason))}});
    return {{"holds", s.holds}, {"witnesses", std::move(witnesses)}, {"failures", std::move(failures)}};
}

inline AssumptionStatus decode_status(const Json& j, const std::string& where) {
    AssumptionStatus s;
    const Json& holds = member(j, "holds", where);
    if (!holds.is_boolean()) parse_fail(where + "/holds", "expected a boolean");
    s.holds = holds.get<bool>();
    const Json& witnesses = expect_array(member(j, "witnesses", where), where + "/witnesses");
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        const std::string w = where + "/witnesses/" + std::to_string(i);
        if (witnesses[i].is_null()) {
            s.witnesses.emplace_back();
        } else {
            s.witnesses.push_back(AssumptionWitness{
                static_cast<std::size_t>(expect_integer(member(witnesses[i], "hn_index", w), w + "/hn_index")),
                expect_integer(member(witnesses[i], "zeta", w), w + "/zeta")});
        }
    }
    const Json& failures = expect_array(member(j, "failures", where), where + "/failures");
    for (std::size_t i = 0; i < failures.size(); ++i) {
        const std::string f = where + "/failures/" + std::to_string(i);
        s.failures.push_back(AssumptionFailure{
            static_cast<std::size_t>(expect_integer(member(failures[i], "index", f), f + "/index")),
            enum_from(expect_string(member(failures[i], "reason", f), f + "/reason"), kAllReasons, "failure reason")});
    }
    return s;
}

inline Json encode_seshadri(const SeshadriReport& r) {
    Json out;
    out["divisor"] = encode_divisor(r.divisor);
    out["positivity"] = std::string(to_string(r.positivity));
    out["lower"] = encode_rational(r.lower);
    out["upper"] = encode_rational(r.upper);
    out["epsilon_global"] = encode_rational(r.epsilon_global);
    out["epsilon_at_section"] = encode_rational(r.epsilon_at_section);
    out["epsilon_general"] = r.epsilon_general ? encode_rational(*r.epsilon_general) : Json("unknown");
    out["general_rule"] = std::string(to_string(r.general_rule));
    out["assumption"] = encode_status(r.assumption);
    out["notes"] = {{"lower", r.notes.lower},
                    {"upper", r.notes.upper},
                    {"epsilon_global", r.notes.global},
                    {"epsilon_at_section", r.notes.section},
                    {"epsilon_general", r.notes.general}};
    return out;
}

inline SeshadriReport decode_seshadri(const Json& j, const std::string& where) {
    SeshadriReport r;
    r.divisor = decode_divisor(member(j, "divisor", where), where + "/divisor");
    r.positivity = enum_from(expect_string(member(j, "positivity", where), where + "/positivity"), kAllPositivity, "positivity");
    r.lower = expect_rational(member(j, "lower", where), where + "/lower");
    r.upper = expect_rational(member(j, "upper", where), where + "/upper");
    r.epsilon_global = expect_rational(member(j, "epsilon_global", where), where + "/epsilon_global");
    r.epsilon_at_section = expect_rational(member(j, "epsilon_at_section", where), where + "/epsilon_at_section");
    const Json& general = member(j, "epsilon_general", where);
    if (!(general.is_string() && general.get<std::string>() == "unknown")) {
        r.epsilon_general = expect_rational(general, where + "/epsilon_general");
    }
    r.general_rule = enum_from(expect_string(member(j, "general_rule", where), where + "/general_rule"), kAllRules, "rule");
    r.assumption = decode_status(member(j, "assumption", where), where + "/assumption");
    const std::string n = where + "/notes";
    const Json& notes = expect_object(member(j, "notes", where), n);
    r.notes.lower = expect_string(member(notes, "lower", n), n + "/lower");
    r.notes.upper = expect_string(member(notes, "upper", n), n + "/upper");
    r.notes.global = expect_string(member(notes, "epsilon_global", n), n + "/epsilon_global");
    r.notes.section = expect_string(member(notes, "epsilon_at_section", n), n + "/epsilon_at_section");
    r.notes.general = expect_string(member(notes, "epsilon_general", n), n + "/epsilon_general");
    return r;
}

inline Json encode_model(const ReportDocument& doc) {
    const BundleSection& b = doc.bundle;
    Json model;
    model["curve"] = {{"genus", b.curve.genus}, {"label", b.curve.label}};
    model["summand_degrees"] = b.summand_degrees ? Json(*b.summand_degrees) : Json(nullptr);
    Json steps = Json::array();
    for (const auto& s : b.hn_steps) steps.push_back(Json::array({s.rank, s.degree}));
    model["hn_steps"] = std::move(steps);
    model["quotient_slopes"] = encode_rationals(b.quotient_slopes);
    model["mu"] = encode_rational(b.mu);
    model["semistable"] = b.semistable;
    model["hn_quotient_ranks"] = b.hn_quotient_ranks;
    if (doc.flag) {
        const FlagSection& f = *doc.flag;
        model["flag"] = {{"quotient_ranks", f.quotient_ranks},
                         {"hn_indices", f.hn_indices},
                         {"subspace_dims", f.subspace_dims},
                         {"theta", f.theta},
                         {"picard_rank", f.picard_rank},
                         {"fiber_dimension", f.fiber_dimension},
                         {"total_dimension", f.total_dimension}};
    } else {
        model["flag"] = nullptr;
    }
    return model;
}

inline void decode_model(const Json& j, ReportDocument& doc) {
    const std::string w = "/model";
    BundleSection& b = doc.bundle;
    const Json& curve = expect_object(member(j, "curve", w), w + "/curve");
    b.curve.genus = expect_integer(member(curve, "genus", w + "/curve"), w + "/curve/genus");
    b.curve.label = expect_string(member(curve, "label", w + "/curve"), w + "/curve/label");
    if (const Json& s = member(j, "summand_degrees", w); !s.is_null()) b.summand_degrees = decode_integers<Integer>(s, w + "/summand_degrees");
    const Json& steps = expect_array(member(j, "hn_steps", w), w + "/hn_steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string s = w + "/hn_steps/" + std::to_string(i);
        const auto pair = decode_integers<Integer>(steps[i], s);
        if (pair.size() != 2) parse_fail(s, "expected [rank, degree]");
        b.hn_steps.push_back({pair[0], pair[1]});
    }
    b.quotient_slopes = decode_rationals(member(j, "quotient_slopes", w), w + "/quotient_slopes");
    b.mu = expect_rational(member(j, "mu", w), w + "/mu");
    const Json& semistable = member(j, "semistable", w);
    if (!semistable.is_boolean()) parse_fail(w + "/semistable", "expected a boolean");
    b.semistable = semistable.get<bool>();
    b.hn_quotient_ranks = decode_integers<Integer>(member(j, "hn_quotient_ranks", w), w + "/hn_quotient_ranks");
    const Json& flag = member(j, "flag", w);
    if (!flag.is_null()) {
        const std::string fw = w + "/flag";
        FlagSection& f = doc.flag.emplace();
        f.quotient_ranks = decode_integers<Integer>(member(flag, "quotient_ranks", fw), fw + "/quotient_ranks");
        f.hn_indices = decode_integers<std::size_t>(member(flag, "hn_indices", fw), fw + "/hn_indices");
        f.subspace_dims = decode_integers<Integer>(member(flag, "subspace_dims", fw), fw + "/subspace_dims");
        f.theta = decode_integers<Integer>(member(flag, "theta", fw), fw + "/theta");
        f.picard_rank = static_cast<std::size_t>(expect_integer(member(flag, "picard_rank", fw), fw + "/picard_rank"));
        f.fiber_dimension = expect_integer(member(flag, "fiber_dimension", fw), fw + "/fiber_dimension");
        f.total_dimension = expect_integer(member(flag, "total_dimension", fw), fw + "/total_dimension");
    }
}

inline Json encode_cones(const ConeSection& c) {
    Json nef = Json::array();
    for (const auto& g : c.nef_generators) {
        nef.push_back({{"name", g.name}, {"divisor", encode_divisor(g.divisor)}, {"expression", g.expression}});
    }
    Json curves = Json::array();
    for (const auto& g : c.curve_generators) {
        curves.push_back({{"name", g.name}, {"coords", encode_rationals(g.curve.coords)}, {"expression", g.expression}});
    }
    Json matrix = Json::array();
    for (const auto& row : c.pairing) matrix.push_back(encode_rationals(row));
    return {{"nef_generators", std::move(nef)}, {"curve_generators", std::move(curves)}, {"pairing_matrix", std::move(matrix)}};
}

inline ConeSection decode_cones(const Json& j) {
    const std::string w = "/cones";
    ConeSection c;
    const Json& nef = expect_array(member(j, "nef_generators", w), w + "/nef_generators");
    for (std::size_t i = 0; i < nef.size(); ++i) {
        const std::string g = w + "/nef_generators/" + std::to_string(i);
        c.nef_generators.push_back({expect_string(member(nef[i], "name", g), g + "/name"),
                                    decode_divisor(member(nef[i], "divisor", g), g + "/divisor"),
                                    expect_string(member(nef[i], "expression", g), g + "/expression")});
    }
    const Json& curves = expect_array(member(j, "curve_generators", w), w + "/curve_generators");
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const std::string g = w + "/curve_generators/" + std::to_string(i);
        c.curve_generators.push_back({expect_string(member(curves[i], "name", g), g + "/name"),
                                      CurveClass{decode_rationals(member(curves[i], "coords", g), g + "/coords")},
                                      expect_string(member(curves[i], "expression", g), g + "/expression")});
    }
    const Json& matrix = expect_array(member(j, "pairing_matrix", w), w + "/pairing_matrix");
    for (std::size_t i = 0; i < matrix.size(); ++i) c.pairing.push_back(decode_rationals(matrix[i], w + "/pairing_matrix/" + std::to_string(i)));
    return c;
}

inline Json encode_assumption(const AssumptionSection& a) {
    Json out = encode_status(a.status);
    out["zeta_theta_gaps"] = a.zeta_theta_gaps;
    Json pseff = Json::array();
    for (const auto& p : a.pseff) {
        pseff.push_back({{"index", p.index}, {"zeta", p.zeta}, {"boundary", p.boundary}, {"pullback", p.pullback}, {"note", p.note}});
    }
    out["pseff_generators"] = std::move(pseff);
    return out;
}

inline AssumptionSection decode_assumption(const Json& j) {
    const std::string w = "/assumption";
    AssumptionSection a;
    a.status = decode_status(j, w);
    a.zeta_theta_gaps = decode_integers<Integer>(member(j, "zeta_theta_gaps", w), w + "/zeta_theta_gaps");
    const Json& pseff = expect_array(member(j, "pseff_generators", w), w + "/pseff_generators");
    for (std::size_t i = 0; i < pseff.size(); ++i) {
        const std::string p = w + "/pseff_generators/" + std::to_string(i);
        a.pseff.push_back({static_cast<std::size_t>(expect_integer(member(pseff[i], "index", p), p + "/index")),
                           expect_integer(member(pseff[i], "zeta", p), p + "/zeta"),
                           expect_string(member(pseff[i], "boundary", p), p + "/boundary"),
                           expect_string(member(pseff[i], "pullback", p), p + "/pullback"),
                           expect_string(member(pseff[i], "note", p), p + "/note")});
    }
    return a;
}

inline Json encode_entry(const DivisorEntry& e) {
    Json out;
    out["name"] = e.name;
    out["input"] = encode_divisor(e.input);
    out["report"] = e.report ? encode_seshadri(*e.report) : Json(nullptr);
    out["error"] = e.error ? Json{{"kind", std::string(to_string(e.error->kind))}, {"message", e.error->message}} : Json(nullptr);
    return out;
}

inline DivisorEntry decode_entry(const Json& j, const std::string& w) {
    DivisorEntry e;
    e.name = expect_string(member(j, "name", w), w + "/name");
    e.input = decode_divisor(member(j, "input", w), w + "/input");
    if (const Json& r = member(j, "report", w); !r.is_null()) e.report = decode_seshadri(r, w + "/report");
    if (const Json& err = member(j, "error", w); !err.is_null()) {
        e.error = ItemError{enum_from(expect_string(member(err, "kind", w + "/error"), w + "/error/kind"), kAllErrorKinds, "error kind"),
                            expect_string(member(err, "message", w + "/error"), w + "/error/message")};
    }
    return e;
}

/// Terminal columns taken by a UTF-8 string; combining marks take none.
inline std::size_t display_width(std::string_view s) {
    std::size_t width = 0;
    for (std::size_t i = 0; i < s.size();) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        std::size_t len = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
        std::uint32_t cp = 0;
        if (len == 1) {
            cp = c;
        } else if (len == 2 && i + 1 < s.size()) {
            cp = ((c & 0x1Fu) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
        } else {
            cp = 0x10000;
        }
        if (!(cp >= 0x0300 && cp <= 0x036F)) ++width;
        i += len;
    }
    return width;
}

inline std::string pad(std::string_view s, std::size_t width) {
    std::string out(s);
    const std::size_t w = display_width(s);
    if (w < width) out.append(width - w, ' ');
    return out;
}

inline std::string pad_left(std::string_view s, std::size_t width) {
    const std::size_t w = display_width(s);
    return std::string(w < width ? width - w : 0, ' ') + std::string(s);
}

/// Rows of cells with each column padded to its widest entry.
inline std::string table(const std::vector<std::vector<std::string>>& rows, std::string_view indent = "  ") {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line(indent);
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += c + 1 == row.size() ? row[c] : pad(row[c], widths[c]) + "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

template <typename T>
std::string join(const std::vector<T>& values, std::string_view sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << sep;
        if constexpr (std::is_same_v<T, Rational>) {
            os << to_string(values[i]);
        } else {
            os << values[i];
        }
    }
    return os.str();
}

inline std::string tuple_text(const std::vector<Rational>& values) { return "(" + join(values, ", ") + ")"; }

/// Matrix rows with right-aligned columns: the identity prints as "1 0 0" per row.
inline std::string matrix_rows(const RationalMatrix& m, std::string_view indent = "  ") {
    std::size_t width = 1;
    for (const auto& row : m)
        for (const auto& v : row) width = std::max(width, to_string(v).size());
    std::string out;
    for (const auto& row : m) {
        std::string line(indent);
        for (std::size_t j = 0; j < row.size(); ++j) line += (j ? " " : "") + pad_left(to_string(row[j]), width);
        out += line + "\n";
    }
    return out;
}

inline std::string render_human(const ReportDocument& doc) {
    std::string out;
    const BundleSection& b = doc.bundle;
    out += "Bundle\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"curve", b.curve.label + " (genus " + std::to_string(b.curve.genus) + ")"});
    if (b.summand_degrees) rows.push_back({"summand degrees", join(*b.summand_degrees)});
    std::string steps;
    for (const auto& s : b.hn_steps) steps += (steps.empty() ? "" : " ") + ("(" + std::to_string(s.rank) + "," + std::to_string(s.degree) + ")");
    rows.push_back({"HN steps (rank,deg)", steps});
    rows.push_back({"quotient slopes", join(b.quotient_slopes)});
    rows.push_back({"μ(E)", to_string(b.mu)});
    rows.push_back({"semistable", b.semistable ? "yes" : "no"});
    rows.push_back({"HN quotient ranks", b.hn_quotient_ranks.empty() ? "-" : join(b.hn_quotient_ranks)});
    out += table(rows);

    if (doc.flag) {
        const FlagSection& f = *doc.flag;
        out += "\nFlag bundle " + flag_name(f.quotient_ranks) + "\n";
        out += table({{"HN indices k", join(f.hn_indices)},
                      {"θ", join(f.theta)},
                      {"subspace dims s", join(f.subspace_dims)},
                      {"Picard rank", std::to_string(f.picard_rank)},
                      {"dimension", "fibre " + std::to_string(f.fiber_dimension) + ", total " + std::to_string(f.total_dimension) +
                                        " (metadata)"}});
    }

    if (doc.cones) {
        const ConeSection& c = *doc.cones;
        out += "\nNef cone generators\n";
        rows.clear();
        for (const auto& g : c.nef_generators) rows.push_back({g.name, tuple_text(g.divisor.coords), g.expression});
        out += table(rows);
        out += "\nCurve cone generators\n";
        rows.clear();
        for (const auto& g : c.curve_generators) rows.push_back({g.name, tuple_text(g.curve.coords), g.expression});
        out += table(rows);
        out += "\nPairing matrix (rows: curves, columns: nef generators)\n";
        out += matrix_rows(c.pairing);
    }

    if (doc.assumption) {
        const AssumptionSection& a = *doc.assumption;
        out += "\nDivisibility assumption: " + std::string(a.status.holds ? "holds" : "fails") + "\n";
        rows = {{"i", "r_{k_i}", "c_i", "ζ_i", "status"}};
        for (std::size_t i = 0; i < a.status.witnesses.size(); ++i) {
            const auto& w = a.status.witnesses[i];
            std::string status = "ok";
            for (const auto& fail : a.status.failures) {
                if (fail.index == i + 1) status = std::string(to_string(fail.reason));
            }
            const std::string rank = doc.flag && i < doc.flag->quotient_ranks.size() ? std::to_string(doc.flag->quotient_ranks[i]) : "?";
            rows.push_back({std::to_string(i + 1), rank, w ? std::to_string(w->hn_index) : "-", w ? std::to_string(w->zeta) : "-", status});
        }
        out += table(rows);
        if (a.status.holds) {
            out += "  ζ − θ: " + join(a.zeta_theta_gaps) + "\n";
            for (const auto& p : a.pseff) {
                out += "  pseff Gr" + subscript(p.index) + ": {" + p.boundary + ", " + p.pullback + "}  " + p.note + "\n";
            }
        }
    }

    for (const auto& e : doc.divisors) {
        out += "\nDivisor " + e.name + " " + std::string(to_string(e.input.basis)) + " " + tuple_text(e.input.coords) + "\n";
        if (e.error) {
            out += "  error: " + e.error->message + "\n";
            continue;
        }
        const SeshadriReport& r = *e.report;
        rows.clear();
        rows.push_back({"nef coordinates", tuple_text(r.divisor.coords), ""});
        rows.push_back({"positivity", std::string(to_string(r.positivity)), ""});
        rows.push_back({"lower bound", to_string(r.lower), r.notes.lower});
        rows.push_back({"upper bound", to_string(r.upper), r.notes.upper});
        rows.push_back({"ε(L)", to_string(r.epsilon_global), r.notes.global});
        rows.push_back({"ε(L,y), y ∈ s(X)", to_string(r.epsilon_at_section), r.notes.section});
        rows.push_back({"ε(L,1)", r.epsilon_general ? to_string(*r.epsilon_general) : "unknown", r.notes.general});
        out += table(rows);
    }
    return out;
}

} // namespace detail

inline std::string render_machine(const ReportDocument& doc) {
    detail::Json out;
    out["spec_version"] = doc.spec_version;
    out["model"] = detail::encode_model(doc);
    out["cones"] = doc.cones ? detail::encode_cones(*doc.cones) : detail::Json(nullptr);
    out["assumption"] = doc.assumption ? detail::encode_assumption(*doc.assumption) : detail::Json(nullptr);
    detail::Json divisors = detail::Json::array();
    for (const auto& e : doc.divisors) divisors.push_back(detail::encode_entry(e));
    out["divisors"] = std::move(divisors);
    out["citations"] = doc.citations;
    return out.dump(2) + "\n";
}

inline std::string render(const ReportDocument& doc, RenderMode mode) {
    return mode == RenderMode::machine ? render_machine(doc) : detail::render_human(doc);
}

inline ReportDocument parse_report(std::string_view text) {
    using detail::Json;
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, "malformed report at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    detail::expect_object(j, "");
    ReportDocument doc;
    doc.spec_version = static_cast<int>(detail::expect_integer(detail::member(j, "spec_version", ""), "/spec_version"));
    if (doc.spec_version != kReportSchemaVersion) {
        throw Error(ErrorKind::ParseError, "unsupported spec_version " + std::to_string(doc.spec_version));
    }
    detail::decode_model(detail::expect_object(detail::member(j, "model", ""), "/model"), doc);
    if (const Json& c = detail::member(j, "cones", ""); !c.is_null()) doc.cones = detail::decode_cones(c);
    if (const Json& a = detail::member(j, "assumption", ""); !a.is_null()) doc.assumption = detail::decode_assumption(a);
    const Json& divisors = detail::expect_array(detail::member(j, "divisors", ""), "/divisors");
    for (std::size_t i = 0; i < divisors.size(); ++i) doc.divisors.push_back(detail::decode_entry(divisors[i], "/divisors/" + std::to_string(i)));
    if (auto it = j.find("citations"); it != j.end()) {
        for (const auto& [key, value] : it->items()) doc.citations[key] = detail::expect_string(value, "/citations/" + key);
    }
    return doc;
}

} // namespace hnflag
