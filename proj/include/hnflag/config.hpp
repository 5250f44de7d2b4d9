#pragma once

// Problem descriptions as JSON documents:
//
//   {
//     "curve":   {"genus": 0, "label": "X"},
//     "bundle":  {"summands": [{"degree": 1, "multiplicity": 1}, ...]}
//            or  {"hn_steps": [[1, 4], [4, 4], [5, 3]]},
//     "flag":    {"quotient_ranks": [4, 3]},
//     "divisors": [{"name": "L", "basis": "nef", "coords": ["3", "4", "1/2"]}]
//   }
//
// Rationals are strings "p/q" or "n"; plain JSON integers are accepted too. "curve",
// "flag" and "divisors" are optional.

#include "hnflag/bundle.hpp"
#include "hnflag/error.hpp"
#include "hnflag/flag_geometry.hpp"
#include "hnflag/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hnflag {

struct Summand {
    Integer degree = 0;
    Integer multiplicity = 1;

    bool operator==(const Summand&) const = default;
};

struct DivisorSpec {
    std::string name;
    Basis basis = Basis::nef;
    std::vector<Rational> coords;

    bool operator==(const DivisorSpec&) const = default;
};

struct ProblemConfig {
    CurveInfo curve;
    std::variant<std::vector<Summand>, std::vector<HNStep>> bundle;
    std::optional<std::vector<Integer>> flag;
    std::vector<DivisorSpec> divisors;

    bool is_split() const noexcept { return std::holds_alternative<std::vector<Summand>>(bundle); }
    bool operator==(const ProblemConfig&) const = default;
};

inline std::vector<Integer> expand_summands(const std::vector<Summand>& summands) {
    std::vector<Integer> degrees;
    for (const auto& s : summands) degrees.insert(degrees.end(), static_cast<std::size_t>(s.multiplicity), s.degree);
    return degrees;
}

namespace detail {

using Json = nlohmann::ordered_json;

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

[[noreturn]] inline void validation_fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ValidationError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

inline const Json& member(const Json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail(where, "missing key \"" + key + "\"");
    return *it;
}

inline const Json& expect_object(const Json& j, const std::string& where) {
    if (!j.is_object()) parse_fail(where, "expected an object");
    return j;
}

inline const Json& expect_array(const Json& j, const std::string& where) {
    if (!j.is_array()) parse_fail(where, "expected an array");
    return j;
}

inline Integer expect_integer(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) parse_fail(where, "expected an integer");
    return j.get<Integer>();
}

inline std::string expect_string(const Json& j, const std::string& where) {
    if (!j.is_string()) parse_fail(where, "expected a string");
    return j.get<std::string>();
}

inline Rational expect_rational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<Integer>());
    if (!j.is_string()) parse_fail(where, "expected a rational as \"p/q\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        parse_fail(where, e.what());
    }
}

inline Json encode_rational(const Rational& value) {
    if (is_integer(value) && boost::multiprecision::abs(value) < Rational(Integer{1} << 53)) {
        return Json(static_cast<Integer>(boost::multiprecision::numerator(value)));
    }
    return Json(to_string(value));
}

} // namespace detail

inline ProblemConfig parse_config(std::string_view text) {
    using detail::Json;
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, "malformed document at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    detail::expect_object(doc, "");
    ProblemConfig config;

    if (auto it = doc.find("curve"); it != doc.end()) {
        detail::expect_object(*it, "/curve");
        if (auto g = it->find("genus"); g != it->end()) config.curve.genus = detail::expect_integer(*g, "/curve/genus");
        if (auto l = it->find("label"); l != it->end()) config.curve.label = detail::expect_string(*l, "/curve/label");
        if (config.curve.genus < 0) detail::validation_fail("/curve/genus", "genus must be non-negative");
    }

    const Json& bundle = detail::expect_object(detail::member(doc, "bundle", ""), "/bundle");
    const bool has_summands = bundle.contains("summands");
    const bool has_steps = bundle.contains("hn_steps");
    if (has_summands == has_steps) detail::validation_fail("/bundle", "exactly one of \"summands\" and \"hn_steps\" is required");
    if (has_summands) {
        const Json& list = detail::expect_array(bundle["summands"], "/bundle/summands");
        if (list.empty()) detail::validation_fail("/bundle/summands", "at least one summand is required");
        std::vector<Summand> summands;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string where = "/bundle/summands/" + std::to_string(i);
            const Json& s = detail::expect_object(list[i], where);
            Summand summand;
            summand.degree = detail::expect_integer(detail::member(s, "degree", where), where + "/degree");
            if (auto m = s.find("multiplicity"); m != s.end()) summand.multiplicity = detail::expect_integer(*m, where + "/multiplicity");
            if (summand.multiplicity < 1) detail::validation_fail(where + "/multiplicity", "multiplicity must be positive");
            summands.push_back(summand);
        }
        config.bundle = std::move(summands);
    } else {
        const Json& list = detail::expect_array(bundle["hn_steps"], "/bundle/hn_steps");
        if (list.empty()) detail::validation_fail("/bundle/hn_steps", "at least one step is required");
        std::vector<HNStep> steps;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string where = "/bundle/hn_steps/" + std::to_string(i);
            const Json& pair = detail::expect_array(list[i], where);
            if (pair.size() != 2) detail::parse_fail(where, "expected [rank, degree]");
            steps.push_back({detail::expect_integer(pair[0], where + "/0"), detail::expect_integer(pair[1], where + "/1")});
        }
        config.bundle = std::move(steps);
    }

    if (auto it = doc.find("flag"); it != doc.end()) {
        detail::expect_object(*it, "/flag");
        const Json& ranks = detail::expect_array(detail::member(*it, "quotient_ranks", "/flag"), "/flag/quotient_ranks");
        std::vector<Integer> flag;
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            const std::string where = "/flag/quotient_ranks/" + std::to_string(i);
            flag.push_back(detail::expect_integer(ranks[i], where));
            if (flag.back() < 1) detail::validation_fail(where, "quotient ranks must be positive");
        }
        if (flag.empty()) detail::validation_fail("/flag/quotient_ranks", "at least one quotient rank is required");
        config.flag = std::move(flag);
    }

    if (auto it = doc.find("divisors"); it != doc.end()) {
        detail::expect_array(*it, "/divisors");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "/divisors/" + std::to_string(i);
            const Json& d = detail::expect_object((*it)[i], where);
            DivisorSpec spec;
            spec.name = d.contains("name") ? detail::expect_string(d["name"], where + "/name") : "D" + std::to_string(i + 1);
            if (auto b = d.find("basis"); b != d.end()) {
                const std::string basis = detail::expect_string(*b, where + "/basis");
                if (basis == "nef") {
                    spec.basis = Basis::nef;
                } else if (basis == "pluecker") {
                    spec.basis = Basis::pluecker;
                } else {
                    detail::validation_fail(where + "/basis", "basis must be \"nef\" or \"pluecker\", got \"" + basis + "\"");
                }
            }
            const Json& coords = detail::expect_array(detail::member(d, "coords", where), where + "/coords");
            for (std::size_t c = 0; c < coords.size(); ++c) {
                spec.coords.push_back(detail::expect_rational(coords[c], where + "/coords/" + std::to_string(c)));
            }
            if (spec.coords.size() < 2) detail::validation_fail(where + "/coords", "a divisor needs at least two coordinates");
            config.divisors.push_back(std::move(spec));
        }
    }
    return config;
}

inline std::string write_config(const ProblemConfig& config) {
    using detail::Json;
    Json doc;
    doc["curve"] = {{"genus", config.curve.genus}, {"label", config.curve.label}};
    Json bundle = Json::object();
    if (config.is_split()) {
        Json list = Json::array();
        for (const auto& s : std::get<std::vector<Summand>>(config.bundle)) {
            list.push_back({{"degree", s.degree}, {"multiplicity", s.multiplicity}});
        }
        bundle["summands"] = std::move(list);
    } else {
        Json list = Json::array();
        for (const auto& s : std::get<std::vector<HNStep>>(config.bundle)) list.push_back(Json::array({s.rank, s.degree}));
        bundle["hn_steps"] = std::move(list);
    }
    doc["bundle"] = std::move(bundle);
    if (config.flag) doc["flag"] = {{"quotient_ranks", *config.flag}};
    Json divisors = Json::array();
    for (const auto& d : config.divisors) {
        Json coords = Json::array();
        for (const auto& c : d.coords) coords.push_back(to_string(c));
        divisors.push_back({{"name", d.name}, {"basis", std::string(to_string(d.basis))}, {"coords", std::move(coords)}});
    }
    doc["divisors"] = std::move(divisors);
    return doc.dump(2) + "\n";
}

} // namespace hnflag
