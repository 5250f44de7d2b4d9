#pragma once

// Numerical model of the flag bundle Fl(r_{k_1}, ..., r_{k_γ}, E) -> X whose quotient
// ranks come from the Harder-Narasimhan filtration of E.
//
// Divisors are coordinate vectors against either the nef generators (ω̃_1..ω̃_γ, 𝓛) or
// the Plücker pullbacks (Φ_1*𝒪(1)..Φ_γ*𝒪(1), 𝓛). Curves are coordinate vectors against
// (L_1..L_γ, s(X)). The two generator systems are dual: L_i·ω̃_j = δ_ij, L_i·𝓛 = 0,
// s(X)·ω̃_j = 0, s(X)·𝓛 = 1.

#include "hnflag/bundle.hpp"
#include "hnflag/error.hpp"
#include "hnflag/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hnflag {

/// Unicode subscript rendering of a non-negative index, e.g. 12 -> "₁₂".
inline std::string subscript(std::size_t value) {
    static constexpr std::string_view digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    const std::string plain = std::to_string(value);
    std::string out;
    for (char c : plain) out += digits[c - '0'];
    return out;
}

/// [n - rank E_1, ..., n - rank E_{d-1}]: the ranks r_j of the quotients E/E_j.
inline std::vector<Integer> quotient_ranks(const HNFiltration& hn) {
    std::vector<Integer> out;
    for (std::size_t j = 1; j < hn.length(); ++j) out.push_back(hn.rank() - hn.step(j).rank);
    return out;
}

struct FlagSpec {
    std::vector<Integer> quotient_ranks;  // r_{k_1} > ... > r_{k_γ}
    std::vector<std::size_t> hn_indices;  // k_1 < ... < k_γ, 1-based
    std::vector<Integer> subspace_dims;   // s_{k_j} = n - r_{k_{γ-j+1}}

    std::size_t gamma() const noexcept { return quotient_ranks.size(); }
    bool operator==(const FlagSpec&) const = default;
};

inline std::string flag_name(const std::vector<Integer>& ranks) {
    std::string out = "Fl(";
    for (const Integer r : ranks) out += std::to_string(r) + ",";
    return out + "E)";
}

inline FlagSpec make_flag_spec(const HNFiltration& hn, const std::vector<Integer>& requested) {
    if (hn.is_semistable()) {
        throw Error(ErrorKind::SemistableBundle, "the bundle is semistable (HN filtration of length 1); no flag bundle is attached");
    }
    if (requested.empty()) throw Error(ErrorKind::EmptyInput, "no quotient ranks requested");
    for (std::size_t i = 1; i < requested.size(); ++i) {
        if (requested[i] >= requested[i - 1]) {
            throw Error(ErrorKind::NotStrictlyDecreasing,
                        "quotient ranks must strictly decrease; position " + std::to_string(i + 1) + " has " +
                            std::to_string(requested[i]) + " after " + std::to_string(requested[i - 1]));
        }
    }
    const std::vector<Integer> available = quotient_ranks(hn);
    FlagSpec spec;
    spec.quotient_ranks = requested;
    for (const Integer r : requested) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < available.size(); ++j) {
            if (available[j] == r) k = j + 1;
        }
        if (k == 0) {
            std::string profile;
            for (const Integer a : available) profile += (profile.empty() ? "" : ", ") + std::to_string(a);
            throw Error(ErrorKind::RankNotInHNProfile,
                        "quotient rank " + std::to_string(r) + " is not among the HN quotient ranks {" + profile + "}");
        }
        spec.hn_indices.push_back(k);
    }
    const std::size_t gamma = requested.size();
    for (std::size_t j = 1; j <= gamma; ++j) spec.subspace_dims.push_back(hn.rank() - requested[gamma - j]);
    return spec;
}

class FlagModel {
public:
    FlagModel(HNFiltration hn, FlagSpec spec, std::vector<Integer> theta)
        : hn_(std::move(hn)), spec_(std::move(spec)), theta_(std::move(theta)) {}

    const HNFiltration& hn() const noexcept { return hn_; }
    const FlagSpec& spec() const noexcept { return spec_; }
    /// θ_i = deg(E / E_{k_i}).
    const std::vector<Integer>& theta() const noexcept { return theta_; }
    std::size_t gamma() const noexcept { return spec_.gamma(); }
    std::size_t picard_rank() const noexcept { return spec_.gamma() + 1; }

    /// Dimension of the fibre Fl(E_x): Σ t_j (t_{j+1} - t_j) over the ascending kernel
    /// dimensions t_1 < ... < t_γ, with t_{γ+1} = n.
    Integer fiber_dimension() const {
        std::vector<Integer> t;
        for (const Integer r : spec_.quotient_ranks) t.push_back(hn_.rank() - r);
        t.push_back(hn_.rank());
        Integer dim = 0;
        for (std::size_t j = 0; j + 1 < t.size(); ++j) dim += t[j] * (t[j + 1] - t[j]);
        return dim;
    }
    Integer total_dimension() const { return fiber_dimension() + 1; }

    bool operator==(const FlagModel&) const = default;

private:
    HNFiltration hn_;
    FlagSpec spec_;
    std::vector<Integer> theta_;
};

inline FlagModel build_model(const HNFiltration& hn, const FlagSpec& spec) {
    if (hn.is_semistable()) throw Error(ErrorKind::SemistableBundle, "the bundle is semistable; no flag bundle is attached");
    if (spec.hn_indices.size() != spec.quotient_ranks.size() || spec.gamma() == 0) {
        throw Error(ErrorKind::ValidationError, "flag spec is malformed");
    }
    std::vector<Integer> theta;
    for (std::size_t i = 0; i < spec.gamma(); ++i) {
        const std::size_t k = spec.hn_indices[i];
        if (k < 1 || k >= hn.length() || hn.rank() - hn.step(k).rank != spec.quotient_ranks[i]) {
            throw Error(ErrorKind::ValidationError, "flag spec was not built from this HN filtration");
        }
        theta.push_back(hn.total_degree() - hn.step(k).degree);
    }
    return FlagModel(hn, spec, std::move(theta));
}

enum class Basis { nef, pluecker };

constexpr std::string_view to_string(Basis b) noexcept { return b == Basis::nef ? "nef" : "pluecker"; }

/// Coordinates (a_1..a_γ, b) in the nef basis or (c_1..c_γ, e) in the Plücker basis.
struct DivisorClass {
    Basis basis = Basis::nef;
    std::vector<Rational> coords;

    std::size_t gamma() const noexcept { return coords.empty() ? 0 : coords.size() - 1; }
    bool operator==(const DivisorClass&) const = default;
};

/// Coordinates (p_1..p_γ, r) against (L_1..L_γ, s(X)).
struct CurveClass {
    std::vector<Rational> coords;

    bool operator==(const CurveClass&) const = default;
};

struct LabeledDivisor {
    std::string name;
    DivisorClass divisor;
    std::string expression;

    bool operator==(const LabeledDivisor&) const = default;
};

struct LabeledCurve {
    std::string name;
    CurveClass curve;
    std::string expression;

    bool operator==(const LabeledCurve&) const = default;
};

namespace detail {

inline std::vector<Rational> unit_vector(std::size_t size, std::size_t hot) {
    std::vector<Rational> v(size);
    v[hot] = 1;
    return v;
}

inline void require_size(std::size_t got, const FlagModel& model, std::string_view what) {
    if (got != model.picard_rank()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has " + std::to_string(got) +
                                                      " coordinates; this flag bundle needs " +
                                                      std::to_string(model.picard_rank()));
    }
}

/// "Φ₁*𝒪(1) − 3·𝓛", "Φ₁*𝒪(1) + 1·𝓛", "Φ₁*𝒪(1)".
inline std::string shifted_expression(const std::string& head, Integer shift, const std::string& tail) {
    if (shift == 0) return head;
    if (shift > 0) return head + " − " + std::to_string(shift) + "·" + tail;
    return head + " + " + std::to_string(-shift) + "·" + tail;
}

} // namespace detail

inline std::vector<LabeledDivisor> nef_generators(const FlagModel& model) {
    const std::size_t size = model.picard_rank();
    std::vector<LabeledDivisor> out;
    for (std::size_t i = 0; i < model.gamma(); ++i) {
        const std::string idx = subscript(i + 1);
        out.push_back({"ω̃" + idx, DivisorClass{Basis::nef, detail::unit_vector(size, i)},
                       detail::shifted_expression("Φ" + idx + "*𝒪(1)", model.theta()[i], "𝓛")});
    }
    out.push_back({"𝓛", DivisorClass{Basis::nef, detail::unit_vector(size, size - 1)}, "π*(degree-1 line bundle on X)"});
    return out;
}

inline std::vector<LabeledCurve> curve_generators(const FlagModel& model) {
    const std::size_t size = model.picard_rank();
    std::vector<LabeledCurve> out;
    for (std::size_t i = 0; i < model.gamma(); ++i) {
        out.push_back({"L" + subscript(i + 1), CurveClass{detail::unit_vector(size, i)},
                       "line in a fibre Fl(E_x), moving only the rank-" + std::to_string(model.spec().quotient_ranks[i]) +
                           " quotient"});
    }
    std::string section = "E";
    for (const std::size_t k : model.spec().hn_indices) section += " → E/E" + subscript(k);
    out.push_back({"s(X)", CurveClass{detail::unit_vector(size, size - 1)}, "section " + section});
    return out;
}

/// Intersection number C·D. The divisor must be in the nef basis.
inline Rational pairing(const CurveClass& curve, const DivisorClass& divisor) {
    if (divisor.basis != Basis::nef) {
        throw Error(ErrorKind::BasisMismatch, "pairing needs a nef-basis divisor; convert it first");
    }
    if (curve.coords.size() != divisor.coords.size()) {
        throw Error(ErrorKind::DimensionMismatch, "curve and divisor have different numbers of coordinates");
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < curve.coords.size(); ++i) sum += curve.coords[i] * divisor.coords[i];
    return sum;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix pairing_matrix(const FlagModel& model) {
    const auto curves = curve_generators(model);
    const auto divisors = nef_generators(model);
    RationalMatrix m(curves.size(), std::vector<Rational>(divisors.size()));
    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (std::size_t j = 0; j < divisors.size(); ++j) m[i][j] = pairing(curves[i].curve, divisors[j].divisor);
    }
    return m;
}

inline bool is_identity(const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (m[i][j] != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

/// Switches between the nef and Plücker bases using ω̃_i = Φ_i*𝒪(1) − θ_i𝓛.
inline DivisorClass convert_basis(const DivisorClass& divisor, const FlagModel& model) {
    detail::require_size(divisor.coords.size(), model, "divisor");
    const std::size_t g = model.gamma();
    Rational shift = 0;
    for (std::size_t i = 0; i < g; ++i) shift += divisor.coords[i] * model.theta()[i];
    DivisorClass out = divisor;
    if (divisor.basis == Basis::pluecker) {
        out.basis = Basis::nef;
        out.coords[g] += shift;
    } else {
        out.basis = Basis::pluecker;
        out.coords[g] -= shift;
    }
    return out;
}

inline DivisorClass to_nef_basis(const DivisorClass& divisor, const FlagModel& model) {
    detail::require_size(divisor.coords.size(), model, "divisor");
    return divisor.basis == Basis::nef ? divisor : convert_basis(divisor, model);
}

enum class DivisorPositivity { ample, nef_not_ample, not_nef };

constexpr std::string_view to_string(DivisorPositivity p) noexcept {
    switch (p) {
    case DivisorPositivity::ample: return "ample";
    case DivisorPositivity::nef_not_ample: return "nef_not_ample";
    case DivisorPositivity::not_nef: return "not_nef";
    }
    return "?";
}

/// The nef cone is simplicial on the nef generators, so membership is a sign test on
/// nef-basis coordinates; the interior (all coordinates > 0) is the ample cone.
inline DivisorPositivity classify_divisor(const DivisorClass& divisor, const FlagModel& model) {
    const DivisorClass nef = to_nef_basis(divisor, model);
    bool all_positive = true;
    for (const auto& c : nef.coords) {
        if (c < 0) return DivisorPositivity::not_nef;
        if (c == 0) all_positive = false;
    }
    return all_positive ? DivisorPositivity::ample : DivisorPositivity::nef_not_ample;
}

enum class CurveMembership { effective_cone_member, outside };

constexpr std::string_view to_string(CurveMembership m) noexcept {
    return m == CurveMembership::effective_cone_member ? "effective_cone_member" : "outside";
}

inline CurveMembership classify_curve(const CurveClass& curve) {
    for (const auto& c : curve.coords) {
        if (c < 0) return CurveMembership::outside;
    }
    return CurveMembership::effective_cone_member;
}

} // namespace hnflag
