#pragma once

// Bundles on a smooth projective curve: split bundles given by summand degrees,
// and Harder-Narasimhan filtrations given by their cumulative (rank, degree) steps.

#include "hnflag/error.hpp"
#include "hnflag/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace hnflag {

/// Base curve. The genus is carried for the record; nothing downstream reads it.
struct CurveInfo {
    Integer genus = 0;
    std::string label = "X";

    bool operator==(const CurveInfo&) const = default;
};

inline CurveInfo make_curve(Integer genus, std::string label) {
    if (genus < 0) throw Error(ErrorKind::ValidationError, "curve genus must be non-negative, got " + std::to_string(genus));
    return CurveInfo{genus, std::move(label)};
}

/// Direct sum of line bundles of the given degrees.
class SplitBundle {
public:
    explicit SplitBundle(std::vector<Integer> summand_degrees, CurveInfo curve = {})
        : degrees_(std::move(summand_degrees)), curve_(std::move(curve)) {
        if (degrees_.empty()) throw Error(ErrorKind::EmptyInput, "a split bundle needs at least one summand");
        if (curve_.genus < 0) throw Error(ErrorKind::ValidationError, "curve genus must be non-negative");
    }

    const std::vector<Integer>& summand_degrees() const noexcept { return degrees_; }
    const CurveInfo& curve() const noexcept { return curve_; }
    Integer rank() const noexcept { return static_cast<Integer>(degrees_.size()); }
    Integer total_degree() const noexcept { return std::accumulate(degrees_.begin(), degrees_.end(), Integer{0}); }

private:
    std::vector<Integer> degrees_;
    CurveInfo curve_;
};

/// One graded piece E_j / E_{j-1} of a filtration.
struct SemistablePiece {
    Integer rank = 1;
    Integer degree = 0;

    bool operator==(const SemistablePiece&) const = default;
};

inline Rational slope(const SemistablePiece& piece) {
    if (piece.rank < 1) throw Error(ErrorKind::ValidationError, "slope of a piece with rank " + std::to_string(piece.rank));
    return make_rational(piece.degree, piece.rank);
}

/// Cumulative step (rank E_j, deg E_j).
struct HNStep {
    Integer rank = 0;
    Integer degree = 0;

    bool operator==(const HNStep&) const = default;
};

/// 0 = E_0 ⊂ E_1 ⊂ ... ⊂ E_d = E with semistable quotients of strictly decreasing slope.
/// Instances always satisfy the rank and slope invariants; build through validate_hn
/// or hn_filtration.
class HNFiltration {
public:
    static HNFiltration from_steps(std::vector<HNStep> steps);

    const std::vector<HNStep>& steps() const noexcept { return steps_; }
    /// Filtration length d.
    std::size_t length() const noexcept { return steps_.size(); }
    Integer rank() const noexcept { return steps_.back().rank; }
    Integer total_degree() const noexcept { return steps_.back().degree; }
    bool is_semistable() const noexcept { return steps_.size() == 1; }

    /// Step j in 1..d.
    const HNStep& step(std::size_t j) const { return steps_.at(j - 1); }

    std::vector<SemistablePiece> pieces() const {
        std::vector<SemistablePiece> out;
        out.reserve(steps_.size());
        HNStep prev{};
        for (const auto& s : steps_) {
            out.push_back(SemistablePiece{s.rank - prev.rank, s.degree - prev.degree});
            prev = s;
        }
        return out;
    }

    std::vector<Rational> quotient_slopes() const {
        std::vector<Rational> out;
        for (const auto& p : pieces()) out.push_back(slope(p));
        return out;
    }

    /// μ(E).
    Rational bundle_slope() const { return make_rational(total_degree(), rank()); }

    bool operator==(const HNFiltration&) const = default;

private:
    explicit HNFiltration(std::vector<HNStep> steps) : steps_(std::move(steps)) {}
    std::vector<HNStep> steps_;
};

inline HNFiltration HNFiltration::from_steps(std::vector<HNStep> steps) {
    if (steps.empty()) throw Error(ErrorKind::EmptyInput, "HN filtration needs at least one step");
    HNStep prev{};
    Rational prev_slope;
    for (std::size_t j = 0; j < steps.size(); ++j) {
        const HNStep& s = steps[j];
        if (s.rank <= prev.rank) {
            throw Error(ErrorKind::NonIncreasingRank,
                        "step " + std::to_string(j + 1) + " has rank " + std::to_string(s.rank) +
                            ", not greater than " + std::to_string(prev.rank));
        }
        const Rational mu = make_rational(s.degree - prev.degree, s.rank - prev.rank);
        if (j > 0 && mu >= prev_slope) {
            throw Error(ErrorKind::NonDecreasingSlope,
                        "quotient slope " + to_string(mu) + " at step " + std::to_string(j + 1) +
                            " does not drop below " + to_string(prev_slope));
        }
        prev = s;
        prev_slope = mu;
    }
    return HNFiltration(std::move(steps));
}

/// Accepts user-asserted HN data for a bundle that need not be split.
inline HNFiltration validate_hn(std::vector<HNStep> steps) { return HNFiltration::from_steps(std::move(steps)); }

/// For a split bundle the HN pieces are the isotypic blocks of equal degree, in
/// decreasing degree order.
inline HNFiltration hn_filtration(const SplitBundle& bundle) {
    std::map<Integer, Integer, std::greater<>> multiplicity;
    for (Integer deg : bundle.summand_degrees()) ++multiplicity[deg];
    std::vector<HNStep> steps;
    steps.reserve(multiplicity.size());
    HNStep acc{};
    for (const auto& [deg, count] : multiplicity) {
        acc.rank += count;
        acc.degree += deg * count;
        steps.push_back(acc);
    }
    return HNFiltration::from_steps(std::move(steps));
}

inline bool is_semistable(const SplitBundle& bundle) { return hn_filtration(bundle).is_semistable(); }

inline constexpr Integer kDefaultOracleCap = 12;

/// Exhaustive search over split subbundles: repeatedly take the subset of the remaining
/// summands with the largest slope (largest rank on ties) as the next HN piece.
/// Cost is O(n 2^n); ranks above `cap` are refused.
inline HNFiltration hn_brute_force_oracle(const SplitBundle& bundle, Integer cap = kDefaultOracleCap) {
    if (bundle.rank() > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "rank " + std::to_string(bundle.rank()) + " exceeds oracle cap " + std::to_string(cap));
    }
    std::vector<Integer> remaining = bundle.summand_degrees();
    std::vector<HNStep> steps;
    HNStep acc{};
    while (!remaining.empty()) {
        const std::size_t m = remaining.size();
        std::uint64_t best_mask = 0;
        Integer best_deg = 0;
        Integer best_rank = 0;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
            Integer deg = 0;
            Integer rk = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (mask & (std::uint64_t{1} << i)) {
                    deg += remaining[i];
                    ++rk;
                }
            }
            // compare deg/rk against best_deg/best_rank without division
            const bool better = best_rank == 0 || deg * best_rank > best_deg * rk ||
                                (deg * best_rank == best_deg * rk && rk > best_rank);
            if (better) {
                best_mask = mask;
                best_deg = deg;
                best_rank = rk;
            }
        }
        acc.rank += best_rank;
        acc.degree += best_deg;
        steps.push_back(acc);
        std::vector<Integer> rest;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(best_mask & (std::uint64_t{1} << i))) rest.push_back(remaining[i]);
        }
        remaining = std::move(rest);
    }
    return HNFiltration::from_steps(std::move(steps));
}

} // namespace hnflag
