#pragma once

// Random instance generators shared by the self-test and the test suites.

#include "hnflag/bundle.hpp"
#include "hnflag/flag_geometry.hpp"
#include "hnflag/rational.hpp"
#include "hnflag/seshadri.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace hnflag::gen {

using Rng = std::mt19937_64;

inline Integer uniform(Rng& rng, Integer lo, Integer hi) { return std::uniform_int_distribution<Integer>(lo, hi)(rng); }

inline SplitBundle split_bundle(Rng& rng, Integer min_rank, Integer max_rank, Integer min_deg, Integer max_deg) {
    const Integer n = uniform(rng, min_rank, max_rank);
    std::vector<Integer> degrees;
    for (Integer i = 0; i < n; ++i) degrees.push_back(uniform(rng, min_deg, max_deg));
    return SplitBundle(std::move(degrees), CurveInfo{uniform(rng, 0, 5), "X"});
}

inline SplitBundle non_semistable_bundle(Rng& rng, Integer max_rank, Integer min_deg, Integer max_deg) {
    for (;;) {
        SplitBundle b = split_bundle(rng, 2, max_rank, min_deg, max_deg);
        if (!is_semistable(b)) return b;
    }
}

/// Nonempty subset of `ranks` in decreasing order, at most `max_size` long.
inline std::vector<Integer> subset(Rng& rng, std::vector<Integer> ranks, std::size_t max_size) {
    std::shuffle(ranks.begin(), ranks.end(), rng);
    const std::size_t size = static_cast<std::size_t>(uniform(rng, 1, static_cast<Integer>(std::min(max_size, ranks.size()))));
    ranks.resize(size);
    std::sort(ranks.begin(), ranks.end(), std::greater<>());
    return ranks;
}

inline FlagModel flag_model(Rng& rng, Integer max_rank, Integer min_deg, Integer max_deg, std::size_t max_gamma) {
    const HNFiltration hn = hn_filtration(non_semistable_bundle(rng, max_rank, min_deg, max_deg));
    const auto ranks = subset(rng, quotient_ranks(hn), max_gamma);
    return build_model(hn, make_flag_spec(hn, ranks));
}

/// Model with γ drawn uniformly from 1..max_gamma whenever the bundle allows it.
inline FlagModel flag_model_with_gamma(Rng& rng, std::size_t gamma, Integer max_rank, Integer min_deg, Integer max_deg) {
    for (;;) {
        const HNFiltration hn = hn_filtration(non_semistable_bundle(rng, max_rank, min_deg, max_deg));
        auto ranks = quotient_ranks(hn);
        if (ranks.size() < gamma) continue;
        std::shuffle(ranks.begin(), ranks.end(), rng);
        ranks.resize(gamma);
        std::sort(ranks.begin(), ranks.end(), std::greater<>());
        return build_model(hn, make_flag_spec(hn, ranks));
    }
}

/// A model whose flag satisfies the divisibility assumption.
inline FlagModel assumption_model(Rng& rng, Integer max_rank, Integer min_deg, Integer max_deg, std::size_t max_gamma) {
    for (;;) {
        const HNFiltration hn = hn_filtration(non_semistable_bundle(rng, max_rank, min_deg, max_deg));
        std::vector<Integer> admissible;
        for (const Integer r : quotient_ranks(hn)) {
            for (const auto& s : hn.steps()) {
                if (s.rank == r && s.degree % r == 0) admissible.push_back(r);
            }
        }
        if (admissible.empty()) continue;
        const auto ranks = subset(rng, admissible, max_gamma);
        return build_model(hn, make_flag_spec(hn, ranks));
    }
}

/// p/q with |p| <= max_num and 1 <= q <= max_den.
inline Rational rational(Rng& rng, Integer max_num, Integer max_den) {
    return make_rational(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
}

inline Rational nonneg_rational(Rng& rng, Integer max_num, Integer max_den) {
    if (uniform(rng, 0, 7) == 0) return Rational(0);
    return make_rational(uniform(rng, 0, max_num), uniform(rng, 1, max_den));
}

inline Rational positive_rational(Rng& rng, Integer max_num, Integer max_den) {
    return make_rational(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
}

inline DivisorClass nef_divisor(Rng& rng, std::size_t gamma, Integer max_num = 20, Integer max_den = 6) {
    DivisorClass d{Basis::nef, {}};
    for (std::size_t i = 0; i <= gamma; ++i) d.coords.push_back(nonneg_rational(rng, max_num, max_den));
    return d;
}

inline DivisorClass any_divisor(Rng& rng, std::size_t gamma, Basis basis, Integer max_num = 20, Integer max_den = 6) {
    DivisorClass d{basis, {}};
    for (std::size_t i = 0; i <= gamma; ++i) d.coords.push_back(rational(rng, max_num, max_den));
    return d;
}

} // namespace hnflag::gen
