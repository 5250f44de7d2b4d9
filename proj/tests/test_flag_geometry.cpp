#include "hnflag/flag_geometry.hpp"
#include "hnflag/random.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace hnflag;

namespace {

const HNFiltration& rank5_a() {
    static const HNFiltration hn = hn_filtration(SplitBundle({1, 2, 0, 0, 0}));
    return hn;
}
const HNFiltration& rank5_c() {
    static const HNFiltration hn = hn_filtration(SplitBundle({4, 0, 0, 0, -1}));
    return hn;
}
const HNFiltration& rank7_a() {
    static const HNFiltration hn = hn_filtration(SplitBundle({3, 1, -1, -2, 0, 0, 0}));
    return hn;
}
const HNFiltration& rank7_b() {
    static const HNFiltration hn = hn_filtration(SplitBundle({8, 2, -4, -5, 0, 0, 0}));
    return hn;
}

FlagModel model(const HNFiltration& hn, std::vector<Integer> ranks) { return build_model(hn, make_flag_spec(hn, ranks)); }

std::vector<Rational> q(std::initializer_list<Integer> values) {
    std::vector<Rational> out;
    for (const Integer v : values) out.emplace_back(v);
    return out;
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an hnflag::Error";
    return ErrorKind::InvariantFailure;
}

// Dimension of the partial flag variety with block sizes m_0..m_γ: Σ_{i<j} m_i m_j.
Integer flag_variety_dimension(Integer n, const std::vector<Integer>& quotient_ranks) {
    std::vector<Integer> blocks;
    Integer prev = n;
    for (const Integer r : quotient_ranks) {
        blocks.push_back(prev - r);
        prev = r;
    }
    blocks.push_back(prev);
    Integer dim = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) dim += blocks[i] * blocks[j];
    return dim;
}

} // namespace

TEST(QuotientRanks, Examples) {
    EXPECT_EQ(quotient_ranks(rank5_a()), (std::vector<Integer>{4, 3}));
    EXPECT_EQ(quotient_ranks(validate_hn({{1, 0}, {2, -1}})), (std::vector<Integer>{1}));
    EXPECT_EQ(quotient_ranks(rank7_a()), (std::vector<Integer>{6, 5, 2, 1}));
    EXPECT_TRUE(quotient_ranks(validate_hn({{3, 3}})).empty());
}

TEST(MakeFlagSpec, ResolvesHnIndices) {
    const FlagSpec s53 = make_flag_spec(rank5_c(), {4, 1});
    EXPECT_EQ(s53.hn_indices, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(s53.gamma(), 2u);
    const FlagSpec s51 = make_flag_spec(rank5_a(), {4, 3});
    EXPECT_EQ(s51.hn_indices, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(s51.subspace_dims, (std::vector<Integer>{2, 1}));
    const FlagSpec s54 = make_flag_spec(rank7_a(), {5, 2});
    EXPECT_EQ(s54.hn_indices, (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(s54.subspace_dims, (std::vector<Integer>{5, 2}));
}

TEST(MakeFlagSpec, Errors) {
    EXPECT_EQ(kind_of([] { make_flag_spec(rank5_a(), {2}); }), ErrorKind::RankNotInHNProfile);
    EXPECT_EQ(kind_of([] { make_flag_spec(rank5_a(), {3, 4}); }), ErrorKind::NotStrictlyDecreasing);
    EXPECT_EQ(kind_of([] { make_flag_spec(rank5_a(), {4, 4}); }), ErrorKind::NotStrictlyDecreasing);
    EXPECT_EQ(kind_of([] { make_flag_spec(rank5_a(), {}); }), ErrorKind::EmptyInput);
    EXPECT_EQ(kind_of([] { make_flag_spec(validate_hn({{4, 0}}), {2}); }), ErrorKind::SemistableBundle);
}

TEST(BuildModel, Theta) {
    EXPECT_EQ(model(rank5_c(), {4, 1}).theta(), (std::vector<Integer>{-1, -1}));
    EXPECT_EQ(model(validate_hn({{1, 1}, {2, 1}}), {1}).theta(), (std::vector<Integer>{0}));
    EXPECT_EQ(model(rank7_b(), {6, 5, 2, 1}).theta(), (std::vector<Integer>{-7, -9, -9, -5}));
    EXPECT_EQ(model(rank5_a(), {4, 3}).theta(), (std::vector<Integer>{1, 0}));
}

TEST(BuildModel, RejectsForeignSpec) {
    const FlagSpec spec = make_flag_spec(rank5_a(), {4, 3});
    EXPECT_EQ(kind_of([&] { build_model(rank5_c(), spec); }), ErrorKind::ValidationError);
    EXPECT_EQ(kind_of([&] { build_model(validate_hn({{5, 3}}), spec); }), ErrorKind::SemistableBundle);
}

TEST(BuildModel, PicardRankAndDimensions) {
    EXPECT_EQ(model(rank5_a(), {4, 3}).picard_rank(), 3u);
    EXPECT_EQ(model(rank5_c(), {4, 1}).picard_rank(), 3u);
    EXPECT_EQ(model(validate_hn({{1, 1}, {4, 1}, {5, 0}}), {4, 1}).picard_rank(), 3u);
    const FlagModel m = model(rank5_a(), {4, 3});
    EXPECT_EQ(m.fiber_dimension(), 7);
    EXPECT_EQ(m.total_dimension(), 8);
    // Grassmannian of rank-1 quotients of a rank-2 bundle: a P^1-bundle over the curve.
    EXPECT_EQ(model(validate_hn({{1, 1}, {2, 0}}), {1}).total_dimension(), 2);
}

TEST(Generators, NefBasisAndLabels) {
    const FlagModel m = model(rank5_c(), {4, 1});
    const auto nef = nef_generators(m);
    ASSERT_EQ(nef.size(), 3u);
    EXPECT_EQ(nef[0].divisor, (DivisorClass{Basis::nef, q({1, 0, 0})}));
    EXPECT_EQ(nef[2].divisor, (DivisorClass{Basis::nef, q({0, 0, 1})}));
    EXPECT_EQ(nef[0].name, "ω̃₁");
    EXPECT_EQ(nef[0].expression, "Φ₁*𝒪(1) + 1·𝓛");
    EXPECT_EQ(nef_generators(model(rank5_a(), {4, 3}))[0].expression, "Φ₁*𝒪(1) − 1·𝓛");
    EXPECT_EQ(nef_generators(model(rank5_a(), {4, 3}))[1].expression, "Φ₂*𝒪(1)");
    EXPECT_EQ(nef[2].name, "𝓛");
}

TEST(Generators, CurveBasis) {
    const FlagModel m = model(rank5_a(), {4, 3});
    const auto curves = curve_generators(m);
    ASSERT_EQ(curves.size(), m.gamma() + 1);
    EXPECT_EQ(curves[1].curve, (CurveClass{q({0, 1, 0})}));
    EXPECT_EQ(curves[2].curve, (CurveClass{q({0, 0, 1})}));
    EXPECT_EQ(curves[2].name, "s(X)");
    EXPECT_EQ(curves[2].expression, "section E → E/E₁ → E/E₂");
    EXPECT_EQ(curve_generators(model(rank7_b(), {6, 5, 2, 1})).size(), 5u);
    EXPECT_EQ(subscript(12), "₁₂");
}

TEST(Pairing, Values) {
    const FlagModel m = model(rank5_c(), {4, 1});
    const auto curves = curve_generators(m);
    const auto nef = nef_generators(m);
    EXPECT_EQ(pairing(curves[0].curve, nef[0].divisor), 1);
    EXPECT_EQ(pairing(curves[0].curve, nef[2].divisor), 0);
    EXPECT_EQ(pairing(CurveClass{q({2, 1, 3})}, DivisorClass{Basis::nef, q({4, 5, 6})}), 31);
    EXPECT_EQ(kind_of([] { pairing(CurveClass{q({1, 0, 0})}, DivisorClass{Basis::pluecker, q({1, 0, 0})}); }),
              ErrorKind::BasisMismatch);
    EXPECT_EQ(kind_of([] { pairing(CurveClass{q({1, 0})}, DivisorClass{Basis::nef, q({1, 0, 0})}); }),
              ErrorKind::DimensionMismatch);
}

TEST(Pairing, MatrixIsIdentity) {
    const RationalMatrix i2{q({1, 0}), q({0, 1})};
    EXPECT_EQ(pairing_matrix(model(validate_hn({{1, 1}, {2, 0}}), {1})), i2);
    const RationalMatrix i3{q({1, 0, 0}), q({0, 1, 0}), q({0, 0, 1})};
    EXPECT_EQ(pairing_matrix(model(rank5_a(), {4, 3})), i3);
    const RationalMatrix m5 = pairing_matrix(model(rank7_b(), {6, 5, 2, 1}));
    EXPECT_EQ(m5.size(), 5u);
    EXPECT_TRUE(is_identity(m5));
    EXPECT_FALSE(is_identity(RationalMatrix{q({1, 1}), q({0, 1})}));
}

TEST(ConvertBasis, Examples) {
    const FlagModel m = model(rank5_c(), {4, 1});
    EXPECT_EQ(convert_basis(DivisorClass{Basis::pluecker, q({1, 0, 0})}, m), (DivisorClass{Basis::nef, q({1, 0, -1})}));
    EXPECT_EQ(convert_basis(DivisorClass{Basis::nef, q({0, 0, 1})}, m), (DivisorClass{Basis::pluecker, q({0, 0, 1})}));
    const FlagModel zero = model(validate_hn({{1, 1}, {2, 1}}), {1});
    const DivisorClass d{Basis::nef, {make_rational(3, 4), make_rational(-2, 3)}};
    EXPECT_EQ(convert_basis(d, zero).coords, d.coords);
    EXPECT_EQ(kind_of([&] { convert_basis(DivisorClass{Basis::nef, q({1, 2})}, m); }), ErrorKind::DimensionMismatch);
}

TEST(Classify, Divisors) {
    const FlagModel m = model(rank5_c(), {4, 1});
    EXPECT_EQ(classify_divisor({Basis::nef, q({1, 1, 1})}, m), DivisorPositivity::ample);
    EXPECT_EQ(classify_divisor({Basis::nef, q({0, 2, 3})}, m), DivisorPositivity::nef_not_ample);
    EXPECT_EQ(classify_divisor({Basis::nef, q({-1, 0, 0})}, m), DivisorPositivity::not_nef);
    // Φ₁*𝒪(1) on rank5_c has nef coordinates (1, 0, −1)
    EXPECT_EQ(classify_divisor({Basis::pluecker, q({1, 0, 0})}, m), DivisorPositivity::not_nef);
    EXPECT_EQ(classify_divisor({Basis::pluecker, q({1, 1, 2})}, m), DivisorPositivity::nef_not_ample);
    EXPECT_EQ(classify_divisor({Basis::nef, {make_rational(1, 100), make_rational(1, 3), Rational(2)}}, m),
              DivisorPositivity::ample);
}

TEST(Classify, Curves) {
    EXPECT_EQ(classify_curve(CurveClass{q({1, 0, 2})}), CurveMembership::effective_cone_member);
    EXPECT_EQ(classify_curve(CurveClass{q({0, 0, 0})}), CurveMembership::effective_cone_member);
    EXPECT_EQ(classify_curve(CurveClass{q({-1, 1, 1})}), CurveMembership::outside);
}

TEST(FlagProperties, RandomModels) {
    gen::Rng rng(7);
    for (int t = 0; t < 500; ++t) {
        const FlagModel m = gen::flag_model(rng, 10, -6, 6, 5);
        ASSERT_TRUE(is_identity(pairing_matrix(m)));
        EXPECT_EQ(m.theta().size(), m.gamma());
        EXPECT_EQ(m.picard_rank(), m.gamma() + 1);
        const auto ranks = quotient_ranks(m.hn());
        EXPECT_EQ(ranks.size(), m.hn().length() - 1);
        for (std::size_t j = 1; j < ranks.size(); ++j) EXPECT_GT(ranks[j - 1], ranks[j]);
        const auto& dims = m.spec().subspace_dims;
        for (std::size_t j = 1; j < dims.size(); ++j) EXPECT_GT(dims[j - 1], dims[j]);
        EXPECT_EQ(m.fiber_dimension(), flag_variety_dimension(m.hn().rank(), m.spec().quotient_ranks));
        for (const Basis basis : {Basis::nef, Basis::pluecker}) {
            const DivisorClass d = gen::any_divisor(rng, m.gamma(), basis);
            EXPECT_EQ(convert_basis(convert_basis(d, m), m), d);
        }
    }
}

TEST(FlagProperties, AmpleIsInteriorOfNef) {
    gen::Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        const FlagModel m = gen::flag_model(rng, 8, -4, 4, 4);
        const DivisorClass d = gen::any_divisor(rng, m.gamma(), Basis::nef, 3, 2);
        const auto c = classify_divisor(d, m);
        bool nonneg = true;
        bool positive = true;
        for (const auto& x : d.coords) {
            nonneg = nonneg && x >= 0;
            positive = positive && x > 0;
        }
        EXPECT_EQ(c != DivisorPositivity::not_nef, nonneg);
        EXPECT_EQ(c == DivisorPositivity::ample, positive);
    }
}
