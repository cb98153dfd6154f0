#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

namespace sliderule {
namespace {

using testing::kPi;
using testing::MatNear;
using testing::Sampler;

const CycleParams kEllipticCycle{0.6, kPi / 2, kPi / 3};
const CycleParams kHyperbolicCycle{1.0, kPi, -5 * kPi / 6};  // lambda = 1, alpha = pi/12
const CycleParams kSweepBase{0.6, kPi / 2, 0.0};

CycleParams parabolic_cycle() {
    const TransitionReport t = find_transition(kSweepBase, SweptParameter::phi2, {-2.0, 0.0});
    return with_value(kSweepBase, SweptParameter::phi2, t.root);
}

TEST(CorePower, EllipticCoreToTheFirstPowerIsItself) {
    const CoreClass core{Elliptic{0.8}, 0.3};
    EXPECT_TRUE(MatNear(core_power(core, 1), zaz_split(core).second, 0.0));
}

TEST(CorePower, ParabolicIsLinearInN) {
    const CoreClass core{Parabolic{-1.25, 1}, 0.0};
    EXPECT_EQ(core_power(core, 7), shear(7 * -1.25));
    const CoreClass flipped{Parabolic{0.5, -1}, 0.0};
    EXPECT_TRUE(MatNear(core_power(flipped, 3), pow_brute(scale(shear(0.5), -1.0), 3), 1e-15));
}

TEST(CorePower, HyperbolicMatchesRepeatedProduct) {
    const CoreClass core = classify(1.0, kPi / 12, 1e-9);
    const RealMat2 a = zaz_split(core).second;
    const RealMat2 expected = pow_brute(a, 5);
    EXPECT_TRUE(MatNear(core_power(core, 5), expected, 1e-9 * norm_inf(expected)));

    const CoreClass negative = classify(1.0, kPi - kPi / 12, 1e-9);
    const RealMat2 an = zaz_split(negative).second;
    for (int n : {1, 2, 5, 6}) {
        const RealMat2 e = pow_brute(an, n);
        EXPECT_TRUE(MatNear(core_power(negative, n), e, 1e-9 * norm_inf(e))) << n;
    }
}

TEST(CorePower, ComplexFormIsConjugateOfRealForm) {
    const CoreClass cores[] = {
        {Elliptic{1.3}, 0.2},     {Hyperbolic{0.9, 1}, -0.4}, {Hyperbolic{0.9, -1}, 0.1},
        {Parabolic{-1.1, 1}, 0.0}, {Parabolic{0.7, -1}, 0.0},
    };
    for (const CoreClass& core : cores) {
        for (int n : {1, 2, 7}) {
            const RealMat2 real = core_power(core, n);
            EXPECT_TRUE(MatNear(complex_core_power(core, n), to_complex(real), 1e-12 * norm_inf(real)));
        }
    }
}

TEST(CorePower, RejectsNonPositiveN) {
    EXPECT_THROW(core_power(CoreClass{Elliptic{1.0}, 0.0}, 0), DomainError);
    EXPECT_THROW(m2_power_closed(kEllipticCycle, 0), DomainError);
}

TEST(PowerClosed, PureRotationCycle) {
    const CycleParams p{0.0, 0.9, -0.4};
    for (int n : {1, 3, 17}) {
        const NCycleResult r = m2_power_closed(p, n);
        EXPECT_TRUE(MatNear(r.m2_closed, rotation(n * 0.5), 1e-13));
        EXPECT_TRUE(MatNear(r.m1_closed, phase(n * 0.5), 1e-13));
        EXPECT_LT(r.max_oracle_deviation, 1e-12);
    }
}

TEST(PowerClosed, SingleCycleReproducesOneCycle) {
    Sampler rng(41);
    for (int i = 0; i < 500; ++i) {
        const CycleParams p = rng.params();
        const NCycleResult r = m1_power_closed(p, 1);
        ASSERT_TRUE(MatNear(r.m2_closed, cycle_m2(p), 1e-10));
        ASSERT_TRUE(MatNear(r.m1_closed, cycle_m1(p), 1e-10));
    }
}

TEST(PowerClosed, FrozenExampleAgainstOracle) {
    const NCycleResult r = m2_power_closed(kEllipticCycle, 25);
    EXPECT_EQ(r.n, 25);
    EXPECT_EQ(r.core().kind(), CoreKind::elliptic);
    const RealMat2 brute = pow_brute(cycle_m2(kEllipticCycle), 25);
    EXPECT_TRUE(MatNear(r.m2_closed, brute, scaled_tolerance(kOracleTol, 25, brute)));
    EXPECT_DOUBLE_EQ(r.max_oracle_deviation, max_abs_diff(r.m2_closed, brute));

    const NCycleResult c = m1_power_closed(kEllipticCycle, 25);
    const ComplexMat2 brute1 = pow_brute(cycle_m1(kEllipticCycle), 25);
    EXPECT_DOUBLE_EQ(c.max_oracle_deviation, max_abs_diff(c.m1_closed, brute1));
    EXPECT_LE(c.max_oracle_deviation, scaled_tolerance(kOracleTol, 25, brute1));
}

TEST(PowerClosed, HyperbolicAgainstOracle) {
    for (int n : {1, 5, 30}) {
        const NCycleResult r = m2_power_closed(kHyperbolicCycle, n);
        ASSERT_EQ(r.core().kind(), CoreKind::hyperbolic);
        EXPECT_LE(r.max_oracle_deviation, scaled_tolerance(kOracleTol, n, r.m2_closed));
        EXPECT_LE(r.max_oracle_deviation_other, scaled_tolerance(kOracleTol, n, r.m1_closed));
    }
}

TEST(PowerClosed, ParabolicCenterMatrix) {
    const CycleParams p = parabolic_cycle();
    const NCycleResult r = m1_power_closed(p, 10);
    ASSERT_EQ(r.core().kind(), CoreKind::parabolic);
    EXPECT_TRUE(r.near_parabolic);

    const double sh = std::sinh(r.decomposition.sandwich.lambda);
    const complex i{0, 1};
    const ComplexMat2 center{1.0 - 10.0 * i * sh, 10.0 * i * sh, -10.0 * i * sh, 1.0 + 10.0 * i * sh};
    EXPECT_TRUE(MatNear(complex_core_power(r.core(), 10), center, 1e-13));
    EXPECT_TRUE(MatNear(r.m1_closed, phase(-p.phi2 / 2) * center * phase(p.phi2 / 2), 1e-13));
    EXPECT_LE(r.max_oracle_deviation, 1e-8);
    EXPECT_LE(r.max_oracle_deviation_other, 1e-8);
}

TEST(PowerClosed, RandomSamplesAgainstOracle) {
    Sampler rng(42);
    for (int i = 0; i < 300; ++i) {
        const CycleParams p = rng.params();
        const int n = rng.integer(1, 30);
        const NCycleResult r = m2_power_closed(p, n);
        ASSERT_LE(r.max_oracle_deviation, scaled_tolerance(kOracleTol, n, r.m2_closed));
        ASSERT_LE(r.max_oracle_deviation_other, scaled_tolerance(kOracleTol, n, r.m1_closed));
    }
}

TEST(PowerClosed, SemigroupConsistency) {
    Sampler rng(43);
    for (int i = 0; i < 300; ++i) {
        const CycleParams p = rng.params();
        const int a = rng.integer(1, 15);
        const int b = rng.integer(1, 15);
        const RealMat2 whole = m2_power_closed(p, a + b).m2_closed;
        const RealMat2 split = m2_power_closed(p, a).m2_closed * m2_power_closed(p, b).m2_closed;
        ASSERT_TRUE(MatNear(whole, split, scaled_tolerance(kOracleTol, a + b, whole)));
    }
}

TEST(PowerClosed, RealFormIsConjugateOfComplexForm) {
    Sampler rng(44);
    for (int i = 0; i < 300; ++i) {
        const CycleParams p = rng.params();
        const int n = rng.integer(1, 30);
        const NCycleResult r = m2_power_closed(p, n);
        ASSERT_TRUE(MatNear(to_real(r.m1_closed), r.m2_closed, scaled_tolerance(1e-10, n, r.m2_closed)));
    }
}

TEST(Regimes, EllipticCorePowersStayBounded) {
    Sampler rng(45);
    int checked = 0;
    while (checked < 20) {
        const CycleDecomposition d = decompose_cycle(rng.params());
        if (d.core.kind() != CoreKind::elliptic) continue;
        ++checked;
        for (int n = 1; n <= 10000; n += 37) {
            ASSERT_LE(max_abs_entry(core_power(d.core, n)), 1.0 + 1e-15);
        }
    }
}

TEST(Regimes, HyperbolicTraceGrowsAsCosh) {
    const CoreClass core = classify(1.0, kPi / 12, 1e-9);
    const double chi = std::get<Hyperbolic>(core.form).chi;
    double previous = 0;
    for (int n = 1; n <= 60; ++n) {
        const double tr = trace(core_power(core, n));
        EXPECT_NEAR(tr, 2 * std::cosh(n * chi / 2), 1e-9 * tr);
        EXPECT_GE(tr, previous);
        previous = tr;
    }
}

TEST(Regimes, ParabolicGrowthIsLinear) {
    const CycleParams p = parabolic_cycle();
    const CycleDecomposition d = decompose_cycle(p);
    ASSERT_EQ(d.core.kind(), CoreKind::parabolic);
    const double gamma = std::get<Parabolic>(d.core.form).gamma;
    const RealMat2 one = rxr(d.sandwich.lambda, d.alpha);
    RealMat2 brute = RealMat2::identity();
    for (int n = 1; n <= 1000; ++n) {
        brute = brute * one;
        const RealMat2 closed = core_power(d.core, n);
        ASSERT_EQ(closed.b, n * gamma);
        ASSERT_NEAR(brute.b, closed.b, 1e-8 * std::abs(closed.b));
    }
}

TEST(FindTransition, LocatesBothRootsInPhi2) {
    const TransitionReport low = find_transition(kSweepBase, SweptParameter::phi2, {-2.0, 0.0});
    // Roots computed by 40-digit root finding on lleft.
    EXPECT_NEAR(low.root, -0.89410607116495365585, 1e-12);
    EXPECT_NEAR(low.gamma_at_root, -0.90036413040745619937, 1e-13);
    EXPECT_LE(std::abs(low.residual_lleft), 1e-12 * low.cosh_lambda);
    EXPECT_EQ(low.swept, SweptParameter::phi2);
    EXPECT_EQ(low.bracket, std::make_pair(-2.0, 0.0));

    const TransitionReport high = find_transition(kSweepBase, SweptParameter::phi2, {2.0, 5.0});
    EXPECT_NEAR(high.root, 3.6970579504479486925, 1e-12);
    EXPECT_EQ(decompose_cycle(with_value(kSweepBase, SweptParameter::phi2, high.root)).core.kind(),
              CoreKind::parabolic);
}

TEST(FindTransition, SweepsEtaAndPhi1) {
    const CycleParams base{0.6, kPi / 2, -0.8};
    for (SweptParameter which : {SweptParameter::eta, SweptParameter::phi1}) {
        const auto rows = sweep_classify(base, which, {0.05, 3.0}, 400);
        for (std::size_t k = 1; k < rows.size(); ++k) {
            if (std::signbit(rows[k - 1].lleft) == std::signbit(rows[k].lleft)) continue;
            const TransitionReport t = find_transition(base, which, {rows[k - 1].value, rows[k].value});
            EXPECT_LE(std::abs(t.residual_lleft), 1e-12 * t.cosh_lambda);
            EXPECT_EQ(decompose_cycle(with_value(base, which, t.root)).core.kind(), CoreKind::parabolic);
        }
    }
}

TEST(FindTransition, SameSignBracketThrows) {
    EXPECT_THROW(find_transition(kSweepBase, SweptParameter::phi2, {0.0, 1.0}), NoSignChange);
}

TEST(FindTransition, WorksWithReversedBracket) {
    const TransitionReport t = find_transition(kSweepBase, SweptParameter::phi2, {0.0, -2.0});
    EXPECT_NEAR(t.root, -0.89410607116495365585, 1e-12);
}

TEST(SweepClassify, EllipticOnlyRange) {
    const auto rows = sweep_classify(kSweepBase, SweptParameter::phi2, {0.0, 3.0}, 31);
    ASSERT_EQ(rows.size(), 31u);
    for (const SweepRow& r : rows) {
        EXPECT_EQ(r.tag, RegimeTag::elliptic) << r.value;
        EXPECT_LT(std::abs(r.half_trace), 1.0);
        EXPECT_TRUE(r.xi.has_value());
    }
}

TEST(SweepClassify, StraddlingRangeChangesClass) {
    const auto rows = sweep_classify(kSweepBase, SweptParameter::phi2, {-2.0, 0.0}, 21);
    ASSERT_EQ(rows.front().tag, RegimeTag::hyperbolic);
    ASSERT_EQ(rows.back().tag, RegimeTag::elliptic);
    EXPECT_EQ(rows.front().value, -2.0);
    EXPECT_EQ(rows.back().value, 0.0);
    EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(),
                               [](const SweepRow& x, const SweepRow& y) { return x.value < y.value; }));
    const auto change = std::adjacent_find(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
        return x.tag != y.tag;
    });
    ASSERT_NE(change, rows.end());
    EXPECT_NE(std::signbit(change->lleft), std::signbit(std::next(change)->lleft));
}

TEST(SweepClassify, TwoStepsGiveTheEndpoints) {
    const auto rows = sweep_classify(kSweepBase, SweptParameter::phi2, {-1.0, 1.0}, 2);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].value, -1.0);
    EXPECT_EQ(rows[1].value, 1.0);
    EXPECT_THROW(sweep_classify(kSweepBase, SweptParameter::phi2, {-1.0, 1.0}, 1), DomainError);
}

TEST(SweepClassify, RowsMatchDirectClassification) {
    const auto rows = sweep_classify(kSweepBase, SweptParameter::eta, {-2.0, 2.0}, 41);
    for (const SweepRow& r : rows) {
        const CycleParams p = with_value(kSweepBase, SweptParameter::eta, r.value);
        try {
            const CycleDecomposition d = decompose_cycle(p);
            EXPECT_EQ(to_string(r.tag), d.core.tag());
            EXPECT_EQ(r.lleft, d.lleft);
            EXPECT_NEAR(r.half_trace, trace(cycle_m2(p)) / 2, 1e-12);
        } catch (const UnsupportedOrientation&) {
            EXPECT_EQ(r.tag, RegimeTag::unsupported);
        }
    }
}

TEST(SweptParameterNames, RoundTrip) {
    for (SweptParameter s : {SweptParameter::eta, SweptParameter::phi1, SweptParameter::phi2}) {
        EXPECT_EQ(parse_swept_parameter(to_string(s)), s);
    }
    EXPECT_FALSE(parse_swept_parameter("lambda").has_value());
}

TEST(NearParabolic, FlagFollowsDistanceToSurface) {
    const CycleParams p = parabolic_cycle();
    EXPECT_TRUE(m2_power_closed(with_value(p, SweptParameter::phi2, p.phi2 + 1e-8), 3).near_parabolic);
    EXPECT_FALSE(m2_power_closed(with_value(p, SweptParameter::phi2, p.phi2 + 1e-3), 3).near_parabolic);
}

}  // namespace
}  // namespace sliderule
