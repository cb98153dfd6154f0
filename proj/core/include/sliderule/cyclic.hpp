#pragma once

// Closed-form N-cycle matrices
//     M2^N = R(phi2)^{-1/2} Z A^N Z^{-1} R(phi2)^{1/2},   M1^N = C^{-1} M2^N C
// where A^N only multiplies the core parameter by N, and location of the
// elliptic/hyperbolic transition surface lleft = 0.

#include <optional>
#include <utility>
#include <vector>

#include "sliderule/decompose.hpp"

namespace sliderule {

/// Oracle threshold: closed forms must match pow_brute within
/// kOracleTol * N * max(1, ||result||_inf).
inline constexpr double kOracleTol = 1e-8;

struct NCycleResult {
    int n{1};
    RealMat2 m2_closed;
    ComplexMat2 m1_closed;
    RealMat2 core_power;  ///< A^N, or (RXR)^N for a parabolic core
    CycleDecomposition decomposition;
    /// Max entrywise |closed - pow_brute| of M2^N (m2_power_closed) or of
    /// M1^N (m1_power_closed).
    double max_oracle_deviation{0};
    /// The deviation measured for the other representation.
    double max_oracle_deviation_other{0};
    bool near_parabolic{false};

    const CoreClass& core() const { return decomposition.core; }
};

/// A^N in the real representation. Elliptic: rotation(N phi);
/// hyperbolic: sign^N hyperbolic_core(N chi); parabolic: sign^N shear(N gamma).
RealMat2 core_power(const CoreClass& core, int n);

/// The same core power in the complex representation (equals to_complex(core_power)).
ComplexMat2 complex_core_power(const CoreClass& core, int n);

/// Closed-form M2^N; the deviation field is measured against
/// pow_brute(cycle_m2(p), n). Throws DomainError for n < 1.
NCycleResult m2_power_closed(const CycleParams& p, int n, double rel_tol = kParabolicTol);

/// Closed-form M1^N in its complex factored form; the deviation field is
/// measured against pow_brute(cycle_m1(p), n).
NCycleResult m1_power_closed(const CycleParams& p, int n, double rel_tol = kParabolicTol);

enum class SweptParameter { eta, phi1, phi2 };

std::string_view to_string(SweptParameter which);
std::optional<SweptParameter> parse_swept_parameter(std::string_view name);

/// Copy of p with the swept field replaced by value.
CycleParams with_value(CycleParams p, SweptParameter which, double value);

/// lleft of the cycle (no classification, never throws on orientation).
double cycle_lleft(const CycleParams& p);

struct TransitionReport {
    SweptParameter swept{SweptParameter::phi2};
    std::pair<double, double> bracket;
    double root{0};
    double gamma_at_root{0};  ///< -2 sinh(lambda) at the root
    double residual_lleft{0};
    double cosh_lambda{1};
};

/// Bisection (at most 200 halvings) of lleft along one parameter. Throws
/// NoSignChange if the endpoints do not straddle a root, and DomainError if
/// the converged residual exceeds 1e-12 cosh(lambda).
TransitionReport find_transition(const CycleParams& p0, SweptParameter swept,
                                 std::pair<double, double> bracket);

enum class RegimeTag { elliptic, hyperbolic, parabolic, unsupported };

std::string_view to_string(RegimeTag tag);

struct SweepRow {
    double value{0};
    RegimeTag tag{RegimeTag::elliptic};
    double lleft{0};
    double half_trace{0};       ///< cosh(l) cos(a) = trace(M2) / 2
    std::optional<double> xi;  ///< absent for parabolic and unsupported rows
};

/// Uniform grid of `steps` points from low to high (both included).
std::vector<SweepRow> sweep_classify(const CycleParams& p0, SweptParameter swept,
                                     std::pair<double, double> range, int steps,
                                     double rel_tol = kParabolicTol);

}  // namespace sliderule
