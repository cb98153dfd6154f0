#pragma once

// Reduction of one cycle S R(phi1) S^-1 R(phi2) to
//     R(phi2)^{-1/2} * Z A Z^{-1} * R(phi2)^{1/2}
// where A is rotation-like (elliptic), boost-like (hyperbolic) or, on the
// transition surface, RXR itself is a shear (parabolic).

#include <string_view>
#include <utility>
#include <variant>

#include "sliderule/mat2.hpp"
#include "sliderule/optics.hpp"

namespace sliderule {

/// Default relative parabolic tolerance: |lleft| <= kParabolicTol * cosh(lambda).
inline constexpr double kParabolicTol = 1e-9;

/// Upper edge of the near-parabolic warning band, relative to cosh(lambda).
inline constexpr double kNearParabolicBand = 1e-6;

/// S(eta) R(phi1) S(-eta) == rxr(lambda, phi3).
struct SandwichParams {
    double lambda{0};  ///< signed: sinh(lambda) = sin(phi1/2) sinh(eta)
    double phi3{0};    ///< in [-pi, pi]; sin(phi3) has the sign of sin(phi1/2)
};

/// A = rotation(phi).
struct Elliptic {
    double phi{0};
};

/// A = sign * hyperbolic_core(chi). sign is -1 only when cosh(l) cos(a) < -1.
struct Hyperbolic {
    double chi{0};
    int sign{1};
};

/// RXR = sign * shear(gamma), gamma = -2 sign sinh(lambda).
struct Parabolic {
    double gamma{0};
    int sign{1};
};

enum class CoreKind { elliptic, hyperbolic, parabolic };

std::string_view to_string(CoreKind kind);

struct CoreClass {
    std::variant<Elliptic, Hyperbolic, Parabolic> form;
    double xi{0};  ///< squeeze of Z; 0 for parabolic

    CoreKind kind() const { return static_cast<CoreKind>(form.index()); }
    std::string_view tag() const { return to_string(kind()); }
};

struct CycleDecomposition {
    CycleParams params;
    SandwichParams sandwich;
    double alpha{0};
    CoreClass core;
    double lleft{0};             ///< sinh(lambda) - sin(alpha) cosh(lambda)
    bool near_parabolic{false};  ///< |lleft| < kNearParabolicBand * cosh(lambda)
};

/// Solves S(eta) R(phi1) S(-eta) = rxr(lambda, phi3). Throws DomainError when
/// the arccos argument cos(phi1/2)/cosh(lambda) exceeds 1 by more than 1e-9.
SandwichParams srs_decompose(double eta, double phi1);

/// alpha = phi3 + phi2 / 2.
double alpha_of(double phi3, double phi2);

/// [[ch cos a, -(ch sin a + sh)], [ch sin a - sh, ch cos a]] with ch = cosh l, sh = sinh l.
RealMat2 rxr(double lambda, double alpha);

/// sinh(lambda) - sin(alpha) cosh(lambda): the negated lower-left entry of rxr.
double lleft_of(double lambda, double alpha);

/// Classifies rxr(lambda, alpha). |lleft| <= tol (absolute) is parabolic;
/// otherwise opposite-signed off-diagonals give elliptic, same-signed give
/// hyperbolic, with xi = 1/2 ln(|upper-right| / |lower-left|).
/// Throws UnsupportedOrientation when the upper-right entry is within tol of
/// zero but the lower-left is not.
CoreClass classify(double lambda, double alpha, double tol);

/// Z = squeeze(xi) and the core A with Z A Z^{-1} = rxr. Throws
/// ParabolicNotSplittable for a parabolic core.
std::pair<RealMat2, RealMat2> zaz_split(const CoreClass& core);

/// Full reduction of one cycle. rel_tol is relative: the parabolic band is
/// |lleft| <= rel_tol * cosh(lambda).
CycleDecomposition decompose_cycle(const CycleParams& p, double rel_tol = kParabolicTol);

/// R(phi2)^{-1/2} Z A Z^{-1} R(phi2)^{1/2}, with rxr in place of Z A Z^{-1}
/// for a parabolic core. Reproduces cycle_m2(d.params).
RealMat2 reassemble(const CycleDecomposition& d);

}  // namespace sliderule
