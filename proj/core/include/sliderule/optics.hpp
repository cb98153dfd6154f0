#pragma once

// Factor matrices of one multilayer cycle and the conjugation between the
// complex (M1) and real Sp(2) (M2) representations.
//
// Every rotation/phase/boundary/squeeze matrix carries HALF of its argument
// in its entries, e.g. rotation(phi) = [[cos(phi/2), -sin(phi/2)], ...].

#include "sliderule/mat2.hpp"

namespace sliderule {

/// Largest |eta| accepted by CycleParams::validate().
inline constexpr double kMaxEta = 20.0;

/// Optical inputs of one cycle: boundary parameter eta and the phase shifts in
/// the two media (radians).
struct CycleParams {
    double eta{0};
    double phi1{0};
    double phi2{0};

    /// Throws DomainError unless all fields are finite and |eta| <= kMaxEta.
    void validate() const;
};

/// B(eta) = [[cosh(eta/2), sinh(eta/2)], [sinh(eta/2), cosh(eta/2)]].
ComplexMat2 boundary(double eta);

/// P(phi) = diag(e^{-i phi/2}, e^{i phi/2}).
ComplexMat2 phase(double phi);

/// S(eta) = diag(e^{eta/2}, e^{-eta/2}).
RealMat2 squeeze(double eta);

/// R(phi) = [[cos(phi/2), -sin(phi/2)], [sin(phi/2), cos(phi/2)]].
RealMat2 rotation(double phi);

/// Symmetric boost [[cosh l, sinh l], [sinh l, cosh l]] (full argument, not halved).
RealMat2 boost(double lambda);

/// Upper shear [[1, gamma], [0, 1]].
RealMat2 shear(double gamma);

/// Lower shear [[1, 0], [gamma, 1]].
RealMat2 lower_shear(double gamma);

/// Hyperbolic core [[cosh(chi/2), -sinh(chi/2)], [-sinh(chi/2), cosh(chi/2)]].
RealMat2 hyperbolic_core(double chi);

/// C = (1/sqrt 2) [[e^{i pi/4}, e^{i pi/4}], [-e^{-i pi/4}, e^{-i pi/4}]].
const ComplexMat2& conjugator();

/// C^{-1} (= C^dagger).
const ComplexMat2& conjugator_inverse();

/// Real part of C m1 C^{-1}. Throws NotRealAfterConjugation if any imaginary
/// residue reaches 1e-10 * max(1, ||C m1 C^{-1}||_inf).
RealMat2 to_real(const ComplexMat2& m1);

/// C^{-1} m2 C.
ComplexMat2 to_complex(const RealMat2& m2);

/// M1 = B(eta) P(phi1) B(-eta) P(phi2).
ComplexMat2 cycle_m1(const CycleParams& p);

/// M2 = S(eta) R(phi1) S(-eta) R(phi2).
RealMat2 cycle_m2(const CycleParams& p);

}  // namespace sliderule
