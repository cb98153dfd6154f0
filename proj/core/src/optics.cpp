#include "sliderule/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sliderule {

namespace {

constexpr double kImagResidue = 1e-10;

ComplexMat2 make_conjugator() {
    const complex w = std::polar(1.0, std::numbers::pi / 4);
    const double r = 1.0 / std::numbers::sqrt2;
    return {r * w, r * w, -r * std::conj(w), r * std::conj(w)};
}

}  // namespace

void CycleParams::validate() const {
    if (!std::isfinite(eta) || !std::isfinite(phi1) || !std::isfinite(phi2)) {
        throw DomainError("cycle parameters must be finite");
    }
    if (std::abs(eta) > kMaxEta) {
        throw DomainError("|eta| must not exceed " + std::to_string(kMaxEta));
    }
}

ComplexMat2 boundary(double eta) {
    const double ch = std::cosh(eta / 2);
    const double sh = std::sinh(eta / 2);
    return {complex{ch}, complex{sh}, complex{sh}, complex{ch}};
}

ComplexMat2 phase(double phi) {
    return {std::polar(1.0, -phi / 2), complex{}, complex{}, std::polar(1.0, phi / 2)};
}

RealMat2 squeeze(double eta) { return {std::exp(eta / 2), 0.0, 0.0, std::exp(-eta / 2)}; }

RealMat2 rotation(double phi) {
    const double c = std::cos(phi / 2);
    const double s = std::sin(phi / 2);
    return {c, -s, s, c};
}

RealMat2 boost(double lambda) {
    const double ch = std::cosh(lambda);
    const double sh = std::sinh(lambda);
    return {ch, sh, sh, ch};
}

RealMat2 shear(double gamma) { return {1.0, gamma, 0.0, 1.0}; }

RealMat2 lower_shear(double gamma) { return {1.0, 0.0, gamma, 1.0}; }

RealMat2 hyperbolic_core(double chi) {
    const double ch = std::cosh(chi / 2);
    const double sh = std::sinh(chi / 2);
    return {ch, -sh, -sh, ch};
}

const ComplexMat2& conjugator() {
    static const ComplexMat2 c = make_conjugator();
    return c;
}

const ComplexMat2& conjugator_inverse() {
    static const ComplexMat2 ci = adjoint(conjugator());
    return ci;
}

RealMat2 to_real(const ComplexMat2& m1) {
    const ComplexMat2 m = conjugator() * m1 * conjugator_inverse();
    const double residue = std::max({std::abs(m.a.imag()), std::abs(m.b.imag()),
                                     std::abs(m.c.imag()), std::abs(m.d.imag())});
    if (!(residue < kImagResidue * std::max(1.0, norm_inf(m)))) {
        throw NotRealAfterConjugation("to_real: imaginary residue " + std::to_string(residue) +
                                      " after conjugation");
    }
    return {m.a.real(), m.b.real(), m.c.real(), m.d.real()};
}

ComplexMat2 to_complex(const RealMat2& m2) {
    return conjugator_inverse() * to_complex_entries(m2) * conjugator();
}

ComplexMat2 cycle_m1(const CycleParams& p) {
    p.validate();
    return boundary(p.eta) * phase(p.phi1) * boundary(-p.eta) * phase(p.phi2);
}

RealMat2 cycle_m2(const CycleParams& p) {
    p.validate();
    return squeeze(p.eta) * rotation(p.phi1) * squeeze(-p.eta) * rotation(p.phi2);
}

}  // namespace sliderule
