#include "sliderule/decompose.hpp"

#include <cmath>

namespace sliderule {

namespace {

constexpr double kArccosSlack = 1e-9;

int sign_of(double x) { return x < 0 ? -1 : 1; }

}  // namespace

std::string_view to_string(CoreKind kind) {
    switch (kind) {
        case CoreKind::elliptic:
            return "elliptic";
        case CoreKind::hyperbolic:
            return "hyperbolic";
        case CoreKind::parabolic:
            return "parabolic";
    }
    return "unknown";
}

SandwichParams srs_decompose(double eta, double phi1) {
    if (!std::isfinite(eta) || !std::isfinite(phi1)) {
        throw DomainError("srs_decompose: non-finite input");
    }
    const double s = std::sin(phi1 / 2);
    const double c = std::cos(phi1 / 2);
    // cosh^2(eta) - cos^2(phi1/2) sinh^2(eta) == 1 + sin^2(phi1/2) sinh^2(eta)
    const double sinh_lambda = s * std::sinh(eta);
    const double cosh_lambda = std::sqrt(1.0 + sinh_lambda * sinh_lambda);
    if (std::abs(c / cosh_lambda) > 1.0 + kArccosSlack) {
        throw DomainError("srs_decompose: arccos argument out of range");
    }
    return {std::asinh(sinh_lambda), std::atan2(s * std::cosh(eta), c)};
}

double alpha_of(double phi3, double phi2) { return phi3 + phi2 / 2; }

RealMat2 rxr(double lambda, double alpha) {
    const double ch = std::cosh(lambda);
    const double sh = std::sinh(lambda);
    const double diag = ch * std::cos(alpha);
    const double cs = ch * std::sin(alpha);
    return {diag, -(cs + sh), cs - sh, diag};
}

double lleft_of(double lambda, double alpha) {
    return std::sinh(lambda) - std::sin(alpha) * std::cosh(lambda);
}

CoreClass classify(double lambda, double alpha, double tol) {
    if (!(tol > 0)) {
        throw DomainError("classify: tolerance must be positive");
    }
    const RealMat2 m = rxr(lambda, alpha);
    const double upper = m.b;
    const double lower = m.c;
    const double diag = m.a;

    if (std::abs(lower) <= tol) {
        const int s = sign_of(diag);
        return {Parabolic{-2.0 * s * std::sinh(lambda), s}, 0.0};
    }
    if (std::abs(upper) <= tol) {
        throw UnsupportedOrientation(
            "classify: upper-right entry of RXR vanishes (transposed shear)");
    }

    const double xi = 0.5 * std::log(std::abs(upper) / std::abs(lower));
    const double product = upper * lower;
    if (product < 0) {
        const double half_sin = std::copysign(std::sqrt(-product), lower);
        return {Elliptic{2.0 * std::atan2(half_sin, diag)}, xi};
    }
    const int s = sign_of(diag);
    const double half_sinh = -s * std::copysign(std::sqrt(product), lower);
    return {Hyperbolic{2.0 * std::asinh(half_sinh), s}, xi};
}

std::pair<RealMat2, RealMat2> zaz_split(const CoreClass& core) {
    const RealMat2 z = squeeze(core.xi);
    switch (core.kind()) {
        case CoreKind::elliptic:
            return {z, rotation(std::get<Elliptic>(core.form).phi)};
        case CoreKind::hyperbolic: {
            const auto& h = std::get<Hyperbolic>(core.form);
            return {z, scale(hyperbolic_core(h.chi), static_cast<double>(h.sign))};
        }
        case CoreKind::parabolic:
            break;
    }
    throw ParabolicNotSplittable("zaz_split: parabolic core has no Z A Z^-1 form; use rxr");
}

CycleDecomposition decompose_cycle(const CycleParams& p, double rel_tol) {
    p.validate();
    if (!(rel_tol > 0)) {
        throw DomainError("decompose_cycle: tolerance must be positive");
    }
    CycleDecomposition d;
    d.params = p;
    d.sandwich = srs_decompose(p.eta, p.phi1);
    d.alpha = alpha_of(d.sandwich.phi3, p.phi2);
    const double cosh_lambda = std::cosh(d.sandwich.lambda);
    d.lleft = lleft_of(d.sandwich.lambda, d.alpha);
    d.near_parabolic = std::abs(d.lleft) < kNearParabolicBand * cosh_lambda;
    d.core = classify(d.sandwich.lambda, d.alpha, rel_tol * cosh_lambda);
    return d;
}

RealMat2 reassemble(const CycleDecomposition& d) {
    RealMat2 middle;
    if (d.core.kind() == CoreKind::parabolic) {
        middle = rxr(d.sandwich.lambda, d.alpha);
    } else {
        const auto [z, a] = zaz_split(d.core);
        middle = z * a * inverse(z);
    }
    return rotation(-d.params.phi2 / 2) * middle * rotation(d.params.phi2 / 2);
}

}  // namespace sliderule
