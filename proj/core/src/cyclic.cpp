#include "sliderule/cyclic.hpp"

#include <cmath>
#include <limits>

namespace sliderule {

namespace {

constexpr int kMaxBisections = 200;
constexpr double kRootResidual = 1e-12;

double sign_power(int sign, int n) { return (sign < 0 && n % 2 != 0) ? -1.0 : 1.0; }

void require_positive(int n) {
    if (n < 1) {
        throw DomainError("N must be >= 1");
    }
}

// Shared by both public entry points; fills everything except the deviations.
NCycleResult closed_forms(const CycleParams& p, int n, double rel_tol) {
    require_positive(n);
    NCycleResult r;
    r.n = n;
    r.decomposition = decompose_cycle(p, rel_tol);
    r.near_parabolic = r.decomposition.near_parabolic;

    const CoreClass& core = r.decomposition.core;
    r.core_power = core_power(core, n);

    const RealMat2 half_in = rotation(p.phi2 / 2);
    const RealMat2 half_out = rotation(-p.phi2 / 2);
    const ComplexMat2 phase_in = phase(p.phi2 / 2);
    const ComplexMat2 phase_out = phase(-p.phi2 / 2);
    const ComplexMat2 center = complex_core_power(core, n);

    if (core.kind() == CoreKind::parabolic) {
        r.m2_closed = half_out * r.core_power * half_in;
        r.m1_closed = phase_out * center * phase_in;
    } else {
        const RealMat2 z = squeeze(core.xi);
        r.m2_closed = half_out * z * r.core_power * squeeze(-core.xi) * half_in;
        r.m1_closed = phase_out * boundary(core.xi) * center * boundary(-core.xi) * phase_in;
    }
    return r;
}

}  // namespace

RealMat2 core_power(const CoreClass& core, int n) {
    require_positive(n);
    const double nd = n;
    switch (core.kind()) {
        case CoreKind::elliptic:
            return rotation(nd * std::get<Elliptic>(core.form).phi);
        case CoreKind::hyperbolic: {
            const auto& h = std::get<Hyperbolic>(core.form);
            return scale(hyperbolic_core(nd * h.chi), sign_power(h.sign, n));
        }
        case CoreKind::parabolic: {
            const auto& s = std::get<Parabolic>(core.form);
            return scale(shear(nd * s.gamma), sign_power(s.sign, n));
        }
    }
    return RealMat2::identity();
}

ComplexMat2 complex_core_power(const CoreClass& core, int n) {
    require_positive(n);
    const double nd = n;
    const complex i{0.0, 1.0};
    switch (core.kind()) {
        case CoreKind::elliptic:
            return phase(nd * std::get<Elliptic>(core.form).phi);
        case CoreKind::hyperbolic: {
            const auto& h = std::get<Hyperbolic>(core.form);
            const double ch = std::cosh(nd * h.chi / 2);
            const double sh = std::sinh(nd * h.chi / 2);
            const ComplexMat2 m{complex{ch}, i * sh, -i * sh, complex{ch}};
            return scale(m, complex{sign_power(h.sign, n)});
        }
        case CoreKind::parabolic: {
            const auto& s = std::get<Parabolic>(core.form);
            // gamma = -2 sinh(lambda) gives [[1 - iN sinh, iN sinh], [-iN sinh, 1 + iN sinh]]
            const double k = nd * s.gamma / 2;
            const ComplexMat2 m{1.0 + i * k, -i * k, i * k, 1.0 - i * k};
            return scale(m, complex{sign_power(s.sign, n)});
        }
    }
    return ComplexMat2::identity();
}

NCycleResult m2_power_closed(const CycleParams& p, int n, double rel_tol) {
    NCycleResult r = closed_forms(p, n, rel_tol);
    r.max_oracle_deviation = max_abs_diff(r.m2_closed, pow_brute(cycle_m2(p), n));
    r.max_oracle_deviation_other = max_abs_diff(r.m1_closed, pow_brute(cycle_m1(p), n));
    return r;
}

NCycleResult m1_power_closed(const CycleParams& p, int n, double rel_tol) {
    NCycleResult r = m2_power_closed(p, n, rel_tol);
    std::swap(r.max_oracle_deviation, r.max_oracle_deviation_other);
    return r;
}

std::string_view to_string(SweptParameter which) {
    switch (which) {
        case SweptParameter::eta:
            return "eta";
        case SweptParameter::phi1:
            return "phi1";
        case SweptParameter::phi2:
            return "phi2";
    }
    return "unknown";
}

std::optional<SweptParameter> parse_swept_parameter(std::string_view name) {
    if (name == "eta") return SweptParameter::eta;
    if (name == "phi1") return SweptParameter::phi1;
    if (name == "phi2") return SweptParameter::phi2;
    return std::nullopt;
}

CycleParams with_value(CycleParams p, SweptParameter which, double value) {
    switch (which) {
        case SweptParameter::eta:
            p.eta = value;
            break;
        case SweptParameter::phi1:
            p.phi1 = value;
            break;
        case SweptParameter::phi2:
            p.phi2 = value;
            break;
    }
    return p;
}

double cycle_lleft(const CycleParams& p) {
    p.validate();
    const SandwichParams s = srs_decompose(p.eta, p.phi1);
    return lleft_of(s.lambda, alpha_of(s.phi3, p.phi2));
}

TransitionReport find_transition(const CycleParams& p0, SweptParameter swept,
                                 std::pair<double, double> bracket) {
    auto f = [&](double x) { return cycle_lleft(with_value(p0, swept, x)); };

    double lo = bracket.first;
    double hi = bracket.second;
    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (!(std::signbit(f_lo) != std::signbit(f_hi) || f_lo == 0 || f_hi == 0)) {
        throw NoSignChange("find_transition: lleft has the same sign at both bracket ends");
    }

    double best = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
    double best_f = std::min(std::abs(f_lo), std::abs(f_hi));
    for (int it = 0; it < kMaxBisections && best_f != 0; ++it) {
        const double mid = lo + (hi - lo) / 2;
        if (mid == lo || mid == hi) {
            break;
        }
        const double f_mid = f(mid);
        if (std::abs(f_mid) < best_f) {
            best = mid;
            best_f = std::abs(f_mid);
        }
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }

    const CycleParams at_root = with_value(p0, swept, best);
    const SandwichParams s = srs_decompose(at_root.eta, at_root.phi1);
    TransitionReport report;
    report.swept = swept;
    report.bracket = bracket;
    report.root = best;
    report.cosh_lambda = std::cosh(s.lambda);
    report.gamma_at_root = -2.0 * std::sinh(s.lambda);
    report.residual_lleft = lleft_of(s.lambda, alpha_of(s.phi3, at_root.phi2));
    if (std::abs(report.residual_lleft) > kRootResidual * report.cosh_lambda) {
        throw DomainError("find_transition: lleft does not vanish inside the bracket");
    }
    return report;
}

std::string_view to_string(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::elliptic:
            return "elliptic";
        case RegimeTag::hyperbolic:
            return "hyperbolic";
        case RegimeTag::parabolic:
            return "parabolic";
        case RegimeTag::unsupported:
            return "unsupported";
    }
    return "unknown";
}

std::vector<SweepRow> sweep_classify(const CycleParams& p0, SweptParameter swept,
                                     std::pair<double, double> range, int steps,
                                     double rel_tol) {
    if (steps < 2) {
        throw DomainError("sweep_classify: steps must be >= 2");
    }
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    const auto [low, high] = range;
    for (int k = 0; k < steps; ++k) {
        const double value =
            k == steps - 1 ? high : low + (high - low) * (static_cast<double>(k) / (steps - 1));
        const CycleParams p = with_value(p0, swept, value);
        p.validate();
        const SandwichParams s = srs_decompose(p.eta, p.phi1);
        const double alpha = alpha_of(s.phi3, p.phi2);
        const double cosh_lambda = std::cosh(s.lambda);

        SweepRow row;
        row.value = value;
        row.lleft = lleft_of(s.lambda, alpha);
        row.half_trace = cosh_lambda * std::cos(alpha);
        try {
            const CoreClass core = classify(s.lambda, alpha, rel_tol * cosh_lambda);
            row.tag = static_cast<RegimeTag>(core.kind());
            if (core.kind() != CoreKind::parabolic) {
                row.xi = core.xi;
            }
        } catch (const UnsupportedOrientation&) {
            row.tag = RegimeTag::unsupported;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace sliderule
