#pragma once

// Fixed-size 2x2 matrices over double and std::complex<double>, plus the
// sequential-product oracle every closed form in the library is checked against.

#include <algorithm>
#include <cmath>
#include <complex>
#include <iosfwd>
#include <type_traits>

#include "sliderule/errors.hpp"

namespace sliderule {

using complex = std::complex<double>;

/// Row-major [[a, b], [c, d]].
template <typename T>
struct Mat2 {
    T a{1}, b{0}, c{0}, d{1};

    static constexpr Mat2 identity() { return {T{1}, T{0}, T{0}, T{1}}; }

    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

using RealMat2 = Mat2<double>;
using ComplexMat2 = Mat2<complex>;

template <typename T>
constexpr Mat2<T> mul(const Mat2<T>& lhs, const Mat2<T>& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

template <typename T>
constexpr Mat2<T> operator*(const Mat2<T>& lhs, const Mat2<T>& rhs) {
    return mul(lhs, rhs);
}

template <typename T>
constexpr Mat2<T> scale(const Mat2<T>& m, T s) {
    return {m.a * s, m.b * s, m.c * s, m.d * s};
}

template <typename T>
constexpr T det(const Mat2<T>& m) {
    return m.a * m.d - m.b * m.c;
}

template <typename T>
constexpr T trace(const Mat2<T>& m) {
    return m.a + m.d;
}

/// Throws SingularMatrix when |det| <= 1e-14.
template <typename T>
Mat2<T> inverse(const Mat2<T>& m) {
    const T dt = det(m);
    if (!(std::abs(dt) > 1e-14)) {
        throw SingularMatrix("inverse: matrix is singular");
    }
    return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

/// Conjugate transpose; the identity transpose for real matrices.
template <typename T>
Mat2<T> adjoint(const Mat2<T>& m) {
    if constexpr (std::is_same_v<T, complex>) {
        return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
    } else {
        return {m.a, m.c, m.b, m.d};
    }
}

/// N-fold product m * m * ... * m by sequential left-to-right multiplication.
/// Deliberately not exponentiation by squaring: this is the reference the
/// closed forms are compared against, and must not share their structure.
template <typename T>
Mat2<T> pow_brute(const Mat2<T>& m, int n) {
    if (n < 0) {
        throw DomainError("pow_brute: exponent must be non-negative");
    }
    Mat2<T> acc = Mat2<T>::identity();
    for (int k = 0; k < n; ++k) {
        acc = mul(acc, m);
    }
    return acc;
}

template <typename T>
double max_abs_entry(const Mat2<T>& m) {
    return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

/// Induced infinity norm (largest absolute row sum).
template <typename T>
double norm_inf(const Mat2<T>& m) {
    return std::max(std::abs(m.a) + std::abs(m.b), std::abs(m.c) + std::abs(m.d));
}

template <typename T>
double max_abs_diff(const Mat2<T>& lhs, const Mat2<T>& rhs) {
    return std::max({std::abs(lhs.a - rhs.a), std::abs(lhs.b - rhs.b), std::abs(lhs.c - rhs.c),
                     std::abs(lhs.d - rhs.d)});
}

struct ApproxResult {
    bool equal;
    double max_diff;

    explicit operator bool() const { return equal; }
};

template <typename T>
ApproxResult approx_eq(const Mat2<T>& lhs, const Mat2<T>& rhs, double tol) {
    const double diff = max_abs_diff(lhs, rhs);
    return {diff <= tol, diff};
}

/// Tolerance for comparing a product of n factors: tol * n * max(1, ||result||_inf).
template <typename T>
double scaled_tolerance(double tol, int n, const Mat2<T>& result) {
    return tol * std::max(1, n) * std::max(1.0, norm_inf(result));
}

inline ComplexMat2 to_complex_entries(const RealMat2& m) {
    return {complex{m.a}, complex{m.b}, complex{m.c}, complex{m.d}};
}

std::ostream& operator<<(std::ostream& os, const RealMat2& m);
std::ostream& operator<<(std::ostream& os, const ComplexMat2& m);

}  // namespace sliderule
