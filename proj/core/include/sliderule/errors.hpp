#pragma once

#include <stdexcept>
#include <string>

namespace sliderule {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// inverse() of a matrix whose determinant is (numerically) zero.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// to_real() found an imaginary residue after conjugation; the input is not in the M1 family.
class NotRealAfterConjugation : public Error {
public:
    using Error::Error;
};

/// Out-of-range or non-finite input, or a numerically corrupted intermediate.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The upper-right entry of RXR vanishes while the lower-left does not (transposed shear).
class UnsupportedOrientation : public Error {
public:
    using Error::Error;
};

/// zaz_split() called on a parabolic core; use rxr() directly.
class ParabolicNotSplittable : public Error {
public:
    using Error::Error;
};

/// find_transition() bracket whose endpoints have the same lleft sign.
class NoSignChange : public Error {
public:
    using Error::Error;
};

}  // namespace sliderule
