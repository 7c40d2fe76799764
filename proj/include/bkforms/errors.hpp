#pragma once

#include <stdexcept>
#include <string>

namespace bkforms {

// Base of every domain error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Fourier product pushed a frequency past the hard cap.
struct FrequencyCapExceeded : Error {
    using Error::Error;
};

// Leading series coefficient cannot be inverted inside the coefficient ring.
struct NonInvertibleLeadingCoefficient : Error {
    using Error::Error;
};

// Polynomial fails the p(0) = 0, p'(0) > 0 contract (or a domain restriction on it).
struct InvalidPolynomial : Error {
    using Error::Error;
};

// Collar data is truncated below the pole order.
struct InsufficientOrder : Error {
    using Error::Error;
};

struct EpsilonOutOfRange : Error {
    using Error::Error;
};

// Density vanishes somewhere on the critical circle.
struct DegenerateOnZ : Error {
    using Error::Error;
};

struct NotSymplectic : Error {
    using Error::Error;
};

struct WrongPoleOrder : Error {
    using Error::Error;
};

struct NotPositivelyOriented : Error {
    using Error::Error;
};

struct IncompatibleStructures : Error {
    using Error::Error;
};

// An internal self-check failed; indicates a bug, not bad input.
struct VerificationFailed : Error {
    using Error::Error;
};

// Malformed or inconsistent serialized input.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace bkforms
