#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bkforms/errors.hpp"

namespace bkforms {

// Total measure of the circle coordinate theta in [0, 1).  Every integral over
// a circle in this library uses this normalization.
inline constexpr double kCircleMeasure = 1.0;

// Hard cap on stored Fourier frequencies.  Products grow frequencies; exceeding
// the cap raises FrequencyCapExceeded instead of truncating the spectrum.
inline constexpr int kMaxFrequency = 64;

// Number of equispaced samples used by the certified nonvanishing check.
inline constexpr int kNonvanishingSamples = 256;

/// Finite trigonometric polynomial on an oriented circle:
///   f(theta) = constant + sum_m c_m cos(2 pi m theta) + s_m sin(2 pi m theta)
/// with theta in [0, 1).  Values are immutable after construction; frequencies
/// are stored strictly increasing with no zero amplitudes.
class CircleFunction {
public:
    struct Harmonic {
        int frequency = 0;  // m >= 1
        double cos_amp = 0.0;
        double sin_amp = 0.0;

        bool operator==(const Harmonic&) const = default;
    };

    CircleFunction() = default;
    explicit CircleFunction(double constant) : constant_(constant) {}
    CircleFunction(double constant,
                   std::vector<std::pair<int, double>> cosines,
                   std::vector<std::pair<int, double>> sines);

    static CircleFunction cosine(int frequency, double amplitude);
    static CircleFunction sine(int frequency, double amplitude);

    double constant() const { return constant_; }
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }
    bool is_zero() const { return constant_ == 0.0 && harmonics_.empty(); }
    bool is_constant() const { return harmonics_.empty(); }
    int max_frequency() const { return harmonics_.empty() ? 0 : harmonics_.back().frequency; }

    double value(double theta) const;

    // Exact mean over the circle: the constant Fourier mode.
    double mean() const { return constant_; }

    // Formal d/dtheta.
    CircleFunction derivative() const;

    // sup |f| <= sup_bound(); sup |f'| <= derivative_bound().  Both exact for
    // single harmonics and sound in general.
    double sup_bound() const;
    double derivative_bound() const;

    CircleFunction operator-() const;
    CircleFunction& operator+=(const CircleFunction& rhs);
    CircleFunction& operator-=(const CircleFunction& rhs);
    CircleFunction& operator*=(double scale);

    friend CircleFunction operator+(CircleFunction lhs, const CircleFunction& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend CircleFunction operator-(CircleFunction lhs, const CircleFunction& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend CircleFunction operator*(CircleFunction lhs, double scale) {
        lhs *= scale;
        return lhs;
    }
    friend CircleFunction operator*(double scale, CircleFunction rhs) {
        rhs *= scale;
        return rhs;
    }
    friend CircleFunction operator*(const CircleFunction& lhs, const CircleFunction& rhs);

    bool operator==(const CircleFunction&) const = default;

private:
    double constant_ = 0.0;
    std::vector<Harmonic> harmonics_;  // sorted by frequency, no zero terms

    void normalize();
};

// integral over the circle = mean * total measure; exact for trig polynomials.
inline double integrate_over_circle(const CircleFunction& f) {
    return f.mean() * kCircleMeasure;
}

// Outcome of the sampling + Lipschitz-bound nonvanishing certificate.
struct SignCertificate {
    bool certified = false;
    int sign = 0;                // +1 or -1 when certified
    double witness_theta = 0.0;  // sample of smallest |f| when not certified
    double min_abs = 0.0;
};

// Certifies that f has no zero on the circle: min sampled |f| must exceed the
// maximal variation between adjacent samples.  Sound, not complete.
SignCertificate certify_nonvanishing(const CircleFunction& f,
                                     int samples = kNonvanishingSamples);

// Coefficient-level distance used by tests and internal verification.
inline double coeff_distance(double a, double b) { return a > b ? a - b : b - a; }
inline double coeff_distance(const CircleFunction& a, const CircleFunction& b) {
    return (a - b).sup_bound();
}
inline double coeff_abs_bound(double a) { return a < 0 ? -a : a; }
inline double coeff_abs_bound(const CircleFunction& a) { return a.sup_bound(); }

}  // namespace bkforms
