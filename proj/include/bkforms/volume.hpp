#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bkforms/bk_forms.hpp"

namespace bkforms {

/// P(t) = q_0 + q_1 t + ... + q_{k-1} t^{k-1} with P(1/eps) asymptotic to the
/// cutoff integral as eps -> 0.  Only the constant term and odd-degree
/// coefficients can be nonzero (odd pole orders integrate to zero across the
/// two sides of each circle); the constructor rejects anything else.
class VolumePolynomial {
public:
    VolumePolynomial(int k, std::vector<double> coefficients, std::vector<double> half_widths);

    int k() const { return k_; }
    const std::vector<double>& coefficients() const { return coeffs_; }
    const std::vector<double>& half_widths() const { return half_widths_; }

    double coeff(int j) const {
        return (j < 0 || j >= static_cast<int>(coeffs_.size())) ? 0.0 : coeffs_[static_cast<size_t>(j)];
    }

    double operator()(double t) const;

    double constant_term() const { return coeffs_[0]; }

    bool operator==(const VolumePolynomial&) const = default;

private:
    int k_;
    std::vector<double> coeffs_;       // size k (at least 1)
    std::vector<double> half_widths_;  // per circle, bookkeeping
};

std::string to_string(const VolumePolynomial& p);

/// Exact integral of A(y,theta)/y^k dy dtheta over [y0, y1] x [0,1), where
/// the band does not cross y = 0.  Monomial antiderivatives; the y^{-1} term
/// contributes log|y1/y0| times the circle mean of its coefficient.
double collar_band_integral(const CollarPiece& piece, double y0, double y1);

/// Integral of the form over the complement of |y| < eps in every collar,
/// plus the bulk.  Closed form; log terms from the two sides cancel exactly.
double vol_cutoff(const BkSurfaceForm& form, double eps);

VolumePolynomial volume_polynomial(const BkSurfaceForm& form);

/// Constant term of the volume polynomial: the regularized total volume.
double liouville_volume(const BkSurfaceForm& form);

/// In top degree on a surface, pairing with the class of the constant
/// function 1 reduces the smooth part to the Liouville volume.
double smooth_part_integral(const BkSurfaceForm& form);

/// P(1/eps) - vol_cutoff(form, eps) equals the integral of the smooth
/// remainder over |y| <= eps; only even powers of y survive the two-sided
/// integral, so the gap is O(eps).
double beta_tail_integral(const BkSurfaceForm& form, double eps);

inline const std::vector<double>& default_eps_grid() {
    static const std::vector<double> grid{1e-1, 1e-2, 1e-3, 1e-4};
    return grid;
}

/// |P(1/eps) - vol_cutoff(form, eps)| per grid point, evaluated in closed
/// form through the remainder tail (no catastrophic cancellation).
std::vector<std::pair<double, double>> asymptotic_gap(
    const BkSurfaceForm& form, const std::vector<double>& eps_grid = default_eps_grid());

}  // namespace bkforms
