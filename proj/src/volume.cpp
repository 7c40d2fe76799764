#include "bkforms/volume.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "bkforms/errors.hpp"

namespace bkforms {

namespace {

std::string g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// integral of y^m over [a, b], 0 not inside (a, b)
double monomial_band(int m, double a, double b) {
    if (m == -1) return std::log(std::abs(b / a));
    const int e = m + 1;
    return (std::pow(b, e) - std::pow(a, e)) / e;
}

double min_half_width(const BkSurfaceForm& form) {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& piece : form.collars) r = std::min(r, piece.half_width);
    return r;
}

}  // namespace

VolumePolynomial::VolumePolynomial(int k, std::vector<double> coefficients,
                                   std::vector<double> half_widths)
    : k_(k), coeffs_(std::move(coefficients)), half_widths_(std::move(half_widths)) {
    if (k_ < 1) throw ValidationError("pole order must be >= 1");
    if (coeffs_.empty()) coeffs_.resize(1);
    if (static_cast<int>(coeffs_.size()) > k_) {
        throw ValidationError("volume polynomial degree exceeds k - 1");
    }
    for (size_t j = 2; j < coeffs_.size(); j += 2) {
        if (coeffs_[j] != 0.0) {
            throw ValidationError("volume polynomial has a nonzero even-degree coefficient");
        }
    }
}

double VolumePolynomial::operator()(double t) const {
    double v = 0.0;
    for (size_t j = coeffs_.size(); j-- > 0;) v = v * t + coeffs_[j];
    return v;
}

std::string to_string(const VolumePolynomial& p) {
    std::string out = "P(t) = " + g17(p.coeff(0));
    for (int j = 1; j < static_cast<int>(p.coefficients().size()); ++j) {
        const double c = p.coeff(j);
        if (c == 0.0) continue;
        out += (c > 0 ? " + " : " - ") + g17(std::abs(c)) + " t";
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
}

double collar_band_integral(const CollarPiece& piece, double y0, double y1) {
    if (y0 == y1) return 0.0;
    if (y0 > y1) throw EpsilonOutOfRange("band limits out of order");
    if (y0 < 0.0 && y1 > 0.0) throw EpsilonOutOfRange("band crosses the pole locus");
    if (y0 == 0.0 || y1 == 0.0) throw EpsilonOutOfRange("band touches the pole locus");
    double total = 0.0;
    const CollarSeries& A = piece.density;
    for (int j = 0; j <= A.order(); ++j) {
        const double mean = A.coeff(j).mean();
        if (mean == 0.0) continue;
        total += mean * monomial_band(j - piece.pole_order, y0, y1);
    }
    return total * kCircleMeasure;
}

double vol_cutoff(const BkSurfaceForm& form, double eps) {
    if (!(eps > 0.0)) throw EpsilonOutOfRange("eps must be positive");
    if (!form.collars.empty() && !(eps < min_half_width(form))) {
        throw EpsilonOutOfRange("eps must be smaller than every collar half-width");
    }
    double total = form.bulk_integral;
    for (const auto& piece : form.collars) {
        const double R = piece.half_width;
        total += piece.orientation *
                 (collar_band_integral(piece, -R, -eps) + collar_band_integral(piece, eps, R));
    }
    return total;
}

VolumePolynomial volume_polynomial(const BkSurfaceForm& form) {
    const LaurentNormalForm nf = laurent_normal_form(form);
    std::vector<double> q(static_cast<size_t>(form.k), 0.0);
    std::vector<double> half_widths;
    half_widths.reserve(form.collars.size());

    double q0 = form.bulk_integral;
    for (size_t r = 0; r < form.collars.size(); ++r) {
        const CollarPiece& piece = form.collars[r];
        const CircleNormalForm& circle = nf.circles[r];
        const double R = piece.half_width;
        const int sign = piece.orientation;
        half_widths.push_back(R);

        // smooth remainder: only even powers of y survive the two-sided collar
        double beta_int = 0.0;
        for (int m = 0; m <= circle.beta.order(); m += 2) {
            beta_int += 2.0 * std::pow(R, m + 1) / (m + 1) * circle.beta.coeff(m).mean();
        }
        q0 += sign * beta_int * kCircleMeasure;

        for (int i = 2; i <= form.k; i += 2) {
            const double alpha_int =
                sign * circle.alpha[static_cast<size_t>(i - 1)].mean() * kCircleMeasure;
            q0 += -2.0 * std::pow(R, 1 - i) / (i - 1) * alpha_int;
            q[static_cast<size_t>(i - 1)] += 2.0 / (i - 1) * alpha_int;
        }
    }
    q[0] = q0;
    return VolumePolynomial(form.k, std::move(q), std::move(half_widths));
}

double liouville_volume(const BkSurfaceForm& form) {
    return volume_polynomial(form).constant_term();
}

double smooth_part_integral(const BkSurfaceForm& form) {
    return liouville_volume(form);
}

double beta_tail_integral(const BkSurfaceForm& form, double eps) {
    if (!(eps > 0.0)) throw EpsilonOutOfRange("eps must be positive");
    if (!form.collars.empty() && !(eps < min_half_width(form))) {
        throw EpsilonOutOfRange("eps must be smaller than every collar half-width");
    }
    const LaurentNormalForm nf = laurent_normal_form(form);
    double total = 0.0;
    for (size_t r = 0; r < form.collars.size(); ++r) {
        const CircleNormalForm& circle = nf.circles[r];
        double tail = 0.0;
        for (int m = 0; m <= circle.beta.order(); m += 2) {
            tail += 2.0 * std::pow(eps, m + 1) / (m + 1) * circle.beta.coeff(m).mean();
        }
        total += form.collars[r].orientation * tail * kCircleMeasure;
    }
    return total;
}

std::vector<std::pair<double, double>> asymptotic_gap(const BkSurfaceForm& form,
                                                      const std::vector<double>& eps_grid) {
    std::vector<std::pair<double, double>> gaps;
    gaps.reserve(eps_grid.size());
    for (const double eps : eps_grid) {
        gaps.emplace_back(eps, std::abs(beta_tail_integral(form, eps)));
    }
    return gaps;
}

}  // namespace bkforms
