#include "bkforms/normalize.hpp"

#include <cmath>

#include "bkforms/errors.hpp"
#include "bkforms/volume.hpp"

namespace bkforms {

namespace {

CollarSeries scaled(const CollarSeries& s, double factor) {
    return s * CircleFunction(factor);
}

// binom(1-k, j) for j = 0, 1, ...: integers, exact in doubles at these sizes
double falling_binomial(int one_minus_k, int j, double previous) {
    return previous * (one_minus_k - (j - 1)) / j;
}

bool polynomial_positive_on(const RealPolynomial& q, double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    const RealPolynomial dq = q.derivative();
    double lipschitz = 0.0;
    for (int j = 0; j <= dq.degree(); ++j) {
        lipschitz += std::abs(dq.coeff(j)) * std::pow(scale, j);
    }
    constexpr int samples = 257;
    const double step = (b - a) / (samples - 1);
    const double margin = lipschitz * step / 2.0;
    for (int s = 0; s < samples; ++s) {
        if (!(q(a + s * step) > margin)) return false;
    }
    return true;
}

// Solves p(y) = target for increasing p with a bracket [lo, hi].
double solve_on_bracket(const RealPolynomial& p, double target, double lo, double hi) {
    double flo = p(lo) - target;
    double fhi = p(hi) - target;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0)) {
        throw InvalidPolynomial("collar image does not reach the requested half-width");
    }
    const RealPolynomial dp = p.derivative();
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = p(x) - target;
        if (fx == 0.0) break;
        if ((fx > 0) == (fhi > 0)) {
            hi = x;
        } else {
            lo = x;
        }
        const double d = dp(x);
        double next = d != 0.0 ? x - fx / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) break;
        x = next;
    }
    return x;
}

}  // namespace

ResidueVector::ResidueVector(std::vector<double> a) : a_(std::move(a)) {
    if (a_.empty()) throw ValidationError("residue vector must have k >= 1 entries");
    if (!(a_.back() > 0.0)) {
        throw ValidationError("leading residue a_{-k} must be positive");
    }
}

ScalarLaurentSeries combined_expansion(const ResidueVector& a, const RealPolynomial& p,
                                       int order) {
    ScalarLaurentSeries total;
    for (int i = 1; i <= a.k(); ++i) {
        if (a.entry(i) == 0.0) continue;
        total = total + expand_dp_over_pk(p, i, order) * a.entry(i);
    }
    return total;
}

RealPolynomial poly_pick(const ResidueVector& a, int order) {
    const int k = a.k();
    const RealPolynomial identity({0.0, 1.0});
    if (k == 1) return identity;  // residue a_{-1}/y is automatic

    const double c = std::pow(a.entry(k), 1.0 / (k - 1));
    RealPolynomial p = RealPolynomial({0.0, c});

    for (int j = 1; j <= k - 2; ++j) {
        const ScalarLaurentSeries b = combined_expansion(a, p, order);
        const double b_kj = b.coeff(-(k - j));
        const double p1 = p.coeff(1);
        const double t = -b_kj * std::pow(p1, k - j - 1) / (a.entry(k) * (j + 1 - k));
        p = p + p.pow(j + 1) * t;
    }

    const ScalarLaurentSeries b = combined_expansion(a, p, order);
    double worst = std::abs(b.coeff(-k) - 1.0);
    for (int i = 2; i <= k - 1; ++i) worst = std::max(worst, std::abs(b.coeff(-i)));
    worst = std::max(worst, std::abs(b.residue() - a.entry(1)));
    double scale = 1.0;
    for (int i = 1; i <= k; ++i) scale = std::max(scale, std::abs(a.entry(i)));
    if (worst > 1e-9 * scale) {
        throw VerificationFailed("normalized expansion violates its contract by " +
                                 std::to_string(worst));
    }
    return p;
}

CollarLaurentSeries jet_equivalence_defect(int k, const JetChange& change, int order) {
    if (k < 1) throw ValidationError("pole order must be >= 1");
    const CollarSeries& g = change.g;

    if (k == 1) {
        // d(y (1+g)) / (y (1+g)) - dy/y has dy-component g'/(1+g)
        const CollarSeries u =
            CollarSeries::constant(CircleFunction(1.0), order) + g.resized(order);
        const CollarSeries smooth = u.derivative().resized(order) * reciprocal(u, order);
        return CollarLaurentSeries::from_power_series(smooth, 0);
    }

    // F = (y2^{1-k} - y^{1-k})/(1)  with  y2^{1-k} - y^{1-k}
    //   = sum_{j>=1} binom(1-k, j) g^j y^{(j-1)(k-1)}, smooth by construction.
    CollarSeries f(order);
    CollarSeries g_power = g.resized(order);
    double binom = 1.0;
    for (int j = 1; (j - 1) * (k - 1) <= order; ++j) {
        binom = falling_binomial(1 - k, j, binom);
        const int shift = (j - 1) * (k - 1);
        const CollarSeries term = g_power.truncated(order - shift).shifted_up(shift);
        f = f + scaled(term, binom);
        if ((j) * (k - 1) <= order) g_power = g_power * g.resized(order);
    }
    const CollarSeries defect = scaled(f.derivative().resized(order), 1.0 / (1 - k));
    return CollarLaurentSeries::from_power_series(defect, 0);
}

CollarLaurentSeries jet_equivalence_defect_direct(int k, const JetChange& change, int order) {
    if (k < 1) throw ValidationError("pole order must be >= 1");
    const int work = order + k;
    const CollarSeries one = CollarSeries::constant(CircleFunction(1.0), work);
    const CollarSeries u =
        one + change.g.resized(work - (k - 1)).shifted_up(k - 1);
    const CollarSeries numerator =
        u + u.derivative().resized(work - 1).shifted_up(1);
    const CollarSeries s = numerator * pow_series(reciprocal(u, work), k, work) - one;
    return CollarLaurentSeries::from_power_series(s, -k);
}

LaurentNormalForm reparam_decomposition(const LaurentNormalForm& nf, const RealPolynomial& p,
                                        int order) {
    require_reparam_shape(p);
    const int k = nf.k;

    std::vector<ScalarLaurentSeries> expansions;
    expansions.reserve(static_cast<size_t>(k));
    for (int j = 1; j <= k; ++j) expansions.push_back(expand_dp_over_pk(p, j, order));

    const ScalarSeries p_series = p.to_series(order);
    const ScalarSeries dp_series = p.derivative().to_series(order);

    LaurentNormalForm out;
    out.k = k;
    out.circles.reserve(nf.circles.size());
    for (const CircleNormalForm& circle : nf.circles) {
        CircleNormalForm image;
        image.circle_id = circle.circle_id;
        image.alpha.resize(static_cast<size_t>(k));

        // P'/P has principal part exactly 1/y and P'/P^j no residue for
        // j >= 2, so the residue row passes through untouched.
        image.alpha[0] = circle.alpha[0];
        for (int i = 2; i <= k; ++i) {
            CircleFunction acc;
            for (int j = i; j <= k; ++j) {
                acc += circle.alpha[static_cast<size_t>(j - 1)] *
                       expansions[static_cast<size_t>(j - 1)].coeff(-i);
            }
            image.alpha[static_cast<size_t>(i - 1)] = acc;
        }

        CollarSeries beta = compose(circle.beta.resized(order), to_collar_series(p_series), order) *
                            to_collar_series(dp_series);
        for (int j = 1; j <= k; ++j) {
            const ScalarSeries regular = expansions[static_cast<size_t>(j - 1)].regular_part(order);
            beta = beta + to_collar_series(regular) * circle.alpha[static_cast<size_t>(j - 1)];
        }
        image.beta = beta;
        out.circles.push_back(std::move(image));
    }
    return out;
}

CollarSeries transform_density(const CollarSeries& A, const CollarSeries& sigma, int k,
                               int order) {
    if (!sigma.coeff(0).is_zero()) {
        throw InvalidPolynomial("coordinate map must fix y = 0");
    }
    const CollarSeries ratio = sigma.shifted_down(1).resized(order);  // sigma / y
    const CollarSeries inv_ratio_k = pow_series(reciprocal(ratio, order), k, order);
    const CollarSeries composed = compose(A.resized(order), sigma.resized(order), order);
    return composed * sigma.derivative().resized(order) * inv_ratio_k;
}

CollarSeries jet_change_density(const CollarSeries& A, const JetChange& change, int k,
                                int order) {
    // y2 = phi(y) = y + g y^k; the germ in y2 pulls A back through phi^{-1}.
    const int work = order + 1;
    CollarSeries phi(work);
    {
        std::vector<CircleFunction> cs(static_cast<size_t>(work) + 1);
        cs[1] = CircleFunction(1.0);
        phi = CollarSeries(work, std::move(cs)) + change.g.resized(work - k).shifted_up(k);
    }
    const CollarSeries w = reversion(phi, work);
    return transform_density(A, w, k, order);
}

BkSurfaceForm reparameterize_form(const BkSurfaceForm& form, const RealPolynomial& p,
                                  double new_half_width) {
    require_reparam_shape(p);
    if (!(new_half_width > 0.0)) throw ValidationError("half-width must be positive");
    if (!polynomial_positive_on(p.derivative(), -new_half_width, new_half_width)) {
        throw InvalidPolynomial("polynomial is not certified increasing on the new collar");
    }
    const double lo = p(-new_half_width);
    const double hi = p(new_half_width);

    double bulk = form.bulk_integral;
    std::vector<CollarPiece> pieces;
    pieces.reserve(form.collars.size());
    for (const CollarPiece& piece : form.collars) {
        const double R = piece.half_width;
        if (!(lo >= -R && hi <= R)) {
            throw InvalidPolynomial("new collar image leaves the original collar");
        }
        const int sigma_order = std::max(piece.density.order(), p.degree());
        const CollarSeries density =
            transform_density(piece.density, to_collar_series(p.to_series(sigma_order)),
                              form.k, piece.density.order());
        // volume between the old collar and the image goes to the bulk
        bulk += piece.orientation *
                (collar_band_integral(piece, -R, lo) + collar_band_integral(piece, hi, R));
        pieces.emplace_back(piece.circle_id, new_half_width, piece.pole_order,
                            piece.orientation, density);
    }
    return BkSurfaceForm(form.k, std::move(pieces), bulk, form.surface);
}

BkSurfaceForm jet_change_form(const BkSurfaceForm& form, const JetChange& change,
                              double new_half_width) {
    if (!(new_half_width > 0.0)) throw ValidationError("half-width must be positive");
    if (!change.theta_independent()) {
        throw Error(
            "whole-form jet changes need a theta-independent g (the cutoff boundary "
            "otherwise has no closed-form collar integral); use jet_change_density");
    }

    // exact polynomial phi(y) = y + g(y) y^k
    std::vector<double> phi_coeffs(static_cast<size_t>(change.g.order() + form.k) + 1, 0.0);
    phi_coeffs[1] = 1.0;
    for (int j = 0; j <= change.g.order(); ++j) {
        phi_coeffs[static_cast<size_t>(j + form.k)] += change.g.coeff(j).constant();
    }
    const RealPolynomial phi(phi_coeffs);

    double bulk = form.bulk_integral;
    std::vector<CollarPiece> pieces;
    pieces.reserve(form.collars.size());
    for (const CollarPiece& piece : form.collars) {
        const double R = piece.half_width;
        const double y_lo = solve_on_bracket(phi, -new_half_width, -R, 0.0);
        const double y_hi = solve_on_bracket(phi, new_half_width, 0.0, R);
        if (!polynomial_positive_on(phi.derivative(), y_lo, y_hi)) {
            throw InvalidPolynomial("coordinate change is not certified increasing");
        }
        const CollarSeries density =
            jet_change_density(piece.density, change, form.k, piece.density.order());
        bulk += piece.orientation * (collar_band_integral(piece, -R, y_lo) +
                                     collar_band_integral(piece, y_hi, R));
        pieces.emplace_back(piece.circle_id, new_half_width, piece.pole_order,
                            piece.orientation, density);
    }
    return BkSurfaceForm(form.k, std::move(pieces), bulk, form.surface);
}

}  // namespace bkforms
