#include "bkforms/bk_forms.hpp"

#include <cmath>
#include <limits>

#include "bkforms/errors.hpp"

namespace bkforms {

CollarPiece::CollarPiece(std::string id, double R, int k, int sign, CollarSeries A)
    : circle_id(std::move(id)),
      half_width(R),
      pole_order(k),
      orientation(sign),
      density(std::move(A)) {
    if (!(half_width > 0.0)) throw ValidationError("collar half-width must be positive");
    if (pole_order < 1) throw ValidationError("pole order must be >= 1");
    if (orientation != 1 && orientation != -1) {
        throw ValidationError("orientation must be +1 or -1");
    }
}

BkSurfaceForm::BkSurfaceForm(int pole_order, std::vector<CollarPiece> pieces, double bulk,
                             std::string surface_descriptor)
    : k(pole_order),
      surface(std::move(surface_descriptor)),
      collars(std::move(pieces)),
      bulk_integral(bulk) {
    if (k < 1) throw ValidationError("pole order must be >= 1");
    for (size_t i = 0; i < collars.size(); ++i) {
        const auto& piece = collars[i];
        if (piece.pole_order != k) {
            throw ValidationError("collar '" + piece.circle_id + "' has pole order " +
                                  std::to_string(piece.pole_order) + ", form has " +
                                  std::to_string(k));
        }
        for (size_t j = i + 1; j < collars.size(); ++j) {
            if (collars[j].circle_id == piece.circle_id) {
                throw ValidationError("duplicate circle id '" + piece.circle_id + "'");
            }
        }
    }
}

BkCollarOneForm::BkCollarOneForm(std::string id, double R, int k, CollarSeries h_part,
                                 CollarSeries g_part, bool compactly_supported)
    : circle_id(std::move(id)),
      half_width(R),
      pole_order(k),
      h(std::move(h_part)),
      g(std::move(g_part)),
      compact_support(compactly_supported) {
    if (!(half_width > 0.0)) throw ValidationError("collar half-width must be positive");
    if (pole_order < 1) throw ValidationError("pole order must be >= 1");
    if (h.order() < pole_order) {
        throw InsufficientOrder("one-form h part has order " + std::to_string(h.order()) +
                                " < pole order " + std::to_string(pole_order));
    }
}

namespace {

void require_order(const CollarPiece& piece, int k) {
    if (piece.density.order() < k) {
        throw InsufficientOrder("collar '" + piece.circle_id + "' density has order " +
                                std::to_string(piece.density.order()) + " < pole order " +
                                std::to_string(k));
    }
}

}  // namespace

LaurentNormalForm laurent_normal_form(const BkSurfaceForm& form) {
    LaurentNormalForm nf;
    nf.k = form.k;
    nf.circles.reserve(form.collars.size());
    for (const auto& piece : form.collars) {
        require_order(piece, form.k);
        CircleNormalForm circle;
        circle.circle_id = piece.circle_id;
        circle.alpha.reserve(static_cast<size_t>(form.k));
        for (int i = 1; i <= form.k; ++i) circle.alpha.push_back(piece.density.coeff(form.k - i));
        // everything divisible by y^k
        std::vector<CircleFunction> tail;
        for (int j = form.k; j <= piece.density.order(); ++j) {
            tail.push_back(piece.density.coeff(j));
        }
        circle.beta = CollarSeries(std::max(piece.density.order() - form.k, 0), std::move(tail));
        nf.circles.push_back(std::move(circle));
    }
    return nf;
}

CollarSeries reconstruct_density(const CircleNormalForm& nf, int k, int order) {
    std::vector<CircleFunction> cs(static_cast<size_t>(order) + 1);
    for (int i = 1; i <= k; ++i) {
        if (k - i <= order) cs[static_cast<size_t>(k - i)] = nf.alpha[static_cast<size_t>(i - 1)];
    }
    for (int j = 0; j <= nf.beta.order() && k + j <= order; ++j) {
        cs[static_cast<size_t>(k + j)] += nf.beta.coeff(j);
    }
    return CollarSeries(order, std::move(cs));
}

std::vector<CircleFunction> iota_L(const BkSurfaceForm& form) {
    std::vector<CircleFunction> leading;
    leading.reserve(form.collars.size());
    for (const auto& piece : form.collars) {
        require_order(piece, form.k);
        leading.push_back(piece.density.coeff(0));
    }
    return leading;
}

CollarPiece d_collar(const BkCollarOneForm& mu) {
    const CollarSeries from_g = mu.g.derivative().shifted_up(mu.pole_order);
    const CollarSeries from_h = theta_derivative(mu.h);
    return CollarPiece(mu.circle_id, mu.half_width, mu.pole_order, 1, from_g - from_h);
}

bool is_positively_oriented(const BkSurfaceForm& form) {
    for (const auto& piece : form.collars) {
        require_order(piece, form.k);
        const auto cert = certify_nonvanishing(piece.density.coeff(0));
        if (!cert.certified) {
            throw DegenerateOnZ("leading density on circle '" + piece.circle_id +
                                "' could not be certified nonvanishing (min |A(0,.)| = " +
                                std::to_string(cert.min_abs) + " near theta = " +
                                std::to_string(cert.witness_theta) + ")");
        }
        if (cert.sign * piece.orientation != 1) return false;
    }
    return true;
}

SymplecticCheck check_bk_symplectic(const BkSurfaceForm& form) {
    SymplecticCheck result;
    result.symplectic = true;
    for (const auto& piece : form.collars) {
        const CollarSeries& A = piece.density;
        const double R = piece.half_width;

        // Lipschitz bounds for A over [-R, R] x [0, 1).
        double dy_bound = 0.0;
        double dtheta_bound = 0.0;
        for (int j = 0; j <= A.order(); ++j) {
            const double rj = std::pow(R, j);
            if (j >= 1) dy_bound += j * rj / R * A.coeff(j).sup_bound();
            dtheta_bound += rj * A.coeff(j).derivative_bound();
        }

        constexpr int ny = 65;
        constexpr int ntheta = kNonvanishingSamples;
        const double dy = 2.0 * R / (ny - 1);
        const double dtheta = 1.0 / ntheta;
        const double margin = dy_bound * dy / 2.0 + dtheta_bound * dtheta / 2.0;

        double min_abs = std::numeric_limits<double>::infinity();
        CollarWitness witness{piece.circle_id, 0.0, 0.0, 0.0};
        bool flip = false;
        int first_sign = 0;
        for (int iy = 0; iy < ny; ++iy) {
            const double y = -R + iy * dy;
            const CircleFunction section = A.evaluate(y);
            for (int it = 0; it < ntheta; ++it) {
                const double theta = it * dtheta;
                const double v = section.value(theta);
                const int sign = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
                if (first_sign == 0) first_sign = sign;
                if (sign == 0 || sign != first_sign) flip = true;
                if (std::abs(v) < min_abs) {
                    min_abs = std::abs(v);
                    witness = {piece.circle_id, y, theta, v};
                }
            }
        }
        if (flip || min_abs <= margin) {
            result.symplectic = false;
            result.witness = witness;
            return result;
        }
    }
    return result;
}

int collar_density_sign(const CollarPiece& piece) {
    BkSurfaceForm single(piece.pole_order, {piece}, 0.0);
    const auto check = check_bk_symplectic(single);
    if (!check.symplectic) return 0;
    return piece.density.evaluate(0.0).value(0.0) > 0.0 ? 1 : -1;
}

}  // namespace bkforms
