#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bkforms/series.hpp"

namespace bkforms {

/// Raw degree-2 collar datum on one circle of the critical hypersurface:
///   omega = (A(y, theta) / y^k) dy ^ dtheta   on  Z_r x [-R, R].
/// `orientation` is +1 when dy ^ dtheta agrees with the surface orientation.
struct CollarPiece {
    std::string circle_id;
    double half_width = 1.0;  // R > 0
    int pole_order = 1;       // k >= 1
    int orientation = 1;      // +1 or -1
    CollarSeries density;     // A(y, theta)

    CollarPiece(std::string id, double R, int k, int sign, CollarSeries A);
};

/// Degree-2 form with order-k poles on a model surface: one collar per circle
/// plus the integral of the smooth part over the complement of all collars.
struct BkSurfaceForm {
    int k = 1;
    std::string surface;  // informational descriptor (genus etc.)
    std::vector<CollarPiece> collars;
    double bulk_integral = 0.0;

    BkSurfaceForm(int pole_order, std::vector<CollarPiece> pieces, double bulk,
                  std::string surface_descriptor = {});
};

/// Collar-supported 1-form mu = h(y,theta) dy/y^k + g(y,theta) dtheta.
struct BkCollarOneForm {
    std::string circle_id;
    double half_width = 1.0;
    int pole_order = 1;
    CollarSeries h;  // order >= pole_order
    CollarSeries g;
    bool compact_support = true;  // h, g vanish at |y| = R

    BkCollarOneForm(std::string id, double R, int k, CollarSeries h_part, CollarSeries g_part,
                    bool compactly_supported = true);
};

/// Per-circle Laurent data of a closed degree-2 form:
///   A(y,theta) = sum_{i=1..k} y^{k-i} alpha_{-i}(theta) + y^k beta(y,theta),
/// i.e. omega = sum_i dy/y^i ^ alpha_{-i}(theta) dtheta + beta dy ^ dtheta.
struct CircleNormalForm {
    std::string circle_id;
    std::vector<CircleFunction> alpha;  // alpha[i-1] = alpha_{-i}, i = 1..k
    CollarSeries beta;
};

struct LaurentNormalForm {
    int k = 1;
    std::vector<CircleNormalForm> circles;
};

/// Coefficient extraction: alpha_{-i} is the y^{k-i} coefficient of A and
/// beta collects everything divisible by y^k.
LaurentNormalForm laurent_normal_form(const BkSurfaceForm& form);

// Inverse of the extraction; used to cross-check decompositions.
CollarSeries reconstruct_density(const CircleNormalForm& nf, int k, int order);

/// Leading singular coefficient alpha_{-k} per circle (the dtheta density of
/// the contraction with the canonical section along Z).  Independent of the
/// (alpha, beta) splitting.
std::vector<CircleFunction> iota_L(const BkSurfaceForm& form);

/// Exterior derivative of a collar one-form, returned as the raw collar datum
/// A with d(mu) = (A / y^k) dy ^ dtheta, A = y^k d_y(g) - d_theta(h).
CollarPiece d_collar(const BkCollarOneForm& mu);

/// True when the leading circle density has the sign of the collar
/// orientation on every circle.  Throws DegenerateOnZ when some leading
/// density cannot be certified nonvanishing.
bool is_positively_oriented(const BkSurfaceForm& form);

struct CollarWitness {
    std::string circle_id;
    double y = 0.0;
    double theta = 0.0;
    double value = 0.0;
};

struct SymplecticCheck {
    bool symplectic = false;
    std::optional<CollarWitness> witness;  // point of smallest |A| on failure
};

/// Certifies that every collar density is nonvanishing over its whole collar
/// (sampling plus Lipschitz tail bound).  In top degree this is maximal rank;
/// closedness is automatic.
SymplecticCheck check_bk_symplectic(const BkSurfaceForm& form);

inline bool is_bk_symplectic(const BkSurfaceForm& form) {
    return check_bk_symplectic(form).symplectic;
}

// Constant sign of a certified-nonvanishing collar density; 0 if uncertified.
int collar_density_sign(const CollarPiece& piece);

}  // namespace bkforms
