#pragma once

#include <string>
#include <vector>

#include "bkforms/bk_forms.hpp"
#include "bkforms/volume.hpp"

namespace bkforms {

/// The classification invariants of a symplectic form with order-k poles:
/// the Liouville volume together with every residue integral
/// residues[r][i-1] = integral over gamma_r of alpha_{-i}, i = 1..k.
struct LLDecomposition {
    double liouville_volume = 0.0;
    std::vector<std::string> circle_ids;
    std::vector<std::vector<double>> residues;  // [circle][i-1]
};

struct ModularPeriods {
    std::vector<std::string> circle_ids;
    std::vector<double> periods;
};

enum class SymplectomorphismVerdict {
    Equivalent,
    Inequivalent,
    PathDegenerate,  // densities disagree in sign; the linear path leaves the
                     // symplectic locus, so no verdict is justified
};

enum class PoissonVerdict {
    Isomorphic,
    Unknown,  // matching invariants are only known to be sufficient
};

std::string to_string(SymplectomorphismVerdict v);
std::string to_string(PoissonVerdict v);

/// Requires a symplectic form (throws NotSymplectic with a witness point
/// otherwise).  Residues fold in the collar orientation so that they are
/// integrals over the oriented circles.
LLDecomposition ll_decomposition(const BkSurfaceForm& form);

/// k = 1 only: the period of the modular vector field on each circle is the
/// reciprocal of the residue integral.
ModularPeriods modular_periods(const BkSurfaceForm& form);

/// Equality of all classification invariants decides the existence of a
/// pole-preserving symplectomorphism, provided the straight-line path between
/// the two forms stays symplectic; when the collar densities disagree in sign
/// the verdict is PathDegenerate instead of a boolean.
SymplectomorphismVerdict bk_symplectomorphic(const BkSurfaceForm& f0, const BkSurfaceForm& f1,
                                             double tol = 1e-8);

/// Sufficient test for a Poisson isomorphism between the dual structures:
/// equal Liouville volumes and equal residue-one integrals.  Higher residues
/// are allowed to differ, so inequality yields Unknown, never a negative.
PoissonVerdict poisson_isomorphic_bk_type(const BkSurfaceForm& f0, const BkSurfaceForm& f1,
                                          double tol = 1e-8);

}  // namespace bkforms
