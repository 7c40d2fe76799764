#pragma once

#include <random>

#include "bkforms/bk_forms.hpp"
#include "bkforms/normalize.hpp"
#include "bkforms/polynomial.hpp"

namespace bkforms {

/// Seeded generators shared by the property tests, the acceptance suites and
/// the CLI selftest.
///
/// Densities come out "gap-friendly": the circle means of the smooth-tail
/// coefficients at even offsets are nonnegative and the leading one is small,
/// so |P(1/eps) - vol_cutoff(eps)| is a positive combination of increasing
/// powers of eps.
struct RandomFormOptions {
    int k = 2;
    int circles = 1;
    int order = 16;
    int max_freq = 4;
    double half_width = 1.0;
    bool positive = false;  // certified-positive density, orientation +1
};

CircleFunction random_circle_function(std::mt19937_64& rng, int max_freq, double amp,
                                      double mean_lo, double mean_hi);

BkSurfaceForm random_form(std::mt19937_64& rng, const RandomFormOptions& opt);

// p(0) = 0, p'(0) in [0.7, 1.5], higher coefficients small.
RealPolynomial random_reparam_polynomial(std::mt19937_64& rng, int max_degree = 3);

ResidueVector random_residue_vector(std::mt19937_64& rng, int k);

JetChange random_jet_change(std::mt19937_64& rng, int k, bool theta_dependent);

/// Adds mean-zero oscillation everywhere and mean shifts at odd smooth-tail
/// offsets: every classification invariant of `form` is untouched.
BkSurfaceForm perturb_preserving_invariants(std::mt19937_64& rng, const BkSurfaceForm& form);

/// mu with h and g proportional to (R^2 - y^2): compact support at |y| = R
/// holds exactly in the polynomial model.
BkCollarOneForm random_compact_one_form(std::mt19937_64& rng, int k, double half_width,
                                        int max_freq);

}  // namespace bkforms
