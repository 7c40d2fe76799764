#pragma once

#include <vector>

#include "bkforms/bk_forms.hpp"
#include "bkforms/polynomial.hpp"
#include "bkforms/series.hpp"

namespace bkforms {

/// Residue data (a_{-1}, ..., a_{-k}) with a_{-k} > 0, stored lowest index
/// first: entry(i) = a_{-i}.
class ResidueVector {
public:
    explicit ResidueVector(std::vector<double> a_neg_1_to_neg_k);

    int k() const { return static_cast<int>(a_.size()); }
    double entry(int i) const { return a_[static_cast<size_t>(i - 1)]; }  // a_{-i}
    const std::vector<double>& values() const { return a_; }

private:
    std::vector<double> a_;
};

/// Defining-coordinate replacement y2 = y (1 + g(y, theta) y^{k-1}); the
/// (k-1)-jet of y2 equals that of y by construction.
struct JetChange {
    CollarSeries g;

    bool theta_independent() const {
        for (int j = 0; j <= g.order(); ++j) {
            if (!g.coeff(j).is_constant()) return false;
        }
        return true;
    }
};

/// sum_i a_{-i} P'(y)/P(y)^i as a Laurent series.
ScalarLaurentSeries combined_expansion(const ResidueVector& a, const RealPolynomial& p,
                                       int order);

/// Polynomial P with P(0) = 0, P'(0) > 0 whose combined expansion has
/// principal coefficients (b_{-k}, ..., b_{-2}, residue) = (1, 0, ..., 0,
/// a_{-1}).  Starts from P = c y with c = a_{-k}^{1/(k-1)} and repairs one
/// principal coefficient per induction step via P <- P + t P^{j+1}.  The
/// output is re-expanded and checked before returning.
RealPolynomial poly_pick(const ResidueVector& a, int order = 16);

/// dy-component of d(y2)/y2^k - dy/y^k for y2 = y (1 + g y^{k-1}).  The
/// result carries no negative powers: it is assembled from the smooth series
/// (y2^{1-k} - y^{1-k})/(1-k), whose binomial terms are all divisible by the
/// right powers of y, rather than by cancelling two singular series.
CollarLaurentSeries jet_equivalence_defect(int k, const JetChange& change, int order);

/// Same defect computed the blunt way ((u + y u') u^{-k} - 1)/y^k; used to
/// cross-check the structural route.  Principal coefficients are only zero
/// up to roundoff here.
CollarLaurentSeries jet_equivalence_defect_direct(int k, const JetChange& change, int order);

/// Laurent data of the pullback under id x P(y): each singular row picks up
/// the Laurent coefficients of P'/P^j, the residue row is untouched, and the
/// smooth part collects the regular remainders plus beta composed with P.
LaurentNormalForm reparam_decomposition(const LaurentNormalForm& nf, const RealPolynomial& p,
                                        int order);

/// Density of the pullback of (A/y^k) dy ^ dtheta under y = sigma(y2):
/// A(sigma) d_y(sigma) (y2/sigma)^k.  sigma must have sigma(0) = 0 and an
/// invertible linear coefficient.
CollarSeries transform_density(const CollarSeries& A, const CollarSeries& sigma, int k,
                               int order);

/// Germ of the same form in the replaced coordinate y2 = y (1 + g y^{k-1});
/// theta-dependent changes are fine here.
CollarSeries jet_change_density(const CollarSeries& A, const JetChange& change, int k,
                                int order);

/// Whole-form pullback under a diffeomorphism equal to id x P(y) on every
/// collar.  P must be strictly increasing on [-R2, R2] with image inside
/// each original collar; the volume between the old collar and the image is
/// moved into the bulk term, so Liouville data is preserved.
BkSurfaceForm reparameterize_form(const BkSurfaceForm& form, const RealPolynomial& p,
                                  double new_half_width);

/// Whole form re-expressed in the coordinate y2.  Requires a
/// theta-independent change: the boundary of a theta-dependent cutoff region
/// has no closed-form collar integral in this coefficient ring.
BkSurfaceForm jet_change_form(const BkSurfaceForm& form, const JetChange& change,
                              double new_half_width);

}  // namespace bkforms
