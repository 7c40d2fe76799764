#include "bkforms/suites.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "bkforms/classify.hpp"
#include "bkforms/commands.hpp"
#include "bkforms/normalize.hpp"
#include "bkforms/random_forms.hpp"
#include "bkforms/volume.hpp"

namespace bkforms::suites {

namespace {

using Unif = std::uniform_real_distribution<double>;

struct Check {
    bool ok = true;
    std::string detail;
    int cases = 0;

    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }

    void expect(bool condition, const std::string& what) {
        ++cases;
        if (!condition) fail(what);
    }

    SuiteResult result(const std::string& name) const {
        SuiteResult r;
        r.name = name;
        r.passed = ok;
        r.detail = ok ? std::to_string(cases) + " checks" : detail;
        return r;
    }
};

std::string num(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

RealPolynomial random_expansion_polynomial(std::mt19937_64& rng) {
    Unif lead(0.5, 2.0);
    Unif small(-0.8, 0.8);
    std::uniform_int_distribution<int> deg(2, 6);
    std::vector<double> cs{0.0, lead(rng)};
    const int d = deg(rng);
    for (int j = 2; j <= d; ++j) cs.push_back(small(rng));
    return RealPolynomial(cs);
}

SuiteResult criterion_residue_identities(const SuiteCounts& counts) {
    std::mt19937_64 rng(counts.seed + 1);
    Check check;
    for (int trial = 0; trial < counts.residue_polynomials; ++trial) {
        const RealPolynomial p = random_expansion_polynomial(rng);
        const double r1 = residue(expand_dp_over_pk(p, 1, 10));
        check.expect(std::abs(r1 - 1.0) < 1e-10,
                     "residue of P'/P = " + num(r1) + " (expected 1)");
        for (int i = 2; i <= 6; ++i) {
            const double ri = residue(expand_dp_over_pk(p, i, 10));
            check.expect(std::abs(ri) < 1e-10,
                         "residue of P'/P^" + std::to_string(i) + " = " + num(ri));
        }
    }
    return check.result("residue identities of P'/P^i");
}

SuiteResult criterion_poly_pick(const SuiteCounts& counts) {
    std::mt19937_64 rng(counts.seed + 2);
    std::uniform_int_distribution<int> kdist(1, 6);
    Check check;

    // pinned fixture: k = 3, (a_{-1}, a_{-2}, a_{-3}) = (0, 1, 1) -> y + y^2
    {
        const RealPolynomial p = poly_pick(ResidueVector({0.0, 1.0, 1.0}), 16);
        check.expect(p.degree() == 2 && p.coeff(0) == 0.0 && p.coeff(1) == 1.0 &&
                         p.coeff(2) == 1.0,
                     "fixture (0,1,1) produced a different polynomial");
    }

    for (int trial = 0; trial < counts.poly_pick_vectors; ++trial) {
        const int k = kdist(rng);
        const ResidueVector a = random_residue_vector(rng, k);
        const RealPolynomial p = poly_pick(a, 16);
        check.expect(p.coeff(0) == 0.0 && p.coeff(1) > 0.0, "contract on p0/p1 broken");
        const ScalarLaurentSeries b = combined_expansion(a, p, 8);
        check.expect(std::abs(b.coeff(-k) - 1.0) < 1e-10,
                     "b_{-k} = " + num(b.coeff(-k)) + " at k = " + std::to_string(k));
        for (int i = 2; i <= k - 1; ++i) {
            check.expect(std::abs(b.coeff(-i)) < 1e-10,
                         "b_{-" + std::to_string(i) + "} = " + num(b.coeff(-i)));
        }
        check.expect(std::abs(b.residue() - a.entry(1)) < 1e-10,
                     "residue " + num(b.residue()) + " != a_{-1} = " + num(a.entry(1)));
    }
    return check.result("normalization polynomial contract");
}

SuiteResult criterion_vol_asymptotics(const SuiteCounts& counts) {
    std::mt19937_64 rng(counts.seed + 3);
    std::uniform_int_distribution<int> kdist(1, 5);
    std::uniform_int_distribution<int> ncircles(1, 2);
    Check check;
    const std::vector<double> grid{1e-1, 1e-2, 1e-3, 1e-4};
    for (int trial = 0; trial < counts.asymptotic_forms; ++trial) {
        RandomFormOptions opt;
        opt.k = kdist(rng);
        opt.circles = ncircles(rng);
        opt.max_freq = 8;
        const BkSurfaceForm form = random_form(rng, opt);
        const auto gaps = asymptotic_gap(form, grid);
        check.expect(gaps.back().second < 1e-6,
                     "gap at eps=1e-4 is " + num(gaps.back().second));
        for (size_t i = 1; i < gaps.size(); ++i) {
            check.expect(gaps[i].second <= gaps[i - 1].second,
                         "gap increased from eps=" + num(gaps[i - 1].first) + " to eps=" +
                             num(gaps[i].first));
        }
    }
    return check.result("volume polynomial matches the cutoff integral");
}

SuiteResult criterion_jet_independence(const SuiteCounts& counts) {
    std::mt19937_64 rng(counts.seed + 4);
    std::uniform_int_distribution<int> kdist(1, 5);
    Check check;
    for (int trial = 0; trial < counts.jet_pairs; ++trial) {
        RandomFormOptions opt;
        opt.k = kdist(rng);
        opt.order = 20;
        const BkSurfaceForm form = random_form(rng, opt);
        const JetChange change = random_jet_change(rng, opt.k, false);
        const BkSurfaceForm changed = jet_change_form(form, change, 0.15 * opt.half_width);

        const VolumePolynomial before = volume_polynomial(form);
        const VolumePolynomial after = volume_polynomial(changed);
        for (int j = 0; j < opt.k; ++j) {
            check.expect(std::abs(before.coeff(j) - after.coeff(j)) < 1e-8,
                         "q_" + std::to_string(j) + " moved by " +
                             num(before.coeff(j) - after.coeff(j)) + " at k = " +
                             std::to_string(opt.k));
        }

        // defect of a theta-dependent change has no negative powers at all
        const int defect_k = 1 + (trial % 6);
        const JetChange wiggly = random_jet_change(rng, defect_k, true);
        const CollarLaurentSeries defect = jet_equivalence_defect(defect_k, wiggly, 12);
        check.expect(defect.lowest_degree() >= 0 && defect.zero_principal_part(),
                     "jet defect has a principal part at k = " + std::to_string(defect_k));
    }
    return check.result("volume polynomial is independent of the jet representative");
}

SuiteResult criterion_exactness(const SuiteCounts& counts) {
    std::mt19937_64 rng(counts.seed + 5);
    std::uniform_int_distribution<int> kdist(1, 5);
    Check check;
    for (int trial = 0; trial < counts.exact_one_forms; ++trial) {
        const int k = kdist(rng);
        const BkCollarOneForm mu = random_compact_one_form(rng, k, 1.0, 4);
        const CollarPiece piece = d_collar(mu);
        const BkSurfaceForm form(k, {piece}, 0.0);

        const VolumePolynomial p = volume_polynomial(form);
        for (int j = 0; j < k; ++j) {
            check.expect(std::abs(p.coeff(j)) < 1e-10,
                         "exact form has q_" + std::to_string(j) + " = " + num(p.coeff(j)));
        }
        const LaurentNormalForm nf = laurent_normal_form(form);
        for (int i = 1; i <= k; ++i) {
            const double res = nf.circles[0].alpha[static_cast<size_t>(i - 1)].mean();
            check.expect(std::abs(res) < 1e-10,
                         "exact form has residue integral " + num(res) + " at i = " +
                             std::to_string(i));
        }
    }
    return check.result("exact forms have zero volume polynomial and residues");
}

SuiteResult criterion_reparam_invariance(const SuiteCounts& counts) {
    std::mt19937_64 rng(counts.seed + 6);
    std::uniform_int_distribution<int> kdist(1, 5);
    Check check;

    // pinned witness that higher residues are not preserved
    {
        const BkSurfaceForm unit(
            2, {CollarPiece("Z1", 1.0, 2, 1, CollarSeries(16, {CircleFunction(1.0)}))}, 0.0);
        const BkSurfaceForm half = reparameterize_form(unit, RealPolynomial({0.0, 2.0}), 0.5);
        const LaurentNormalForm nf = laurent_normal_form(half);
        check.expect(std::abs(nf.circles[0].alpha[1].mean() - 0.5) < 1e-12,
                     "P = 2y should halve the order-2 residue integral");
    }

    for (int trial = 0; trial < counts.reparam_pairs; ++trial) {
        RandomFormOptions opt;
        opt.k = kdist(rng);
        opt.order = 20;
        const BkSurfaceForm form = random_form(rng, opt);
        const RealPolynomial p = random_reparam_polynomial(rng);
        const BkSurfaceForm mapped = reparameterize_form(form, p, 0.15 * opt.half_width);

        const double dv = liouville_volume(form) - liouville_volume(mapped);
        check.expect(std::abs(dv) < 1e-8, "Liouville volume moved by " + num(dv));

        const LaurentNormalForm nf0 = laurent_normal_form(form);
        const LaurentNormalForm nf1 = laurent_normal_form(mapped);
        for (size_t r = 0; r < nf0.circles.size(); ++r) {
            const double d1 = nf0.circles[r].alpha[0].mean() - nf1.circles[r].alpha[0].mean();
            check.expect(std::abs(d1) < 1e-8, "residue integral moved by " + num(d1));
        }
    }
    return check.result("reparameterization preserves the residue row and Liouville volume");
}

SuiteResult criterion_radko(const SuiteCounts& counts) {
    Check check;
    for (int n = 0; n < counts.radko_values; ++n) {
        const double c = 0.25 * (n + 1);
        const double b = -3.0 + 0.4 * n;
        const BkSurfaceForm form(
            1, {CollarPiece("Z1", 1.0, 1, 1, CollarSeries(8, {CircleFunction(c)}))}, b);
        const LLDecomposition ll = ll_decomposition(form);
        check.expect(ll.liouville_volume == b, "Liouville volume != bulk for smooth-free form");
        check.expect(ll.residues[0][0] == c, "residue integral != c");
        const ModularPeriods periods = modular_periods(form);
        check.expect(periods.periods[0] == 1.0 / c, "modular period != 1/c");
    }
    return check.result("pole-order-one forms reproduce the period/volume data");
}

SuiteResult criterion_classification(const SuiteCounts& counts) {
    std::mt19937_64 rng(counts.seed + 8);
    std::uniform_int_distribution<int> kdist(1, 4);
    Check check;

    for (int trial = 0; trial < counts.classification_pairs; ++trial) {
        RandomFormOptions opt;
        opt.k = kdist(rng);
        opt.positive = true;
        const BkSurfaceForm f0 = random_form(rng, opt);
        const BkSurfaceForm f1 = perturb_preserving_invariants(rng, f0);
        check.expect(bk_symplectomorphic(f0, f1, 1e-8) == SymplectomorphismVerdict::Equivalent,
                     "invariant-preserving perturbation classified as different");

        const RealPolynomial p = random_reparam_polynomial(rng);
        const BkSurfaceForm mapped = reparameterize_form(f0, p, 0.15 * opt.half_width);
        check.expect(poisson_isomorphic_bk_type(f0, mapped, 1e-8) == PoissonVerdict::Isomorphic,
                     "reparameterized form not recognized as Poisson isomorphic");
    }

    const BkSurfaceForm unit(
        2, {CollarPiece("Z1", 1.0, 2, 1, CollarSeries(16, {CircleFunction(1.0)}))}, 0.0);
    const BkSurfaceForm half = reparameterize_form(unit, RealPolynomial({0.0, 2.0}), 0.5);
    check.expect(bk_symplectomorphic(unit, half, 1e-8) == SymplectomorphismVerdict::Inequivalent,
                 "P = 2y reparameterization should change the order-2 residue");
    check.expect(poisson_isomorphic_bk_type(unit, half, 1e-8) == PoissonVerdict::Isomorphic,
                 "P = 2y reparameterization should stay Poisson isomorphic");

    const BkSurfaceForm flipped(
        2, {CollarPiece("Z1", 1.0, 2, 1, CollarSeries(16, {CircleFunction(-1.0)}))}, 0.0);
    check.expect(bk_symplectomorphic(unit, flipped, 1e-8) ==
                     SymplectomorphismVerdict::PathDegenerate,
                 "sign-flipped pair should be path-degenerate");

    return check.result("classification verdicts match the constructed pairs");
}

SuiteResult criterion_fixture(const SuiteCounts&) {
    Check check;
    const BkSurfaceForm fixture(
        2, {CollarPiece("Z1", 1.0, 2, 1, CollarSeries(16, {CircleFunction(1.0)}))}, 0.0);
    const Json report = cmd_volume(fixture);
    const auto coeffs = report["volume_polynomial"]["coefficients"];
    check.expect(coeffs.size() == 2 && coeffs[0].get<double>() == -2.0 &&
                     coeffs[1].get<double>() == 2.0,
                 "volume polynomial is not exactly -2 + 2t");
    check.expect(report["liouville_volume"].get<double>() == -2.0,
                 "Liouville volume is not exactly -2");
    check.expect(report["volume_polynomial"]["rendered"].get<std::string>() == "P(t) = -2 + 2 t",
                 "rendered polynomial differs: " +
                     report["volume_polynomial"]["rendered"].get<std::string>());
    for (const auto& gap : report["asymptotic_gaps"]) {
        check.expect(gap[1].get<double>() == 0.0, "fixture gap is not exactly zero");
    }
    return check.result("unit-density fixture reproduces P(t) = -2 + 2t");
}

}  // namespace

std::vector<SuiteResult> run_acceptance_suites(const SuiteCounts& counts) {
    return {
        criterion_residue_identities(counts),
        criterion_poly_pick(counts),
        criterion_vol_asymptotics(counts),
        criterion_jet_independence(counts),
        criterion_exactness(counts),
        criterion_reparam_invariance(counts),
        criterion_radko(counts),
        criterion_classification(counts),
        criterion_fixture(counts),
    };
}

}  // namespace bkforms::suites
