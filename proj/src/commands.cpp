#include "bkforms/commands.hpp"

#include <cmath>
#include <ostream>

#include "bkforms/errors.hpp"
#include "bkforms/suites.hpp"

namespace bkforms {

namespace {

Json circle_function_json(const CircleFunction& f) { return circle_function_to_json(f); }

Json residue_rows(const BkSurfaceForm& form) {
    const LaurentNormalForm nf = laurent_normal_form(form);
    Json rows = Json::array();
    for (size_t r = 0; r < nf.circles.size(); ++r) {
        Json row;
        row["id"] = nf.circles[r].circle_id;
        Json integrals = Json::array();
        for (int i = 1; i <= form.k; ++i) {
            integrals.push_back(form.collars[r].orientation *
                                nf.circles[r].alpha[static_cast<size_t>(i - 1)].mean() *
                                kCircleMeasure);
        }
        row["integrals"] = std::move(integrals);
        rows.push_back(std::move(row));
    }
    return rows;
}

Json ll_to_json(const LLDecomposition& ll) {
    Json doc;
    doc["liouville_volume"] = ll.liouville_volume;
    Json rows = Json::array();
    for (size_t r = 0; r < ll.circle_ids.size(); ++r) {
        Json row;
        row["id"] = ll.circle_ids[r];
        row["integrals"] = ll.residues[r];
        rows.push_back(std::move(row));
    }
    doc["residues"] = std::move(rows);
    return doc;
}

std::string polynomial_in_y(const RealPolynomial& p) {
    std::string out;
    for (int j = 0; j <= p.degree(); ++j) {
        const double c = p.coeff(j);
        if (c == 0.0) continue;
        std::string term;
        if (j == 0) {
            term = format_double(std::abs(c));
        } else {
            term = (std::abs(c) == 1.0 ? "" : format_double(std::abs(c)) + " ");
            term += j == 1 ? "y" : "y^" + std::to_string(j);
        }
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + term;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return "P(y) = " + (out.empty() ? "0" : out);
}

}  // namespace

Json cmd_decompose(const BkSurfaceForm& form) {
    const LaurentNormalForm nf = laurent_normal_form(form);
    const std::vector<CircleFunction> leading = iota_L(form);

    Json report;
    report["command"] = "decompose";
    report["k"] = form.k;

    Json circles = Json::array();
    for (const auto& circle : nf.circles) {
        Json entry;
        entry["id"] = circle.circle_id;
        Json alphas = Json::array();
        for (const auto& alpha : circle.alpha) alphas.push_back(circle_function_json(alpha));
        entry["alpha"] = std::move(alphas);
        entry["beta"] = collar_series_to_json(circle.beta);
        circles.push_back(std::move(entry));
    }
    Json normal_form;
    normal_form["circles"] = std::move(circles);
    report["normal_form"] = std::move(normal_form);

    Json iota = Json::array();
    for (size_t r = 0; r < leading.size(); ++r) {
        Json entry;
        entry["id"] = form.collars[r].circle_id;
        entry["density"] = circle_function_json(leading[r]);
        iota.push_back(std::move(entry));
    }
    report["iota_L"] = std::move(iota);
    report["residue_integrals"] = residue_rows(form);
    report["bulk_integral"] = form.bulk_integral;
    return report;
}

Json cmd_volume(const BkSurfaceForm& form, const std::vector<double>& eps_grid) {
    const VolumePolynomial p = volume_polynomial(form);

    Json report;
    report["command"] = "volume";
    report["k"] = form.k;
    Json poly;
    poly["coefficients"] = p.coefficients();
    poly["half_widths"] = p.half_widths();
    poly["rendered"] = to_string(p);
    report["volume_polynomial"] = std::move(poly);
    report["liouville_volume"] = p.constant_term();
    report["smooth_part_integral"] = smooth_part_integral(form);

    Json gaps = Json::array();
    for (const auto& [eps, gap] : asymptotic_gap(form, eps_grid)) {
        gaps.push_back(Json::array({eps, gap}));
    }
    report["asymptotic_gaps"] = std::move(gaps);
    return report;
}

ClassifyOutcome cmd_classify(const BkSurfaceForm& f0, const BkSurfaceForm& f1,
                             const std::string& mode, double tol) {
    ClassifyOutcome outcome;
    outcome.report["command"] = "classify";
    outcome.report["mode"] = mode;
    outcome.report["tol"] = tol;

    std::string verdict;
    if (mode == "symplecto") {
        switch (bk_symplectomorphic(f0, f1, tol)) {
            case SymplectomorphismVerdict::Equivalent:
                verdict = "equivalent";
                outcome.exit_code = 0;
                break;
            case SymplectomorphismVerdict::Inequivalent:
                verdict = "inequivalent";
                outcome.exit_code = 1;
                break;
            case SymplectomorphismVerdict::PathDegenerate:
                verdict = "path-degenerate";
                outcome.exit_code = 2;
                break;
        }
    } else if (mode == "poisson") {
        switch (poisson_isomorphic_bk_type(f0, f1, tol)) {
            case PoissonVerdict::Isomorphic:
                verdict = "isomorphic";
                outcome.exit_code = 0;
                break;
            case PoissonVerdict::Unknown:
                verdict = "unknown";
                outcome.exit_code = 2;
                break;
        }
    } else {
        throw ValidationError("unknown classification mode '" + mode + "'");
    }
    outcome.report["verdict"] = verdict;
    outcome.report["exit_code"] = outcome.exit_code;

    // both forms are symplectic once a verdict exists, so the invariants do too
    Json invariants;
    invariants["first"] = ll_to_json(ll_decomposition(f0));
    invariants["second"] = ll_to_json(ll_decomposition(f1));
    outcome.report["invariants"] = std::move(invariants);
    return outcome;
}

Json cmd_normalize(const std::vector<double>& residues, int order) {
    const ResidueVector a(residues);
    const RealPolynomial p = poly_pick(a, order);
    const ScalarLaurentSeries b = combined_expansion(a, p, order);

    Json report;
    report["command"] = "normalize";
    report["k"] = a.k();
    Json poly;
    poly["coefficients"] = p.coeffs();
    poly["rendered"] = polynomial_in_y(p);
    report["polynomial"] = std::move(poly);

    Json expansion;
    Json principal = Json::array();
    for (int i = a.k(); i >= 2; --i) {
        Json entry;
        entry["degree"] = -i;
        entry["value"] = b.coeff(-i);
        principal.push_back(std::move(entry));
    }
    expansion["principal_coefficients"] = std::move(principal);
    expansion["residue"] = b.residue();
    report["expansion"] = std::move(expansion);
    return report;
}

bool selftest(std::ostream& log) {
    const auto results = suites::run_acceptance_suites(suites::quick_counts());
    bool all = true;
    for (const auto& r : results) {
        log << (r.passed ? "ok   " : "FAIL ") << r.name;
        if (!r.detail.empty()) log << " (" << r.detail << ")";
        log << "\n";
        all = all && r.passed;
    }
    return all;
}

}  // namespace bkforms
