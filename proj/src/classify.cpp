#include "bkforms/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bkforms/errors.hpp"

namespace bkforms {

namespace {

std::string witness_message(const CollarWitness& w) {
    return "density reaches " + std::to_string(w.value) + " on circle '" + w.circle_id +
           "' at (y, theta) = (" + std::to_string(w.y) + ", " + std::to_string(w.theta) + ")";
}

void require_symplectic(const BkSurfaceForm& form) {
    const auto check = check_bk_symplectic(form);
    if (!check.symplectic) {
        throw NotSymplectic(check.witness ? witness_message(*check.witness)
                                          : "collar density is not certified nonvanishing");
    }
}

// circle id -> collar index, requiring matching ids and orientations
std::vector<std::pair<size_t, size_t>> match_circles(const BkSurfaceForm& f0,
                                                     const BkSurfaceForm& f1) {
    if (f0.k != f1.k) {
        throw IncompatibleStructures("pole orders differ: " + std::to_string(f0.k) + " vs " +
                                     std::to_string(f1.k));
    }
    if (f0.collars.size() != f1.collars.size()) {
        throw IncompatibleStructures("circle counts differ");
    }
    std::map<std::string, size_t> index1;
    for (size_t j = 0; j < f1.collars.size(); ++j) index1[f1.collars[j].circle_id] = j;
    std::vector<std::pair<size_t, size_t>> pairs;
    pairs.reserve(f0.collars.size());
    for (size_t i = 0; i < f0.collars.size(); ++i) {
        const auto it = index1.find(f0.collars[i].circle_id);
        if (it == index1.end()) {
            throw IncompatibleStructures("circle '" + f0.collars[i].circle_id +
                                         "' has no counterpart");
        }
        if (f0.collars[i].orientation != f1.collars[it->second].orientation) {
            throw IncompatibleStructures("circle '" + f0.collars[i].circle_id +
                                         "' orientations differ");
        }
        pairs.emplace_back(i, it->second);
    }
    return pairs;
}

int certified_sign(const CollarPiece& piece) {
    return piece.density.evaluate(0.0).value(0.0) > 0.0 ? 1 : -1;
}

}  // namespace

std::string to_string(SymplectomorphismVerdict v) {
    switch (v) {
        case SymplectomorphismVerdict::Equivalent: return "equivalent";
        case SymplectomorphismVerdict::Inequivalent: return "inequivalent";
        case SymplectomorphismVerdict::PathDegenerate: return "path-degenerate";
    }
    return "?";
}

std::string to_string(PoissonVerdict v) {
    switch (v) {
        case PoissonVerdict::Isomorphic: return "isomorphic";
        case PoissonVerdict::Unknown: return "unknown";
    }
    return "?";
}

LLDecomposition ll_decomposition(const BkSurfaceForm& form) {
    require_symplectic(form);
    const LaurentNormalForm nf = laurent_normal_form(form);

    LLDecomposition ll;
    ll.liouville_volume = liouville_volume(form);
    ll.circle_ids.reserve(form.collars.size());
    ll.residues.reserve(form.collars.size());
    for (size_t r = 0; r < form.collars.size(); ++r) {
        ll.circle_ids.push_back(form.collars[r].circle_id);
        std::vector<double> row(static_cast<size_t>(form.k));
        for (int i = 1; i <= form.k; ++i) {
            row[static_cast<size_t>(i - 1)] = form.collars[r].orientation *
                                              nf.circles[r].alpha[static_cast<size_t>(i - 1)].mean() *
                                              kCircleMeasure;
        }
        ll.residues.push_back(std::move(row));
    }
    return ll;
}

ModularPeriods modular_periods(const BkSurfaceForm& form) {
    if (form.k != 1) {
        throw WrongPoleOrder("modular periods are defined for pole order 1, form has " +
                             std::to_string(form.k));
    }
    require_symplectic(form);
    if (!is_positively_oriented(form)) {
        throw NotPositivelyOriented("form is not positively oriented");
    }
    const LLDecomposition ll = ll_decomposition(form);
    ModularPeriods periods;
    periods.circle_ids = ll.circle_ids;
    periods.periods.reserve(ll.residues.size());
    for (const auto& row : ll.residues) periods.periods.push_back(1.0 / row[0]);
    return periods;
}

SymplectomorphismVerdict bk_symplectomorphic(const BkSurfaceForm& f0, const BkSurfaceForm& f1,
                                             double tol) {
    const auto pairs = match_circles(f0, f1);
    require_symplectic(f0);
    require_symplectic(f1);

    // The straight-line path of densities stays nonvanishing iff the two
    // certified constant signs agree on every circle.
    for (const auto& [i, j] : pairs) {
        if (certified_sign(f0.collars[i]) != certified_sign(f1.collars[j])) {
            return SymplectomorphismVerdict::PathDegenerate;
        }
    }

    const LLDecomposition ll0 = ll_decomposition(f0);
    const LLDecomposition ll1 = ll_decomposition(f1);
    if (std::abs(ll0.liouville_volume - ll1.liouville_volume) >= tol) {
        return SymplectomorphismVerdict::Inequivalent;
    }
    std::map<std::string, size_t> row1;
    for (size_t j = 0; j < ll1.circle_ids.size(); ++j) row1[ll1.circle_ids[j]] = j;
    for (size_t i = 0; i < ll0.circle_ids.size(); ++i) {
        const auto& a = ll0.residues[i];
        const auto& b = ll1.residues[row1.at(ll0.circle_ids[i])];
        for (size_t c = 0; c < a.size(); ++c) {
            if (std::abs(a[c] - b[c]) >= tol) return SymplectomorphismVerdict::Inequivalent;
        }
    }
    return SymplectomorphismVerdict::Equivalent;
}

PoissonVerdict poisson_isomorphic_bk_type(const BkSurfaceForm& f0, const BkSurfaceForm& f1,
                                          double tol) {
    const auto pairs = match_circles(f0, f1);
    require_symplectic(f0);
    require_symplectic(f1);
    if (!is_positively_oriented(f0) || !is_positively_oriented(f1)) {
        throw NotPositivelyOriented("both forms must be positively oriented");
    }

    const LLDecomposition ll0 = ll_decomposition(f0);
    const LLDecomposition ll1 = ll_decomposition(f1);
    if (std::abs(ll0.liouville_volume - ll1.liouville_volume) >= tol) {
        return PoissonVerdict::Unknown;
    }
    std::map<std::string, size_t> row1;
    for (size_t j = 0; j < ll1.circle_ids.size(); ++j) row1[ll1.circle_ids[j]] = j;
    for (size_t i = 0; i < ll0.circle_ids.size(); ++i) {
        const double a = ll0.residues[i][0];
        const double b = ll1.residues[row1.at(ll0.circle_ids[i])][0];
        if (std::abs(a - b) >= tol) return PoissonVerdict::Unknown;
    }
    return PoissonVerdict::Isomorphic;
}

}  // namespace bkforms
