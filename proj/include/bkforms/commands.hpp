#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bkforms/classify.hpp"
#include "bkforms/normalize.hpp"
#include "bkforms/report.hpp"

namespace bkforms {

/// Normal form, leading singular densities and residue integrals.
Json cmd_decompose(const BkSurfaceForm& form);

/// Volume polynomial, Liouville volume and the asymptotic gap table.
Json cmd_volume(const BkSurfaceForm& form,
                const std::vector<double>& eps_grid = default_eps_grid());

struct ClassifyOutcome {
    Json report;
    int exit_code = 0;  // 0 equivalent/isomorphic, 1 not, 2 unknown/path-degenerate
};

/// mode is "symplecto" or "poisson".
ClassifyOutcome cmd_classify(const BkSurfaceForm& f0, const BkSurfaceForm& f1,
                             const std::string& mode, double tol);

/// Residues are given lowest pole first: a_{-1}, ..., a_{-k}.
Json cmd_normalize(const std::vector<double>& residues, int order);

/// Runs scaled-down versions of the library's invariant suites; prints one
/// line per suite to `log` and returns true when all pass.
bool selftest(std::ostream& log);

}  // namespace bkforms
