#pragma once

#include <string>
#include <vector>

namespace bkforms::suites {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first failure, or a summary statistic
};

/// Sample counts for the acceptance properties.  Tolerances are fixed in the
/// implementations and are not configurable.
struct SuiteCounts {
    int residue_polynomials = 500;
    int poly_pick_vectors = 1000;
    int asymptotic_forms = 200;
    int jet_pairs = 200;
    int exact_one_forms = 100;
    int reparam_pairs = 200;
    int radko_values = 20;
    int classification_pairs = 20;
    unsigned long long seed = 0x5eed5eedULL;
};

inline SuiteCounts full_counts() { return {}; }

inline SuiteCounts quick_counts() {
    SuiteCounts c;
    c.residue_polynomials = 60;
    c.poly_pick_vectors = 120;
    c.asymptotic_forms = 25;
    c.jet_pairs = 25;
    c.exact_one_forms = 15;
    c.reparam_pairs = 25;
    c.radko_values = 8;
    c.classification_pairs = 5;
    return c;
}

/// Runs every acceptance property; one result per criterion, in order.
std::vector<SuiteResult> run_acceptance_suites(const SuiteCounts& counts);

}  // namespace bkforms::suites
