#include "bkforms/random_forms.hpp"

#include <cmath>

namespace bkforms {

namespace {

using Unif = std::uniform_real_distribution<double>;

CircleFunction oscillation(std::mt19937_64& rng, int max_freq, double amp) {
    Unif coeff(-amp, amp);
    std::uniform_int_distribution<int> nfreq(0, max_freq);
    std::vector<std::pair<int, double>> cosines, sines;
    const int top = nfreq(rng);
    for (int m = 1; m <= top; ++m) {
        cosines.emplace_back(m, coeff(rng));
        sines.emplace_back(m, coeff(rng));
    }
    return CircleFunction(0.0, cosines, sines);
}

}  // namespace

CircleFunction random_circle_function(std::mt19937_64& rng, int max_freq, double amp,
                                      double mean_lo, double mean_hi) {
    Unif mean(mean_lo, mean_hi);
    return CircleFunction(mean(rng)) + oscillation(rng, max_freq, amp);
}

BkSurfaceForm random_form(std::mt19937_64& rng, const RandomFormOptions& opt) {
    Unif bulk_dist(-2.0, 2.0);
    std::vector<CollarPiece> pieces;
    for (int c = 0; c < opt.circles; ++c) {
        std::vector<CircleFunction> coeffs(static_cast<size_t>(opt.order) + 1);

        // singular rows: unconstrained
        for (int j = 0; j < opt.k && j <= opt.order; ++j) {
            coeffs[static_cast<size_t>(j)] = random_circle_function(rng, opt.max_freq, 0.6, -1.0, 1.0);
        }
        // leading smooth coefficient: small nonnegative mean keeps the
        // cutoff gap under the acceptance threshold at eps = 1e-4
        if (opt.k <= opt.order) {
            coeffs[static_cast<size_t>(opt.k)] =
                random_circle_function(rng, opt.max_freq, 0.3, 1e-4, 4e-3);
        }
        for (int j = opt.k + 1; j <= opt.order; ++j) {
            const int m = j - opt.k;
            if (m % 2 == 0) {
                coeffs[static_cast<size_t>(j)] =
                    random_circle_function(rng, opt.max_freq, 0.4, 0.0, 0.4);
            } else {
                coeffs[static_cast<size_t>(j)] =
                    random_circle_function(rng, opt.max_freq, 0.4, -0.5, 0.5);
            }
        }

        if (opt.positive) {
            Unif base_dist(0.7, 1.6);
            const double base = base_dist(rng);
            coeffs[0] = CircleFunction(base) + oscillation(rng, opt.max_freq, 0.08 * base);
            double tail = 0.0;
            for (int j = 1; j <= opt.order; ++j) {
                tail += coeffs[static_cast<size_t>(j)].sup_bound() * std::pow(opt.half_width, j);
            }
            if (tail > 0.4 * base) {
                const double scale = 0.4 * base / tail;
                for (int j = 1; j <= opt.order; ++j) coeffs[static_cast<size_t>(j)] *= scale;
            }
        }

        pieces.emplace_back("Z" + std::to_string(c + 1), opt.half_width, opt.k, 1,
                            CollarSeries(opt.order, std::move(coeffs)));
    }
    return BkSurfaceForm(opt.k, std::move(pieces), bulk_dist(rng));
}

RealPolynomial random_reparam_polynomial(std::mt19937_64& rng, int max_degree) {
    Unif lead(0.7, 1.5);
    Unif small(-0.3, 0.3);
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::vector<double> cs{0.0, lead(rng)};
    const int d = deg(rng);
    for (int j = 2; j <= d; ++j) cs.push_back(small(rng));
    return RealPolynomial(cs);
}

ResidueVector random_residue_vector(std::mt19937_64& rng, int k) {
    Unif any(-2.0, 2.0);
    Unif lead(0.3, 2.5);
    std::vector<double> a;
    for (int i = 1; i < k; ++i) a.push_back(any(rng));
    a.push_back(lead(rng));
    return ResidueVector(std::move(a));
}

JetChange random_jet_change(std::mt19937_64& rng, int k, bool theta_dependent) {
    Unif small(-0.1, 0.1);
    const int order = 3;
    std::vector<CircleFunction> cs;
    for (int j = 0; j <= order; ++j) {
        CircleFunction c(small(rng));
        const bool keep_constant = !theta_dependent || (k == 1 && j == 0);
        if (!keep_constant) c += oscillation(rng, 2, 0.05);
        cs.push_back(c);
    }
    return JetChange{CollarSeries(order, std::move(cs))};
}

BkSurfaceForm perturb_preserving_invariants(std::mt19937_64& rng, const BkSurfaceForm& form) {
    Unif odd_mean(-0.15, 0.15);
    std::vector<CollarPiece> pieces;
    pieces.reserve(form.collars.size());
    for (const CollarPiece& piece : form.collars) {
        std::vector<CircleFunction> cs(piece.density.coeffs());
        for (int j = 0; j < static_cast<int>(cs.size()); ++j) {
            cs[static_cast<size_t>(j)] += oscillation(rng, 3, 0.03);
            const int m = j - form.k;
            if (m >= 1 && m % 2 == 1) cs[static_cast<size_t>(j)] += CircleFunction(odd_mean(rng));
        }
        pieces.emplace_back(piece.circle_id, piece.half_width, piece.pole_order,
                            piece.orientation, CollarSeries(piece.density.order(), std::move(cs)));
    }
    return BkSurfaceForm(form.k, std::move(pieces), form.bulk_integral, form.surface);
}

BkCollarOneForm random_compact_one_form(std::mt19937_64& rng, int k, double half_width,
                                        int max_freq) {
    const double R2 = half_width * half_width;
    auto cutoff_times = [R2](const CollarSeries& raw) {
        const int order = raw.order() + 2;
        const CollarSeries window(order, {CircleFunction(R2), CircleFunction(),
                                          CircleFunction(-1.0)});
        return window * raw.resized(order);
    };

    std::vector<CircleFunction> h_raw, g_raw;
    for (int j = 0; j <= k + 2; ++j) {
        h_raw.push_back(random_circle_function(rng, max_freq, 0.5, -0.5, 0.5));
    }
    for (int j = 0; j <= 4; ++j) {
        g_raw.push_back(random_circle_function(rng, max_freq, 0.5, -0.5, 0.5));
    }
    return BkCollarOneForm("Z1", half_width, k,
                           cutoff_times(CollarSeries(k + 2, std::move(h_raw))),
                           cutoff_times(CollarSeries(4, std::move(g_raw))));
}

}  // namespace bkforms
