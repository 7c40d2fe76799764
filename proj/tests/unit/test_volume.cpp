#include <doctest.h>

#include <cmath>
#include <random>

#include "bkforms/random_forms.hpp"
#include "bkforms/volume.hpp"

using namespace bkforms;

namespace {

BkSurfaceForm single(int k, CollarSeries A, double R = 1.0, double bulk = 0.0) {
    return BkSurfaceForm(k, {CollarPiece("Z1", R, k, 1, std::move(A))}, bulk);
}

}  // namespace

TEST_CASE("cutoff integral of the unit density at k = 2") {
    const BkSurfaceForm f = single(2, CollarSeries(4, {CircleFunction(1.0)}));
    // closed form: two sides of int_eps^1 y^-2 dy
    CHECK(vol_cutoff(f, 0.1) == doctest::Approx(18.0).epsilon(1e-15));
    CHECK(vol_cutoff(f, 0.01) == doctest::Approx(198.0).epsilon(1e-15));
}

TEST_CASE("log terms cancel for k = 1") {
    const BkSurfaceForm f = single(1, CollarSeries(4, {CircleFunction(3.25)}), 1.0, 7.5);
    for (double eps : {0.5, 0.1, 1e-3}) CHECK(vol_cutoff(f, eps) == 7.5);
}

TEST_CASE("odd pole orders integrate to zero") {
    const BkSurfaceForm f = single(3, CollarSeries(4, {CircleFunction(1.0)}), 1.0, -2.0);
    for (double eps : {0.5, 0.1, 1e-3}) CHECK(vol_cutoff(f, eps) == doctest::Approx(-2.0));
    const VolumePolynomial p = volume_polynomial(f);
    CHECK(p.coeff(0) == -2.0);
    for (int j = 1; j < 3; ++j) CHECK(p.coeff(j) == 0.0);
}

TEST_CASE("eps domain is validated") {
    const BkSurfaceForm f = single(2, CollarSeries(4, {CircleFunction(1.0)}), 0.5);
    CHECK_THROWS_AS(vol_cutoff(f, 0.0), EpsilonOutOfRange);
    CHECK_THROWS_AS(vol_cutoff(f, 0.5), EpsilonOutOfRange);
    CHECK_THROWS_AS(vol_cutoff(f, -0.1), EpsilonOutOfRange);
}

TEST_CASE("volume polynomial of the unit density at k = 2") {
    const BkSurfaceForm f = single(2, CollarSeries(16, {CircleFunction(1.0)}));
    const VolumePolynomial p = volume_polynomial(f);
    CHECK(p.coefficients() == std::vector<double>{-2.0, 2.0});
    CHECK(liouville_volume(f) == -2.0);
    CHECK(smooth_part_integral(f) == -2.0);
    CHECK(to_string(p) == "P(t) = -2 + 2 t");
    // P(1/eps) reproduces the cutoff integral exactly: beta = 0
    for (double eps : {0.1, 0.01, 1e-3}) {
        CHECK(p(1.0 / eps) == doctest::Approx(vol_cutoff(f, eps)).epsilon(1e-14));
    }
}

TEST_CASE("volume polynomial structure is enforced") {
    CHECK_THROWS_AS(VolumePolynomial(3, {1.0, 2.0, 3.0}, {}), ValidationError);
    CHECK_NOTHROW(VolumePolynomial(3, {1.0, 2.0, 0.0}, {}));
    CHECK_THROWS_AS(VolumePolynomial(1, {1.0, 2.0}, {}), ValidationError);
}

TEST_CASE("exact forms have identically zero volume polynomial") {
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 10; ++trial) {
        const int k = 1 + trial % 5;
        const BkCollarOneForm mu = random_compact_one_form(rng, k, 1.0, 4);
        const BkSurfaceForm f(k, {d_collar(mu)}, 0.0);
        const VolumePolynomial p = volume_polynomial(f);
        for (int j = 0; j < k; ++j) CHECK(std::abs(p.coeff(j)) < 1e-10);
    }
}

TEST_CASE("smooth forms integrate classically") {
    // A = y^2 at k = 2: an ordinary area form with total mass 2R
    const BkSurfaceForm f = single(
        2, CollarSeries(4, {CircleFunction(), CircleFunction(), CircleFunction(1.0)}), 1.0, 0.5);
    CHECK(liouville_volume(f) == doctest::Approx(2.5).epsilon(1e-15));
    // bulk-only form
    const BkSurfaceForm bulk_only(2, {}, 4.25);
    CHECK(liouville_volume(bulk_only) == 4.25);
    CHECK(volume_polynomial(bulk_only).coefficients() == std::vector<double>{4.25, 0.0});
}

TEST_CASE("gap table") {
    SUBCASE("unit density: gaps vanish identically") {
        const BkSurfaceForm f = single(2, CollarSeries(16, {CircleFunction(1.0)}));
        for (const auto& [eps, gap] : asymptotic_gap(f)) CHECK(gap == 0.0);
    }
    SUBCASE("A = 1 + y^3 at k = 2: the odd remainder integrates to zero two-sided") {
        const BkSurfaceForm f = single(
            2, CollarSeries(4, {CircleFunction(1.0), CircleFunction(), CircleFunction(),
                                CircleFunction(1.0)}));
        for (const auto& [eps, gap] : asymptotic_gap(f)) CHECK(gap == 0.0);
    }
    SUBCASE("A = 1 + y^2 at k = 2: gap is exactly 2 eps and decreasing") {
        const BkSurfaceForm f = single(
            2, CollarSeries(4, {CircleFunction(1.0), CircleFunction(), CircleFunction(1.0)}));
        const auto gaps = asymptotic_gap(f);
        for (const auto& [eps, gap] : gaps) CHECK(gap == doctest::Approx(2.0 * eps).epsilon(1e-15));
        for (size_t i = 1; i < gaps.size(); ++i) CHECK(gaps[i].second < gaps[i - 1].second);
    }
}

TEST_CASE("tail formula equals the raw difference away from cancellation") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<int> kdist(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        RandomFormOptions opt;
        opt.k = kdist(rng);
        opt.circles = 1 + trial % 2;
        const BkSurfaceForm f = random_form(rng, opt);
        const VolumePolynomial p = volume_polynomial(f);
        for (double eps : {0.1, 0.05, 0.01}) {
            const double raw = p(1.0 / eps) - vol_cutoff(f, eps);
            CHECK(std::abs(raw - beta_tail_integral(f, eps)) < 1e-8);
        }
    }
}

TEST_CASE("zeroing even-order poles leaves only the smooth constant") {
    std::mt19937_64 rng(52);
    RandomFormOptions opt;
    opt.k = 5;
    for (int trial = 0; trial < 10; ++trial) {
        const BkSurfaceForm f = random_form(rng, opt);
        // rebuild with alpha_{-2}, alpha_{-4} rows killed
        std::vector<CircleFunction> cs(f.collars[0].density.coeffs());
        cs[opt.k - 2] = CircleFunction();  // alpha_{-2}
        cs[opt.k - 4] = CircleFunction();  // alpha_{-4}
        const BkSurfaceForm g = BkSurfaceForm(
            opt.k,
            {CollarPiece("Z1", f.collars[0].half_width, opt.k, 1,
                         CollarSeries(f.collars[0].density.order(), std::move(cs)))},
            f.bulk_integral);
        const VolumePolynomial p = volume_polynomial(g);
        for (int j = 1; j < opt.k; ++j) CHECK(p.coeff(j) == 0.0);
    }
}

TEST_CASE("gap shrinks along the grid and is tiny at eps = 1e-4") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> kdist(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        RandomFormOptions opt;
        opt.k = kdist(rng);
        opt.max_freq = 8;
        const BkSurfaceForm f = random_form(rng, opt);
        const auto gaps = asymptotic_gap(f);
        CHECK(gaps.back().second < 1e-6);
        for (size_t i = 1; i < gaps.size(); ++i) CHECK(gaps[i].second <= gaps[i - 1].second);
    }
}
