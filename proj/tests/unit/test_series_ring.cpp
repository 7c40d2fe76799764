#include <doctest.h>

#include <cmath>
#include <random>

#include "bkforms/polynomial.hpp"
#include "bkforms/rational.hpp"
#include "bkforms/series.hpp"

using namespace bkforms;

namespace {

CircleFunction rand_cf(std::mt19937_64& rng, int max_freq = 3, double amp = 1.0) {
    std::uniform_real_distribution<double> unif(-amp, amp);
    std::vector<std::pair<int, double>> cosines, sines;
    for (int m = 1; m <= max_freq; ++m) {
        cosines.emplace_back(m, unif(rng));
        sines.emplace_back(m, unif(rng));
    }
    return CircleFunction(unif(rng), cosines, sines);
}

CollarSeries rand_collar(std::mt19937_64& rng, int order, int max_freq = 3, double amp = 1.0) {
    std::vector<CircleFunction> cs;
    for (int j = 0; j <= order; ++j) cs.push_back(rand_cf(rng, max_freq, amp));
    return CollarSeries(order, std::move(cs));
}

Rational rand_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

PowerSeries<Rational> rand_rat_series(std::mt19937_64& rng, int order) {
    std::vector<Rational> cs;
    for (int j = 0; j <= order; ++j) cs.push_back(rand_rat(rng));
    return PowerSeries<Rational>(order, std::move(cs));
}

}  // namespace

TEST_CASE("(1 + y)(1 - y) = 1 - y^2") {
    ScalarSeries a(2, {1.0, 1.0});
    ScalarSeries b(2, {1.0, -1.0});
    ScalarSeries p = a * b;
    CHECK(p.coeff(0) == 1.0);
    CHECK(p.coeff(1) == 0.0);
    CHECK(p.coeff(2) == -1.0);
}

TEST_CASE("d/dy y^3 = 3 y^2") {
    ScalarSeries s(4, {0.0, 0.0, 0.0, 1.0});
    ScalarSeries d = s.derivative();
    CHECK(d.coeff(2) == 3.0);
    CHECK(d.coeff(1) == 0.0);
    CHECK(d.order() == 3);
}

TEST_CASE("(cos y) * (cos y) = y^2 (1/2 + cos(4 pi theta)/2)") {
    CollarSeries a(3);
    a = CollarSeries(3, {CircleFunction(), CircleFunction::cosine(1, 1.0)});
    const CollarSeries p = a * a;
    CHECK(p.coeff(0).is_zero());
    CHECK(p.coeff(1).is_zero());
    CHECK(p.coeff(2).constant() == doctest::Approx(0.5));
    CHECK(p.coeff(2).harmonics().at(0).frequency == 2);
    CHECK(p.coeff(2).harmonics().at(0).cos_amp == doctest::Approx(0.5));
}

TEST_CASE("ring axioms hold exactly for rational coefficients") {
    std::mt19937_64 rng(100);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = rand_rat_series(rng, 8);
        const auto b = rand_rat_series(rng, 8);
        const auto c = rand_rat_series(rng, 8);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("ring axioms hold to roundoff for trig coefficients") {
    std::mt19937_64 rng(200);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = rand_collar(rng, 6);
        const auto b = rand_collar(rng, 6);
        const auto c = rand_collar(rng, 6);
        CHECK(max_coeff_distance((a + b) + c, a + (b + c)) < 1e-12);
        CHECK(max_coeff_distance(a * b, b * a) < 1e-12);
        CHECK(max_coeff_distance((a * b) * c, a * (b * c)) < 1e-12);
        CHECK(max_coeff_distance(a * (b + c), a * b + a * c) < 1e-12);
    }
}

TEST_CASE("reciprocal: geometric series") {
    ScalarSeries u(3, {1.0, 1.0});
    ScalarSeries r = reciprocal(u);
    CHECK(r.coeff(0) == 1.0);
    CHECK(r.coeff(1) == -1.0);
    CHECK(r.coeff(2) == 1.0);
    CHECK(r.coeff(3) == -1.0);

    ScalarSeries two(2, {2.0});
    CHECK(reciprocal(two).coeff(0) == 0.5);
}

TEST_CASE("reciprocal is a two-sided inverse to the declared order") {
    std::mt19937_64 rng(300);
    for (int trial = 0; trial < 10; ++trial) {
        CollarSeries u = rand_collar(rng, 8, 2, 0.4);
        // force an invertible constant leading coefficient
        std::vector<CircleFunction> cs = u.coeffs();
        cs[0] = CircleFunction(1.0);
        u = CollarSeries(8, std::move(cs));

        const CollarSeries r = reciprocal(u);
        const CollarSeries one = CollarSeries::constant(CircleFunction(1.0), 8);
        CHECK(max_coeff_distance(u * r, one) < 1e-10);
        CHECK(max_coeff_distance(r * u, one) < 1e-10);
    }
}

TEST_CASE("reciprocal of 1 + y cos multiplies back to one") {
    CollarSeries u(6);
    u = CollarSeries(6, {CircleFunction(1.0), CircleFunction::cosine(1, 1.0)});
    const CollarSeries r = reciprocal(u);
    const CollarSeries one = CollarSeries::constant(CircleFunction(1.0), 6);
    CHECK(max_coeff_distance(u * r, one) < 1e-12);
    // leading terms: 1 - y cos + y^2 cos^2
    CHECK(r.coeff(1).harmonics().at(0).cos_amp == doctest::Approx(-1.0));
    CHECK(r.coeff(2).constant() == doctest::Approx(0.5));
}

TEST_CASE("reciprocal needs an invertible leading coefficient") {
    CHECK_THROWS_AS(reciprocal(ScalarSeries(4)), NonInvertibleLeadingCoefficient);
    CollarSeries varying =
        CollarSeries::constant(CircleFunction(2.0, {{1, 1.0}}, {}), 4);
    CHECK_THROWS_AS(reciprocal(varying), NonInvertibleLeadingCoefficient);
}

TEST_CASE("shifted_down requires divisibility") {
    ScalarSeries s(3, {0.0, 2.0, 3.0});
    const ScalarSeries d = s.shifted_down(1);
    CHECK(d.coeff(0) == 2.0);
    CHECK(d.coeff(1) == 3.0);
    CHECK_THROWS(s.shifted_down(2));
}

TEST_CASE("expansion of P'/P^i") {
    SUBCASE("P = y, i = 3 is exactly y^-3") {
        RealPolynomial p({0.0, 1.0});
        const auto e = expand_dp_over_pk(p, 3, 8);
        CHECK(e.lowest_degree() == -3);
        CHECK(e.coeff(-3) == 1.0);
        for (int d = -2; d <= 8; ++d) CHECK(e.coeff(d) == 0.0);
    }
    SUBCASE("P = y + y^2, i = 1 has residue 1") {
        RealPolynomial p({0.0, 1.0, 1.0});
        const auto e = expand_dp_over_pk(p, 1, 8);
        CHECK(e.residue() == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("P = y + y^2, i = 3 starts 1/y^3 - 1/y^2 + 0/y") {
        RealPolynomial p({0.0, 1.0, 1.0});
        const auto e = expand_dp_over_pk(p, 3, 8);
        CHECK(e.coeff(-3) == doctest::Approx(1.0));
        CHECK(e.coeff(-2) == doctest::Approx(-1.0));
        CHECK(e.coeff(-1) == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("rejects polynomials without the required shape") {
        CHECK_THROWS_AS(expand_dp_over_pk(RealPolynomial({1.0, 1.0}), 1, 4), InvalidPolynomial);
        CHECK_THROWS_AS(expand_dp_over_pk(RealPolynomial({0.0, -1.0}), 1, 4), InvalidPolynomial);
    }
}

TEST_CASE("expansion agrees with pointwise evaluation of P'/P^i") {
    std::mt19937_64 rng(400);
    std::uniform_real_distribution<double> small(-0.8, 0.8);
    std::uniform_real_distribution<double> lead(0.5, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> cs{0.0, lead(rng)};
        for (int j = 2; j <= 5; ++j) cs.push_back(small(rng));
        const RealPolynomial p(cs);
        const RealPolynomial dp = p.derivative();
        for (int i : {1, 2, 3}) {
            const auto e = expand_dp_over_pk(p, i, 14);
            for (int s = 0; s < 8; ++s) {
                const double y = 0.01 + s * (0.1 - 0.01) / 7.0;
                double series_val = 0.0;
                for (int d = e.lowest_degree(); d <= e.highest_degree(); ++d) {
                    series_val += e.coeff(d) * std::pow(y, d);
                }
                const double direct = dp(y) / std::pow(p(y), i);
                CHECK(std::abs(series_val - direct) / std::abs(direct) < 1e-8);
            }
        }
    }
}

TEST_CASE("residues of P'/P^i vanish for i >= 2, equal one for i = 1") {
    SUBCASE("double coefficients") {
        std::mt19937_64 rng(500);
        std::uniform_real_distribution<double> small(-0.8, 0.8);
        std::uniform_real_distribution<double> lead(0.5, 2.0);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> cs{0.0, lead(rng)};
            for (int j = 2; j <= 6; ++j) cs.push_back(small(rng));
            const RealPolynomial p(cs);
            CHECK(std::abs(residue(expand_dp_over_pk(p, 1, 10)) - 1.0) < 1e-12);
            for (int i = 2; i <= 6; ++i) {
                CHECK(std::abs(residue(expand_dp_over_pk(p, i, 10))) < 1e-12);
            }
        }
    }
    SUBCASE("rational coefficients are exact") {
        std::mt19937_64 rng(600);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> cs{Rational(0), Rational(1)};
            for (int j = 2; j <= 5; ++j) cs.push_back(rand_rat(rng));
            const Polynomial<Rational> p(cs);
            CHECK(residue(expand_dp_over_pk(p, 1, 10)) == Rational(1));
            for (int i = 2; i <= 5; ++i) {
                CHECK(residue(expand_dp_over_pk(p, i, 10)) == Rational(0));
            }
        }
    }
}

TEST_CASE("laurent product adds lowest degrees") {
    std::mt19937_64 rng(700);
    std::uniform_real_distribution<double> unif(0.5, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        ScalarLaurentSeries a(-2, {unif(rng), unif(rng), unif(rng)});
        ScalarLaurentSeries b(-1, {unif(rng), unif(rng)});
        CHECK((a * b).lowest_degree() == -3);
    }
}

TEST_CASE("series composition and reversion invert each other") {
    std::mt19937_64 rng(800);
    std::uniform_real_distribution<double> small(-0.4, 0.4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> cs{0.0, 1.0};
        for (int j = 2; j <= 6; ++j) cs.push_back(small(rng));
        const ScalarSeries f(10, std::move(cs));
        const ScalarSeries w = reversion(f, 10);
        ScalarSeries identity(10);
        identity = ScalarSeries(10, {0.0, 1.0});
        CHECK(max_coeff_distance(compose(f, w, 10), identity) < 1e-10);
        CHECK(max_coeff_distance(compose(w, f, 10), identity) < 1e-10);
    }
}

TEST_CASE("polynomial compose and pow") {
    RealPolynomial p({0.0, 2.0});        // 2y
    RealPolynomial q({0.0, 1.0, 1.0});   // y + y^2
    const RealPolynomial pq = p.compose(q);  // 2(y + y^2)
    CHECK(pq.coeff(1) == 2.0);
    CHECK(pq.coeff(2) == 2.0);
    const RealPolynomial q2 = q.pow(2);
    CHECK(q2.coeff(2) == 1.0);
    CHECK(q2.coeff(3) == 2.0);
    CHECK(q2.coeff(4) == 1.0);
}
