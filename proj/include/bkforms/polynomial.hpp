#pragma once

#include <string>
#include <vector>

#include "bkforms/series.hpp"

namespace bkforms {

/// Dense polynomial p_0 + p_1 y + ... + p_d y^d.  Evaluation and the formal
/// derivative are exact in the coefficient ring.
template <typename S>
class Polynomial {
public:
    Polynomial() : coeffs_(1) {}
    explicit Polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.resize(1);
        trim();
    }

    static Polynomial monomial(const S& value, int degree) {
        std::vector<S> cs(static_cast<size_t>(degree) + 1);
        cs.back() = value;
        return Polynomial(std::move(cs));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    S coeff(int j) const {
        if (j < 0 || j > degree()) return S{};
        return coeffs_[static_cast<size_t>(j)];
    }

    const std::vector<S>& coeffs() const { return coeffs_; }

    bool is_zero() const { return degree() == 0 && detail::is_zero_coeff(coeffs_[0]); }

    S operator()(const S& y) const {
        S v = coeffs_.back();
        for (int j = degree() - 1; j >= 0; --j) v = v * y + coeffs_[static_cast<size_t>(j)];
        return v;
    }

    Polynomial derivative() const {
        if (degree() == 0) return Polynomial();
        std::vector<S> cs(static_cast<size_t>(degree()));
        for (int j = 1; j <= degree(); ++j) {
            cs[static_cast<size_t>(j - 1)] = coeffs_[static_cast<size_t>(j)] * S(j);
        }
        return Polynomial(std::move(cs));
    }

    PowerSeries<S> to_series(int order) const {
        std::vector<S> cs(static_cast<size_t>(order) + 1);
        for (int j = 0; j <= std::min(order, degree()); ++j) cs[static_cast<size_t>(j)] = coeffs_[static_cast<size_t>(j)];
        return PowerSeries<S>(order, std::move(cs));
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<S> cs(static_cast<size_t>(std::max(a.degree(), b.degree())) + 1);
        for (int j = 0; j < static_cast<int>(cs.size()); ++j) cs[static_cast<size_t>(j)] = a.coeff(j) + b.coeff(j);
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        std::vector<S> cs(static_cast<size_t>(a.degree() + b.degree()) + 1);
        for (int i = 0; i <= a.degree(); ++i) {
            if (detail::is_zero_coeff(a.coeff(i))) continue;
            for (int j = 0; j <= b.degree(); ++j) {
                cs[static_cast<size_t>(i + j)] = cs[static_cast<size_t>(i + j)] + a.coeff(i) * b.coeff(j);
            }
        }
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator*(const Polynomial& a, const S& s) {
        Polynomial r = a;
        for (auto& c : r.coeffs_) c = c * s;
        r.trim();
        return r;
    }

    friend Polynomial operator*(const S& s, const Polynomial& a) { return a * s; }

    Polynomial pow(int exponent) const {
        if (exponent < 0) throw Error("polynomial power must be >= 0");
        Polynomial r({S(1)});
        Polynomial b = *this;
        int e = exponent;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // (*this) after the substitution y -> inner(y).
    Polynomial compose(const Polynomial& inner) const {
        Polynomial r({coeffs_.back()});
        for (int j = degree() - 1; j >= 0; --j) {
            r = r * inner + Polynomial({coeffs_[static_cast<size_t>(j)]});
        }
        return r;
    }

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<S> coeffs_;

    void trim() {
        while (coeffs_.size() > 1 && detail::is_zero_coeff(coeffs_.back())) coeffs_.pop_back();
    }
};

using RealPolynomial = Polynomial<double>;

template <typename S>
void require_reparam_shape(const Polynomial<S>& p) {
    if (!detail::is_zero_coeff(p.coeff(0))) {
        throw InvalidPolynomial("constant term must vanish");
    }
    if (!(p.coeff(1) > S(0))) {
        throw InvalidPolynomial("linear coefficient must be positive");
    }
}

/// Laurent expansion of P'(y) / P(y)^i around y = 0 for P with P(0) = 0 and
/// P'(0) > 0, computed as P' * (p_1 y)^{-i} * (1 + u)^{-i} with
/// u = P/(p_1 y) - 1.  The lowest degree is exactly -i.
template <typename S>
LaurentSeries<S> expand_dp_over_pk(const Polynomial<S>& p, int pole_order, int order) {
    require_reparam_shape(p);
    if (pole_order < 1) throw Error("pole order must be >= 1");

    const int work = order + pole_order;
    const S p1 = p.coeff(1);
    const S inv_p1 = detail::invert_coeff(p1);

    // u = P/(p_1 y) - 1: zero constant term by construction.
    std::vector<S> ucs(static_cast<size_t>(work) + 1);
    for (int j = 1; j <= work; ++j) ucs[static_cast<size_t>(j)] = p.coeff(j + 1) * inv_p1;
    const PowerSeries<S> one_plus_u(work, [&] {
        std::vector<S> cs = ucs;
        cs[0] = S(1);
        return cs;
    }());

    PowerSeries<S> result = pow_series(reciprocal(one_plus_u, work), pole_order, work);
    result = result * p.derivative().to_series(work);

    S scale = S(1);
    for (int j = 0; j < pole_order; ++j) scale = scale * inv_p1;
    result = result * scale;

    // Lowest stored degree -i with leading coefficient p_1^{1-i}; highest
    // reliable degree is `order`.
    return LaurentSeries<S>::from_power_series(result, -pole_order);
}

/// Coefficient of y^{-1}.
template <typename S>
S residue(const LaurentSeries<S>& s) {
    return s.residue();
}

}  // namespace bkforms
