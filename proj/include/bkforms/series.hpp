#pragma once

#include <algorithm>
#include <vector>

#include "bkforms/circle_function.hpp"
#include "bkforms/errors.hpp"

namespace bkforms {

namespace detail {

template <typename C>
bool is_zero_coeff(const C& c) {
    return c == C{};
}

// Field-like coefficients invert through division; the trig-polynomial ring is
// only closed under inversion of (theta-)constant coefficients.
template <typename C>
C invert_coeff(const C& c) {
    if (is_zero_coeff(c)) {
        throw NonInvertibleLeadingCoefficient("zero leading coefficient");
    }
    return C(1) / c;
}

inline CircleFunction invert_coeff(const CircleFunction& c) {
    if (!c.is_constant()) {
        throw NonInvertibleLeadingCoefficient(
            "leading coefficient varies over the circle; its reciprocal is not a "
            "trigonometric polynomial");
    }
    const auto cert = certify_nonvanishing(c);
    if (!cert.certified) {
        throw NonInvertibleLeadingCoefficient("leading coefficient vanishes");
    }
    return CircleFunction(1.0 / c.constant());
}

}  // namespace detail

/// Truncated power series sum_{j=0..order} c_j y^j with ring coefficients.
/// A value is its stored polynomial exactly; binary operations truncate the
/// result at the smaller operand order.
template <typename C>
class PowerSeries {
public:
    PowerSeries() : coeffs_(1) {}
    explicit PowerSeries(int order) : coeffs_(check_order(order) + 1) {}
    PowerSeries(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(check_order(order) + 1);
    }

    static PowerSeries constant(const C& value, int order) {
        PowerSeries s(order);
        s.coeffs_[0] = value;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of y^j; zero beyond the truncation order.
    C coeff(int j) const {
        if (j < 0 || j > order()) return C{};
        return coeffs_[static_cast<size_t>(j)];
    }

    const std::vector<C>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const C& c) { return detail::is_zero_coeff(c); });
    }

    PowerSeries truncated(int new_order) const {
        PowerSeries r(new_order);
        for (int j = 0; j <= std::min(new_order, order()); ++j) r.coeffs_[j] = coeffs_[j];
        return r;
    }

    // Re-declare the order; padding with zeros is exact under the
    // discarded-tail convention.
    PowerSeries resized(int new_order) const { return PowerSeries(new_order, coeffs_); }

    // Multiply by y^s.  Exact: the declared order grows with the shift.
    PowerSeries shifted_up(int s) const {
        PowerSeries r(order() + s);
        for (int j = 0; j <= order(); ++j) r.coeffs_[j + s] = coeffs_[j];
        return r;
    }

    // Divide by y^s; the s lowest coefficients must vanish.
    PowerSeries shifted_down(int s) const {
        for (int j = 0; j < s && j <= order(); ++j) {
            if (!detail::is_zero_coeff(coeffs_[j])) {
                throw Error("series is not divisible by y^" + std::to_string(s));
            }
        }
        PowerSeries r(std::max(order() - s, 0));
        for (int j = s; j <= order(); ++j) r.coeffs_[j - s] = coeffs_[j];
        return r;
    }

    // Formal d/dy.
    PowerSeries derivative() const {
        PowerSeries r(std::max(order() - 1, 0));
        for (int j = 1; j <= order(); ++j) r.coeffs_[j - 1] = coeffs_[j] * C(j);
        return r;
    }

    C evaluate(double y) const {
        C v = coeffs_.back();
        for (int j = order() - 1; j >= 0; --j) v = v * C(y) + coeffs_[j];
        return v;
    }

    PowerSeries operator-() const {
        PowerSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(std::min(a.order(), b.order()));
        for (int j = 0; j <= r.order(); ++j) r.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
        return r;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(std::min(a.order(), b.order()));
        for (int j = 0; j <= r.order(); ++j) r.coeffs_[j] = a.coeffs_[j] - b.coeffs_[j];
        return r;
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= a.order(); ++i) {
            if (detail::is_zero_coeff(a.coeffs_[i])) continue;
            for (int j = 0; j <= b.order() && i + j <= r.order(); ++j) {
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend PowerSeries operator*(const PowerSeries& a, const C& s) {
        PowerSeries r = a;
        for (auto& c : r.coeffs_) c = c * s;
        return r;
    }

    friend PowerSeries operator*(const C& s, const PowerSeries& a) { return a * s; }

    bool operator==(const PowerSeries&) const = default;

private:
    std::vector<C> coeffs_;  // size order + 1

    static int check_order(int order) {
        if (order < 0) throw Error("series order must be >= 0");
        return order;
    }
};

/// Finite-principal-part Laurent series sum_{i >= low} c_i y^i, stored up to
/// a declared highest reliable degree.
template <typename C>
class LaurentSeries {
public:
    LaurentSeries() : low_(0), coeffs_(1) {}
    LaurentSeries(int lowest_degree, std::vector<C> coeffs)
        : low_(lowest_degree), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    static LaurentSeries from_power_series(const PowerSeries<C>& s, int shift = 0) {
        return LaurentSeries(shift, s.coeffs());
    }

    int lowest_degree() const { return low_; }
    int highest_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

    C coeff(int degree) const {
        if (degree < low_ || degree > highest_degree()) return C{};
        return coeffs_[static_cast<size_t>(degree - low_)];
    }

    // Coefficient of y^{-1}; the zero element when absent.
    C residue() const { return coeff(-1); }

    bool zero_principal_part() const {
        for (int d = low_; d < 0; ++d) {
            if (!detail::is_zero_coeff(coeff(d))) return false;
        }
        return true;
    }

    LaurentSeries principal_part() const {
        std::vector<C> neg;
        for (int d = low_; d < 0; ++d) neg.push_back(coeff(d));
        if (neg.empty()) return LaurentSeries();
        return LaurentSeries(low_, std::move(neg));
    }

    // Nonnegative-degree part as a power series truncated at `order`.
    PowerSeries<C> regular_part(int order) const {
        std::vector<C> cs(static_cast<size_t>(order) + 1);
        for (int d = 0; d <= order; ++d) cs[static_cast<size_t>(d)] = coeff(d);
        return PowerSeries<C>(order, std::move(cs));
    }

    // Drop exact-zero leading coefficients (keeps at least one).
    LaurentSeries trimmed() const {
        size_t lead = 0;
        while (lead + 1 < coeffs_.size() && detail::is_zero_coeff(coeffs_[lead])) ++lead;
        std::vector<C> cs(coeffs_.begin() + static_cast<long>(lead), coeffs_.end());
        return LaurentSeries(low_ + static_cast<int>(lead), std::move(cs));
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        const int low = std::min(a.low_, b.low_);
        const int high = std::min(a.highest_degree(), b.highest_degree());
        std::vector<C> cs(static_cast<size_t>(std::max(high - low + 1, 1)));
        for (int d = low; d <= high; ++d) cs[static_cast<size_t>(d - low)] = a.coeff(d) + b.coeff(d);
        return LaurentSeries(low, std::move(cs));
    }

    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (-b);
    }

    // Reliable up to min(high_a + low_b, high_b + low_a).
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        const int low = a.low_ + b.low_;
        const int high =
            std::min(a.highest_degree() + b.low_, b.highest_degree() + a.low_);
        std::vector<C> cs(static_cast<size_t>(std::max(high - low + 1, 1)));
        for (int i = a.low_; i <= a.highest_degree(); ++i) {
            if (detail::is_zero_coeff(a.coeff(i))) continue;
            for (int j = b.low_; j <= b.highest_degree(); ++j) {
                const int d = i + j;
                if (d < low || d > high) continue;
                cs[static_cast<size_t>(d - low)] = cs[static_cast<size_t>(d - low)] + a.coeff(i) * b.coeff(j);
            }
        }
        return LaurentSeries(low, std::move(cs));
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const C& s) {
        LaurentSeries r = a;
        for (auto& c : r.coeffs_) c = c * s;
        return r;
    }

    friend LaurentSeries operator*(const C& s, const LaurentSeries& a) { return a * s; }

    bool operator==(const LaurentSeries&) const = default;

private:
    int low_;
    std::vector<C> coeffs_;
};

/// Multiplicative inverse to the requested order.  The leading coefficient
/// must be invertible inside the coefficient ring.
template <typename C>
PowerSeries<C> reciprocal(const PowerSeries<C>& u, int order = -1) {
    if (order < 0) order = u.order();
    const C r0 = detail::invert_coeff(u.coeff(0));
    std::vector<C> cs(static_cast<size_t>(order) + 1);
    cs[0] = r0;
    for (int n = 1; n <= order; ++n) {
        C acc{};
        for (int j = 1; j <= n; ++j) acc = acc + u.coeff(j) * cs[static_cast<size_t>(n - j)];
        cs[static_cast<size_t>(n)] = -(r0 * acc);
    }
    return PowerSeries<C>(order, std::move(cs));
}

template <typename C>
PowerSeries<C> pow_series(const PowerSeries<C>& base, int exponent, int order) {
    if (exponent < 0) throw Error("pow_series exponent must be >= 0");
    PowerSeries<C> r = PowerSeries<C>::constant(C(1), order);
    PowerSeries<C> b = base.truncated(order);
    int e = exponent;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

/// Substitute x into f (x must have zero constant term).
template <typename C>
PowerSeries<C> compose(const PowerSeries<C>& f, const PowerSeries<C>& x, int order) {
    if (!detail::is_zero_coeff(x.coeff(0))) {
        throw Error("composition requires a series with zero constant term");
    }
    const PowerSeries<C> xt = x.truncated(order);
    PowerSeries<C> r = PowerSeries<C>::constant(f.coeff(f.order()), order);
    for (int j = f.order() - 1; j >= 0; --j) {
        r = r * xt + PowerSeries<C>::constant(f.coeff(j), order);
    }
    return r;
}

/// Compositional inverse w of f, where f has zero constant term and an
/// invertible linear coefficient: f(w(y)) = y + O(y^{order+1}).
template <typename C>
PowerSeries<C> reversion(const PowerSeries<C>& f, int order) {
    if (!detail::is_zero_coeff(f.coeff(0))) {
        throw Error("reversion requires a series with zero constant term");
    }
    const C inv_f1 = detail::invert_coeff(f.coeff(1));
    PowerSeries<C> identity(order);
    {
        std::vector<C> cs(static_cast<size_t>(order) + 1);
        if (order >= 1) cs[1] = C(1);
        identity = PowerSeries<C>(order, std::move(cs));
    }
    PowerSeries<C> w = identity * inv_f1;
    // Each pass gains at least one correct order.
    for (int pass = 0; pass < order + 1; ++pass) {
        w = w + (identity - compose(f, w, order)) * inv_f1;
    }
    return w;
}

template <typename C>
double max_coeff_distance(const PowerSeries<C>& a, const PowerSeries<C>& b) {
    double d = 0.0;
    const int high = std::max(a.order(), b.order());
    for (int j = 0; j <= high; ++j) d = std::max(d, coeff_distance(a.coeff(j), b.coeff(j)));
    return d;
}

template <typename C>
double max_coeff_distance(const LaurentSeries<C>& a, const LaurentSeries<C>& b) {
    double d = 0.0;
    const int low = std::min(a.lowest_degree(), b.lowest_degree());
    const int high = std::max(a.highest_degree(), b.highest_degree());
    for (int j = low; j <= high; ++j) d = std::max(d, coeff_distance(a.coeff(j), b.coeff(j)));
    return d;
}

/// Series with trigonometric-polynomial coefficients: models germs of smooth
/// collar functions g(y, theta).
using CollarSeries = PowerSeries<CircleFunction>;
using CollarLaurentSeries = LaurentSeries<CircleFunction>;
using ScalarSeries = PowerSeries<double>;
using ScalarLaurentSeries = LaurentSeries<double>;

// d/dtheta applied to every coefficient.
inline CollarSeries theta_derivative(const CollarSeries& s) {
    std::vector<CircleFunction> cs;
    cs.reserve(static_cast<size_t>(s.order()) + 1);
    for (int j = 0; j <= s.order(); ++j) cs.push_back(s.coeff(j).derivative());
    return CollarSeries(s.order(), std::move(cs));
}

inline CollarSeries to_collar_series(const ScalarSeries& s) {
    std::vector<CircleFunction> cs;
    cs.reserve(static_cast<size_t>(s.order()) + 1);
    for (int j = 0; j <= s.order(); ++j) cs.emplace_back(s.coeff(j));
    return CollarSeries(s.order(), std::move(cs));
}

// Per-coefficient circle means as a scalar series.
inline ScalarSeries theta_mean(const CollarSeries& s) {
    std::vector<double> cs;
    cs.reserve(static_cast<size_t>(s.order()) + 1);
    for (int j = 0; j <= s.order(); ++j) cs.push_back(s.coeff(j).mean());
    return ScalarSeries(s.order(), std::move(cs));
}

}  // namespace bkforms
