#include "bkforms/circle_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace bkforms {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

CircleFunction::CircleFunction(double constant,
                               std::vector<std::pair<int, double>> cosines,
                               std::vector<std::pair<int, double>> sines)
    : constant_(constant) {
    std::map<int, Harmonic> acc;
    for (const auto& [m, amp] : cosines) {
        if (m == 0) {
            constant_ += amp;
            continue;
        }
        if (m < 0) throw ValidationError("cosine frequency must be >= 1");
        auto& h = acc[m];
        h.frequency = m;
        h.cos_amp += amp;
    }
    for (const auto& [m, amp] : sines) {
        if (m <= 0) {
            if (m == 0) continue;  // sin(0) == 0
            throw ValidationError("sine frequency must be >= 1");
        }
        auto& h = acc[m];
        h.frequency = m;
        h.sin_amp += amp;
    }
    harmonics_.reserve(acc.size());
    for (auto& [m, h] : acc) harmonics_.push_back(h);
    normalize();
}

CircleFunction CircleFunction::cosine(int frequency, double amplitude) {
    return CircleFunction(0.0, {{frequency, amplitude}}, {});
}

CircleFunction CircleFunction::sine(int frequency, double amplitude) {
    return CircleFunction(0.0, {}, {{frequency, amplitude}});
}

void CircleFunction::normalize() {
    std::erase_if(harmonics_,
                  [](const Harmonic& h) { return h.cos_amp == 0.0 && h.sin_amp == 0.0; });
    std::sort(harmonics_.begin(), harmonics_.end(),
              [](const Harmonic& a, const Harmonic& b) { return a.frequency < b.frequency; });
    if (!harmonics_.empty() && harmonics_.back().frequency > kMaxFrequency) {
        throw FrequencyCapExceeded("frequency " + std::to_string(harmonics_.back().frequency) +
                                   " exceeds cap " + std::to_string(kMaxFrequency));
    }
}

double CircleFunction::value(double theta) const {
    double v = constant_;
    for (const auto& h : harmonics_) {
        const double x = kTwoPi * h.frequency * theta;
        v += h.cos_amp * std::cos(x) + h.sin_amp * std::sin(x);
    }
    return v;
}

CircleFunction CircleFunction::derivative() const {
    CircleFunction d;
    d.harmonics_.reserve(harmonics_.size());
    for (const auto& h : harmonics_) {
        const double w = kTwoPi * h.frequency;
        d.harmonics_.push_back({h.frequency, w * h.sin_amp, -w * h.cos_amp});
    }
    d.normalize();
    return d;
}

double CircleFunction::sup_bound() const {
    double b = std::abs(constant_);
    for (const auto& h : harmonics_) b += std::hypot(h.cos_amp, h.sin_amp);
    return b;
}

double CircleFunction::derivative_bound() const {
    double b = 0.0;
    for (const auto& h : harmonics_) b += kTwoPi * h.frequency * std::hypot(h.cos_amp, h.sin_amp);
    return b;
}

CircleFunction CircleFunction::operator-() const {
    CircleFunction r = *this;
    r.constant_ = -r.constant_;
    for (auto& h : r.harmonics_) {
        h.cos_amp = -h.cos_amp;
        h.sin_amp = -h.sin_amp;
    }
    return r;
}

CircleFunction& CircleFunction::operator+=(const CircleFunction& rhs) {
    constant_ += rhs.constant_;
    std::map<int, Harmonic> acc;
    for (const auto& h : harmonics_) acc[h.frequency] = h;
    for (const auto& h : rhs.harmonics_) {
        auto& a = acc[h.frequency];
        a.frequency = h.frequency;
        a.cos_amp += h.cos_amp;
        a.sin_amp += h.sin_amp;
    }
    harmonics_.clear();
    for (auto& [m, h] : acc) harmonics_.push_back(h);
    normalize();
    return *this;
}

CircleFunction& CircleFunction::operator-=(const CircleFunction& rhs) {
    return *this += -rhs;
}

CircleFunction& CircleFunction::operator*=(double scale) {
    constant_ *= scale;
    for (auto& h : harmonics_) {
        h.cos_amp *= scale;
        h.sin_amp *= scale;
    }
    normalize();
    return *this;
}

CircleFunction operator*(const CircleFunction& lhs, const CircleFunction& rhs) {
    // Work with the constant folded in as the frequency-0 term so one
    // product formula covers every pair.
    struct Term {
        int m;
        double c;
        double s;
    };
    auto terms = [](const CircleFunction& f) {
        std::vector<Term> ts;
        ts.push_back({0, f.constant(), 0.0});
        for (const auto& h : f.harmonics()) ts.push_back({h.frequency, h.cos_amp, h.sin_amp});
        return ts;
    };

    std::map<int, std::pair<double, double>> acc;  // m -> (cos, sin)
    auto add_cos = [&acc](int m, double a) {
        if (a == 0.0) return;
        acc[m < 0 ? -m : m].first += a;
    };
    auto add_sin = [&acc](int m, double a) {
        if (a == 0.0) return;
        if (m == 0) return;  // sin(0) == 0
        if (m < 0) {
            acc[-m].second -= a;
        } else {
            acc[m].second += a;
        }
    };

    for (const Term& t1 : terms(lhs)) {
        for (const Term& t2 : terms(rhs)) {
            const int d = t1.m - t2.m;
            const int u = t1.m + t2.m;
            // cos a cos b, sin a sin b -> cosines; mixed products -> sines
            add_cos(d, 0.5 * (t1.c * t2.c + t1.s * t2.s));
            add_cos(u, 0.5 * (t1.c * t2.c - t1.s * t2.s));
            add_sin(u, 0.5 * (t1.c * t2.s + t1.s * t2.c));
            add_sin(d, 0.5 * (t1.s * t2.c - t1.c * t2.s));
        }
    }

    double constant = 0.0;
    std::vector<std::pair<int, double>> cosines;
    std::vector<std::pair<int, double>> sines;
    for (const auto& [m, cs] : acc) {
        if (m == 0) {
            constant += cs.first;
        } else {
            cosines.emplace_back(m, cs.first);
            sines.emplace_back(m, cs.second);
        }
    }
    return CircleFunction(constant, std::move(cosines), std::move(sines));
}

SignCertificate certify_nonvanishing(const CircleFunction& f, int samples) {
    SignCertificate cert;
    if (f.is_constant()) {
        cert.certified = f.constant() != 0.0;
        cert.sign = f.constant() > 0.0 ? 1 : (f.constant() < 0.0 ? -1 : 0);
        cert.min_abs = std::abs(f.constant());
        return cert;
    }
    const double step = 1.0 / samples;
    const double margin = f.derivative_bound() * step / 2.0;
    double min_abs = std::numeric_limits<double>::infinity();
    double first = 0.0;
    bool sign_flip = false;
    for (int j = 0; j < samples; ++j) {
        const double v = f.value(j * step);
        if (j == 0) first = v;
        if (v == 0.0 || (v > 0.0) != (first > 0.0)) sign_flip = true;
        if (std::abs(v) < min_abs) {
            min_abs = std::abs(v);
            cert.witness_theta = j * step;
        }
    }
    cert.min_abs = min_abs;
    if (!sign_flip && min_abs > margin) {
        cert.certified = true;
        cert.sign = first > 0.0 ? 1 : -1;
    }
    return cert;
}

}  // namespace bkforms
