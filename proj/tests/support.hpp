#pragma once

// Hand-rolled generators for the property tests. Every test owns a Gen seeded
// with a fixed constant so failures replay exactly.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "superlum/diagrams.hpp"
#include "superlum/kinematics.hpp"

namespace superlum::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }
    double sign() { return coin() ? 1.0 : -1.0; }

    Event1p1 event(double span = 10.0) { return {uniform(-span, span), uniform(-span, span)}; }

    Vec3 vec(double span = 10.0) { return {uniform(-span, span), uniform(-span, span), uniform(-span, span)}; }

    Vec3 direction() {
        for (;;) {
            const Vec3 v = vec(1.0);
            const double n = norm(v);
            if (n > 0.1 && n <= 1.0) return (1.0 / n) * v;
        }
    }

    Event1p3 event3(double span = 10.0) { return {uniform(-span, span), vec(span)}; }

    // |V| in (0, 0.99 c), sign random.
    double sub_speed(double c = 1.0) { return sign() * uniform(0.0, 0.99) * c; }

    // |W| in (1.01 c, 50 c), sign random.
    double super_speed(double c = 1.0) { return sign() * c * std::exp(uniform(std::log(1.01), std::log(50.0))); }

    Boost boost(double c = 1.0) {
        return coin() ? Boost::subluminal(sub_speed(c), c) : Boost::superluminal(super_speed(c), c);
    }

    // Events with distinct, well separated coordinates and random segments
    // between them, directed forward in time. No segment is within 5% of the
    // light cone so classification is numerically unambiguous.
    Diagram diagram(std::size_t n_events, double c = 1.0) {
        Diagram d;
        d.c = c;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n_events; ++i) {
            labels.push_back("e" + std::to_string(i));
            d.events[labels.back()] = Event1p1{static_cast<double>(i) + uniform(0.0, 0.5), uniform(-4.0, 4.0)};
        }
        for (std::size_t i = 0; i + 1 < n_events; ++i) {
            for (std::size_t j = i + 1; j < n_events; ++j) {
                if (j != i + 1 && !coin()) continue;
                const Event1p1& a = d.events[labels[i]];
                const Event1p1& b = d.events[labels[j]];
                const double ratio = std::abs(b.x - a.x) / (c * std::abs(b.t - a.t));
                if (std::abs(ratio - 1.0) < 0.05) continue;
                d.segments.push_back({labels[i], labels[j]});
            }
        }
        return d;
    }

    std::vector<double> phases(std::size_t n, double span = 3.0) {
        std::vector<double> out(n);
        for (auto& p : out) p = uniform(-span, span);
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline double rel(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace superlum::testing
