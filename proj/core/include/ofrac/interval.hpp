#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace ofrac {

/// Closed domain [a, b], a < b, both finite.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(std::isfinite(a) && std::isfinite(b)))
            throw std::domain_error("Interval: endpoints must be finite");
        if (!(a < b))
            throw std::domain_error("Interval: require a < b");
    }

    double length() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
    bool contains(double x) const { return x >= a && x <= b; }
};

/// Fractional order alpha > 0 with the derived integer m = ceil(alpha),
/// and optional Holder conjugates p, q (1/p + 1/q = 1).
struct FractionalSetup {
    double alpha;
    int m;
    std::optional<double> p;
    std::optional<double> q;

    static FractionalSetup make(double alpha) {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw std::domain_error("FractionalSetup: require alpha > 0");
        FractionalSetup s;
        s.alpha = alpha;
        s.m = static_cast<int>(std::ceil(alpha));
        return s;
    }

    static FractionalSetup make(double alpha, double p) {
        FractionalSetup s = make(alpha);
        if (!(p > 1.0))
            throw std::domain_error("FractionalSetup: require p > 1");
        const double q = p / (p - 1.0);
        if (!(alpha > 1.0 - 1.0 / p))
            throw std::domain_error("FractionalSetup: require alpha > 1 - 1/p");
        s.p = p;
        s.q = q;
        return s;
    }

    bool alpha_is_integer() const {
        return alpha == static_cast<double>(m);
    }

private:
    FractionalSetup() = default;
};

} // namespace ofrac
