#include "ofrac/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace ofrac {

namespace {

// Lanczos approximation, g = 7, n = 9 (Godfrey coefficients).
// Relative accuracy ~1e-15 on the positive real axis.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kSqrtTwoPi = 2.5066282746310002;
constexpr double kPi = 3.14159265358979323846;

double lanczos_sum(double z) {
    double s = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        s += kLanczos[i] / (z + static_cast<double>(i));
    return s;
}

void check_positive(double x, const char* who) {
    if (!(x > 0.0) || std::isnan(x))
        throw std::domain_error(std::string(who) + ": argument must be > 0");
}

} // namespace

double gamma_fn(double x) {
    check_positive(x, "gamma_fn");
    if (x > 171.62)
        throw std::overflow_error("gamma_fn: result exceeds double range");
    if (x < 0.5) {
        // reflection keeps the Lanczos sum in its accurate range
        return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(z);
}

double log_gamma(double x) {
    check_positive(x, "log_gamma");
    if (x < 0.5)
        return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
           std::log(lanczos_sum(z));
}

double beta_fn(double x, double y) {
    check_positive(x, "beta_fn");
    check_positive(y, "beta_fn");
    return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

} // namespace ofrac
