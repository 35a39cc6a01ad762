#pragma once

namespace ofrac {

/// Gamma function for strictly positive real argument.
/// Throws std::domain_error for x <= 0, std::overflow_error when the
/// result exceeds the double range (x > ~171.6).
double gamma_fn(double x);

/// log(Gamma(x)) for x > 0.
double log_gamma(double x);

/// Beta function B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), x, y > 0.
/// Evaluated in log space.
double beta_fn(double x, double y);

} // namespace ofrac
