#pragma once

#include "ofrac/function_model.hpp"
#include "ofrac/interval.hpp"
#include "ofrac/quadrature.hpp"

namespace ofrac {

enum class EvalMethod { Quadrature, ClosedForm };

struct FractionalEvaluation {
    double value;
    double err_estimate; // 0 for closed-form evaluations
    EvalMethod method;
};

struct OpOptions {
    int n_panels = 512;
    bool allow_closed_form = true;
};

/// Left Riemann-Liouville integral J_{a+}^alpha f(x); alpha = 0 is the
/// identity. Closed form for constants and, at x = b, for the whole term
/// family.
FractionalEvaluation rl_integral_left(const ModelFunction& f, double alpha,
                                      double x, const OpOptions& opts = {});

/// Right Riemann-Liouville integral J_{b-}^alpha f(x); closed form for the
/// full term family (Beta-integral moments).
FractionalEvaluation rl_integral_right(const ModelFunction& f, double alpha,
                                       double x, const OpOptions& opts = {});

/// Right Caputo derivative D_{b-}^alpha f(x). Integer alpha degenerates to
/// (-1)^m f^(m)(x); x > b returns 0 by convention; the term family has the
/// closed form c Gamma(beta+1)/Gamma(beta-alpha+1) (b-x)^(beta-alpha).
FractionalEvaluation caputo_right(const ModelFunction& f,
                                  const FractionalSetup& setup, double x,
                                  const OpOptions& opts = {});

/// Degree-(m-1) Taylor polynomial anchored at b plus the fractional
/// remainder (1/Gamma(alpha)) Integral_x^b (t-x)^(alpha-1) D_{b-}^alpha f(t) dt;
/// reproduces f(x) up to quadrature error.
FractionalEvaluation taylor_reconstruct(const ModelFunction& f,
                                        const FractionalSetup& setup, double x,
                                        const OpOptions& opts = {});

/// Analytic right Caputo derivative of c (b-t)^beta:
/// c Gamma(beta+1)/Gamma(beta-alpha+1) (b-x)^(beta-alpha).
/// Requires beta > m - 1 so the function is in AC^m.
double caputo_oracle_power(double c, double beta, double alpha,
                           const Interval& iv, double x);

/// (J_{a+}^s |g|)(b) = (1/Gamma(s)) Integral_a^b (b-t)^(s-1) |g(t)| dt, the
/// quantity the product inequalities' right-hand sides are built from.
/// Closed form when g is sign-definite.
FractionalEvaluation rl_left_abs_at_b(const ModelFunction& g, double s,
                                      const OpOptions& opts = {});

} // namespace ofrac
