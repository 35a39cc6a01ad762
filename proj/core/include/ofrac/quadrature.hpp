#pragma once

#include <functional>

#include "ofrac/interval.hpp"

namespace ofrac {

struct QuadResult {
    double value;
    double err_estimate; // absolute, two-grid difference
};

using RealFn = std::function<double(double)>;

/// Integral_x^ub (t - x)^(mu - 1) phi(t) dt by product integration: phi is
/// replaced by its piecewise-linear interpolant on a mesh graded toward x
/// (t_j = x + (ub-x)(j/N)^gamma, gamma = min(max(1, 2/mu), 4)) and integrated
/// exactly against the kernel.
QuadResult singular_integral(const RealFn& phi, double x, double ub, double mu,
                             int n_panels);

/// Composite 5-point Gauss-Legendre on uniform panels.
QuadResult regular_integral(const RealFn& phi, double lb, double ub,
                            int n_panels);

/// Composite 5-point Gauss-Legendre on a mesh graded toward both endpoints
/// with exponent 2; for integrands whose derivatives may blow up at a or b.
QuadResult graded_integral(const RealFn& phi, const Interval& iv, int n_panels);

enum class NormKind { Linf, L1, Lq };

/// Norm of phi over iv. Linf samples 4096 uniform points plus geometric
/// clusters near each endpoint (never evaluating at t = b exactly); L1 and
/// Lq use graded_integral. q is only read for NormKind::Lq.
QuadResult norm(const RealFn& phi, const Interval& iv, NormKind kind,
                double q = 0.0, int n_panels = 512);

} // namespace ofrac
