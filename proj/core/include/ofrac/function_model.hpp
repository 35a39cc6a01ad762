#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ofrac/interval.hpp"

namespace ofrac {

enum class OracleClass { Constant, PowerAtB, SumOfTerms, Opaque };

/// One term c * (b - t)^beta of the model family.
struct PowTerm {
    double c;
    double beta;
};

/// A test function on [a, b] with an analytic derivative stack and cached
/// boundary values f^(k)(b).
///
/// The closed-form family is f(t) = c0 + sum_j c_j (b - t)^{beta_j}; the
/// opaque variant wraps externally supplied derivative callables and has
/// no closed-form oracle.
class ModelFunction {
public:
    double eval(double t) const { return deriv(0, t); }

    /// k-th derivative at t, 0 <= k <= deriv_order_max().
    double deriv(int k, double t) const;

    /// f^(k)(b), exact for the term family. Throws if the derivative is
    /// unbounded at b (non-integer beta < k).
    double boundary(int k) const;

    int deriv_order_max() const { return deriv_order_max_; }
    const Interval& interval() const { return iv_; }
    OracleClass oracle_class() const { return tag_; }

    bool is_term_based() const { return tag_ != OracleClass::Opaque; }
    double constant_part() const { return c0_; }
    const std::vector<PowTerm>& terms() const { return terms_; }

    /// True when every coefficient (including the constant) has the same
    /// sign, so |f| = |f| term by term.
    bool sign_definite() const;

    ModelFunction scaled(double s) const;
    ModelFunction plus(const ModelFunction& other) const;

    static ModelFunction constant(double c, const Interval& iv);
    static ModelFunction power_at_b(double c, double beta, const Interval& iv);
    static ModelFunction sum_of_terms(double c0, std::vector<PowTerm> terms,
                                      const Interval& iv, int deriv_order_max);
    static ModelFunction opaque(std::vector<std::function<double(double)>> derivs,
                                const Interval& iv);

private:
    explicit ModelFunction(const Interval& iv) : iv_(iv) {}

    Interval iv_;
    double c0_ = 0.0;
    std::vector<PowTerm> terms_;
    // index 0 is the function itself
    std::vector<std::function<double(double)>> opaque_derivs_;
    int deriv_order_max_ = 0;
    OracleClass tag_ = OracleClass::Constant;
};

/// f(t) = c * (b - t)^beta, beta >= 0, with the analytic derivative stack.
ModelFunction make_power_at_b(double c, double beta, const Interval& iv);

/// Deterministic corpus of n functions c0 + sum_{j<=J} c_j (b-t)^{beta_j},
/// J in {1,2,3}, c uniform on [-2,2], beta_j uniform on [m, m+3] avoiding
/// 0.05-neighborhoods of integers. Every member satisfies f^(k)(b) = 0 for
/// k = 1..m-1 by construction.
std::vector<ModelFunction> sample_corpus(const FractionalSetup& setup,
                                         const Interval& iv, int n,
                                         std::uint64_t seed);

/// Parses the CLI mini-language: term (";" term)*, where term is
/// "const:<c>" or "powb:c=<c>,beta=<beta>". Whitespace is ignored.
ModelFunction parse_function_spec(const std::string& spec, const Interval& iv);

} // namespace ofrac
