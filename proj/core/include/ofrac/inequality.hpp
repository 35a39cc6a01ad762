#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ofrac/fractional_ops.hpp"
#include "ofrac/function_model.hpp"

namespace ofrac {

enum class TheoremId {
    Classical,   // pointwise first-derivative bound, the sanity case
    Z1,          // Linf case of the endpoint bound
    Z2,          // L1 case, alpha >= 1
    Z3,          // Lq case, Holder conjugates
    A,           // product bound, Linf norms
    A1,          // product bound, L1 norms, alpha >= 1
    A2Stated,    // product bound, Lq norms, as printed
    A2Corrected, // product bound, Lq norms, with the proof's constant
};

const char* theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);
bool theorem_needs_p(TheoremId id);
bool theorem_needs_alpha_ge_1(TheoremId id);
bool theorem_is_product(TheoremId id);

enum class Verdict { Holds, Violated, Inconclusive };
const char* verdict_name(Verdict v);

struct InequalityReport {
    TheoremId theorem;
    double alpha = 0.0;
    double p = 0.0; // 0 when not applicable
    double a = 0.0;
    double b = 0.0;
    std::string function_id_f;
    std::string function_id_g; // empty for single-function bounds
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0; // lhs/rhs when rhs > 0, else 0
    double tol = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    std::string error; // nonempty when the evaluation itself failed
};

struct HarnessOptions {
    int n_panels = 512;
    bool allow_closed_form = true;
    double extra_tol = 0.0; // user override, added to every verdict budget
};

/// |f(x) - mean| <= (b-a) [1/4 + (x - (a+b)/2)^2/(b-a)^2] ||f'||_inf.
InequalityReport eval_classical_ostrowski(const ModelFunction& f, double x,
                                          const HarnessOptions& opts = {});

/// The three-case endpoint bound on |f(b) - mean|, which in {Z1, Z2, Z3}.
InequalityReport eval_z_bound(const ModelFunction& f,
                              const FractionalSetup& setup, TheoremId which,
                              const HarnessOptions& opts = {});

/// The product bounds on |2 Int fg - Int (f g(b) + g f(b))|,
/// which in {A, A1, A2Stated, A2Corrected}.
InequalityReport eval_product_theorem(const ModelFunction& f,
                                      const ModelFunction& g,
                                      const FractionalSetup& setup,
                                      TheoremId which,
                                      const HarnessOptions& opts = {});

struct TheoremSummary {
    int count = 0;
    int holds = 0;
    int violated = 0;
    int inconclusive = 0;
    int errors = 0;
    double max_ratio = 0.0;
};

struct CampaignConfig {
    Interval iv{0.0, 1.0};
    std::vector<double> alphas;
    std::vector<double> ps; // may be empty when no Lq theorem is requested
    std::vector<TheoremId> theorems;
    int corpus_size = 1;
    std::uint64_t seed = 0;
    HarnessOptions opts;
};

struct CampaignResult {
    std::vector<InequalityReport> reports;
    std::map<std::string, TheoremSummary> summary;
    // per-instance rhs(A2 stated)/rhs(A2 corrected), when both are run
    std::vector<double> a2_stated_over_corrected;
    int a2_stated_violations = 0;
};

/// Cartesian product of setups x corpus members x theorems. Theorems whose
/// order/exponent hypotheses fail for a setup are skipped; per-instance
/// evaluation failures are recorded in the report, never abort the run.
/// Deterministic given the seed.
CampaignResult run_campaign(const CampaignConfig& config);

} // namespace ofrac
