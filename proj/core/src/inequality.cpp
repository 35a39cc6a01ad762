#include "ofrac/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ofrac/special_functions.hpp"

namespace ofrac {

const char* theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::Classical: return "CLASSICAL";
    case TheoremId::Z1: return "Z1";
    case TheoremId::Z2: return "Z2";
    case TheoremId::Z3: return "Z3";
    case TheoremId::A: return "A";
    case TheoremId::A1: return "A1";
    case TheoremId::A2Stated: return "A2_STATED";
    case TheoremId::A2Corrected: return "A2_CORRECTED";
    }
    throw std::logic_error("theorem_name: unreachable");
}

TheoremId theorem_from_name(const std::string& name) {
    static const std::map<std::string, TheoremId> table = {
        {"CLASSICAL", TheoremId::Classical},
        {"Z1", TheoremId::Z1},
        {"Z2", TheoremId::Z2},
        {"Z3", TheoremId::Z3},
        {"A", TheoremId::A},
        {"A1", TheoremId::A1},
        {"A2_STATED", TheoremId::A2Stated},
        {"A2_CORRECTED", TheoremId::A2Corrected},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown theorem '" + name + "'");
    return it->second;
}

bool theorem_needs_p(TheoremId id) {
    return id == TheoremId::Z3 || id == TheoremId::A2Stated ||
           id == TheoremId::A2Corrected;
}

bool theorem_needs_alpha_ge_1(TheoremId id) {
    return id == TheoremId::Z2 || id == TheoremId::A1;
}

bool theorem_is_product(TheoremId id) {
    return id == TheoremId::A || id == TheoremId::A1 ||
           id == TheoremId::A2Stated || id == TheoremId::A2Corrected;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    throw std::logic_error("verdict_name: unreachable");
}

namespace {

OpOptions op_options(const HarnessOptions& h) {
    return OpOptions{h.n_panels, h.allow_closed_form};
}

void finalize(InequalityReport& r, double err_sum, double extra_tol) {
    r.tol = 3.0 * err_sum +
            1e-12 * std::max(std::abs(r.lhs), std::abs(r.rhs)) + extra_tol;
    if (r.rhs <= r.tol)
        r.verdict = Verdict::Inconclusive;
    else if (r.lhs <= r.rhs + r.tol)
        r.verdict = Verdict::Holds;
    else
        r.verdict = Verdict::Violated;
    r.ratio = (r.rhs > 0.0) ? r.lhs / r.rhs : 0.0;
}

void check_vanishing_hypothesis(const ModelFunction& f,
                                const FractionalSetup& setup,
                                const char* who) {
    for (int k = 1; k <= setup.m - 1; ++k)
        if (f.boundary(k) != 0.0)
            throw std::invalid_argument(
                std::string(who) + ": hypothesis f^(k)(b) = 0 fails");
}

// norm of x -> D_{b-}^alpha f(x), with the inner evaluation error folded
// into the estimate
QuadResult caputo_norm(const ModelFunction& f, const FractionalSetup& setup,
                       NormKind kind, double q, const HarnessOptions& opts) {
    const OpOptions op = op_options(opts);
    double inner_err = 0.0;
    auto fn = [&](double x) {
        FractionalEvaluation e = caputo_right(f, setup, x, op);
        inner_err = std::max(inner_err, e.err_estimate);
        return e.value;
    };
    QuadResult r = norm(fn, f.interval(), kind, q, opts.n_panels);
    const double scale =
        (kind == NormKind::Linf) ? 1.0 : f.interval().length();
    return {r.value, r.err_estimate + inner_err * scale};
}

InequalityReport base_report(TheoremId which, const FractionalSetup& setup,
                             const Interval& iv) {
    InequalityReport r;
    r.theorem = which;
    r.alpha = setup.alpha;
    r.p = setup.p.value_or(0.0);
    r.a = iv.a;
    r.b = iv.b;
    return r;
}

} // namespace

InequalityReport eval_classical_ostrowski(const ModelFunction& f, double x,
                                          const HarnessOptions& opts) {
    const Interval& iv = f.interval();
    if (!iv.contains(x))
        throw std::domain_error("eval_classical_ostrowski: x outside [a, b]");
    if (f.deriv_order_max() < 1)
        throw std::domain_error("eval_classical_ostrowski: need f'");

    InequalityReport r = base_report(TheoremId::Classical,
                                     FractionalSetup::make(1.0), iv);
    const double L = iv.length();
    QuadResult mean = graded_integral([&](double t) { return f.eval(t); }, iv,
                                      opts.n_panels);
    r.lhs = std::abs(f.eval(x) - mean.value / L);
    QuadResult dn = norm([&](double t) { return f.deriv(1, t); }, iv,
                         NormKind::Linf, 0.0, opts.n_panels);
    const double xm = (x - iv.midpoint()) / L;
    const double shape = 0.25 + xm * xm;
    r.rhs = L * shape * dn.value;
    finalize(r, mean.err_estimate / L + L * shape * dn.err_estimate,
             opts.extra_tol);
    return r;
}

InequalityReport eval_z_bound(const ModelFunction& f,
                              const FractionalSetup& setup, TheoremId which,
                              const HarnessOptions& opts) {
    if (which != TheoremId::Z1 && which != TheoremId::Z2 &&
        which != TheoremId::Z3)
        throw std::invalid_argument("eval_z_bound: expected Z1/Z2/Z3");
    if (which == TheoremId::Z2 && !(setup.alpha >= 1.0))
        throw std::invalid_argument("eval_z_bound: Z2 requires alpha >= 1");
    if (which == TheoremId::Z3 && !setup.p)
        throw std::invalid_argument("eval_z_bound: Z3 requires p, q");
    check_vanishing_hypothesis(f, setup, "eval_z_bound");

    const Interval& iv = f.interval();
    const double L = iv.length();
    InequalityReport r = base_report(which, setup, iv);

    QuadResult mean = graded_integral([&](double t) { return f.eval(t); }, iv,
                                      opts.n_panels);
    r.lhs = std::abs(f.boundary(0) - mean.value / L);
    double err = mean.err_estimate / L;

    const double alpha = setup.alpha;
    if (which == TheoremId::Z1) {
        QuadResult dn = caputo_norm(f, setup, NormKind::Linf, 0.0, opts);
        const double scale = std::pow(L, alpha) / gamma_fn(alpha + 2.0);
        r.rhs = dn.value * scale;
        err += dn.err_estimate * scale;
    } else if (which == TheoremId::Z2) {
        QuadResult dn = caputo_norm(f, setup, NormKind::L1, 0.0, opts);
        const double scale = std::pow(L, alpha - 1.0) / gamma_fn(alpha + 1.0);
        r.rhs = dn.value * scale;
        err += dn.err_estimate * scale;
    } else {
        const double p = *setup.p;
        const double q = *setup.q;
        QuadResult dn = caputo_norm(f, setup, NormKind::Lq, q, opts);
        const double scale =
            std::pow(L, alpha - 1.0 + 1.0 / p) /
            (gamma_fn(alpha) * std::pow(p * (alpha - 1.0) + 1.0, 1.0 / p) *
             (alpha + 1.0 / p));
        r.rhs = dn.value * scale;
        err += dn.err_estimate * scale;
    }
    finalize(r, err, opts.extra_tol);
    return r;
}

InequalityReport eval_product_theorem(const ModelFunction& f,
                                      const ModelFunction& g,
                                      const FractionalSetup& setup,
                                      TheoremId which,
                                      const HarnessOptions& opts) {
    if (!theorem_is_product(which))
        throw std::invalid_argument(
            "eval_product_theorem: expected A/A1/A2_STATED/A2_CORRECTED");
    if (which == TheoremId::A1 && !(setup.alpha >= 1.0))
        throw std::invalid_argument(
            "eval_product_theorem: A1 requires alpha >= 1");
    if ((which == TheoremId::A2Stated || which == TheoremId::A2Corrected) &&
        !setup.p)
        throw std::invalid_argument("eval_product_theorem: A2 requires p, q");
    check_vanishing_hypothesis(f, setup, "eval_product_theorem");
    check_vanishing_hypothesis(g, setup, "eval_product_theorem");

    const Interval& iv = f.interval();
    InequalityReport r = base_report(which, setup, iv);

    QuadResult i_fg = graded_integral(
        [&](double t) { return f.eval(t) * g.eval(t); }, iv, opts.n_panels);
    QuadResult i_f = graded_integral([&](double t) { return f.eval(t); }, iv,
                                     opts.n_panels);
    QuadResult i_g = graded_integral([&](double t) { return g.eval(t); }, iv,
                                     opts.n_panels);
    const double fb = f.boundary(0);
    const double gb = g.boundary(0);
    r.lhs = std::abs(2.0 * i_fg.value - gb * i_f.value - fb * i_g.value);
    double err = 2.0 * i_fg.err_estimate + std::abs(gb) * i_f.err_estimate +
                 std::abs(fb) * i_g.err_estimate;

    const double alpha = setup.alpha;
    const OpOptions op = op_options(opts);

    NormKind kind = NormKind::Linf;
    double q = 0.0;
    double order = alpha + 1.0;
    if (which == TheoremId::A1) {
        kind = NormKind::L1;
        order = alpha;
    } else if (which != TheoremId::A) {
        kind = NormKind::Lq;
        q = *setup.q;
        order = alpha + 1.0 / *setup.p;
    }

    QuadResult nf = caputo_norm(f, setup, kind, q, opts);
    QuadResult ng = caputo_norm(g, setup, kind, q, opts);
    FractionalEvaluation jf = rl_left_abs_at_b(f, order, op);
    FractionalEvaluation jg = rl_left_abs_at_b(g, order, op);

    double rhs = nf.value * jg.value + ng.value * jf.value;
    double rhs_err = nf.err_estimate * jg.value + nf.value * jg.err_estimate +
                     ng.err_estimate * jf.value + ng.value * jf.err_estimate;
    if (which == TheoremId::A2Stated || which == TheoremId::A2Corrected) {
        double factor = gamma_fn(alpha + 1.0 / *setup.p);
        if (which == TheoremId::A2Corrected) {
            // the proof's penultimate display carries this extra constant
            factor /= gamma_fn(alpha) *
                      std::pow(*setup.p * (alpha - 1.0) + 1.0, 1.0 / *setup.p);
        }
        rhs *= factor;
        rhs_err *= factor;
    }
    r.rhs = rhs;
    finalize(r, err + rhs_err, opts.extra_tol);
    return r;
}

CampaignResult run_campaign(const CampaignConfig& config) {
    CampaignResult result;
    std::map<std::string, std::pair<double, double>> a2_pairs; // stated, corrected

    for (double alpha : config.alphas) {
        const FractionalSetup base = FractionalSetup::make(alpha);
        const std::vector<ModelFunction> fs =
            sample_corpus(base, config.iv, config.corpus_size, config.seed);
        const std::vector<ModelFunction> gs = sample_corpus(
            base, config.iv, config.corpus_size,
            config.seed ^ 0x9E3779B97F4A7C15ULL);

        for (int i = 0; i < config.corpus_size; ++i) {
            for (TheoremId which : config.theorems) {
                if (theorem_needs_alpha_ge_1(which) && alpha < 1.0)
                    continue;
                std::vector<double> p_grid{0.0};
                if (theorem_needs_p(which)) {
                    p_grid.clear();
                    for (double p : config.ps)
                        if (alpha > 1.0 - 1.0 / p)
                            p_grid.push_back(p);
                }
                for (double p : p_grid) {
                    FractionalSetup setup =
                        (p > 0.0) ? FractionalSetup::make(alpha, p) : base;
                    InequalityReport rep;
                    try {
                        switch (which) {
                        case TheoremId::Classical:
                            rep = eval_classical_ostrowski(
                                fs[static_cast<std::size_t>(i)], config.iv.b,
                                config.opts);
                            break;
                        case TheoremId::Z1:
                        case TheoremId::Z2:
                        case TheoremId::Z3:
                            rep = eval_z_bound(fs[static_cast<std::size_t>(i)],
                                               setup, which, config.opts);
                            break;
                        default:
                            rep = eval_product_theorem(
                                fs[static_cast<std::size_t>(i)],
                                gs[static_cast<std::size_t>(i)], setup, which,
                                config.opts);
                            break;
                        }
                    } catch (const std::exception& e) {
                        rep = base_report(which, setup, config.iv);
                        rep.error = e.what();
                    }
                    rep.function_id_f = "f[" + std::to_string(i) + "]";
                    if (theorem_is_product(which))
                        rep.function_id_g = "g[" + std::to_string(i) + "]";

                    TheoremSummary& sum = result.summary[theorem_name(which)];
                    sum.count += 1;
                    if (!rep.error.empty()) {
                        sum.errors += 1;
                    } else {
                        switch (rep.verdict) {
                        case Verdict::Holds: sum.holds += 1; break;
                        case Verdict::Violated: sum.violated += 1; break;
                        case Verdict::Inconclusive:
                            sum.inconclusive += 1;
                            break;
                        }
                        sum.max_ratio = std::max(sum.max_ratio, rep.ratio);
                    }

                    if ((which == TheoremId::A2Stated ||
                         which == TheoremId::A2Corrected) &&
                        rep.error.empty() && rep.rhs > 0.0) {
                        const std::string key = std::to_string(alpha) + "|" +
                                                std::to_string(p) + "|" +
                                                std::to_string(i);
                        auto& pair = a2_pairs[key];
                        if (which == TheoremId::A2Stated)
                            pair.first = rep.rhs;
                        else
                            pair.second = rep.rhs;
                        if (pair.first > 0.0 && pair.second > 0.0)
                            result.a2_stated_over_corrected.push_back(
                                pair.first / pair.second);
                    }

                    result.reports.push_back(std::move(rep));
                }
            }
        }
    }
    auto it = result.summary.find("A2_STATED");
    if (it != result.summary.end())
        result.a2_stated_violations = it->second.violated;
    return result;
}

} // namespace ofrac
