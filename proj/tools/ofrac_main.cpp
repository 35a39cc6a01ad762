// ofrac: evaluate fractional operators, verify Ostrowski-type bounds over
// randomized corpora, and run quadrature convergence studies.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ofrac/fractional_ops.hpp"
#include "ofrac/function_model.hpp"
#include "ofrac/inequality.hpp"
#include "ofrac/report_io.hpp"

namespace {

using namespace ofrac;

constexpr const char* kFunctionGrammar =
    "Function mini-language: semicolon-separated terms, each either\n"
    "  const:<c>              constant c\n"
    "  powb:c=<c>,beta=<b>    c*(b-t)^beta, beta >= 0\n"
    "Numbers in decimal or scientific notation; whitespace ignored.\n"
    "Example: \"const:1; powb:c=-0.5,beta=1.5\"";

std::vector<double> parse_double_list(const std::string& text,
                                      const char* flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad value '") + item +
                                        "' for " + flag);
        }
    }
    if (out.empty())
        throw std::invalid_argument(std::string("empty list for ") + flag);
    return out;
}

struct EvalArgs {
    std::string f_spec;
    double alpha = 0.0;
    double a = 0.0;
    double b = 1.0;
    double x = 0.0;
    int grid_n = 512;
};

void add_eval_options(CLI::App* cmd, EvalArgs& args, bool alpha_required) {
    cmd->add_option("--f", args.f_spec, "function spec")->required();
    auto* alpha = cmd->add_option("--alpha", args.alpha, "fractional order");
    if (alpha_required)
        alpha->required();
    cmd->add_option("--a", args.a, "interval left endpoint");
    cmd->add_option("--b", args.b, "interval right endpoint");
    cmd->add_option("--x", args.x, "evaluation point")->required();
    cmd->add_option("--grid-n", args.grid_n, "quadrature panels");
}

int print_evaluation(const FractionalEvaluation& e) {
    std::printf("value=%.10f err_estimate=%.3g method=%s\n", e.value,
                e.err_estimate,
                e.method == EvalMethod::ClosedForm ? "closed_form"
                                                   : "quadrature");
    return 0;
}

int run_eval(const std::string& op, const EvalArgs& args) {
    const Interval iv(args.a, args.b);
    const ModelFunction f = parse_function_spec(args.f_spec, iv);
    const OpOptions opts{args.grid_n, true};
    if (op == "rl-left")
        return print_evaluation(rl_integral_left(f, args.alpha, args.x, opts));
    if (op == "rl-right")
        return print_evaluation(rl_integral_right(f, args.alpha, args.x, opts));
    const FractionalSetup setup = FractionalSetup::make(args.alpha);
    if (op == "caputo-right")
        return print_evaluation(caputo_right(f, setup, args.x, opts));
    return print_evaluation(taylor_reconstruct(f, setup, args.x, opts));
}

struct VerifyArgs {
    std::string theorems;
    std::string alphas;
    std::string ps;
    double a = 0.0;
    double b = 1.0;
    int corpus = 1;
    std::uint64_t seed = 0;
    int grid_n = 512;
    double tol = 0.0;
    std::string out;
    std::string format = "json";
};

int run_verify(const VerifyArgs& args) {
    CampaignConfig config{Interval(args.a, args.b)};
    for (const std::string& name :
         [&] {
             std::vector<std::string> names;
             std::stringstream ss(args.theorems);
             std::string item;
             while (std::getline(ss, item, ','))
                 names.push_back(item);
             return names;
         }())
        config.theorems.push_back(theorem_from_name(name));
    if (config.theorems.empty())
        throw std::invalid_argument("--theorems must be non-empty");
    config.alphas = parse_double_list(args.alphas, "--alpha");
    if (!args.ps.empty())
        config.ps = parse_double_list(args.ps, "--p");
    for (TheoremId t : config.theorems)
        if (theorem_needs_p(t) && config.ps.empty())
            throw std::invalid_argument(std::string(theorem_name(t)) +
                                        " requires --p");
    if (args.corpus < 1)
        throw std::invalid_argument("--corpus must be >= 1");
    config.corpus_size = args.corpus;
    config.seed = args.seed;
    config.opts.n_panels = args.grid_n;
    config.opts.extra_tol = args.tol;

    const CampaignResult result = run_campaign(config);
    const std::string text = (args.format == "csv")
                                 ? campaign_to_csv(result)
                                 : campaign_to_json(result, args.seed);
    if (args.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file " + args.out);
        out << text;
    }

    bool failing_violation = false;
    for (const auto& [name, s] : result.summary) {
        std::fprintf(stderr,
                     "%-13s count=%d holds=%d violated=%d inconclusive=%d "
                     "errors=%d max_ratio=%.6f\n",
                     name.c_str(), s.count, s.holds, s.violated,
                     s.inconclusive, s.errors, s.max_ratio);
        if (name != "A2_STATED" && s.violated > 0)
            failing_violation = true;
    }
    if (result.a2_stated_violations > 0)
        std::fprintf(stderr, "note: %d A2_STATED violation(s) flagged\n",
                     result.a2_stated_violations);
    return failing_violation ? 3 : 0;
}

struct ConvergeArgs {
    std::string op;
    EvalArgs eval;
    std::string out;
};

int run_converge(const ConvergeArgs& args) {
    const Interval iv(args.eval.a, args.eval.b);
    const ModelFunction f = parse_function_spec(args.eval.f_spec, iv);
    const FractionalSetup setup = FractionalSetup::make(args.eval.alpha);

    auto evaluate = [&](const OpOptions& opts) -> FractionalEvaluation {
        if (args.op == "rl-left")
            return rl_integral_left(f, args.eval.alpha, args.eval.x, opts);
        if (args.op == "rl-right")
            return rl_integral_right(f, args.eval.alpha, args.eval.x, opts);
        if (args.op == "caputo-right")
            return caputo_right(f, setup, args.eval.x, opts);
        return taylor_reconstruct(f, setup, args.eval.x, opts);
    };

    double oracle;
    if (args.op == "taylor") {
        oracle = f.eval(args.eval.x);
    } else {
        const FractionalEvaluation ref = evaluate(OpOptions{512, true});
        if (ref.method != EvalMethod::ClosedForm) {
            std::fprintf(stderr,
                         "converge: no closed-form oracle for this function "
                         "under %s\n",
                         args.op.c_str());
            return 2;
        }
        oracle = ref.value;
    }

    std::string csv = "n_panels,value,abs_error_vs_oracle,empirical_order\n";
    double prev_err = 0.0;
    bool first = true;
    for (int n : {64, 128, 256, 512, 1024}) {
        const FractionalEvaluation e = evaluate(OpOptions{n, false});
        const double err = std::abs(e.value - oracle);
        char row[160];
        if (first || prev_err == 0.0 || err == 0.0)
            std::snprintf(row, sizeof(row), "%d,%.17g,%.17g,\n", n, e.value,
                          err);
        else
            std::snprintf(row, sizeof(row), "%d,%.17g,%.17g,%.6f\n", n,
                          e.value, err, std::log2(prev_err / err));
        csv += row;
        prev_err = err;
        first = false;
    }
    if (args.out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file " + args.out);
        out << csv;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional-operator evaluation and Ostrowski-type "
                 "inequality verification"};
    app.footer(kFunctionGrammar);
    app.require_subcommand(1);

    auto* eval = app.add_subcommand(
        "eval", "evaluate one operator at a point");
    eval->require_subcommand(1);
    EvalArgs eval_args;
    std::string eval_op;
    for (const char* op : {"rl-left", "rl-right", "caputo-right", "taylor"}) {
        auto* sub = eval->add_subcommand(op);
        const bool alpha_required = std::string(op) != "rl-left" &&
                                    std::string(op) != "rl-right";
        add_eval_options(sub, eval_args, alpha_required);
        sub->callback([&eval_op, op] { eval_op = op; });
    }

    auto* verify = app.add_subcommand(
        "verify", "run an inequality verification campaign");
    VerifyArgs verify_args;
    verify->add_option("--theorems", verify_args.theorems,
                       "comma list of CLASSICAL,Z1,Z2,Z3,A,A1,A2_STATED,"
                       "A2_CORRECTED")
        ->required();
    verify->add_option("--alpha", verify_args.alphas,
                       "comma list of fractional orders")
        ->required();
    verify->add_option("--p", verify_args.ps, "comma list of Holder p values");
    verify->add_option("--a", verify_args.a, "interval left endpoint");
    verify->add_option("--b", verify_args.b, "interval right endpoint");
    verify->add_option("--corpus", verify_args.corpus, "corpus size");
    verify->add_option("--seed", verify_args.seed, "corpus seed");
    verify->add_option("--grid-n", verify_args.grid_n, "quadrature panels");
    verify->add_option("--tol", verify_args.tol,
                       "extra absolute verdict tolerance");
    verify->add_option("--out", verify_args.out, "output file (default stdout)");
    verify->add_option("--format", verify_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* converge = app.add_subcommand(
        "converge",
        "CSV convergence table (n_panels,value,abs_error_vs_oracle,"
        "empirical_order) for n in 64..1024");
    ConvergeArgs converge_args;
    converge->add_option("--op", converge_args.op, "operator")
        ->check(CLI::IsMember({"rl-left", "rl-right", "caputo-right",
                               "taylor"}))
        ->required();
    add_eval_options(converge, converge_args.eval, true);
    converge->add_option("--out", converge_args.out,
                         "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed())
            return run_eval(eval_op, eval_args);
        if (verify->parsed())
            return run_verify(verify_args);
        return run_converge(converge_args);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "evaluation failed: %s\n", e.what());
        return 1;
    }
}
