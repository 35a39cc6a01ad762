#include "ofrac/function_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ofrac {

namespace {

// falling factorial beta (beta-1) ... (beta-k+1); exactly 0 for integer
// beta < k
double falling_factorial(double beta, int k) {
    double f = 1.0;
    for (int i = 0; i < k; ++i)
        f *= beta - static_cast<double>(i);
    return f;
}

constexpr int kTermDerivOrderMax = 32;

double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

double ModelFunction::deriv(int k, double t) const {
    if (k < 0 || k > deriv_order_max_)
        throw std::domain_error("ModelFunction::deriv: order out of range");
    if (tag_ == OracleClass::Opaque)
        return opaque_derivs_[static_cast<std::size_t>(k)](t);
    double v = (k == 0) ? c0_ : 0.0;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (const PowTerm& term : terms_) {
        const double ff = falling_factorial(term.beta, k);
        if (ff == 0.0)
            continue;
        v += term.c * sign * ff * std::pow(iv_.b - t, term.beta - k);
    }
    return v;
}

double ModelFunction::boundary(int k) const {
    if (k < 0 || k > deriv_order_max_)
        throw std::domain_error("ModelFunction::boundary: order out of range");
    if (tag_ == OracleClass::Opaque)
        return opaque_derivs_[static_cast<std::size_t>(k)](iv_.b);
    double v = (k == 0) ? c0_ : 0.0;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (const PowTerm& term : terms_) {
        const double ff = falling_factorial(term.beta, k);
        if (ff == 0.0)
            continue;
        const double e = term.beta - static_cast<double>(k);
        if (e > 0.0)
            continue; // (b-t)^e vanishes at t = b
        if (e == 0.0) {
            v += term.c * sign * ff;
            continue;
        }
        throw std::domain_error(
            "ModelFunction::boundary: derivative unbounded at b");
    }
    return v;
}

bool ModelFunction::sign_definite() const {
    if (tag_ == OracleClass::Opaque)
        return false;
    bool has_pos = c0_ > 0.0;
    bool has_neg = c0_ < 0.0;
    for (const PowTerm& term : terms_) {
        has_pos = has_pos || term.c > 0.0;
        has_neg = has_neg || term.c < 0.0;
    }
    return !(has_pos && has_neg);
}

ModelFunction ModelFunction::scaled(double s) const {
    if (tag_ == OracleClass::Opaque)
        throw std::invalid_argument("ModelFunction::scaled: opaque function");
    std::vector<PowTerm> terms = terms_;
    for (PowTerm& t : terms)
        t.c *= s;
    return sum_of_terms(c0_ * s, std::move(terms), iv_, deriv_order_max_);
}

ModelFunction ModelFunction::plus(const ModelFunction& other) const {
    if (tag_ == OracleClass::Opaque || other.tag_ == OracleClass::Opaque)
        throw std::invalid_argument("ModelFunction::plus: opaque function");
    if (iv_.a != other.iv_.a || iv_.b != other.iv_.b)
        throw std::invalid_argument("ModelFunction::plus: interval mismatch");
    std::vector<PowTerm> terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return sum_of_terms(c0_ + other.c0_, std::move(terms), iv_,
                        std::min(deriv_order_max_, other.deriv_order_max_));
}

ModelFunction ModelFunction::constant(double c, const Interval& iv) {
    ModelFunction f(iv);
    f.c0_ = c;
    f.deriv_order_max_ = kTermDerivOrderMax;
    f.tag_ = OracleClass::Constant;
    return f;
}

ModelFunction ModelFunction::power_at_b(double c, double beta,
                                        const Interval& iv) {
    if (beta < 0.0)
        throw std::domain_error("power_at_b: require beta >= 0");
    if (beta == 0.0)
        return constant(c, iv);
    ModelFunction f(iv);
    f.terms_ = {PowTerm{c, beta}};
    f.deriv_order_max_ = kTermDerivOrderMax;
    f.tag_ = OracleClass::PowerAtB;
    return f;
}

ModelFunction ModelFunction::sum_of_terms(double c0, std::vector<PowTerm> terms,
                                          const Interval& iv,
                                          int deriv_order_max) {
    for (const PowTerm& t : terms)
        if (t.beta < 0.0)
            throw std::domain_error("sum_of_terms: require beta >= 0");
    ModelFunction f(iv);
    f.c0_ = c0;
    f.terms_ = std::move(terms);
    f.deriv_order_max_ = deriv_order_max;
    if (f.terms_.empty())
        f.tag_ = OracleClass::Constant;
    else if (f.terms_.size() == 1 && c0 == 0.0)
        f.tag_ = OracleClass::PowerAtB;
    else
        f.tag_ = OracleClass::SumOfTerms;
    return f;
}

ModelFunction ModelFunction::opaque(
    std::vector<std::function<double(double)>> derivs, const Interval& iv) {
    if (derivs.empty())
        throw std::invalid_argument("opaque: need at least the function itself");
    ModelFunction f(iv);
    f.opaque_derivs_ = std::move(derivs);
    f.deriv_order_max_ = static_cast<int>(f.opaque_derivs_.size()) - 1;
    f.tag_ = OracleClass::Opaque;
    return f;
}

ModelFunction make_power_at_b(double c, double beta, const Interval& iv) {
    return ModelFunction::power_at_b(c, beta, iv);
}

std::vector<ModelFunction> sample_corpus(const FractionalSetup& setup,
                                         const Interval& iv, int n,
                                         std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("sample_corpus: require n >= 1");
    std::mt19937_64 rng(seed);
    const double m = static_cast<double>(setup.m);
    std::vector<ModelFunction> corpus;
    corpus.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int terms_count = 1 + static_cast<int>(rng() % 3);
        const double c0 = -2.0 + 4.0 * unit_uniform(rng);
        std::vector<PowTerm> terms;
        for (int j = 0; j < terms_count; ++j) {
            const double c = -2.0 + 4.0 * unit_uniform(rng);
            double beta;
            do {
                beta = m + 3.0 * unit_uniform(rng);
            } while (std::abs(beta - std::round(beta)) < 0.05);
            terms.push_back(PowTerm{c, beta});
        }
        corpus.push_back(
            ModelFunction::sum_of_terms(c0, std::move(terms), iv, setup.m + 1));
    }
    return corpus;
}

namespace {

double parse_number(const std::string& text, const std::string& term) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number '" + text + "' in term '" +
                                    term + "'");
    }
    if (pos != text.size())
        throw std::invalid_argument("trailing characters in number '" + text +
                                    "' in term '" + term + "'");
    return v;
}

} // namespace

ModelFunction parse_function_spec(const std::string& spec, const Interval& iv) {
    std::string s;
    s.reserve(spec.size());
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw std::invalid_argument("empty function spec");

    double c0 = 0.0;
    std::vector<PowTerm> terms;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t end = std::min(s.find(';', start), s.size());
        const std::string term = s.substr(start, end - start);
        if (term.rfind("const:", 0) == 0) {
            c0 += parse_number(term.substr(6), term);
        } else if (term.rfind("powb:c=", 0) == 0) {
            const std::size_t comma = term.find(",beta=", 7);
            if (comma == std::string::npos)
                throw std::invalid_argument("term '" + term +
                                            "' missing ',beta='");
            const double c = parse_number(term.substr(7, comma - 7), term);
            const double beta = parse_number(term.substr(comma + 6), term);
            if (beta < 0.0)
                throw std::invalid_argument("term '" + term +
                                            "': beta must be >= 0");
            if (beta == 0.0)
                c0 += c;
            else
                terms.push_back(PowTerm{c, beta});
        } else {
            throw std::invalid_argument("unrecognized term '" + term + "'");
        }
        if (end == s.size())
            break;
        start = end + 1;
    }
    return ModelFunction::sum_of_terms(c0, std::move(terms), iv, 32);
}

} // namespace ofrac
