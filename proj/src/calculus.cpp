#include "riesz/calculus.hpp"

#include <cmath>
#include <vector>

#include "accum.hpp"
#include "riesz/expectation.hpp"

namespace riesz {

namespace {

constexpr double kExpOverflowBound = 700.0;

void check_exp_domain(const Element& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > kExpOverflowBound) throw Overflow(i, x[i]);
    }
}

double max_abs(const std::vector<double>& v, const std::vector<double>& comp) {
    double m = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double a = std::abs(v[i] + comp[i]);
        if (a > m) m = a;
    }
    return m;
}

} // namespace

void SeriesConfig::validate() const {
    if (!(term_tol > 0.0)) throw ParameterDomain("term_tol must be > 0");
    if (max_terms < 1) throw ParameterDomain("max_terms must be >= 1");
}

Element exp_series(const Element& x, const SeriesConfig& cfg) {
    cfg.validate();
    check_exp_domain(x);
    const std::size_t n = x.size();

    // k = 0 term of sum x^k / k!
    std::vector<double> sum(n, 1.0), comp(n, 0.0), term(n, 1.0);

    for (int k = 1; k <= cfg.max_terms; ++k) {
        for (std::size_t i = 0; i < n; ++i) term[i] = term[i] * x[i] / k;
        double term_norm = 0.0;
        for (double v : term) {
            double a = std::abs(v);
            if (a > term_norm) term_norm = a;
        }
        const double threshold = cfg.term_tol * (1.0 + max_abs(sum, comp));
        if (term_norm <= threshold) {
            std::vector<double> out(n);
            for (std::size_t i = 0; i < n; ++i) out[i] = sum[i] + comp[i];
            return Element(x.space(), std::move(out));
        }
        for (std::size_t i = 0; i < n; ++i) {
            // Neumaier step, kept inline over the two arrays
            double t = sum[i] + term[i];
            if (std::abs(sum[i]) >= std::abs(term[i])) {
                comp[i] += (sum[i] - t) + term[i];
            } else {
                comp[i] += (term[i] - t) + sum[i];
            }
            sum[i] = t;
        }
    }
    double term_norm = 0.0;
    for (double v : term) term_norm = std::max(term_norm, std::abs(v));
    throw SeriesNotConverged(cfg.max_terms, term_norm,
                             cfg.term_tol * (1.0 + max_abs(sum, comp)));
}

Element exp_pointwise(const Element& x) {
    check_exp_domain(x);
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::exp(x[i]);
    return Element(x.space(), std::move(out));
}

Element log_element(const Element& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!(f[i] > 0.0)) throw NotPositiveInvertible(i, f[i]);
    }
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::log(f[i]);
    return Element(f.space(), std::move(out));
}

Element secant_z(const Element& x, const Element& y) {
    if (!same_space(x.space(), y.space())) throw SpaceMismatch();
    check_exp_domain(x);
    check_exp_domain(y);
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double a = x[i], b = y[i];
        const double d = a - b;
        if (std::abs(d) <= 1e-8 * (1.0 + std::abs(a) + std::abs(b))) {
            // midpoint exponential: stable where the quotient cancels
            out[i] = std::exp(0.5 * (a + b));
        } else {
            out[i] = (std::exp(a) - std::exp(b)) / d;
        }
    }
    return Element(x.space(), std::move(out));
}

double phi_scalar(double t) { return std::expm1(t) - t; }

Element phi_map(const Element& f) {
    check_exp_domain(f);
    std::vector<double> out(f.size());
    // expm1(v) - v = exp(v) - v - 1, evaluated without the 1-cancellation
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::expm1(f[i]) - f[i];
    return Element(f.space(), std::move(out));
}

Element mgf(const CondExpectation& T, const Element& x, double t) {
    if (!same_space(T.space(), x.space())) throw SpaceMismatch();
    return T.apply(exp_pointwise(t * x));
}

Element psi(const CondExpectation& T, const Element& S, double t) {
    Element m = mgf(T, S, t);
    // strictly positive by the averaging of strictly positive values;
    // log_element re-checks rather than trusting it
    return log_element(m);
}

} // namespace riesz
