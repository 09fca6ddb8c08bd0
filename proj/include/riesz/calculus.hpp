#ifndef RIESZ_CALCULUS_HPP
#define RIESZ_CALCULUS_HPP

#include "riesz/element.hpp"

namespace riesz {

class CondExpectation;

/// Truncation policy for the power-series exponential: stop once the u-norm
/// of the next increment falls below term_tol * (1 + ||partial sum||_u).
struct SeriesConfig {
    double term_tol = 1e-16;
    int max_terms = 200;

    void validate() const;
};

/// Exponential as the truncated power series sum x^k / k! in the f-algebra.
/// Exists to witness convergence of the series; exp_pointwise is the
/// production path. Accumulation is compensated so that the result agrees
/// with exp_pointwise to 1e-12 atomwise slack for ||x||_u <= 5 and to
/// 1e-12 * (1 + ||exp x||_u) in u-norm for ||x||_u <= 20.
Element exp_series(const Element& x, const SeriesConfig& cfg = {});

/// Atomwise scalar exponential. Strictly positive; inverse is
/// exp_pointwise(-x). Throws Overflow when any atom exceeds 700.
Element exp_pointwise(const Element& x);

/// Atomwise logarithm of a strictly positive element.
Element log_element(const Element& f);

/// The positive invertible z with z*(x - y) = exp(x) - exp(y).
/// Atomwise difference quotient; near-equal atoms (relative band 1e-8) use
/// the midpoint exponential exp((x+y)/2), the stable form of the integral
/// representation of the quotient.
Element secant_z(const Element& x, const Element& y);

/// f -> exp(f) - f - u, nonnegative for every f.
Element phi_map(const Element& f);

/// Scalar counterpart of phi_map: e^t - t - 1.
double phi_scalar(double t);

/// Moment generating function: T(exp(t x)). Equals u exactly at t = 0 and is
/// strictly positive for every t.
Element mgf(const CondExpectation& T, const Element& x, double t);

/// Logarithmic moment generating function: log T(exp(t S)).
Element psi(const CondExpectation& T, const Element& S, double t);

} // namespace riesz

#endif
