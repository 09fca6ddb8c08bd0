#ifndef RIESZ_INEQUALITIES_HPP
#define RIESZ_INEQUALITIES_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "riesz/expectation.hpp"
#include "riesz/report.hpp"

namespace riesz {

/// The exact tail element T P_{(S - t u)^+} u: atom by atom, the conditional
/// probability of the strict event {S > t} given the block. support_eps is
/// forwarded to band_generated_by; 0 is exact and appropriate whenever t
/// avoids attainable atoms of S.
Element tail_element(const CondExpectation& T, const Element& S, double t,
                     double support_eps = 0.0);

/// Multiplicative tail bound for a sum of n coins:
///   T P_{(S_n - t u)^+} u <= (n e ||f||_u / t)^t * exp(-n f)
/// valid for t > n ||f||_u.
BoundReport chernoff_check(const BernoulliProcess& proc, int n, double t,
                           double tol);

/// Intermediate form (n ||f||_u / t)^t * exp(t u - n f) sitting between the
/// exact tail and the chernoff_check right-hand side; exposed so the full
/// chain tail <= intermediate <= bound can be verified.
Element chernoff_intermediate(const BernoulliProcess& proc, int n, double t);

struct BennettReports {
    BoundReport psi_bound;                 // log T(exp(tS)) <= (e^t - t - 1) v
    std::optional<BoundReport> tail_bound; // absent when v has a zero atom
};

/// Variance-sensitive bound for a sum of independent f_i <= u:
/// with S = sum (f_i - T f_i) and v = sum T(f_i^2),
///   (i)  psi_S(t) <= (e^t - t - 1) v            for t > 0,
///   (ii) T P_{(S - x u)^+} u <= exp(-||v||_u h(x/||v||_u)) u  for x > 0,
/// where h(a) = (1+a) log(1+a) - a. Independence of the f_i is the caller's
/// responsibility (use the surrogate checker or a constructor-built family).
BennettReports bennett_check(const CondExpectation& T,
                             std::span<const Element> fs, double t, double x,
                             double tol);

/// Witness that X satisfies psi_{X - TX}(lambda) <= (lambda^2 / 2) v on every
/// grid point.
struct SubGaussianCert {
    Element element;   // X
    Element parameter; // v, positive invertible
    std::vector<double> lambda_grid;
};

/// Verifies the defining inequality on the grid; throws NotSubGaussianOnGrid
/// at the first violating lambda.
SubGaussianCert subgaussian_check(const CondExpectation& T, const Element& X,
                                  const Element& v,
                                  std::span<const double> lambda_grid,
                                  double tol);

/// Tail bound for a certified element:
///   T P_{(X - TX - t u)^+} u <= exp(-t^2 / (2 ||v||_u)) u for t > 0.
BoundReport subgaussian_tail_check(const SubGaussianCert& cert,
                                   const CondExpectation& T, double t,
                                   double tol);

/// Tail bound for an independent sum of certified elements:
///   T P_{(sum (X_i - TX_i) - t u)^+} u <= exp(-t^2 / (2 sum ||v_i||_u)) u.
BoundReport hoeffding_sum_check(const CondExpectation& T,
                                std::span<const Element> Xs,
                                std::span<const Element> vs, double t,
                                double tol);

/// Certificate for a bounded element X in [a u, b u]: parameter
/// v = ((b-a)^2 / 4) u, so the grid inequality reads
/// psi_{X-TX}(lambda) <= lambda^2 (b-a)^2 / 8 u.
SubGaussianCert bounded_subgaussian(const CondExpectation& T, const Element& X,
                                    double a, double b,
                                    std::span<const double> lambda_grid,
                                    double tol);

/// Tail bound for an independent sum of bounded elements:
///   ... <= exp(-2 t^2 / sum (b_i - a_i)^2) u.
/// Shares the right-hand-side expression with hoeffding_sum_check under
/// v_i = ((b_i - a_i)^2 / 4) u, so the two forms agree bit for bit.
BoundReport hoeffding_bounded_check(
    const CondExpectation& T, std::span<const Element> Xs,
    std::span<const std::pair<double, double>> bounds, double t, double tol);

/// Bennett's h: (1+a) log(1+a) - a for a > -1.
double bennett_h(double a);

} // namespace riesz

#endif
