#ifndef RIESZ_ORACLE_HPP
#define RIESZ_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "riesz/element.hpp"

namespace riesz::oracle {

// Brute-force / closed-form ground truth for cross-checks. These functions
// deliberately share no computation path with the operator machinery: they
// use classical formulas and their own summation code.

/// P(Binomial(n, p) > t), exact terms summed in descending k with compensated
/// accumulation. t < 0 returns 1, t >= n returns 0.
double binomial_tail(double p_block, int n, double t);

/// (1 + p (e^lambda - 1))^n, the classical moment generating function of a
/// binomial count.
double classical_mgf(double p_block, int n, double lambda);

/// Per-block conditional expectation computed by direct enumeration.
struct OracleResult {
    std::vector<double> per_block; // block id -> weighted average
    Element as_element;            // the block-constant element it induces
};

/// Independent re-implementation of the conditional expectation: ascending
/// index compensated sums of w_y f_y and w_y per block, then the quotient.
OracleResult enumerate_expectation(const SpacePtr& space,
                                   const std::vector<std::vector<std::size_t>>& blocks,
                                   const Element& f);

} // namespace riesz::oracle

#endif
