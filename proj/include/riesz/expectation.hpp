#ifndef RIESZ_EXPECTATION_HPP
#define RIESZ_EXPECTATION_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "riesz/band.hpp"
#include "riesz/element.hpp"
#include "riesz/report.hpp"

namespace riesz {

/// Strictly positive conditional expectation from a partition of the carrier:
/// (Tf)_x is the weighted average of f over the block containing x.
///
/// Fixed points are exactly the block-constant elements; Tu = u and T(Tf) = Tf
/// hold bit-exactly (block averages are anchored at the block's first atom, so
/// a constant block contributes a zero correction sum).
class CondExpectation {
public:
    static CondExpectation make(SpacePtr space,
                                std::vector<std::vector<std::size_t>> blocks);

    const SpacePtr& space() const { return space_; }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    std::size_t block_of(std::size_t atom) const { return block_of_[atom]; }

    Element apply(const Element& f) const;

    /// True iff f is constant on every block within tol (slack relative to
    /// the block's first value).
    bool range_contains(const Element& f, double tol) const;

private:
    CondExpectation() = default;

    SpacePtr space_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
    std::vector<std::vector<double>> omega_; // per-block normalized weights
};

/// Equality check T(Pu Qu) = T(Pu) T(Qu), the defining identity of
/// conditionally independent band projections.
BoundReport check_T_independent_projections(const CondExpectation& T,
                                            const BandProjection& P,
                                            const BandProjection& Q,
                                            double tol);

/// Necessary-condition surrogate for conditional independence of elements:
/// moment factorization T(f^n g^m) = T(f^n) T(g^m) for 1 <= n, m <= max_degree
/// and M_{f+g}(t) = M_f(t) M_g(t) on t_grid. Passing does not certify
/// independence; failing falsifies it.
BoundReport check_T_independent_elements(const CondExpectation& T,
                                         const Element& f, const Element& g,
                                         int max_degree,
                                         std::span<const double> t_grid,
                                         double tol);

/// A family of independent coins over a base space, realized by the product
/// measure. Atoms of the product space are (base atom, coin pattern) pairs in
/// base-major order with little-endian coin patterns: product atom
/// a * 2^n + pat, where bit (i-1) of pat is the outcome of coin i.
///
/// Coin i flips with the per-block probability given by the success element,
/// so T(P_i u) = f for every i and T(prod_{i in A} P_i u) = f^{|A|}.
struct BernoulliProcess {
    CondExpectation base;
    int coin_count = 0;
    SpacePtr product_space;
    CondExpectation lifted;
    std::vector<BandProjection> coins; // coins[i-1] is P_i
    Element success;                   // f, block-constant, values in (0,1)

    std::size_t base_atom_of(std::size_t product_atom) const {
        return product_atom >> coin_count;
    }
    unsigned pattern_of(std::size_t product_atom) const {
        return static_cast<unsigned>(product_atom) &
               ((1u << coin_count) - 1u);
    }

    /// Element depending on coin i alone: v1 where coin i shows 1, else v0.
    Element from_coin_values(int coin, double v0, double v1) const;
};

inline constexpr std::size_t kDefaultAtomCap = std::size_t{1} << 22;

/// Builds the product realization. p must be block-constant with values
/// strictly inside (0,1); the product carrier must stay within atom_cap.
BernoulliProcess make_bernoulli_process(const CondExpectation& base_T,
                                        const Element& p, int n,
                                        std::size_t atom_cap = kDefaultAtomCap);

/// S_n = sum of the first n coin indicators; atom value is the count of
/// 1-coins among coordinates 1..n.
Element partial_sum(const BernoulliProcess& proc, int n);

/// Both sides of the independent-product identity
///   T prod_{i=1..n} exp(lambda P_i u) = (u + (e^lambda - 1) f)^n,
/// returned as (lhs, rhs) for the caller to compare.
std::pair<Element, Element> independent_product_identity(
    const BernoulliProcess& proc, double lambda, int n);

} // namespace riesz

#endif
