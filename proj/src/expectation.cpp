#include "riesz/expectation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "accum.hpp"
#include "riesz/calculus.hpp"

namespace riesz {

CondExpectation CondExpectation::make(SpacePtr space,
                                      std::vector<std::vector<std::size_t>> blocks) {
    if (!space) throw Error("conditional expectation requires a carrier");
    const std::size_t n = space->atom_count();
    std::vector<std::size_t> owner(n, SIZE_MAX);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw NotAPartition("block " + std::to_string(b) + " is empty");
        }
        for (std::size_t atom : blocks[b]) {
            if (atom >= n) {
                throw NotAPartition("atom " + std::to_string(atom) +
                                    " outside the carrier");
            }
            if (owner[atom] != SIZE_MAX) {
                throw NotAPartition("atom " + std::to_string(atom) +
                                    " appears in two blocks");
            }
            owner[atom] = b;
        }
    }
    for (std::size_t atom = 0; atom < n; ++atom) {
        if (owner[atom] == SIZE_MAX) {
            throw NotAPartition("atom " + std::to_string(atom) +
                                " not covered by any block");
        }
    }

    CondExpectation T;
    T.space_ = std::move(space);
    T.blocks_ = std::move(blocks);
    T.block_of_ = std::move(owner);
    T.omega_.resize(T.blocks_.size());
    for (std::size_t b = 0; b < T.blocks_.size(); ++b) {
        detail::Neumaier total;
        for (std::size_t atom : T.blocks_[b]) total.add(T.space_->weight(atom));
        const double wb = total.value();
        T.omega_[b].reserve(T.blocks_[b].size());
        for (std::size_t atom : T.blocks_[b]) {
            T.omega_[b].push_back(T.space_->weight(atom) / wb);
        }
    }
    return T;
}

Element CondExpectation::apply(const Element& f) const {
    if (!same_space(space_, f.space())) throw SpaceMismatch();
    std::vector<double> out(f.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const auto& block = blocks_[b];
        const auto& omega = omega_[b];
        // anchored average: constant blocks contribute a zero correction, so
        // block-constant inputs are fixed bit-exactly
        const double anchor = f[block[0]];
        detail::Neumaier acc;
        for (std::size_t j = 0; j < block.size(); ++j) {
            acc.add(omega[j] * (f[block[j]] - anchor));
        }
        const double avg = anchor + acc.value();
        for (std::size_t atom : block) out[atom] = avg;
    }
    return Element(space_, std::move(out));
}

bool CondExpectation::range_contains(const Element& f, double tol) const {
    if (!same_space(space_, f.space())) throw SpaceMismatch();
    if (tol < 0.0) throw NegativeTolerance(tol);
    for (const auto& block : blocks_) {
        const double ref = f[block[0]];
        for (std::size_t atom : block) {
            if (!(std::abs(f[atom] - ref) <= tol * (1.0 + std::abs(ref)))) {
                return false;
            }
        }
    }
    return true;
}

BoundReport check_T_independent_projections(const CondExpectation& T,
                                            const BandProjection& P,
                                            const BandProjection& Q,
                                            double tol) {
    if (!same_space(T.space(), P.space()) || !same_space(T.space(), Q.space())) {
        throw SpaceMismatch();
    }
    Element pu = P.indicator();
    Element qu = Q.indicator();
    Element lhs = T.apply(pu * qu);
    Element rhs = T.apply(pu) * T.apply(qu);
    return make_equality_report("t_independent_projections", std::move(lhs),
                                std::move(rhs), tol);
}

BoundReport check_T_independent_elements(const CondExpectation& T,
                                         const Element& f, const Element& g,
                                         int max_degree,
                                         std::span<const double> t_grid,
                                         double tol) {
    if (!same_space(T.space(), f.space()) || !same_space(T.space(), g.space())) {
        throw SpaceMismatch();
    }
    if (max_degree < 1) throw ParameterDomain("max_degree must be >= 1");

    std::vector<Element> fp, gp; // powers 1..max_degree
    fp.reserve(max_degree);
    gp.reserve(max_degree);
    fp.push_back(f);
    gp.push_back(g);
    for (int k = 1; k < max_degree; ++k) {
        fp.push_back(fp.back() * f);
        gp.push_back(gp.back() * g);
    }

    // track the worst normalized deviation over all sub-checks
    double worst = -1.0;
    Element worst_lhs = f, worst_rhs = f;
    std::map<std::string, double> params{{"max_degree", double(max_degree)}};

    auto consider = [&](Element lhs, Element rhs, const char* kind, double a,
                        double b) {
        double dev = u_norm(lhs - rhs) / (1.0 + u_norm(rhs));
        if (dev > worst) {
            worst = dev;
            worst_lhs = std::move(lhs);
            worst_rhs = std::move(rhs);
            params["worst_is_mgf"] = kind[0] == 't' ? 1.0 : 0.0;
            params["worst_a"] = a;
            params["worst_b"] = b;
        }
    };

    for (int n = 1; n <= max_degree; ++n) {
        for (int m = 1; m <= max_degree; ++m) {
            Element lhs = T.apply(fp[n - 1] * gp[m - 1]);
            Element rhs = T.apply(fp[n - 1]) * T.apply(gp[m - 1]);
            consider(std::move(lhs), std::move(rhs), "nm", double(n), double(m));
        }
    }
    Element fg = f + g;
    for (double t : t_grid) {
        Element lhs = mgf(T, fg, t);
        Element rhs = mgf(T, f, t) * mgf(T, g, t);
        consider(std::move(lhs), std::move(rhs), "t", t, 0.0);
    }

    return make_equality_report("t_independent_elements", std::move(worst_lhs),
                                std::move(worst_rhs), tol, std::move(params));
}

Element BernoulliProcess::from_coin_values(int coin, double v0, double v1) const {
    if (coin < 1 || coin > coin_count) {
        throw IndexOutOfRange("coin " + std::to_string(coin) + " of " +
                              std::to_string(coin_count));
    }
    const auto& mask = coins[coin - 1].mask();
    std::vector<double> out(product_space->atom_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mask[i] ? v1 : v0;
    return Element(product_space, std::move(out));
}

BernoulliProcess make_bernoulli_process(const CondExpectation& base_T,
                                        const Element& p, int n,
                                        std::size_t atom_cap) {
    if (!same_space(base_T.space(), p.space())) throw SpaceMismatch();
    if (n < 1) throw ParameterDomain("coin count must be >= 1");
    if (!base_T.range_contains(p, 0.0)) throw NotInRange();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] > 0.0 && p[i] < 1.0)) throw ProbabilityOutOfRange(i, p[i]);
    }
    const std::size_t base_atoms = base_T.space()->atom_count();
    if (n >= 63 || base_atoms > (atom_cap >> n)) {
        throw ProductTooLarge(base_atoms, n, atom_cap);
    }
    const std::size_t patterns = std::size_t{1} << n;
    const std::size_t total = base_atoms * patterns;

    const auto& base_w = base_T.space()->weights();
    std::vector<double> weights(total);
    for (std::size_t a = 0; a < base_atoms; ++a) {
        const double pa = p[a];
        const double qa = 1.0 - pa;
        for (std::size_t pat = 0; pat < patterns; ++pat) {
            double w = base_w[a];
            for (int i = 0; i < n; ++i) w *= (pat >> i) & 1u ? pa : qa;
            weights[a * patterns + pat] = w;
        }
    }
    SpacePtr product = Space::make(std::move(weights));

    std::vector<std::vector<std::size_t>> lifted_blocks(base_T.block_count());
    for (std::size_t a = 0; a < base_atoms; ++a) {
        auto& blk = lifted_blocks[base_T.block_of(a)];
        for (std::size_t pat = 0; pat < patterns; ++pat) {
            blk.push_back(a * patterns + pat);
        }
    }
    CondExpectation lifted = CondExpectation::make(product, std::move(lifted_blocks));

    std::vector<BandProjection> coins;
    coins.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint8_t> mask(total);
        for (std::size_t idx = 0; idx < total; ++idx) {
            mask[idx] = (idx & (std::size_t{1} << i)) ? 1 : 0;
        }
        coins.emplace_back(product, std::move(mask));
    }

    std::vector<double> success(total);
    for (std::size_t a = 0; a < base_atoms; ++a) {
        for (std::size_t pat = 0; pat < patterns; ++pat) {
            success[a * patterns + pat] = p[a];
        }
    }
    return BernoulliProcess{base_T,           n,
                            product,          std::move(lifted),
                            std::move(coins), Element(product, std::move(success))};
}

Element partial_sum(const BernoulliProcess& proc, int n) {
    if (n < 1 || n > proc.coin_count) {
        throw IndexOutOfRange("partial sum over " + std::to_string(n) +
                              " coins of " + std::to_string(proc.coin_count));
    }
    const std::size_t total = proc.product_space->atom_count();
    const std::size_t low_mask = (std::size_t{1} << n) - 1;
    std::vector<double> out(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        out[idx] = double(std::popcount(idx & low_mask));
    }
    return Element(proc.product_space, std::move(out));
}

std::pair<Element, Element> independent_product_identity(
    const BernoulliProcess& proc, double lambda, int n) {
    if (!(lambda > 0.0)) throw NonPositiveLambda(lambda);
    if (n < 1 || n > proc.coin_count) {
        throw IndexOutOfRange("product over " + std::to_string(n) + " coins of " +
                              std::to_string(proc.coin_count));
    }
    Element prod = Element::unit(proc.product_space);
    for (int i = 1; i <= n; ++i) {
        prod = prod * exp_pointwise(lambda * proc.coins[i - 1].indicator());
    }
    Element lhs = proc.lifted.apply(prod);

    Element factor = Element::unit(proc.product_space) +
                     std::expm1(lambda) * proc.success;
    Element rhs = factor;
    for (int i = 1; i < n; ++i) rhs = rhs * factor;
    return {std::move(lhs), std::move(rhs)};
}

} // namespace riesz
