#include "riesz/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string>

#include <json.hpp>

#include "riesz/calculus.hpp"
#include "riesz/inequalities.hpp"
#include "riesz/oracle.hpp"

namespace riesz {

using nlohmann::json;

void SuiteConfig::validate() const {
    if (trials < 0) throw ConfigInvalid("trials must be >= 0");
    if (max_base_blocks < 1) throw ConfigInvalid("max_base_blocks must be >= 1");
    if (max_coins < 1) throw ConfigInvalid("max_coins must be >= 1");
    if (!(p_lo > 0.0 && p_hi < 1.0 && p_lo < p_hi)) {
        throw ConfigInvalid("p_range must satisfy 0 < lo < hi < 1");
    }
    if (!(tol > 0.0)) throw ConfigInvalid("tol must be > 0");
    if (t_grid_size < 1) throw ConfigInvalid("t_grid_size must be >= 1");
    if (max_coins > 19) {
        throw ConfigInvalid("max_coins too large: 8 * 2^max_coins exceeds the "
                            "2^22 product-space cap");
    }
}

// ---- seeded instance generation --------------------------------------------

SpacePtr gen_space(SplitMix64& rng, std::size_t max_atoms) {
    const std::size_t n = 1 + rng.next_below(max_atoms);
    std::vector<double> w(n);
    for (double& x : w) x = rng.next_in(0.1, 1.0);
    return Space::make(std::move(w));
}

std::vector<std::vector<std::size_t>> gen_partition(SplitMix64& rng,
                                                    std::size_t atoms,
                                                    std::size_t max_blocks) {
    const std::size_t nb = 1 + rng.next_below(std::min(max_blocks, atoms));
    std::vector<std::vector<std::size_t>> blocks(nb);
    for (std::size_t a = 0; a < atoms; ++a) {
        // pin the first nb atoms so every block is nonempty
        const std::size_t b = a < nb ? a : rng.next_below(nb);
        blocks[b].push_back(a);
    }
    return blocks;
}

Element gen_element(SplitMix64& rng, const SpacePtr& s, double lo, double hi) {
    std::vector<double> v(s->atom_count());
    for (double& x : v) x = rng.next_in(lo, hi);
    return Element(s, std::move(v));
}

Element gen_lattice_element(SplitMix64& rng, const SpacePtr& s, double bound) {
    const double step = bound * 0x1.0p-20;
    std::vector<double> v(s->atom_count());
    for (double& x : v) {
        const std::int64_t k =
            std::int64_t(rng.next_below((std::uint64_t{1} << 21) + 1)) -
            (std::int64_t{1} << 20);
        x = double(k) * step;
    }
    return Element(s, std::move(v));
}

BernoulliProcess gen_bernoulli_with_coins(SplitMix64& rng,
                                          const SuiteConfig& cfg, int coins) {
    SpacePtr space = gen_space(rng, 8);
    auto blocks = gen_partition(rng, space->atom_count(),
                                std::size_t(cfg.max_base_blocks));
    CondExpectation T = CondExpectation::make(space, std::move(blocks));
    std::vector<double> per_block(T.block_count());
    for (double& p : per_block) p = rng.next_in(cfg.p_lo, cfg.p_hi);
    std::vector<double> p(space->atom_count());
    for (std::size_t a = 0; a < p.size(); ++a) p[a] = per_block[T.block_of(a)];
    return make_bernoulli_process(T, Element(space, std::move(p)), coins);
}

BernoulliProcess gen_bernoulli(SplitMix64& rng, const SuiteConfig& cfg) {
    const int coins = 1 + int(rng.next_below(std::uint64_t(cfg.max_coins)));
    return gen_bernoulli_with_coins(rng, cfg, coins);
}

BennettFamily gen_bennett_family(SplitMix64& rng, const SuiteConfig& cfg) {
    const int k = 1 + int(rng.next_below(4));
    BennettFamily fam{gen_bernoulli_with_coins(rng, cfg, k), {}};
    fam.fs.reserve(k);
    for (int i = 1; i <= k; ++i) {
        double lo = 0.0, hi = 0.0;
        do {
            lo = rng.next_in(-2.0, 1.0);
            hi = rng.next_in(-2.0, 1.0);
        } while (std::max(std::abs(lo), std::abs(hi)) < 0.05);
        fam.fs.push_back(fam.proc.from_coin_values(i, lo, hi));
    }
    return fam;
}

BoundedFamily gen_bounded_family(SplitMix64& rng, const SuiteConfig& cfg) {
    const int k = 1 + int(rng.next_below(4));
    BoundedFamily fam{gen_bernoulli_with_coins(rng, cfg, k), {}, {}};
    for (int i = 1; i <= k; ++i) {
        double c1 = 0.0, c2 = 0.0;
        do {
            c1 = rng.next_in(-2.0, 2.0);
            c2 = rng.next_in(-2.0, 2.0);
        } while (std::abs(c1 - c2) < 0.1);
        const double a = std::min(c1, c2), b = std::max(c1, c2);
        // draws sequenced through locals: argument evaluation order is
        // unspecified and would break stream reproducibility
        const double v0 = rng.next_in(a, b);
        const double v1 = rng.next_in(a, b);
        fam.xs.push_back(fam.proc.from_coin_values(i, v0, v1));
        fam.bounds.emplace_back(a, b);
    }
    return fam;
}

IndependentPair gen_independent_pair(SplitMix64& rng, const SuiteConfig& cfg) {
    BernoulliProcess proc = gen_bernoulli_with_coins(rng, cfg, 2);
    const double f0 = rng.next_in(-1.0, 1.0);
    const double f1 = rng.next_in(-1.0, 1.0);
    const double g0 = rng.next_in(-1.0, 1.0);
    const double g1 = rng.next_in(-1.0, 1.0);
    Element f = proc.from_coin_values(1, f0, f1);
    Element g = proc.from_coin_values(2, g0, g1);
    return IndependentPair{std::move(proc), std::move(f), std::move(g)};
}

double nudge_off_atoms(double t, const Element& S) {
    double out = t;
    bool collided = true;
    while (collided) {
        collided = false;
        for (std::size_t i = 0; i < S.size(); ++i) {
            if (out == S[i]) {
                out += 1e-9;
                collided = true;
                break;
            }
        }
    }
    return out;
}

// ---- property implementations ----------------------------------------------

namespace {

struct TrialOutcome {
    bool passed = true;
    std::string detail;
    json data;
};

TrialOutcome fail(std::string detail, json data = json::object()) {
    return {false, std::move(detail), std::move(data)};
}

TrialOutcome pass() { return {}; }

json element_json(const Element& e) { return json(e.values()); }

json space_json(const SpacePtr& s) { return json{{"weights", s->weights()}}; }

json proc_json(const BernoulliProcess& proc) {
    const std::size_t patterns = std::size_t{1} << proc.coin_count;
    std::vector<double> p(proc.base.space()->atom_count());
    for (std::size_t a = 0; a < p.size(); ++a) p[a] = proc.success[a * patterns];
    return json{{"base_weights", proc.base.space()->weights()},
                {"base_blocks", proc.base.blocks()},
                {"p", p},
                {"coins", proc.coin_count}};
}

json diff_json(const Element& a, const Element& b) {
    std::size_t worst = 0;
    double m = -1.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::abs(a[i] - b[i]);
        if (d > m) {
            m = d;
            worst = i;
        }
    }
    return json{{"atom", worst}, {"lhs_atom", a[worst]}, {"rhs_atom", b[worst]},
                {"abs_diff", m}};
}

json report_json(const BoundReport& r) {
    std::size_t worst = 0;
    if (r.kind == CheckKind::dominance) {
        double m = r.rhs[0] - r.lhs[0];
        for (std::size_t i = 1; i < r.lhs.size(); ++i) {
            if (r.rhs[i] - r.lhs[i] < m) {
                m = r.rhs[i] - r.lhs[i];
                worst = i;
            }
        }
    } else {
        double m = -1.0;
        for (std::size_t i = 0; i < r.lhs.size(); ++i) {
            if (std::abs(r.lhs[i] - r.rhs[i]) > m) {
                m = std::abs(r.lhs[i] - r.rhs[i]);
                worst = i;
            }
        }
    }
    return json{{"check", r.name},   {"margin", r.margin},
                {"atom", worst},     {"lhs_atom", r.lhs[worst]},
                {"rhs_atom", r.rhs[worst]}, {"params", r.params}};
}

bool exact_equal(const Element& a, const Element& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) return false;
    }
    return true;
}

constexpr double kMgfGrid[] = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
constexpr double kBennettTGrid[] = {0.25, 0.5, 1.0, 2.0};
constexpr double kBoundedLambdaGrid[] = {-5.0, -2.0, -1.0, -0.5,
                                         0.5,  1.0,  2.0,  5.0};

// -- algebra / lattice core --

TrialOutcome prop_algebra_laws(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element f = gen_element(rng, s, -10.0, 10.0);
    Element g = gen_element(rng, s, -10.0, 10.0);
    Element h = gen_element(rng, s, -10.0, 10.0);
    Element u = Element::unit(s);
    json inst{{"space", space_json(s)}};
    if (!exact_equal(f * g, g * f)) {
        return fail("multiplication not commutative", inst);
    }
    if (!approx_element((f * g) * h, f * (g * h), 1e-12)) {
        return fail("multiplication not associative",
                    {{"instance", inst}, {"diff", diff_json((f * g) * h, f * (g * h))}});
    }
    if (!approx_element(f * (g + h), f * g + f * h, 1e-12)) {
        return fail("multiplication not distributive", inst);
    }
    if (!exact_equal(f * u, f)) return fail("unit law violated", inst);
    return pass();
}

TrialOutcome prop_lattice_laws(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element f = gen_element(rng, s, -10.0, 10.0);
    Element g = gen_element(rng, s, -10.0, 10.0);
    json inst{{"space", space_json(s)}, {"f", element_json(f)}};
    if (!exact_equal(pos_part(f) - neg_part(f), f)) {
        return fail("f != f+ - f-", inst);
    }
    if (!exact_equal(pos_part(f) + neg_part(f), abs(f))) {
        return fail("|f| != f+ + f-", inst);
    }
    if (!exact_equal(sup(f, g) + inf(f, g), f + g)) {
        return fail("sup + inf != f + g", inst);
    }
    if (!exact_equal(sup(f, f), f)) return fail("sup not idempotent", inst);
    return pass();
}

TrialOutcome prop_unit_norm_laws(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element f = gen_element(rng, s, -10.0, 10.0);
    Element g = gen_element(rng, s, -10.0, 10.0);
    const double c = rng.next_in(-4.0, 4.0);
    json inst{{"f", element_json(f)}, {"g", element_json(g)}, {"c", c}};
    if (!(u_norm(f + g) <= u_norm(f) + u_norm(g) + 1e-12 * (1 + u_norm(f) + u_norm(g)))) {
        return fail("triangle inequality violated", inst);
    }
    if (!approx_scalar(u_norm(c * f), std::abs(c) * u_norm(f), 1e-12)) {
        return fail("norm not absolutely homogeneous", inst);
    }
    if (!(u_norm(f * g) <= u_norm(f) * u_norm(g) + 1e-12 * (1 + u_norm(f) * u_norm(g)))) {
        return fail("norm not submultiplicative", inst);
    }
    const double n = u_norm(f);
    if (!order_leq(abs(f), n * Element::unit(s), 0.0)) {
        return fail("|f| <= ||f|| u fails at beta = ||f||", inst);
    }
    if (n > 0.0 && order_leq(abs(f), (n * (1.0 - 1e-6)) * Element::unit(s), 0.0)) {
        return fail("||f|| is not the least upper scalar", inst);
    }
    return pass();
}

TrialOutcome prop_band_projection_laws(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element g = gen_element(rng, s, -10.0, 10.0);
    // plant exact zeros so the support is a proper subset sometimes
    std::vector<double> gv = g.values();
    for (double& v : gv) {
        if (rng.next_unit() < 0.3) v = 0.0;
    }
    g = Element(s, std::move(gv));
    BandProjection band = band_generated_by(g, 0.0);
    json inst{{"g", element_json(g)}};
    if (!exact_equal(band.apply(g), g)) {
        return fail("band of g does not fix g", inst);
    }
    Element f = gen_element(rng, s, -10.0, 10.0);
    if (!exact_equal(band.apply(band.apply(f)), band.apply(f))) {
        return fail("projection not idempotent", inst);
    }
    Element bigger = f + abs(gen_element(rng, s, -5.0, 5.0));
    if (!order_leq(band.apply(f), band.apply(bigger), 0.0)) {
        return fail("projection not order preserving", inst);
    }
    // minimality: any projection fixing g carries the band's support
    std::vector<std::uint8_t> qmask(s->atom_count());
    for (std::size_t i = 0; i < qmask.size(); ++i) {
        qmask[i] = rng.next_unit() < 0.5 ? 1 : 0;
    }
    BandProjection q(s, std::move(qmask));
    if (exact_equal(q.apply(g), g)) {
        for (std::size_t i = 0; i < s->atom_count(); ++i) {
            if (band.contains(i) && !q.contains(i)) {
                return fail("projection fixes g but misses a support atom", inst);
            }
        }
    }
    return pass();
}

TrialOutcome prop_cond_expectation_axioms(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 16);
    auto blocks = gen_partition(rng, s->atom_count(), 5);
    CondExpectation T = CondExpectation::make(s, blocks);
    Element f = gen_element(rng, s, -10.0, 10.0);
    Element u = Element::unit(s);
    json inst{{"space", space_json(s)}, {"blocks", blocks}, {"f", element_json(f)}};
    if (!exact_equal(T.apply(u), u)) return fail("Tu != u", inst);
    Element tf = T.apply(f);
    if (!exact_equal(T.apply(tf), tf)) return fail("T not idempotent", inst);
    if (!T.range_contains(tf, 0.0)) return fail("Tf not block-constant", inst);
    Element fp = abs(f);
    Element tfp = T.apply(fp);
    if (!order_leq(Element::zero(s), tfp, 1e-12)) {
        return fail("T not positive", inst);
    }
    // strict positivity: blocks holding mass of fp get strictly positive averages
    for (std::size_t b = 0; b < T.block_count(); ++b) {
        bool has_mass = false;
        for (std::size_t atom : T.blocks()[b]) has_mass |= fp[atom] > 1e-9;
        if (has_mass && !(tfp[T.blocks()[b][0]] > 0.0)) {
            return fail("T not strictly positive", inst);
        }
    }
    // averaging: block-constant factors pass through
    Element g = T.apply(gen_element(rng, s, -5.0, 5.0));
    if (!approx_element(T.apply(g * f), g * T.apply(f), 1e-12)) {
        return fail("averaging property violated", inst);
    }
    return pass();
}

// -- exponential calculus --

TrialOutcome prop_exp_series_agreement(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element x = gen_element(rng, s, -5.0, 5.0);
    Element series = exp_series(x);
    Element pointwise = exp_pointwise(x);
    if (!approx_element(series, pointwise, 1e-12)) {
        return fail("series and pointwise exponential disagree",
                    {{"x", element_json(x)}, {"diff", diff_json(series, pointwise)}});
    }
    return pass();
}

TrialOutcome prop_exp_homomorphism(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element x = gen_element(rng, s, -5.0, 5.0);
    Element y = gen_element(rng, s, -5.0, 5.0);
    Element lhs = exp_pointwise(x + y);
    Element rhs = exp_pointwise(x) * exp_pointwise(y);
    if (!approx_element(lhs, rhs, 1e-11)) {
        return fail("exp(x+y) != exp(x)exp(y)",
                    {{"x", element_json(x)},
                     {"y", element_json(y)},
                     {"diff", diff_json(lhs, rhs)}});
    }
    return pass();
}

TrialOutcome prop_exp_positive_invertible(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element x = gen_element(rng, s, -5.0, 5.0);
    Element e = exp_pointwise(x);
    json inst{{"x", element_json(x)}};
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!(e[i] > 0.0)) return fail("exp not strictly positive", inst);
    }
    if (!approx_element(e * exp_pointwise(-x), Element::unit(s), 1e-12)) {
        return fail("exp(x)exp(-x) != u", inst);
    }
    if (!approx_element(invert(e), exp_pointwise(-x), 1e-12)) {
        return fail("inverse of exp(x) is not exp(-x)", inst);
    }
    return pass();
}

TrialOutcome prop_secant_factorization(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element x = gen_element(rng, s, -5.0, 5.0);
    std::vector<double> yv = gen_element(rng, s, -5.0, 5.0).values();
    for (std::size_t i = 0; i < yv.size(); ++i) {
        if (rng.next_unit() < 0.25) yv[i] = x[i]; // exercise the equal branch
    }
    Element y(s, std::move(yv));
    Element z = secant_z(x, y);
    json inst{{"x", element_json(x)}, {"y", element_json(y)}};
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!(z[i] > 0.0)) return fail("secant element not strictly positive", inst);
    }
    Element lhs = z * (x - y);
    Element rhs = exp_pointwise(x) - exp_pointwise(y);
    if (!approx_element(lhs, rhs, 1e-10)) {
        return fail("z (x - y) != exp(x) - exp(y)",
                    {{"instance", inst}, {"diff", diff_json(lhs, rhs)}});
    }
    return pass();
}

TrialOutcome prop_band_support_equality(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element x = gen_lattice_element(rng, s, 5.0);
    std::vector<double> yv = gen_lattice_element(rng, s, 5.0).values();
    for (std::size_t i = 0; i < yv.size(); ++i) {
        if (rng.next_unit() < 0.25) yv[i] = x[i];
    }
    Element y(s, std::move(yv));
    const double lambda = rng.next_in(0.1, 1.0);
    BandProjection lhs = band_generated_by(pos_part(x - y), 1e-12);
    BandProjection rhs = band_generated_by(
        pos_part(exp_pointwise(lambda * x) - exp_pointwise(lambda * y)), 1e-12);
    if (lhs.mask() != rhs.mask()) {
        return fail("band of (x-y)+ differs from band of (exp(Lx)-exp(Ly))+",
                    {{"x", element_json(x)}, {"y", element_json(y)},
                     {"lambda", lambda}});
    }
    return pass();
}

TrialOutcome prop_one_plus_x_below_exp(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element x = gen_element(rng, s, -5.0, 5.0);
    if (!order_leq(Element::unit(s) + x, exp_pointwise(x), 1e-12)) {
        return fail("u + x <= exp(x) violated", {{"x", element_json(x)}});
    }
    return pass();
}

TrialOutcome prop_log_laws(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element x = gen_element(rng, s, -5.0, 5.0);
    json inst{{"x", element_json(x)}};
    if (!approx_element(log_element(exp_pointwise(x)), x, 1e-12)) {
        return fail("log(exp(x)) != x", inst);
    }
    Element f = exp_pointwise(gen_element(rng, s, -3.0, 3.0));
    Element g = exp_pointwise(gen_element(rng, s, -3.0, 3.0));
    if (!approx_element(exp_pointwise(log_element(f)), f, 1e-12)) {
        return fail("exp(log(f)) != f", inst);
    }
    if (!approx_element(log_element(f * g), log_element(f) + log_element(g), 1e-12)) {
        return fail("log(fg) != log(f) + log(g)", inst);
    }
    return pass();
}

TrialOutcome prop_mgf_invertible(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 16);
    CondExpectation T = CondExpectation::make(s, gen_partition(rng, s->atom_count(), 5));
    Element f = gen_element(rng, s, -5.0, 5.0);
    Element m = T.apply(exp_pointwise(f));
    json inst{{"f", element_json(f)}};
    double fmin = f[0];
    for (std::size_t i = 1; i < f.size(); ++i) fmin = std::min(fmin, f[i]);
    if (!order_leq(Element::constant(s, std::exp(fmin)), m, 1e-12)) {
        return fail("T(exp f) not bounded below by exp(min f) u", inst);
    }
    if (!approx_element(m * invert(m), Element::unit(s), 1e-12)) {
        return fail("T(exp f) not invertible", inst);
    }
    return pass();
}

TrialOutcome prop_phi_quadratic_domination(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 64);
    Element f = gen_element(rng, s, -10.0, 1.0); // f <= u, no lower bound assumed
    const double t = rng.next_in(1e-3, 5.0);
    Element lhs = phi_map(t * f);
    Element rhs = (f * f) * phi_map(t * Element::unit(s));
    if (!order_leq(lhs, rhs, 1e-9)) {
        return fail("phi(t f) <= f^2 phi(t u) violated",
                    {{"f", element_json(f)}, {"t", t}, {"diff", diff_json(lhs, rhs)}});
    }
    return pass();
}

// -- conditional expectation, independence, coin products --

TrialOutcome prop_bernoulli_invariants(SplitMix64& rng, const SuiteConfig& cfg) {
    BernoulliProcess proc = gen_bernoulli(rng, cfg);
    json inst = proc_json(proc);
    if (!proc.lifted.range_contains(proc.success, 0.0)) {
        return fail("success element not block-constant", inst);
    }
    for (int i = 1; i <= proc.coin_count; ++i) {
        Element tpi = proc.lifted.apply(proc.coins[i - 1].indicator());
        if (!approx_element(tpi, proc.success, 1e-12)) {
            return fail("T(P_i u) != f for coin " + std::to_string(i), inst);
        }
    }
    // random nonempty coin subset A: T(prod_{i in A} P_i u) = f^{|A|}
    std::uint64_t mask = rng.next_below(std::uint64_t{1} << proc.coin_count);
    if (mask == 0) mask = 1;
    Element prod = Element::unit(proc.product_space);
    int k = 0;
    for (int i = 0; i < proc.coin_count; ++i) {
        if ((mask >> i) & 1u) {
            prod = prod * proc.coins[i].indicator();
            ++k;
        }
    }
    Element lhs = proc.lifted.apply(prod);
    Element rhs = Element::unit(proc.product_space);
    for (int j = 0; j < k; ++j) rhs = rhs * proc.success;
    if (!approx_element(lhs, rhs, 1e-12)) {
        return fail("T(prod P_i u) != f^k", {{"instance", inst}, {"k", k}});
    }
    return pass();
}

TrialOutcome prop_independent_product_identity(SplitMix64& rng,
                                               const SuiteConfig& cfg) {
    BernoulliProcess proc = gen_bernoulli(rng, cfg);
    const int n = proc.coin_count;
    const double lambda = rng.next_in(0.25, 2.0);
    auto [lhs, rhs] = independent_product_identity(proc, lambda, n);
    json inst = proc_json(proc);
    inst["lambda"] = lambda;
    if (!approx_element(lhs, rhs, 1e-10)) {
        return fail("product identity violated",
                    {{"instance", inst}, {"diff", diff_json(lhs, rhs)}});
    }
    // classical cross-check per base block, through both routes
    Element mgf_route = proc.lifted.apply(exp_pointwise(lambda * partial_sum(proc, n)));
    for (std::size_t b = 0; b < proc.lifted.block_count(); ++b) {
        const std::size_t atom = proc.lifted.blocks()[b][0];
        const double classical =
            oracle::classical_mgf(proc.success[atom], n, lambda);
        if (!approx_scalar(lhs[atom], classical, 1e-10) ||
            !approx_scalar(mgf_route[atom], classical, 1e-10)) {
            return fail("classical mgf oracle mismatch on block " + std::to_string(b),
                        {{"instance", inst},
                         {"lhs", lhs[atom]},
                         {"mgf_route", mgf_route[atom]},
                         {"classical", classical}});
        }
    }
    return pass();
}

TrialOutcome prop_projection_independence(SplitMix64& rng, const SuiteConfig& cfg) {
    const int coins = 2 + int(rng.next_below(std::uint64_t(std::max(1, cfg.max_coins - 1))));
    BernoulliProcess proc = gen_bernoulli_with_coins(rng, cfg, coins);
    const int i = 1 + int(rng.next_below(std::uint64_t(coins)));
    int j = 1 + int(rng.next_below(std::uint64_t(coins)));
    if (j == i) j = (i % coins) + 1;
    BoundReport r = check_T_independent_projections(proc.lifted, proc.coins[i - 1],
                                                    proc.coins[j - 1], 1e-10);
    if (!r.holds) {
        return fail("distinct coins reported dependent",
                    {{"instance", proc_json(proc)}, {"report", report_json(r)}});
    }
    // canary: a projection is generally not independent of itself
    SpacePtr two = Space::make({1.0, 1.0});
    CondExpectation T1 = CondExpectation::make(two, {{0, 1}});
    BandProjection p(two, {1, 0});
    BoundReport self = check_T_independent_projections(T1, p, p, 1e-10);
    if (self.holds) {
        return fail("self-dependence not detected (0.5 vs 0.25)",
                    {{"report", report_json(self)}});
    }
    return pass();
}

TrialOutcome prop_element_independence_moments(SplitMix64& rng,
                                               const SuiteConfig& cfg) {
    IndependentPair pair = gen_independent_pair(rng, cfg);
    BoundReport r = check_T_independent_elements(pair.proc.lifted, pair.f, pair.g,
                                                 4, kMgfGrid, 1e-10);
    if (!r.holds) {
        return fail("constructed independent pair failed the moment surrogate",
                    {{"instance", proc_json(pair.proc)}, {"report", report_json(r)}});
    }
    // canary: a coin paired with itself must fail at degree (1,1)
    SpacePtr two = Space::make({1.0, 1.0});
    CondExpectation T1 = CondExpectation::make(two, {{0, 1}});
    Element pu(two, {1.0, 0.0});
    BoundReport self = check_T_independent_elements(T1, pu, pu, 1, kMgfGrid, 1e-10);
    if (self.holds) {
        return fail("self-dependence of an element not detected",
                    {{"report", report_json(self)}});
    }
    return pass();
}

TrialOutcome prop_mgf_factorization(SplitMix64& rng, const SuiteConfig& cfg) {
    IndependentPair pair = gen_independent_pair(rng, cfg);
    const CondExpectation& T = pair.proc.lifted;
    for (double t : kMgfGrid) {
        Element lhs = mgf(T, pair.f + pair.g, t);
        Element rhs = mgf(T, pair.f, t) * mgf(T, pair.g, t);
        if (!approx_element(lhs, rhs, 1e-10)) {
            return fail("M_{f+g} != M_f M_g at t = " + std::to_string(t),
                        {{"instance", proc_json(pair.proc)},
                         {"diff", diff_json(lhs, rhs)}});
        }
    }
    return pass();
}

TrialOutcome prop_product_of_expectations(SplitMix64& rng, const SuiteConfig& cfg) {
    IndependentPair pair = gen_independent_pair(rng, cfg);
    const CondExpectation& T = pair.proc.lifted;
    Element lhs = T.apply(pair.f * pair.g);
    Element rhs = T.apply(pair.f) * T.apply(pair.g);
    if (!approx_element(lhs, rhs, 1e-10)) {
        return fail("T(fg) != T(f) T(g) for disjoint-coin elements",
                    {{"instance", proc_json(pair.proc)}, {"diff", diff_json(lhs, rhs)}});
    }
    return pass();
}

// -- oracle agreement --

TrialOutcome prop_tail_matches_binomial(SplitMix64& rng, const SuiteConfig& cfg) {
    BernoulliProcess proc = gen_bernoulli(rng, cfg);
    const int n = proc.coin_count;
    Element S = partial_sum(proc, n);
    std::vector<double> ts{-0.7, double(n) + 0.3};
    for (int j = 0; j < 6; ++j) ts.push_back(rng.next_in(0.0, double(n)));
    for (double t : ts) {
        t = nudge_off_atoms(t, S);
        Element tail = tail_element(proc.lifted, S, t);
        for (std::size_t b = 0; b < proc.lifted.block_count(); ++b) {
            const std::size_t atom = proc.lifted.blocks()[b][0];
            const double expected = oracle::binomial_tail(proc.success[atom], n, t);
            if (!approx_scalar(tail[atom], expected, 1e-12)) {
                return fail("tail element disagrees with binomial oracle",
                            {{"instance", proc_json(proc)},
                             {"t", t},
                             {"block", b},
                             {"tail", tail[atom]},
                             {"oracle", expected}});
            }
        }
    }
    return pass();
}

TrialOutcome prop_expectation_enumeration(SplitMix64& rng, const SuiteConfig&) {
    SpacePtr s = gen_space(rng, 16);
    auto blocks = gen_partition(rng, s->atom_count(), 5);
    CondExpectation T = CondExpectation::make(s, blocks);
    Element f = gen_element(rng, s, -10.0, 10.0);
    Element mine = T.apply(f);
    oracle::OracleResult theirs = oracle::enumerate_expectation(s, blocks, f);
    if (!approx_element(mine, theirs.as_element, 1e-13)) {
        return fail("block averages disagree with enumeration oracle",
                    {{"f", element_json(f)}, {"blocks", blocks},
                     {"diff", diff_json(mine, theirs.as_element)}});
    }
    return pass();
}

// -- concentration bounds --

TrialOutcome prop_chernoff_tail_bound(SplitMix64& rng, const SuiteConfig& cfg) {
    BernoulliProcess proc = gen_bernoulli(rng, cfg);
    const int n = proc.coin_count;
    const double fn = u_norm(proc.success);
    Element S = partial_sum(proc, n);
    const double lo = n * fn, hi = double(n);
    for (int j = 1; j <= cfg.t_grid_size; ++j) {
        double t = lo + j * (hi - lo) / cfg.t_grid_size;
        t = nudge_off_atoms(t, S);
        BoundReport r = chernoff_check(proc, n, t, cfg.tol);
        if (!r.holds) {
            return fail("chernoff bound violated",
                        {{"instance", proc_json(proc)}, {"report", report_json(r)}});
        }
        // proof chain: tail <= intermediate <= final bound
        Element inter = chernoff_intermediate(proc, n, t);
        if (!order_leq(r.lhs, inter, cfg.tol) || !order_leq(inter, r.rhs, cfg.tol)) {
            return fail("chernoff proof chain broken",
                        {{"instance", proc_json(proc)}, {"t", t}});
        }
    }
    return pass();
}

TrialOutcome prop_bennett_psi_bound(SplitMix64& rng, const SuiteConfig& cfg) {
    BennettFamily fam = gen_bennett_family(rng, cfg);
    const CondExpectation& T = fam.proc.lifted;
    for (double t : kBennettTGrid) {
        BennettReports r = bennett_check(T, fam.fs, t, 1.0, cfg.tol);
        if (!r.psi_bound.holds) {
            return fail("psi_S(t) <= (e^t - t - 1) v violated",
                        {{"instance", proc_json(fam.proc)},
                         {"report", report_json(r.psi_bound)}});
        }
    }
    return pass();
}

TrialOutcome prop_bennett_tail_bound(SplitMix64& rng, const SuiteConfig& cfg) {
    BennettFamily fam = gen_bennett_family(rng, cfg);
    const CondExpectation& T = fam.proc.lifted;
    Element S = Element::zero(fam.proc.product_space);
    Element v = Element::zero(fam.proc.product_space);
    for (const Element& f : fam.fs) {
        S = S + (f - T.apply(f));
        v = v + T.apply(f * f);
    }
    const double vn = u_norm(v);
    for (int j = 1; j <= 8; ++j) {
        double x = j * (3.0 * vn) / 8.0;
        x = nudge_off_atoms(x, S);
        BennettReports r = bennett_check(T, fam.fs, 1.0, x, cfg.tol);
        if (!r.tail_bound) {
            return fail("variance element unexpectedly not invertible",
                        {{"instance", proc_json(fam.proc)}});
        }
        if (!r.tail_bound->holds) {
            return fail("bennett tail bound violated",
                        {{"instance", proc_json(fam.proc)},
                         {"report", report_json(*r.tail_bound)}});
        }
    }
    return pass();
}

TrialOutcome prop_subgaussian_bounded(SplitMix64& rng, const SuiteConfig& cfg) {
    BoundedFamily fam = gen_bounded_family(rng, cfg);
    const CondExpectation& T = fam.proc.lifted;
    for (std::size_t i = 0; i < fam.xs.size(); ++i) {
        try {
            bounded_subgaussian(T, fam.xs[i], fam.bounds[i].first,
                                fam.bounds[i].second, kBoundedLambdaGrid, cfg.tol);
        } catch (const NotSubGaussianOnGrid& e) {
            return fail("bounded element failed its certificate at lambda = " +
                            std::to_string(e.lambda),
                        {{"instance", proc_json(fam.proc)},
                         {"a", fam.bounds[i].first},
                         {"b", fam.bounds[i].second}});
        }
    }
    return pass();
}

TrialOutcome prop_subgaussian_tail(SplitMix64& rng, const SuiteConfig& cfg) {
    BoundedFamily fam = gen_bounded_family(rng, cfg);
    const CondExpectation& T = fam.proc.lifted;
    const auto [a, b] = fam.bounds[0];
    SubGaussianCert cert =
        bounded_subgaussian(T, fam.xs[0], a, b, kBoundedLambdaGrid, cfg.tol);
    Element Y = fam.xs[0] - T.apply(fam.xs[0]);
    for (int j = 1; j <= 8; ++j) {
        double t = j * 1.5 * (b - a) / 8.0;
        t = nudge_off_atoms(t, Y);
        BoundReport r = subgaussian_tail_check(cert, T, t, cfg.tol);
        if (!r.holds) {
            return fail("sub-gaussian tail bound violated",
                        {{"instance", proc_json(fam.proc)},
                         {"report", report_json(r)}});
        }
    }
    return pass();
}

TrialOutcome prop_hoeffding_sum_tail(SplitMix64& rng, const SuiteConfig& cfg) {
    BoundedFamily fam = gen_bounded_family(rng, cfg);
    const CondExpectation& T = fam.proc.lifted;
    std::vector<Element> vs;
    double range_sum = 0.0;
    for (std::size_t i = 0; i < fam.xs.size(); ++i) {
        const auto [a, b] = fam.bounds[i];
        bounded_subgaussian(T, fam.xs[i], a, b, kBoundedLambdaGrid, cfg.tol);
        vs.push_back(Element::constant(fam.proc.product_space,
                                       (b - a) * (b - a) / 4.0));
        range_sum += b - a;
    }
    Element S = Element::zero(fam.proc.product_space);
    for (const Element& X : fam.xs) S = S + (X - T.apply(X));
    for (int j = 1; j <= 8; ++j) {
        double t = j * range_sum / 8.0;
        t = nudge_off_atoms(t, S);
        BoundReport r = hoeffding_sum_check(T, fam.xs, vs, t, cfg.tol);
        if (!r.holds) {
            return fail("hoeffding sum tail bound violated",
                        {{"instance", proc_json(fam.proc)},
                         {"report", report_json(r)}});
        }
    }
    return pass();
}

TrialOutcome prop_hoeffding_bounded_tail(SplitMix64& rng, const SuiteConfig& cfg) {
    BoundedFamily fam = gen_bounded_family(rng, cfg);
    const CondExpectation& T = fam.proc.lifted;
    std::vector<Element> vs;
    double range_sum = 0.0;
    for (const auto& [a, b] : fam.bounds) {
        vs.push_back(Element::constant(fam.proc.product_space,
                                       (b - a) * (b - a) / 4.0));
        range_sum += b - a;
    }
    Element S = Element::zero(fam.proc.product_space);
    for (const Element& X : fam.xs) S = S + (X - T.apply(X));
    for (int j = 1; j <= 8; ++j) {
        double t = j * range_sum / 8.0;
        t = nudge_off_atoms(t, S);
        BoundReport r = hoeffding_bounded_check(T, fam.xs, fam.bounds, t, cfg.tol);
        if (!r.holds) {
            return fail("hoeffding bounded tail bound violated",
                        {{"instance", proc_json(fam.proc)},
                         {"report", report_json(r)}});
        }
        // the two right-hand-side forms must agree bit for bit
        BoundReport sum_form = hoeffding_sum_check(T, fam.xs, vs, t, cfg.tol);
        if (!exact_equal(r.rhs, sum_form.rhs)) {
            return fail("bounded and sum right-hand sides differ",
                        {{"instance", proc_json(fam.proc)}, {"t", t}});
        }
    }
    return pass();
}

struct PropertyDef {
    const char* name;
    const char* formula;
    const char* description;
    TrialOutcome (*fn)(SplitMix64&, const SuiteConfig&);
};

const PropertyDef kCatalog[] = {
    {"algebra_laws", "fg = gf, (fg)h = f(gh), f(g+h) = fg+fh, fu = f",
     "f-algebra laws on random elements, 1e-12 relative atomwise",
     prop_algebra_laws},
    {"lattice_laws", "f = f+ - f-, |f| = f+ + f-, sup+inf = f+g",
     "lattice identities hold exactly atom by atom", prop_lattice_laws},
    {"unit_norm_laws",
     "||f+g|| <= ||f||+||g||, ||cf|| = |c| ||f||, ||fg|| <= ||f|| ||g||",
     "unit-norm axioms plus least-upper-scalar characterization",
     prop_unit_norm_laws},
    {"band_projection_laws", "P(Pf) = Pf, Pg = g on band(g), minimality",
     "band generated by g is the smallest projection fixing g",
     prop_band_projection_laws},
    {"cond_expectation_axioms", "Tu = u, TT = T, T >= 0 strictly, T(gf) = g Tf",
     "partition conditional expectations satisfy the operator axioms",
     prop_cond_expectation_axioms},
    {"exp_series_pointwise_agreement", "sum x^k/k! = exp(x)",
     "truncated power series matches the pointwise exponential, 1e-12",
     prop_exp_series_agreement},
    {"exp_homomorphism", "exp(x+y) = exp(x) exp(y)",
     "exponential is multiplicative on random pairs with norm <= 5, 1e-11",
     prop_exp_homomorphism},
    {"exp_positivity_invertibility", "exp(x) > 0, exp(x) exp(-x) = u",
     "exponentials are strictly positive with inverse exp(-x), 1e-12",
     prop_exp_positive_invertible},
    {"secant_factorization", "exp(x) - exp(y) = z (x - y), z > 0 invertible",
     "difference of exponentials factors through a positive secant, 1e-10",
     prop_secant_factorization},
    {"band_support_equality",
     "band((x-y)+) = band((exp(Lx)-exp(Ly))+) for L > 0",
     "positive-part bands are invariant under the exponential, exact supports",
     prop_band_support_equality},
    {"one_plus_x_below_exp", "u + x <= exp(x)",
     "first-order lower bound on the exponential, 1e-12",
     prop_one_plus_x_below_exp},
    {"log_laws", "log(xy) = log x + log y, log(exp x) = x, exp(log f) = f",
     "logarithm laws on positive invertible elements, 1e-12", prop_log_laws},
    {"mgf_invertible", "T(exp f) >= exp(min f) u and is invertible",
     "conditional expectations of exponentials stay strictly positive",
     prop_mgf_invertible},
    {"phi_quadratic_domination", "phi(t f) <= f^2 phi(t u) for f <= u, t > 0",
     "quadratic domination of exp(f)-f-u below the unit, 1e-9",
     prop_phi_quadratic_domination},
    {"bernoulli_invariants", "T(P_i u) = f, T(prod_{i in A} P_i u) = f^|A|",
     "product-measure coin construction delivers its defining identities",
     prop_bernoulli_invariants},
    {"independent_product_identity",
     "T prod exp(L P_i u) = (u + (e^L - 1) f)^n",
     "independent coin products against the closed form and the classical mgf",
     prop_independent_product_identity},
    {"projection_independence", "T(Pu Qu) = T(Pu) T(Qu) for distinct coins",
     "distinct coins pass the projection-independence identity; a projection "
     "paired with itself fails it",
     prop_projection_independence},
    {"element_independence_moments",
     "T(f^n g^m) = T(f^n) T(g^m), 1 <= n,m <= 4",
     "moment-factorization surrogate on constructed independent pairs",
     prop_element_independence_moments},
    {"mgf_factorization", "M_{f+g}(t) = M_f(t) M_g(t)",
     "mgf of an independent sum factors on the t grid {+-2,+-1,+-0.5}, 1e-10",
     prop_mgf_factorization},
    {"product_of_expectations", "T(fg) = T(f) T(g)",
     "expectations multiply across disjoint coin coordinates, 1e-10",
     prop_product_of_expectations},
    {"tail_matches_binomial", "T P_{(S_n - t u)^+} u = P(Bin(n, p) > t) per block",
     "lattice tail element equals the classical binomial tail, 1e-12",
     prop_tail_matches_binomial},
    {"expectation_enumeration", "T f = direct weighted block averages",
     "operator route agrees with the enumeration oracle, 1e-13",
     prop_expectation_enumeration},
    {"chernoff_tail_bound",
     "T P_{(S_n - t u)^+} u <= (n e ||f||/t)^t exp(-n f), t > n ||f||",
     "multiplicative tail bound dominates the exact tail on a 16-point grid",
     prop_chernoff_tail_bound},
    {"bennett_psi_bound", "log T(exp(t S)) <= (e^t - t - 1) v",
     "cumulant bound for sums of independent f_i <= u at t in {0.25,0.5,1,2}",
     prop_bennett_psi_bound},
    {"bennett_tail_bound",
     "T P_{(S - x u)^+} u <= exp(-||v|| h(x/||v||)), h(a) = (1+a)log(1+a) - a",
     "variance-sensitive tail bound on an 8-point grid in (0, 3||v||]",
     prop_bennett_tail_bound},
    {"subgaussian_bounded_parameter",
     "psi_{X-TX}(L) <= L^2 (b-a)^2 / 8 for X in [au, bu]",
     "bounded elements certify as sub-Gaussian with parameter ((b-a)^2/4) u",
     prop_subgaussian_bounded},
    {"subgaussian_tail_bound",
     "T P_{(X - TX - t u)^+} u <= exp(-t^2 / (2 ||v||)) u",
     "single-element sub-Gaussian tail bound on an 8-point t grid",
     prop_subgaussian_tail},
    {"hoeffding_sum_tail_bound",
     "T P_{(sum(X_i - TX_i) - t u)^+} u <= exp(-t^2 / (2 sum ||v_i||)) u",
     "sub-Gaussian sum tail bound for certified independent families",
     prop_hoeffding_sum_tail},
    {"hoeffding_bounded_tail_bound",
     "T P_{(sum(X_i - TX_i) - t u)^+} u <= exp(-2 t^2 / sum (b_i - a_i)^2) u",
     "bounded-range tail bound; right-hand side identical to the sum form",
     prop_hoeffding_bounded_tail},
};

} // namespace

// ---- suite driver ------------------------------------------------------------

bool SuiteReport::all_passed() const {
    for (const auto& p : properties) {
        if (!p.failures.empty()) return false;
    }
    return true;
}

std::int64_t SuiteReport::total_failures() const {
    std::int64_t n = 0;
    for (const auto& p : properties) n += std::int64_t(p.failures.size());
    return n;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.config = cfg;
    for (const PropertyDef& def : kCatalog) {
        PropertyResult res;
        res.name = def.name;
        res.trials = cfg.trials;
        for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
            SplitMix64 rng = SplitMix64::stream(cfg.seed, def.name,
                                                std::uint64_t(trial));
            TrialOutcome out;
            try {
                out = def.fn(rng, cfg);
            } catch (const Error& e) {
                out = fail(std::string("exception: ") + e.what());
            }
            if (out.passed) {
                ++res.passes;
            } else {
                res.failures.push_back(
                    {trial, std::move(out.detail), out.data.dump()});
            }
        }
        report.properties.push_back(std::move(res));
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

namespace {

json config_json(const SuiteConfig& cfg) {
    return json{{"seed", cfg.seed},
                {"trials", cfg.trials},
                {"max_base_blocks", cfg.max_base_blocks},
                {"max_coins", cfg.max_coins},
                {"p_range", {cfg.p_lo, cfg.p_hi}},
                {"tol", cfg.tol},
                {"t_grid_size", cfg.t_grid_size}};
}

} // namespace

std::string report_to_json(const SuiteReport& report) {
    json j;
    j["config"] = config_json(report.config);
    j["all_passed"] = report.all_passed();
    json props = json::array();
    for (const auto& p : report.properties) {
        json failures = json::array();
        for (const auto& f : p.failures) {
            json data = f.data_json.empty() ? json::object()
                                            : json::parse(f.data_json);
            failures.push_back(
                {{"trial", f.trial}, {"detail", f.detail}, {"data", data}});
        }
        props.push_back({{"name", p.name},
                         {"trials", p.trials},
                         {"passes", p.passes},
                         {"failures", failures}});
    }
    j["properties"] = props;
    // wall time deliberately omitted: serialized reports are byte-reproducible
    return j.dump(2) + "\n";
}

SuiteConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigInvalid(std::string("json parse: ") + e.what());
    }
    if (!j.is_object()) throw ConfigInvalid("config must be a json object");
    SuiteConfig cfg;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "seed") cfg.seed = value.get<std::uint64_t>();
            else if (key == "trials") cfg.trials = value.get<std::int64_t>();
            else if (key == "max_base_blocks") cfg.max_base_blocks = value.get<int>();
            else if (key == "max_coins") cfg.max_coins = value.get<int>();
            else if (key == "p_range") {
                if (!value.is_array() || value.size() != 2) {
                    throw ConfigInvalid("p_range must be [lo, hi]");
                }
                cfg.p_lo = value[0].get<double>();
                cfg.p_hi = value[1].get<double>();
            } else if (key == "tol") cfg.tol = value.get<double>();
            else if (key == "t_grid_size") cfg.t_grid_size = value.get<int>();
            else throw ConfigInvalid("unknown config key: " + key);
        }
    } catch (const json::exception& e) {
        throw ConfigInvalid(std::string("config field: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

std::vector<PropertyInfo> property_catalog() {
    std::vector<PropertyInfo> out;
    out.reserve(std::size(kCatalog));
    for (const PropertyDef& def : kCatalog) {
        out.push_back({def.name, def.formula, def.description});
    }
    return out;
}

const PropertyInfo* find_property(std::string_view name) {
    static std::vector<PropertyInfo> catalog = property_catalog();
    for (const PropertyInfo& info : catalog) {
        if (info.name == name) return &info;
    }
    return nullptr;
}

} // namespace riesz
