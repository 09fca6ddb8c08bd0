#include <doctest.h>

#include <sstream>

#include "riesz/calculus.hpp"
#include "riesz/inequalities.hpp"
#include "riesz/suite.hpp"

using namespace riesz;

TEST_CASE("config validation") {
    SuiteConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    SUBCASE("negative tolerance is rejected") {
        cfg.tol = -1.0;
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
    SUBCASE("negative trial count is rejected") {
        cfg.trials = -1;
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
    SUBCASE("probability range must be a proper subinterval of (0,1)") {
        cfg.p_lo = 0.9;
        cfg.p_hi = 0.1;
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
        cfg.p_lo = 0.0;
        cfg.p_hi = 0.5;
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
    SUBCASE("product cap bounds the coin count") {
        cfg.max_coins = 20; // 8 * 2^20 > 2^22
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
    SUBCASE("grid size") {
        cfg.t_grid_size = 0;
        CHECK_THROWS_AS(cfg.validate(), ConfigInvalid);
    }
}

TEST_CASE("config json parsing") {
    SUBCASE("fields round-trip") {
        SuiteConfig cfg = config_from_json_text(
            R"({"seed": 7, "trials": 3, "max_base_blocks": 2, "max_coins": 5,
                "p_range": [0.2, 0.8], "tol": 1e-8, "t_grid_size": 4})");
        CHECK(cfg.seed == 7);
        CHECK(cfg.trials == 3);
        CHECK(cfg.max_base_blocks == 2);
        CHECK(cfg.max_coins == 5);
        CHECK(cfg.p_lo == 0.2);
        CHECK(cfg.p_hi == 0.8);
        CHECK(cfg.tol == 1e-8);
        CHECK(cfg.t_grid_size == 4);
    }
    SUBCASE("defaults survive a partial config") {
        SuiteConfig cfg = config_from_json_text(R"({"seed": 9})");
        CHECK(cfg.seed == 9);
        CHECK(cfg.trials == 100);
        CHECK(cfg.tol == 1e-9);
    }
    CHECK_THROWS_AS(config_from_json_text("not json"), ConfigInvalid);
    CHECK_THROWS_AS(config_from_json_text(R"({"sees": 7})"), ConfigInvalid);
    CHECK_THROWS_AS(config_from_json_text(R"({"p_range": [0.2]})"),
                    ConfigInvalid);
    CHECK_THROWS_AS(config_from_json_text(R"({"tol": -2.0})"), ConfigInvalid);
}

TEST_CASE("instance generation is a pure function of the stream") {
    SuiteConfig cfg;
    SUBCASE("same stream, bit-identical instance") {
        SplitMix64 a = SplitMix64::stream(42, "gen", 0);
        SplitMix64 b = SplitMix64::stream(42, "gen", 0);
        BernoulliProcess pa = gen_bernoulli(a, cfg);
        BernoulliProcess pb = gen_bernoulli(b, cfg);
        REQUIRE(pa.product_space->atom_count() == pb.product_space->atom_count());
        for (std::size_t i = 0; i < pa.product_space->atom_count(); ++i) {
            CHECK(pa.product_space->weight(i) == pb.product_space->weight(i));
        }
        CHECK(pa.coin_count == pb.coin_count);
    }
    SUBCASE("consecutive trials differ") {
        SplitMix64 a = SplitMix64::stream(42, "gen", 0);
        SplitMix64 b = SplitMix64::stream(42, "gen", 1);
        BernoulliProcess pa = gen_bernoulli(a, cfg);
        BernoulliProcess pb = gen_bernoulli(b, cfg);
        bool differs = pa.product_space->atom_count() !=
                       pb.product_space->atom_count();
        if (!differs) {
            for (std::size_t i = 0; i < pa.product_space->atom_count(); ++i) {
                differs |= pa.product_space->weight(i) !=
                           pb.product_space->weight(i);
            }
        }
        CHECK(differs);
    }
    SUBCASE("generated processes satisfy the construction invariants") {
        for (int trial = 0; trial < 20; ++trial) {
            SplitMix64 rng = SplitMix64::stream(43, "gen_inv", trial);
            BernoulliProcess proc = gen_bernoulli(rng, cfg);
            CHECK(proc.lifted.range_contains(proc.success, 0.0));
            for (int i = 1; i <= proc.coin_count; ++i) {
                CHECK(approx_element(
                    proc.lifted.apply(proc.coins[i - 1].indicator()),
                    proc.success, 1e-12));
            }
        }
    }
}

TEST_CASE("nudge_off_atoms") {
    auto base = Space::make({1.0});
    CondExpectation T = CondExpectation::make(base, {{0}});
    BernoulliProcess proc =
        make_bernoulli_process(T, Element::constant(base, 0.5), 2);
    Element S = partial_sum(proc, 2);
    CHECK(nudge_off_atoms(0.5, S) == 0.5);
    CHECK(nudge_off_atoms(1.0, S) == 1.0 + 1e-9);
    CHECK(nudge_off_atoms(2.0, S) == 2.0 + 1e-9);
}

TEST_CASE("suite runs deterministically") {
    SuiteConfig cfg;
    cfg.seed = 7;
    cfg.trials = 3;
    SuiteReport a = run_suite(cfg);
    SuiteReport b = run_suite(cfg);
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(a.all_passed());
    for (const auto& p : a.properties) {
        CHECK(p.passes + std::int64_t(p.failures.size()) == p.trials);
    }
}

TEST_CASE("zero trials produce an empty passing report") {
    SuiteConfig cfg;
    cfg.trials = 0;
    SuiteReport r = run_suite(cfg);
    CHECK(r.all_passed());
    CHECK(r.total_failures() == 0);
    for (const auto& p : r.properties) {
        CHECK(p.trials == 0);
        CHECK(p.passes == 0);
    }
}

TEST_CASE("property catalog lookups") {
    auto catalog = property_catalog();
    CHECK(catalog.size() >= 25);
    const PropertyInfo* info = find_property("chernoff_tail_bound");
    REQUIRE(info != nullptr);
    CHECK(info->formula.find("(n e ||f||/t)^t") != std::string_view::npos);
    CHECK(find_property("no_such_property") == nullptr);
}

TEST_CASE("emit_curves") {
    auto base = Space::make({1.0});
    CondExpectation T = CondExpectation::make(base, {{0}});
    BernoulliProcess proc =
        make_bernoulli_process(T, Element::constant(base, 0.25), 2);
    SUBCASE("byte-identical re-emission") {
        std::ostringstream a, b;
        const double grid[] = {0.6, 1.0, 1.7};
        emit_curves(proc, grid, a);
        emit_curves(proc, grid, b);
        CHECK(a.str() == b.str());
        CHECK(a.str().substr(0, 36) == "t,tail,chernoff,bennett,hoeffding\n0.");
    }
    SUBCASE("desk row at t = 1") {
        std::ostringstream out;
        const double grid[] = {1.0};
        emit_curves(proc, grid, out);
        std::string line = out.str().substr(out.str().find('\n') + 1);
        double t, tail, chernoff;
        char c;
        std::istringstream row(line);
        row >> t >> c >> tail >> c >> chernoff;
        CHECK(t == 1.0);
        CHECK(approx_scalar(tail, 0.0625, 1e-12));
        CHECK(approx_scalar(chernoff, 0.8243606353500641, 1e-12));
    }
    SUBCASE("bounds outside their domain are empty fields") {
        std::ostringstream out;
        const double grid[] = {0.3}; // below n ||f||_u = 0.5
        emit_curves(proc, grid, out);
        std::string body = out.str().substr(out.str().find('\n') + 1);
        // P(S > 0.3) = 1 - 0.75^2 = 0.4375; all three bounds empty
        CHECK(body == "0.3,0.4375,,,\n");
    }
    SUBCASE("tail column is zero beyond the sum's maximum") {
        std::ostringstream out;
        const double grid[] = {3.0};
        emit_curves(proc, grid, out);
        std::string body = out.str().substr(out.str().find('\n') + 1);
        CHECK(body.substr(0, 4) == "3,0,");
    }
}

TEST_CASE("process_from_spec_json") {
    SUBCASE("well-formed spec") {
        BernoulliProcess proc = process_from_spec_json(
            R"({"base_weights": [0.5, 0.5], "base_blocks": [[0], [1]],
                "p": [0.2, 0.7], "coins": 2})");
        CHECK(proc.coin_count == 2);
        CHECK(proc.product_space->atom_count() == 8);
    }
    CHECK_THROWS_AS(process_from_spec_json("nope"), ConfigInvalid);
    CHECK_THROWS_AS(process_from_spec_json(R"({"base_weights": [1.0]})"),
                    ConfigInvalid);
}

TEST_CASE("failure records carry a reproducer") {
    // a corrupted tolerance makes run_suite refuse to start
    SuiteConfig bad;
    bad.tol = -1.0;
    CHECK_THROWS_AS(run_suite(bad), ConfigInvalid);
}
