// Acceptance suite: every criterion prints one pass/fail line; the process
// exits nonzero if any criterion fails. Invoke with the path to the CLI
// binary as argv[1] (needed by the determinism criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "riesz/calculus.hpp"
#include "riesz/inequalities.hpp"
#include "riesz/oracle.hpp"
#include "riesz/rng.hpp"
#include "riesz/suite.hpp"

using namespace riesz;

namespace {

int g_failures = 0;

void report(int number, const std::string& label, bool ok,
            const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
              << label << " (" << detail << ")\n";
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

std::string fmt_time(double s) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f s", s);
    return buf;
}

bool exact_equal(const Element& a, const Element& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == b[i])) return false;
    }
    return true;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 1. algebra and lattice laws: 1000 random elements, 1e-12, under 5 s
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        SplitMix64 rng = SplitMix64::stream(2027, "acceptance_algebra", trial);
        auto s = gen_space(rng, 64);
        Element f = gen_element(rng, s, -10, 10);
        Element g = gen_element(rng, s, -10, 10);
        Element h = gen_element(rng, s, -10, 10);
        Element u = Element::unit(s);
        bool ok = exact_equal(f * g, g * f);
        ok &= approx_element((f * g) * h, f * (g * h), 1e-12);
        ok &= approx_element(f * (g + h), f * g + f * h, 1e-12);
        ok &= exact_equal(f * u, f);
        ok &= exact_equal(pos_part(f) - neg_part(f), f);
        ok &= exact_equal(pos_part(f) + neg_part(f), abs(f));
        ok &= exact_equal(sup(f, g) + inf(f, g), f + g);
        ok &= u_norm(f + g) <= u_norm(f) + u_norm(g) + 1e-12;
        ok &= std::abs(u_norm(2.5 * f) - 2.5 * u_norm(f)) <=
              1e-12 * (1 + u_norm(f));
        ok &= u_norm(f * g) <= u_norm(f) * u_norm(g) * (1 + 1e-12) + 1e-12;
        if (!ok) ++failures;
    }
    const double elapsed = seconds_since(start);
    report(1, "algebra and lattice laws", failures == 0 && elapsed < 5.0,
           "1000 elements, " + std::to_string(failures) + " failures, " +
               fmt_time(elapsed) + " < 5 s");
}

// 2. exponential suite: 500 pairs with norms <= 5, under 10 s
void criterion_2() {
    const auto start = std::chrono::steady_clock::now();
    int failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
        SplitMix64 rng = SplitMix64::stream(2027, "acceptance_exp", trial);
        auto s = gen_space(rng, 64);
        Element x = gen_lattice_element(rng, s, 5.0);
        std::vector<double> yv = gen_lattice_element(rng, s, 5.0).values();
        for (std::size_t i = 0; i < yv.size(); ++i) {
            if (rng.next_unit() < 0.25) yv[i] = x[i];
        }
        Element y(s, std::move(yv));
        const double lambda = rng.next_in(0.1, 1.0);

        bool ok = approx_element(exp_series(x), exp_pointwise(x), 1e-12);
        ok &= approx_element(exp_series(y), exp_pointwise(y), 1e-12);
        ok &= approx_element(exp_pointwise(x + y),
                             exp_pointwise(x) * exp_pointwise(y), 1e-11);
        Element z = secant_z(x, y);
        ok &= approx_element(z * (x - y),
                             exp_pointwise(x) - exp_pointwise(y), 1e-10);
        for (std::size_t i = 0; i < z.size(); ++i) ok &= z[i] > 0.0;
        ok &= band_generated_by(pos_part(x - y), 1e-12).mask() ==
              band_generated_by(pos_part(exp_pointwise(lambda * x) -
                                         exp_pointwise(lambda * y)),
                                1e-12)
                  .mask();
        if (!ok) ++failures;
    }
    const double elapsed = seconds_since(start);
    report(2, "exponential suite", failures == 0 && elapsed < 10.0,
           "500 pairs, " + std::to_string(failures) + " failures, " +
               fmt_time(elapsed) + " < 10 s");
}

// 3. oracle equivalence on 200 processes: binomial tails at 1e-12,
//    classical mgf at 1e-10 for lambda in {0.25, 0.5, 1, 2}
void criterion_3() {
    SuiteConfig cfg;
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SplitMix64 rng = SplitMix64::stream(2027, "acceptance_bernoulli", trial);
        BernoulliProcess proc = gen_bernoulli(rng, cfg);
        const int n = proc.coin_count;
        Element S = partial_sum(proc, n);
        bool ok = true;
        std::vector<double> ts{-0.3, double(n) + 0.4};
        for (int j = 0; j < 6; ++j) ts.push_back(rng.next_in(0.0, double(n)));
        for (double t : ts) {
            t = nudge_off_atoms(t, S);
            Element tail = tail_element(proc.lifted, S, t);
            for (std::size_t b = 0; b < proc.lifted.block_count(); ++b) {
                const std::size_t atom = proc.lifted.blocks()[b][0];
                ok &= approx_scalar(
                    tail[atom],
                    oracle::binomial_tail(proc.success[atom], n, t), 1e-12);
            }
        }
        for (double lambda : {0.25, 0.5, 1.0, 2.0}) {
            Element m = proc.lifted.apply(exp_pointwise(lambda * S));
            auto [lhs, rhs] = independent_product_identity(proc, lambda, n);
            ok &= approx_element(lhs, rhs, 1e-10);
            for (std::size_t b = 0; b < proc.lifted.block_count(); ++b) {
                const std::size_t atom = proc.lifted.blocks()[b][0];
                const double classical =
                    oracle::classical_mgf(proc.success[atom], n, lambda);
                ok &= approx_scalar(m[atom], classical, 1e-10);
            }
        }
        if (!ok) ++failures;
    }
    report(3, "oracle equivalence", failures == 0,
           "200 processes, " + std::to_string(failures) + " failures");
}

// 4. chernoff bound on the same 200 processes, 16-point grids, tol 1e-9
void criterion_4() {
    SuiteConfig cfg;
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SplitMix64 rng = SplitMix64::stream(2027, "acceptance_bernoulli", trial);
        BernoulliProcess proc = gen_bernoulli(rng, cfg);
        const int n = proc.coin_count;
        const double fn = u_norm(proc.success);
        Element S = partial_sum(proc, n);
        bool ok = true;
        for (int j = 1; j <= 16; ++j) {
            double t = n * fn + j * (n - n * fn) / 16.0;
            t = nudge_off_atoms(t, S);
            ok &= chernoff_check(proc, n, t, 1e-9).holds;
        }
        if (!ok) ++failures;
    }
    // desk check: p = 0.25, n = 2, t = 1
    bool desk_ok = false;
    {
        auto base = Space::make({1.0});
        CondExpectation T = CondExpectation::make(base, {{0}});
        BernoulliProcess proc =
            make_bernoulli_process(T, Element::constant(base, 0.25), 2);
        BoundReport r = chernoff_check(proc, 2, 1.0, 1e-9);
        desk_ok = r.holds && approx_scalar(r.lhs[0], 0.0625, 1e-12) &&
                  approx_scalar(r.rhs[0], 0.8243606353500641, 1e-12);
    }
    report(4, "chernoff bound", failures == 0 && desk_ok,
           "200 processes x 16 t values, " + std::to_string(failures) +
               " failures; desk check tail 0.0625 vs bound 0.8243606 " +
               (desk_ok ? "ok" : "WRONG"));
}

// 5. bennett bound: 200 families, psi part and tail part, tol 1e-9
void criterion_5() {
    SuiteConfig cfg;
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SplitMix64 rng = SplitMix64::stream(2027, "acceptance_bennett", trial);
        BennettFamily fam = gen_bennett_family(rng, cfg);
        const CondExpectation& T = fam.proc.lifted;
        Element S = Element::zero(fam.proc.product_space);
        Element v = Element::zero(fam.proc.product_space);
        for (const Element& f : fam.fs) {
            S = S + (f - T.apply(f));
            v = v + T.apply(f * f);
        }
        const double vn = u_norm(v);
        bool ok = true;
        for (double t : {0.25, 0.5, 1.0, 2.0}) {
            ok &= bennett_check(T, fam.fs, t, vn, 1e-9).psi_bound.holds;
        }
        for (int j = 1; j <= 8; ++j) {
            double x = j * (3.0 * vn) / 8.0;
            x = nudge_off_atoms(x, S);
            BennettReports r = bennett_check(T, fam.fs, 1.0, x, 1e-9);
            ok &= r.tail_bound.has_value() && r.tail_bound->holds;
        }
        if (!ok) ++failures;
    }
    report(5, "bennett bound", failures == 0,
           "200 families, " + std::to_string(failures) + " failures");
}

// 6. hoeffding: 200 bounded families, certificates + sum tail, tol 1e-9
void criterion_6() {
    SuiteConfig cfg;
    const double lambda_grid[] = {-5, -2, -1, -0.5, 0.5, 1, 2, 5};
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SplitMix64 rng = SplitMix64::stream(2027, "acceptance_hoeffding", trial);
        BoundedFamily fam = gen_bounded_family(rng, cfg);
        const CondExpectation& T = fam.proc.lifted;
        bool ok = true;
        std::vector<Element> vs;
        double range_sum = 0.0;
        try {
            for (std::size_t i = 0; i < fam.xs.size(); ++i) {
                SubGaussianCert cert = bounded_subgaussian(
                    T, fam.xs[i], fam.bounds[i].first, fam.bounds[i].second,
                    lambda_grid, 1e-9);
                vs.push_back(cert.parameter);
                range_sum += fam.bounds[i].second - fam.bounds[i].first;
            }
        } catch (const Error&) {
            ok = false;
        }
        if (ok) {
            Element S = Element::zero(fam.proc.product_space);
            for (const Element& X : fam.xs) S = S + (X - T.apply(X));
            for (int j = 1; j <= 8; ++j) {
                double t = j * range_sum / 8.0;
                t = nudge_off_atoms(t, S);
                BoundReport bounded =
                    hoeffding_bounded_check(T, fam.xs, fam.bounds, t, 1e-9);
                BoundReport summed = hoeffding_sum_check(T, fam.xs, vs, t, 1e-9);
                ok &= bounded.holds && summed.holds;
                ok &= exact_equal(bounded.rhs, summed.rhs);
            }
        }
        if (!ok) ++failures;
    }
    // desk check: two fair coins in [0,1] at t = 1; the strict event
    // {S - 1 > 1} is empty (oracle value 0) and the attainable mass 0.25
    // just below t = 1 is likewise dominated by e^{-1}
    bool desk_ok = false;
    {
        auto base = Space::make({1.0});
        CondExpectation base_T = CondExpectation::make(base, {{0}});
        BernoulliProcess proc =
            make_bernoulli_process(base_T, Element::constant(base, 0.5), 2);
        std::vector<Element> xs{proc.coins[0].indicator(),
                                proc.coins[1].indicator()};
        std::vector<std::pair<double, double>> bounds{{0, 1}, {0, 1}};
        BoundReport at1 =
            hoeffding_bounded_check(proc.lifted, xs, bounds, 1.0, 1e-9);
        BoundReport at09 =
            hoeffding_bounded_check(proc.lifted, xs, bounds, 0.9, 1e-9);
        desk_ok = at1.holds && at1.lhs[0] == 0.0 &&
                  approx_scalar(at1.rhs[0], 0.36787944117144233, 1e-12) &&
                  at09.holds && approx_scalar(at09.lhs[0], 0.25, 1e-12) &&
                  approx_scalar(at09.lhs[0],
                                oracle::binomial_tail(0.5, 2, 1.9), 1e-12);
    }
    report(6, "hoeffding bound", failures == 0 && desk_ok,
           "200 families, " + std::to_string(failures) +
               " failures; desk check tail mass 0.25 vs bound 0.3678794 " +
               (desk_ok ? "ok" : "WRONG"));
}

// 7. mgf and moment factorization on 200 pairs, plus the dependence canary
void criterion_7() {
    SuiteConfig cfg;
    const double t_grid[] = {-2, -1, -0.5, 0.5, 1, 2};
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SplitMix64 rng = SplitMix64::stream(2027, "acceptance_pairs", trial);
        IndependentPair pair = gen_independent_pair(rng, cfg);
        if (!check_T_independent_elements(pair.proc.lifted, pair.f, pair.g, 4,
                                          t_grid, 1e-10)
                 .holds) {
            ++failures;
        }
    }
    bool canary = false;
    {
        auto two = Space::make({1.0, 1.0});
        CondExpectation T = CondExpectation::make(two, {{0, 1}});
        Element pu(two, {1.0, 0.0});
        BoundReport self = check_T_independent_elements(T, pu, pu, 1, t_grid,
                                                        1e-10);
        canary = !self.holds &&
                 T.apply(pu * pu)[0] == 0.5 &&
                 (T.apply(pu) * T.apply(pu))[0] == 0.25;
    }
    report(7, "independence factorization", failures == 0 && canary,
           "200 pairs, " + std::to_string(failures) +
               " failures; self-dependence (0.5 vs 0.25) " +
               (canary ? "detected" : "MISSED"));
}

// 8. determinism of the cli: byte-identical json, under 60 s
void criterion_8(const char* cli_path) {
    if (cli_path == nullptr) {
        report(8, "cli determinism", false, "no cli path supplied");
        return;
    }
    const auto start = std::chrono::steady_clock::now();
    const std::string base = std::string(cli_path);
    const std::string out1 = "acceptance_run1.json";
    const std::string out2 = "acceptance_run2.json";
    const std::string cmd1 = "\"" + base + "\" verify --seed 42 --trials 100 --json " +
                             out1 + " > /dev/null";
    const std::string cmd2 = "\"" + base + "\" verify --seed 42 --trials 100 --json " +
                             out2 + " > /dev/null";
    const int rc1 = std::system(cmd1.c_str());
    const int rc2 = std::system(cmd2.c_str());
    const std::string j1 = read_file(out1);
    const std::string j2 = read_file(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    const double elapsed = seconds_since(start);
    const bool ok = rc1 == 0 && rc2 == 0 && !j1.empty() && j1 == j2 &&
                    elapsed < 60.0;
    report(8, "cli determinism", ok,
           "two verify runs, exit codes " + std::to_string(rc1) + "/" +
               std::to_string(rc2) + ", " +
               (j1 == j2 && !j1.empty() ? "byte-identical json" :
                                          "JSON MISMATCH") +
               ", " + fmt_time(elapsed) + " < 60 s");
}

} // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8(argc > 1 ? argv[1] : nullptr);
    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
}
