#ifndef RIESZ_SUITE_HPP
#define RIESZ_SUITE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riesz/expectation.hpp"
#include "riesz/rng.hpp"

namespace riesz {

/// Knobs for the randomized verification suite.
struct SuiteConfig {
    std::uint64_t seed = 0;
    std::int64_t trials = 100;
    int max_base_blocks = 4;
    int max_coins = 12;
    double p_lo = 0.05;
    double p_hi = 0.95;
    double tol = 1e-9;
    int t_grid_size = 16;

    void validate() const; // throws ConfigInvalid
};

/// Minimal reproducer for one failed trial: the trial index locates the rng
/// stream, data_json carries the instance descriptor, parameter values and
/// the violating atom with both sides' values.
struct FailureRecord {
    std::int64_t trial = 0;
    std::string detail;
    std::string data_json;
};

struct PropertyResult {
    std::string name;
    std::int64_t trials = 0;
    std::int64_t passes = 0;
    std::vector<FailureRecord> failures;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<PropertyResult> properties;
    double wall_seconds = 0.0; // console summary only, never serialized

    bool all_passed() const;
    std::int64_t total_failures() const;
};

/// Runs every property `trials` times on fresh seeded instances. The rng
/// stream of a trial depends only on (seed, property name, trial index).
SuiteReport run_suite(const SuiteConfig& cfg);

/// Deterministic serialization: UTF-8, keys sorted, shortest round-trip
/// floats. Identical configs produce byte-identical output.
std::string report_to_json(const SuiteReport& report);

SuiteConfig config_from_json_text(const std::string& text);

struct PropertyInfo {
    std::string_view name;
    std::string_view formula;
    std::string_view description;
};

std::vector<PropertyInfo> property_catalog();
const PropertyInfo* find_property(std::string_view name);

// ---- seeded instance generation ------------------------------------------

SpacePtr gen_space(SplitMix64& rng, std::size_t max_atoms);

std::vector<std::vector<std::size_t>> gen_partition(SplitMix64& rng,
                                                    std::size_t atoms,
                                                    std::size_t max_blocks);

/// Uniform atom values in [lo, hi).
Element gen_element(SplitMix64& rng, const SpacePtr& s, double lo, double hi);

/// Atom values on the exact grid {k * bound * 2^-20}, so differences between
/// two such elements are exactly zero or at least one grid step. Used where
/// support-set comparisons must be exact.
Element gen_lattice_element(SplitMix64& rng, const SpacePtr& s, double bound);

BernoulliProcess gen_bernoulli(SplitMix64& rng, const SuiteConfig& cfg);
BernoulliProcess gen_bernoulli_with_coins(SplitMix64& rng,
                                          const SuiteConfig& cfg, int coins);

struct BennettFamily {
    BernoulliProcess proc;
    std::vector<Element> fs; // f_i <= u, each on its own coin
};
BennettFamily gen_bennett_family(SplitMix64& rng, const SuiteConfig& cfg);

struct BoundedFamily {
    BernoulliProcess proc;
    std::vector<Element> xs;
    std::vector<std::pair<double, double>> bounds; // [a_i, b_i] within [-2, 2]
};
BoundedFamily gen_bounded_family(SplitMix64& rng, const SuiteConfig& cfg);

struct IndependentPair {
    BernoulliProcess proc;
    Element f;
    Element g; // on a different coin than f
};
IndependentPair gen_independent_pair(SplitMix64& rng, const SuiteConfig& cfg);

/// Pushes t off exactly attainable atoms of S by +1e-9, leaving it untouched
/// otherwise, so strict-event evaluation never sits on a knife edge.
double nudge_off_atoms(double t, const Element& S);

// ---- curves ----------------------------------------------------------------

/// CSV with header t,tail,chernoff,bennett,hoeffding; one row per grid point.
/// Columns are the max atom of each element; bounds outside their parameter
/// domain are emitted as empty fields. Deterministic byte-for-byte.
void emit_curves(const BernoulliProcess& proc, std::span<const double> t_grid,
                 std::ostream& out);

/// Parses a process description: {"base_weights": [...], "base_blocks":
/// [[...]], "p": [per-atom values], "coins": n}.
BernoulliProcess process_from_spec_json(const std::string& text);

} // namespace riesz

#endif
