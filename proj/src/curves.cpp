#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include <json.hpp>

#include "riesz/calculus.hpp"
#include "riesz/inequalities.hpp"
#include "riesz/suite.hpp"

namespace riesz {

namespace {

// shortest round-trip decimal form, identical on every run
std::string fmt(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double max_atom(const Element& e) {
    double m = e[0];
    for (std::size_t i = 1; i < e.size(); ++i) m = std::max(m, e[i]);
    return m;
}

} // namespace

void emit_curves(const BernoulliProcess& proc, std::span<const double> t_grid,
                 std::ostream& out) {
    const int n = proc.coin_count;
    const double fn = u_norm(proc.success);
    Element S = partial_sum(proc, n);
    double min_p = proc.success[0];
    for (std::size_t i = 1; i < proc.success.size(); ++i) {
        min_p = std::min(min_p, proc.success[i]);
    }

    out << "t,tail,chernoff,bennett,hoeffding\n";
    for (double t : t_grid) {
        const double tail = max_atom(tail_element(proc.lifted, S, t));
        out << fmt(t) << ',' << fmt(tail) << ',';
        // the bound columns are for the same raw tail P(S_n > t): the
        // centered-sum bounds are evaluated at x = t - n ||f||_u, which
        // dominates the shift by the conditional mean on every block
        const double x = t - n * fn;
        if (t > n * fn) {
            const double chernoff = std::pow(n * std::exp(1.0) * fn / t, t) *
                                    std::exp(-double(n) * min_p);
            const double vnorm = n * fn; // v = sum T((P_i u)^2) = n f
            const double bennett = std::exp(-vnorm * bennett_h(x / vnorm));
            const double hoeffding = std::exp(-2.0 * x * x / n);
            out << fmt(chernoff) << ',' << fmt(bennett) << ',' << fmt(hoeffding);
        } else {
            out << ",,";
        }
        out << '\n';
    }
    if (!out) throw IoError("failed writing curve data");
}

BernoulliProcess process_from_spec_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigInvalid(std::string("process spec parse: ") + e.what());
    }
    try {
        auto weights = j.at("base_weights").get<std::vector<double>>();
        auto blocks = j.at("base_blocks").get<std::vector<std::vector<std::size_t>>>();
        auto p_values = j.at("p").get<std::vector<double>>();
        const int coins = j.at("coins").get<int>();
        SpacePtr space = Space::make(std::move(weights));
        CondExpectation T = CondExpectation::make(space, std::move(blocks));
        return make_bernoulli_process(T, Element(space, std::move(p_values)), coins);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigInvalid(std::string("process spec field: ") + e.what());
    }
}

} // namespace riesz
