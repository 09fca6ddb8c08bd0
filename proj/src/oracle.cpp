#include "riesz/oracle.hpp"

#include <cmath>
#include <string>

namespace riesz::oracle {

namespace {

// local compensated accumulation; deliberately not shared with the library's
// internals so oracle and implementation cannot fail the same way
struct Kahan {
    double sum = 0.0;
    double c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

double binom_coeff(int n, int k) {
    // exact in double for the sizes used here (n well below 50)
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * double(n - k + j) / double(j);
    return std::round(r);
}

} // namespace

double binomial_tail(double p_block, int n, double t) {
    if (!(p_block > 0.0 && p_block < 1.0)) {
        throw ParameterDomain("binomial tail needs 0 < p < 1, got " +
                              std::to_string(p_block));
    }
    if (n < 1) throw ParameterDomain("binomial tail needs n >= 1");
    if (t < 0.0) return 1.0;
    if (t >= n) return 0.0;
    const int k_min = int(std::floor(t)) + 1; // strict: k > t
    Kahan acc;
    for (int k = n; k >= k_min; --k) {
        acc.add(binom_coeff(n, k) * std::pow(p_block, k) *
                std::pow(1.0 - p_block, n - k));
    }
    return acc.sum;
}

double classical_mgf(double p_block, int n, double lambda) {
    if (!(p_block > 0.0 && p_block < 1.0)) {
        throw ParameterDomain("classical mgf needs 0 < p < 1, got " +
                              std::to_string(p_block));
    }
    if (n < 1) throw ParameterDomain("classical mgf needs n >= 1");
    return std::pow(1.0 + p_block * std::expm1(lambda), n);
}

OracleResult enumerate_expectation(const SpacePtr& space,
                                   const std::vector<std::vector<std::size_t>>& blocks,
                                   const Element& f) {
    if (!same_space(space, f.space())) throw SpaceMismatch();
    const std::size_t n = space->atom_count();
    std::vector<int> seen(n, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw NotAPartition("block " + std::to_string(b) + " is empty");
        }
        for (std::size_t atom : blocks[b]) {
            if (atom >= n) throw NotAPartition("atom outside carrier");
            if (seen[atom]++) throw NotAPartition("overlapping blocks");
        }
    }
    for (std::size_t atom = 0; atom < n; ++atom) {
        if (!seen[atom]) throw NotAPartition("carrier not covered");
    }

    OracleResult out{std::vector<double>(blocks.size()), Element::zero(space)};
    std::vector<double> values(n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        Kahan wf, w;
        for (std::size_t atom : blocks[b]) { // ascending given order
            wf.add(space->weight(atom) * f[atom]);
            w.add(space->weight(atom));
        }
        const double avg = wf.sum / w.sum;
        out.per_block[b] = avg;
        for (std::size_t atom : blocks[b]) values[atom] = avg;
    }
    out.as_element = Element(space, std::move(values));
    return out;
}

} // namespace riesz::oracle
