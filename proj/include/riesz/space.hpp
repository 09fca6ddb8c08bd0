#ifndef RIESZ_SPACE_HPP
#define RIESZ_SPACE_HPP

#include <memory>
#include <string>
#include <vector>

#include "riesz/errors.hpp"

namespace riesz {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// Finite carrier with strictly positive probability weights.
///
/// Hosts the Riesz space of all real functions on its atoms; the all-ones
/// function is the strong unit. Identity of the carrier is pointer identity:
/// two Elements interoperate only if they share the same Space object.
class Space {
public:
    /// Builds a Space from raw positive weights, normalized to sum to 1
    /// (atom order preserved). Labels are optional and purely cosmetic.
    static SpacePtr make(std::vector<double> weights,
                         std::vector<std::string> labels = {});

    std::size_t atom_count() const { return weights_.size(); }
    const std::vector<double>& weights() const { return weights_; }
    double weight(std::size_t atom) const { return weights_[atom]; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    Space(std::vector<double> w, std::vector<std::string> l)
        : weights_(std::move(w)), labels_(std::move(l)) {}

    std::vector<double> weights_;
    std::vector<std::string> labels_;
};

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
    return a.get() == b.get();
}

} // namespace riesz

#endif
