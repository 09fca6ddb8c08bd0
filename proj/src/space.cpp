#include "riesz/space.hpp"

#include <cmath>

#include "accum.hpp"

namespace riesz {

SpacePtr Space::make(std::vector<double> weights, std::vector<std::string> labels) {
    if (weights.empty()) throw EmptyCarrier();
    detail::Neumaier total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        double w = weights[i];
        if (!(w > 0.0) || !std::isfinite(w)) throw NonPositiveWeight(i, w);
        total.add(w);
    }
    const double sum = total.value();
    for (double& w : weights) w /= sum;
    if (!labels.empty() && labels.size() != weights.size()) {
        throw Error("label count does not match atom count");
    }
    return SpacePtr(new Space(std::move(weights), std::move(labels)));
}

} // namespace riesz
