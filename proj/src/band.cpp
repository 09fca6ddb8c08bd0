#include "riesz/band.hpp"

#include <cmath>

namespace riesz {

BandProjection::BandProjection(SpacePtr space, std::vector<std::uint8_t> support_mask)
    : space_(std::move(space)), mask_(std::move(support_mask)) {
    if (!space_) throw Error("band projection requires a carrier");
    if (mask_.size() != space_->atom_count()) {
        throw Error("support mask size does not match atom count");
    }
}

BandProjection BandProjection::full(const SpacePtr& space) {
    return BandProjection(space, std::vector<std::uint8_t>(space->atom_count(), 1));
}

BandProjection BandProjection::none(const SpacePtr& space) {
    return BandProjection(space, std::vector<std::uint8_t>(space->atom_count(), 0));
}

std::size_t BandProjection::support_size() const {
    std::size_t n = 0;
    for (auto m : mask_) n += m != 0;
    return n;
}

Element BandProjection::apply(const Element& f) const {
    if (!same_space(space_, f.space())) throw SpaceMismatch();
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mask_[i] ? f[i] : 0.0;
    return Element(space_, std::move(out));
}

Element BandProjection::indicator() const {
    std::vector<double> out(mask_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mask_[i] ? 1.0 : 0.0;
    return Element(space_, std::move(out));
}

BandProjection band_generated_by(const Element& g, double support_eps) {
    if (support_eps < 0.0) throw NegativeTolerance(support_eps);
    const double norm = u_norm(g);
    const double threshold = support_eps * (norm > 1.0 ? norm : 1.0);
    std::vector<std::uint8_t> mask(g.size());
    for (std::size_t i = 0; i < mask.size(); ++i) {
        mask[i] = std::abs(g[i]) > threshold ? 1 : 0;
    }
    return BandProjection(g.space(), std::move(mask));
}

} // namespace riesz
