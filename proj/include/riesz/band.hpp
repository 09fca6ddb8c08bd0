#ifndef RIESZ_BAND_HPP
#define RIESZ_BAND_HPP

#include <cstdint>
#include <vector>

#include "riesz/element.hpp"

namespace riesz {

/// A band projection on a finite carrier: multiplication by the indicator of
/// a support set. Idempotent and dominated by the identity on positives.
class BandProjection {
public:
    BandProjection(SpacePtr space, std::vector<std::uint8_t> support_mask);

    static BandProjection full(const SpacePtr& space);
    static BandProjection none(const SpacePtr& space);

    const SpacePtr& space() const { return space_; }
    const std::vector<std::uint8_t>& mask() const { return mask_; }
    bool contains(std::size_t atom) const { return mask_[atom] != 0; }
    std::size_t support_size() const;

    /// f on the support, 0 elsewhere.
    Element apply(const Element& f) const;

    /// Pu, the indicator Element of the support.
    Element indicator() const;

private:
    SpacePtr space_;
    std::vector<std::uint8_t> mask_;
};

/// The projection band generated by g: on a finite carrier, multiplication by
/// the indicator of {x : |g_x| > support_eps * max(1, ||g||_u)}. With
/// support_eps = 0 the support is exactly the nonzero set of g.
BandProjection band_generated_by(const Element& g, double support_eps = 0.0);

} // namespace riesz

#endif
