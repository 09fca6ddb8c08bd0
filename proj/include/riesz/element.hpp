#ifndef RIESZ_ELEMENT_HPP
#define RIESZ_ELEMENT_HPP

#include <cstddef>
#include <vector>

#include "riesz/space.hpp"

namespace riesz {

/// A real-valued function on the atoms of a Space; the generic member of the
/// unit ideal. Immutable: every operation returns a fresh Element.
///
/// The f-algebra structure is atomwise: + and - are the vector operations,
/// * is the atomwise product with the all-ones Element as algebra unit.
class Element {
public:
    /// Validates length against the carrier and finiteness of all values.
    Element(SpacePtr space, std::vector<double> values);

    static Element unit(const SpacePtr& space);
    static Element zero(const SpacePtr& space);
    static Element constant(const SpacePtr& space, double c);

    const SpacePtr& space() const { return space_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t atom) const { return values_[atom]; }
    std::size_t size() const { return values_.size(); }

private:
    SpacePtr space_;
    std::vector<double> values_;
};

// f-algebra operations (throw SpaceMismatch on different carriers)
Element operator+(const Element& f, const Element& g);
Element operator-(const Element& f, const Element& g);
Element operator-(const Element& f);
Element operator*(const Element& f, const Element& g);
Element operator*(double c, const Element& f);
Element operator*(const Element& f, double c);

// lattice operations
Element sup(const Element& f, const Element& g);
Element inf(const Element& f, const Element& g);
Element pos_part(const Element& f);
Element neg_part(const Element& f);
Element abs(const Element& f);

/// The unit norm: inf{beta : |f| <= beta u} = max atom of |f|.
double u_norm(const Element& f);

/// f <= g with relative-plus-absolute slack: f_x <= g_x + tol*(1 + |g_x|)
/// at every atom. tol = 0 is the exact lattice order.
bool order_leq(const Element& f, const Element& g, double tol);

/// Atomwise reciprocal. Requires |f_x| > inv_eps at every atom.
Element invert(const Element& f, double inv_eps = 0.0);

/// Scalar-equality helper used throughout the test and verification layers:
/// |a - b| <= tol*(1 + |b|).
inline bool approx_scalar(double a, double b, double tol) {
    double d = a - b;
    if (d < 0) d = -d;
    double mb = b < 0 ? -b : b;
    return d <= tol * (1.0 + mb);
}

/// Atomwise version of approx_scalar over whole Elements.
bool approx_element(const Element& a, const Element& b, double tol);

} // namespace riesz

#endif
