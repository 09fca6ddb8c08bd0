#include "riesz/element.hpp"

#include <cmath>
#include <string>

namespace riesz {

namespace {

void require_same(const Element& f, const Element& g) {
    if (!same_space(f.space(), g.space())) throw SpaceMismatch();
}

} // namespace

Element::Element(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw Error("element requires a carrier");
    if (values_.size() != space_->atom_count()) {
        throw Error("value count " + std::to_string(values_.size()) +
                    " does not match atom count " +
                    std::to_string(space_->atom_count()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw Error("non-finite value at atom " + std::to_string(i));
        }
    }
}

Element Element::unit(const SpacePtr& space) { return constant(space, 1.0); }
Element Element::zero(const SpacePtr& space) { return constant(space, 0.0); }

Element Element::constant(const SpacePtr& space, double c) {
    if (!space) throw Error("element requires a carrier");
    return Element(space, std::vector<double>(space->atom_count(), c));
}

Element operator+(const Element& f, const Element& g) {
    require_same(f, g);
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] + g[i];
    return Element(f.space(), std::move(out));
}

Element operator-(const Element& f, const Element& g) {
    require_same(f, g);
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] - g[i];
    return Element(f.space(), std::move(out));
}

Element operator-(const Element& f) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -f[i];
    return Element(f.space(), std::move(out));
}

Element operator*(const Element& f, const Element& g) {
    require_same(f, g);
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] * g[i];
    return Element(f.space(), std::move(out));
}

Element operator*(double c, const Element& f) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * f[i];
    return Element(f.space(), std::move(out));
}

Element operator*(const Element& f, double c) { return c * f; }

Element sup(const Element& f, const Element& g) {
    require_same(f, g);
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] < g[i] ? g[i] : f[i];
    return Element(f.space(), std::move(out));
}

Element inf(const Element& f, const Element& g) {
    require_same(f, g);
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = g[i] < f[i] ? g[i] : f[i];
    return Element(f.space(), std::move(out));
}

Element pos_part(const Element& f) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] > 0.0 ? f[i] : 0.0;
    return Element(f.space(), std::move(out));
}

Element neg_part(const Element& f) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] < 0.0 ? -f[i] : 0.0;
    return Element(f.space(), std::move(out));
}

Element abs(const Element& f) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(f[i]);
    return Element(f.space(), std::move(out));
}

double u_norm(const Element& f) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        double a = std::abs(f[i]);
        if (a > m) m = a;
    }
    return m;
}

bool order_leq(const Element& f, const Element& g, double tol) {
    require_same(f, g);
    if (tol < 0.0) throw NegativeTolerance(tol);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!(f[i] <= g[i] + tol * (1.0 + std::abs(g[i])))) return false;
    }
    return true;
}

Element invert(const Element& f, double inv_eps) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!(std::abs(f[i]) > inv_eps)) throw NotInvertible(i, f[i]);
    }
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = 1.0 / f[i];
    return Element(f.space(), std::move(out));
}

bool approx_element(const Element& a, const Element& b, double tol) {
    if (!same_space(a.space(), b.space())) throw SpaceMismatch();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!approx_scalar(a[i], b[i], tol)) return false;
    }
    return true;
}

} // namespace riesz
