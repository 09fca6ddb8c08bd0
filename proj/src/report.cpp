#include "riesz/report.hpp"

#include <cmath>

namespace riesz {

namespace {

double dominance_margin(const Element& lhs, const Element& rhs) {
    double m = rhs[0] - lhs[0];
    for (std::size_t i = 1; i < lhs.size(); ++i) {
        double d = rhs[i] - lhs[i];
        if (d < m) m = d;
    }
    return m;
}

} // namespace

BoundReport make_dominance_report(std::string name, Element lhs, Element rhs,
                                  double tol,
                                  std::map<std::string, double> params) {
    if (!same_space(lhs.space(), rhs.space())) throw SpaceMismatch();
    BoundReport r{std::move(name), CheckKind::dominance, std::move(lhs),
                  std::move(rhs), 0.0, tol, false, std::move(params)};
    r.margin = dominance_margin(r.lhs, r.rhs);
    r.holds = r.margin >= -tol * (1.0 + u_norm(r.rhs));
    r.params["tol"] = tol;
    return r;
}

BoundReport make_equality_report(std::string name, Element lhs, Element rhs,
                                 double tol,
                                 std::map<std::string, double> params) {
    if (!same_space(lhs.space(), rhs.space())) throw SpaceMismatch();
    BoundReport r{std::move(name), CheckKind::equality, std::move(lhs),
                  std::move(rhs), 0.0, tol, false, std::move(params)};
    r.margin = -u_norm(r.lhs - r.rhs);
    r.holds = r.margin >= -tol * (1.0 + u_norm(r.rhs));
    r.params["tol"] = tol;
    return r;
}

} // namespace riesz
