#ifndef RIESZ_REPORT_HPP
#define RIESZ_REPORT_HPP

#include <map>
#include <string>

#include "riesz/element.hpp"

namespace riesz {

/// What a report's margin measures. A dominance report checks lhs <= rhs and
/// its margin is min over atoms of (rhs - lhs); an equality report checks
/// lhs = rhs and its margin is -||lhs - rhs||_u. Either way
/// holds <=> margin >= -tol * (1 + ||rhs||_u).
enum class CheckKind { dominance, equality };

/// Structured verdict for one inequality or identity check.
struct BoundReport {
    std::string name;
    CheckKind kind = CheckKind::dominance;
    Element lhs;
    Element rhs;
    double margin = 0.0;
    double tol = 0.0;
    bool holds = false;
    std::map<std::string, double> params;
};

BoundReport make_dominance_report(std::string name, Element lhs, Element rhs,
                                  double tol,
                                  std::map<std::string, double> params = {});

BoundReport make_equality_report(std::string name, Element lhs, Element rhs,
                                 double tol,
                                 std::map<std::string, double> params = {});

} // namespace riesz

#endif
