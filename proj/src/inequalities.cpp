#include "riesz/inequalities.hpp"

#include <cmath>
#include <string>

#include "riesz/calculus.hpp"

namespace riesz {

double bennett_h(double a) {
    if (!(a > -1.0)) throw ParameterDomain("bennett_h needs a > -1");
    return (1.0 + a) * std::log1p(a) - a;
}

Element tail_element(const CondExpectation& T, const Element& S, double t,
                     double support_eps) {
    if (!same_space(T.space(), S.space())) throw SpaceMismatch();
    Element excess = pos_part(S - Element::constant(S.space(), t));
    BandProjection band = band_generated_by(excess, support_eps);
    return T.apply(band.apply(Element::unit(S.space())));
}

BoundReport chernoff_check(const BernoulliProcess& proc, int n, double t,
                           double tol) {
    if (n < 1 || n > proc.coin_count) {
        throw IndexOutOfRange("chernoff over " + std::to_string(n) + " coins of " +
                              std::to_string(proc.coin_count));
    }
    const double f_norm = u_norm(proc.success);
    if (!(t > n * f_norm)) {
        throw ParameterDomain("chernoff needs t > n ||f||_u = " +
                              std::to_string(n * f_norm) + ", got t = " +
                              std::to_string(t));
    }
    Element S = partial_sum(proc, n);
    Element lhs = tail_element(proc.lifted, S, t);
    const double scalar =
        std::pow(double(n) * std::exp(1.0) * f_norm / t, t);
    Element rhs = scalar * exp_pointwise(-double(n) * proc.success);
    return make_dominance_report(
        "chernoff_tail", std::move(lhs), std::move(rhs), tol,
        {{"n", double(n)}, {"t", t}, {"f_norm", f_norm}});
}

Element chernoff_intermediate(const BernoulliProcess& proc, int n, double t) {
    const double f_norm = u_norm(proc.success);
    if (!(t > n * f_norm)) {
        throw ParameterDomain("chernoff intermediate needs t > n ||f||_u");
    }
    const double scalar = std::pow(double(n) * f_norm / t, t);
    Element exponent = Element::constant(proc.product_space, t) -
                       double(n) * proc.success;
    return scalar * exp_pointwise(exponent);
}

BennettReports bennett_check(const CondExpectation& T,
                             std::span<const Element> fs, double t, double x,
                             double tol) {
    if (fs.empty()) throw ParameterDomain("bennett needs at least one summand");
    if (!(t > 0.0)) throw ParameterDomain("bennett needs t > 0");
    if (!(x > 0.0)) throw ParameterDomain("bennett needs x > 0");
    const Element u = Element::unit(T.space());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!same_space(fs[i].space(), T.space())) throw SpaceMismatch();
        for (std::size_t a = 0; a < fs[i].size(); ++a) {
            if (!(fs[i][a] <= 1.0)) throw HypothesisViolated(i, a, fs[i][a]);
        }
    }

    Element S = Element::zero(T.space());
    Element v = Element::zero(T.space());
    for (const Element& f : fs) {
        S = S + (f - T.apply(f));
        v = v + T.apply(f * f);
    }

    BoundReport psi_report = make_dominance_report(
        "bennett_psi", psi(T, S, t), phi_scalar(t) * v, tol,
        {{"t", t}, {"k", double(fs.size())}});

    BennettReports out{std::move(psi_report), std::nullopt};

    bool v_invertible = true;
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (!(v[a] > 0.0)) {
            v_invertible = false;
            break;
        }
    }
    if (v_invertible) {
        const double vn = u_norm(v);
        const double bound = std::exp(-vn * bennett_h(x / vn));
        out.tail_bound = make_dominance_report(
            "bennett_tail", tail_element(T, S, x),
            Element::constant(T.space(), bound), tol,
            {{"x", x}, {"v_norm", vn}, {"k", double(fs.size())}});
    }
    return out;
}

SubGaussianCert subgaussian_check(const CondExpectation& T, const Element& X,
                                  const Element& v,
                                  std::span<const double> lambda_grid,
                                  double tol) {
    if (!same_space(T.space(), X.space()) || !same_space(T.space(), v.space())) {
        throw SpaceMismatch();
    }
    if (lambda_grid.empty()) throw ParameterDomain("empty lambda grid");
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (!(v[a] > 0.0)) throw NotInvertible(a, v[a]);
    }
    Element Y = X - T.apply(X);
    for (double lambda : lambda_grid) {
        Element lhs = psi(T, Y, lambda);
        Element rhs = (lambda * lambda / 2.0) * v;
        double margin = rhs[0] - lhs[0];
        for (std::size_t a = 1; a < lhs.size(); ++a) {
            margin = std::min(margin, rhs[a] - lhs[a]);
        }
        if (!(margin >= -tol * (1.0 + u_norm(rhs)))) {
            throw NotSubGaussianOnGrid(lambda, margin);
        }
    }
    return SubGaussianCert{X, v,
                           std::vector<double>(lambda_grid.begin(), lambda_grid.end())};
}

BoundReport subgaussian_tail_check(const SubGaussianCert& cert,
                                   const CondExpectation& T, double t,
                                   double tol) {
    if (!(t > 0.0)) throw ParameterDomain("tail bound needs t > 0");
    const Element& X = cert.element;
    if (!same_space(T.space(), X.space())) throw SpaceMismatch();
    Element Y = X - T.apply(X);
    const double vn = u_norm(cert.parameter);
    const double bound = std::exp(-t * t / (2.0 * vn));
    return make_dominance_report("subgaussian_tail", tail_element(T, Y, t),
                                 Element::constant(T.space(), bound), tol,
                                 {{"t", t}, {"v_norm", vn}});
}

namespace {

BoundReport hoeffding_sum_impl(const char* name, const CondExpectation& T,
                               std::span<const Element> Xs,
                               std::span<const double> v_norms, double t,
                               double tol,
                               std::map<std::string, double> params) {
    if (Xs.empty()) throw ParameterDomain("empty family");
    if (!(t > 0.0)) throw ParameterDomain("tail bound needs t > 0");
    Element S = Element::zero(T.space());
    for (const Element& X : Xs) {
        if (!same_space(X.space(), T.space())) throw SpaceMismatch();
        S = S + (X - T.apply(X));
    }
    double sum_norms = 0.0;
    for (double vn : v_norms) sum_norms += vn;
    const double bound = std::exp(-t * t / (2.0 * sum_norms));
    params["t"] = t;
    params["sum_v_norms"] = sum_norms;
    return make_dominance_report(name, tail_element(T, S, t),
                                 Element::constant(T.space(), bound), tol,
                                 std::move(params));
}

} // namespace

BoundReport hoeffding_sum_check(const CondExpectation& T,
                                std::span<const Element> Xs,
                                std::span<const Element> vs, double t,
                                double tol) {
    if (Xs.size() != vs.size()) {
        throw ParameterDomain("family and parameter counts differ");
    }
    std::vector<double> v_norms;
    v_norms.reserve(vs.size());
    for (const Element& v : vs) v_norms.push_back(u_norm(v));
    return hoeffding_sum_impl("hoeffding_sum_tail", T, Xs, v_norms, t, tol,
                              {{"k", double(Xs.size())}});
}

SubGaussianCert bounded_subgaussian(const CondExpectation& T, const Element& X,
                                    double a, double b,
                                    std::span<const double> lambda_grid,
                                    double tol) {
    if (!(a < b)) throw ParameterDomain("bounded element needs a < b");
    for (std::size_t atom = 0; atom < X.size(); ++atom) {
        if (!(X[atom] >= a && X[atom] <= b)) throw NotInBounds(atom, X[atom], a, b);
    }
    const double c = (b - a) * (b - a) / 4.0;
    Element v = Element::constant(X.space(), c);
    return subgaussian_check(T, X, v, lambda_grid, tol);
}

BoundReport hoeffding_bounded_check(
    const CondExpectation& T, std::span<const Element> Xs,
    std::span<const std::pair<double, double>> bounds, double t, double tol) {
    if (Xs.size() != bounds.size()) {
        throw ParameterDomain("family and bounds counts differ");
    }
    std::map<std::string, double> params{{"k", double(Xs.size())}};
    std::vector<double> v_norms;
    v_norms.reserve(Xs.size());
    for (std::size_t i = 0; i < Xs.size(); ++i) {
        const auto [a, b] = bounds[i];
        if (!(a < b)) throw ParameterDomain("bounds need a < b");
        for (std::size_t atom = 0; atom < Xs[i].size(); ++atom) {
            if (!(Xs[i][atom] >= a && Xs[i][atom] <= b)) {
                throw NotInBounds(atom, Xs[i][atom], a, b);
            }
        }
        // same scalar as u_norm(((b-a)^2/4) u), keeping the right-hand side
        // bit-identical with hoeffding_sum_check under those parameters
        v_norms.push_back((b - a) * (b - a) / 4.0);
        params["a_" + std::to_string(i)] = a;
        params["b_" + std::to_string(i)] = b;
    }
    return hoeffding_sum_impl("hoeffding_bounded_tail", T, Xs, v_norms, t, tol,
                              std::move(params));
}

} // namespace riesz
