#include "nattree/series.hpp"

namespace nattree {

std::vector<std::vector<int>> variable_subsets(int d, int k)
{
    auto subsets = combinations(d, k);
    for (auto& s : subsets)
        for (int& i : s) --i;
    return subsets;
}

Egf monomial_of(int nvars, int order, const std::vector<int>& vars)
{
    Egf::Exponent e(nvars, 0);
    for (int i : vars) ++e.at(i);
    Egf s(nvars, order);
    s.add_term(e, Rational(1));
    return s;
}

Egf pump_series(const Egf& u, const Egf& v, const std::vector<int>& xs, const std::vector<int>& ys)
{
    if (u.nvars() != v.nvars()) throw std::invalid_argument("pump_series: variable count mismatch");
    if (u.order() != v.order()) throw std::invalid_argument("pump_series: order mismatch");
    return (u.derivative(ys) * v.derivative(xs)).integral(xs).integral(ys);
}

Egf pump_tree(const BinaryTree& shape, int order)
{
    if (shape.empty()) return Egf::variable(2, order, 0) + Egf::variable(2, order, 1);
    Egf l = pump_tree(shape.left(), order);
    Egf r = pump_tree(shape.right(), order);
    return pump_series(l, r, {0}, {1}).truncated(order);
}

namespace {

// e^{x_i} - 1 in `nvars` variables.
Egf exp_minus_one(int nvars, int order, int i)
{
    Egf s(nvars, order);
    Egf::Exponent e(nvars, 0);
    for (int n = 1; n <= order; ++n) {
        e[i] = n;
        s.add_term(e, Rational(1) / Rational(factorial(n)));
    }
    return s;
}

template <typename Scalar>
TruncatedSeries<Scalar> fixed_point(int d, const std::vector<std::vector<int>>& dirs, int order)
{
    using S = TruncatedSeries<Scalar>;
    const S one = S::constant(d, order, Scalar(1));
    S n(d, order);
    for (int iter = 0; iter <= order + 1; ++iter) {
        S next = one;
        for (const auto& pi : dirs) next = next * (one + n.integral(pi).truncated(order));
        if (next == n) return n;
        n = std::move(next);
    }
    throw std::logic_error("fixed_point: no convergence within order + 2 iterations");
}

}  // namespace

Egf exp_product_kernel(int order) { return exp_minus_one(2, order, 0) * exp_minus_one(2, order, 1); }

Egf gfn_closed(int order)
{
    std::vector<Rational> c;
    for (int m = 0; m <= order; ++m) c.push_back(Rational(m + 1));
    const Egf inv_square = compose_univariate(c, exp_product_kernel(order));
    return exp_series(Egf::variable(2, order, 0) + Egf::variable(2, order, 1)) * inv_square;
}

Egf gfh_closed(int order)
{
    return -log_series(Egf::constant(2, order, Rational(1)) - exp_product_kernel(order));
}

ParamEgf gfn_alpha_beta_closed(int order)
{
    const ParamPoly alpha = ParamPoly::variable(0), beta = ParamPoly::variable(1);
    const ParamEgf u = exp_product_kernel(order).map_scalars<ParamPoly>([](const Rational& r) { return ParamPoly(r); });
    // (1 - u)^{-s} = sum_m s^{(m)} u^m / m!, s = alpha + beta.
    std::vector<ParamPoly> c;
    ParamPoly rising(Rational(1));
    for (int m = 0; m <= order; ++m) {
        c.push_back(rising * Rational(Rational(1) / Rational(factorial(m))));
        rising *= alpha + beta + ParamPoly(Rational(m));
    }
    const ParamEgf lin = ParamEgf::variable(2, order, 0, alpha) + ParamEgf::variable(2, order, 1, beta);
    return exp_series(lin) * compose_univariate(c, u);
}

Egf fixed_point_2d(int order) { return fixed_point<Rational>(2, {{0}, {1}}, order); }

Egf fixed_point_dk(int d, int k, int order)
{
    if (k < 1 || k > d) throw std::invalid_argument("fixed_point_dk: need 1 <= k <= d");
    return fixed_point<Rational>(d, variable_subsets(d, k), order);
}

Egf gfn_dd_formula(int d, int order)
{
    if (d < 1) throw std::invalid_argument("gfn_dd_formula: need d >= 1");
    Egf s(d, order);
    for (int n = 0; n * d <= order; ++n) {
        Integer f = 1;
        for (int i = 0; i < d; ++i) f *= factorial(n);
        s.add_term(Egf::Exponent(d, n), Rational(Integer(1), f));
    }
    return s;
}

Egf build_m(const Egf& n, int d, int k)
{
    if (n.nvars() != d) throw std::invalid_argument("build_m: variable count mismatch");
    std::vector<int> all(d);
    for (int i = 0; i < d; ++i) all[i] = i;
    Egf m = n.integral(all);
    for (const auto& pi : variable_subsets(d, d - k)) m += monomial_of(d, m.order(), pi);
    return m;
}

Egf pde_residual(const Egf& m, int d, int k)
{
    if (m.nvars() != d) throw std::invalid_argument("pde_residual: variable count mismatch");
    if (k < 1 || k > d) throw std::invalid_argument("pde_residual: need 1 <= k <= d");
    const int order = std::max(m.order() - d, 0);
    std::vector<int> all(d);
    for (int i = 0; i < d; ++i) all[i] = i;
    Egf rhs = Egf::constant(d, order, Rational(1));
    for (const auto& pi : variable_subsets(d, d - k)) rhs = rhs * m.derivative(pi).truncated(order);
    return (m.derivative(all).truncated(order) - rhs).truncated(order);
}

Egf bessel_j0(int order)
{
    Egf s(1, order);
    Rational a = 1;
    for (int k = 0; k <= order; k += 2) {
        s.add_term({k}, a);
        a = -a / Rational((k + 2) * (k + 2));
    }
    return s;
}

Egf bessel_from_dd(int order)
{
    const Egf n22 = fixed_point_dk(2, 2, order);
    const Egf half = Egf::variable(1, order, 0, Rational(1, 2));
    return substitute(n22, {half, -half});
}

}  // namespace nattree
