#include "doctest.h"

#include "nattree/nat.hpp"
#include "nattree/series.hpp"

using namespace nattree;

namespace {

Egf x(int order, int nvars = 2) { return Egf::variable(nvars, order, 0); }
Egf y(int order, int nvars = 2) { return Egf::variable(nvars, order, 1); }

ParamPoly alpha() { return ParamPoly::variable(0); }
ParamPoly beta() { return ParamPoly::variable(1); }

ParamEgf specialize(const ParamEgf& s, int which)
{
    return s.map_scalars<ParamPoly>([which](const ParamPoly& p) { return p.specialize(which, Rational(1)); });
}

}  // namespace

TEST_CASE("series arithmetic")
{
    const Egf f = x(6) + y(6) * Rational(2) + x(6) * y(6);
    CHECK(log_series(exp_series(f)) == f);
    CHECK(exp_series(Egf(2, 6)) == Egf::constant(2, 6, Rational(1)));
    CHECK_THROWS_AS(exp_series(Egf::constant(2, 4, Rational(1))), std::domain_error);
    CHECK_THROWS_AS(log_series(f), std::domain_error);
    const Egf g = (x(3) + y(3)) * (x(3) + y(3)) * (x(3) + y(3)) * (x(3) + y(3));
    CHECK(g.is_zero());
    CHECK(f.derivative(0).integral(0) == (f - y(6) * Rational(2)).truncated(6));
    CHECK(Egf::constant(1, 3, Rational(5)).restrict_variable(0) == Egf::constant(0, 3, Rational(5)));
}

TEST_CASE("closed forms at small orders")
{
    const Egf n = gfn_closed(8);
    CHECK(n.constant_term() == 1);
    CHECK(counts_view(n).coeff({1, 1}) == 3);
    CHECK(gfh_closed(8).constant_term() == 0);
    const ParamEgf nab = gfn_alpha_beta_closed(6);
    CHECK(counts_view(nab).coeff({1, 1}) == alpha() * beta() + alpha() + beta());
    CHECK(counts_view(nab).coeff({1, 0}) == alpha());
    CHECK(counts_view(nab).coeff({0, 1}) == beta());
}

TEST_CASE("closed forms equal the fixed point")
{
    const int order = 8;
    const Egf n = fixed_point_2d(order);
    CHECK(n == gfn_closed(order));
    const Egf h = gfh_closed(order);
    CHECK(h.derivative(0).derivative(1) == n.truncated(order - 2));
    CHECK(h == n.integral(0).integral(1).truncated(order));
    const Egf m = h + x(order) + y(order);
    CHECK(m == (x(order) + y(order) + pump_series(m, m, {0}, {1})).truncated(order));
    CHECK(m == build_m(n, 2, 1).truncated(order));
    CHECK(pde_residual(build_m(n, 2, 1), 2, 1).is_zero());

    const ParamEgf nab = gfn_alpha_beta_closed(order);
    CHECK(specialize(specialize(nab, 0), 1) == n.map_scalars<ParamPoly>([](const Rational& r) { return ParamPoly(r); }));
    const ParamEgf one = ParamEgf::constant(2, order, ParamPoly(Rational(1)));
    const ParamEgf rhs = (one + specialize(nab, 1).integral(0) * alpha()) * (one + specialize(nab, 0).integral(1) * beta());
    CHECK(nab == rhs.truncated(order));
}

TEST_CASE("pumping over shapes")
{
    CHECK(pump_tree({}, 4) == x(4) + y(4));
    CHECK(pump_tree(parse_tree("(. .)"), 4) == x(4) * y(4));
    const int order = 7;
    Egf sum = x(order) + y(order);
    for (int n = 1; n <= order - 1; ++n)
        for (const auto& b : enumerate_binary_trees(n)) {
            const Egf p = pump_tree(b, order);
            // One monomial with coefficient count / (|LV|+1)! (|RV|+1)!.
            const int a = b.left_count() + 1, c = b.right_count() + 1;
            CHECK(p.terms().size() == 1);
            CHECK(p.coeff({a, c}) * Rational(factorial(a) * factorial(c)) == Rational(count_nats_hook(b)));
            sum += p;
        }
    const Egf m = gfh_closed(order) + x(order) + y(order);
    CHECK(sum == m);
}

TEST_CASE("counts are non-negative integers")
{
    const Egf c = counts_view(gfn_closed(8));
    for (const auto& [e, v] : c.terms()) {
        CHECK(is_integral(v));
        CHECK(v > 0);
    }
}

TEST_CASE("(d,k) fixed points")
{
    CHECK(fixed_point_dk(2, 1, 8) == fixed_point_2d(8));
    for (int d = 1; d <= 3; ++d) CHECK(fixed_point_dk(d, d, 10) == gfn_dd_formula(d, 10));
    CHECK(fixed_point_dk(3, 1, 6).restrict_variable(2) == fixed_point_dk(2, 1, 6));
    CHECK(fixed_point_dk(3, 2, 6).restrict_variable(2) == fixed_point_dk(2, 2, 6));
    CHECK_THROWS_AS(fixed_point_dk(2, 3, 4), std::invalid_argument);
    for (int d = 2; d <= 3; ++d)
        for (int k = 1; k <= d; ++k) CHECK(pde_residual(build_m(fixed_point_dk(d, k, 7), d, k), d, k).is_zero());
}

TEST_CASE("other solutions of the equations")
{
    const int order = 8;
    // M = x + y fails: d1 d2 M = 0 but d1 M d2 M = 1.
    const Egf lin = x(order) + y(order);
    CHECK(pde_residual(lin, 2, 1) == Egf::constant(2, order - 2, Rational(-1)));

    // M = -log(1 - x - y).
    const Egf m = -log_series(Egf::constant(2, order, Rational(1)) - x(order) - y(order));
    CHECK(pde_residual(m, 2, 1).is_zero());

    // For k = d - 1 the solutions are closed under x_i -> s_i(x_i).
    auto s = [order](int i) {
        const Egf v = Egf::variable(2, order, i);
        return exp_series(v) - Egf::constant(2, order, Rational(1));
    };
    const Egf n = build_m(fixed_point_2d(order), 2, 1);
    CHECK(pde_residual(substitute(n, {s(0), s(1)}), 2, 1).is_zero());
    CHECK(pde_residual(substitute(m, {s(0), y(order) + y(order) * y(order)}), 2, 1).is_zero());
}

TEST_CASE("Bessel specialization")
{
    const Egf j0 = bessel_j0(10);
    CHECK(j0.coeff({2}) == Rational(-1, 4));
    CHECK(j0.coeff({4}) == Rational(1, 64));
    CHECK(bessel_from_dd(10) == j0);
}
