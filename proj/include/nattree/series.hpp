#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "nattree/numeric.hpp"
#include "nattree/poly2.hpp"
#include "nattree/trees.hpp"

namespace nattree {

namespace detail {
template <typename S>
bool scalar_is_zero(const S& s)
{
    return is_zero(s);
}
}  // namespace detail

/// Multivariate power series sum c_e x^e truncated at total degree `order`.
/// Coefficients are ordinary ones (not divided by factorials); use
/// counts_view to read exponential generating function counts.
///
/// Scalar must support + - * ==, construction from int, nattree::is_zero,
/// and multiplication by Rational.
template <typename Scalar>
class TruncatedSeries {
public:
    using Exponent = std::vector<int>;
    using Terms = std::map<Exponent, Scalar>;

    TruncatedSeries(int nvars, int order) : nvars_(nvars), order_(order)
    {
        if (nvars < 0 || order < 0) throw std::invalid_argument("TruncatedSeries: negative size");
    }

    static TruncatedSeries constant(int nvars, int order, const Scalar& c)
    {
        TruncatedSeries s(nvars, order);
        s.add_term(Exponent(nvars, 0), c);
        return s;
    }

    static TruncatedSeries variable(int nvars, int order, int i, const Scalar& c = Scalar(1))
    {
        Exponent e(nvars, 0);
        e.at(i) = 1;
        TruncatedSeries s(nvars, order);
        s.add_term(e, c);
        return s;
    }

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const Terms& terms() const { return terms_; }

    Scalar coeff(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    Scalar constant_term() const { return coeff(Exponent(nvars_, 0)); }

    // Terms beyond the order are dropped silently.
    void add_term(const Exponent& e, const Scalar& c)
    {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("add_term: wrong exponent length");
        if (degree(e) > order_ || detail::scalar_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (detail::scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    static int degree(const Exponent& e)
    {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        check(o);
        order_ = std::min(order_, o.order_);
        drop_above(order_);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this += -o; }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        for (auto& [e, c] : a.terms_) c = Scalar(0) - c;
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        a.check(b);
        TruncatedSeries r(a.nvars_, std::min(a.order_, b.order_));
        Exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            const int da = degree(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + degree(eb) > r.order_) continue;
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& s)
    {
        TruncatedSeries r(a.nvars_, a.order_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, c * s);
        return r;
    }
    friend TruncatedSeries operator*(const Scalar& s, const TruncatedSeries& a) { return a * s; }

    // Same number of variables and same coefficients; orders are not compared.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    bool is_zero() const { return terms_.empty(); }

    TruncatedSeries truncated(int order) const
    {
        TruncatedSeries r = *this;
        r.order_ = std::min(order_, order);
        r.drop_above(r.order_);
        return r;
    }

    // Lowers the order by one.
    TruncatedSeries derivative(int i) const
    {
        TruncatedSeries r(nvars_, std::max(order_ - 1, 0));
        for (const auto& [e, c] : terms_) {
            if (e.at(i) == 0) continue;
            Exponent f = e;
            --f[i];
            r.add_term(f, c * Scalar(e[i]));
        }
        return r;
    }

    // Raises the order by one.
    TruncatedSeries integral(int i) const
    {
        TruncatedSeries r(nvars_, order_ + 1);
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            ++f.at(i);
            r.add_term(f, c * Rational(1, f[i]));
        }
        return r;
    }

    TruncatedSeries derivative(const std::vector<int>& vars) const
    {
        TruncatedSeries r = *this;
        for (int i : vars) r = r.derivative(i);
        return r;
    }

    TruncatedSeries integral(const std::vector<int>& vars) const
    {
        TruncatedSeries r = *this;
        for (int i : vars) r = r.integral(i);
        return r;
    }

    // Sets x_i = 0 and drops the variable.
    TruncatedSeries restrict_variable(int i) const
    {
        if (i < 0 || i >= nvars_) throw std::invalid_argument("restrict_variable: no such variable");
        TruncatedSeries r(nvars_ - 1, order_);
        for (const auto& [e, c] : terms_) {
            if (e[i] != 0) continue;
            Exponent f = e;
            f.erase(f.begin() + i);
            r.add_term(f, c);
        }
        return r;
    }

    TruncatedSeries homogeneous(int n) const
    {
        TruncatedSeries r(nvars_, order_);
        for (const auto& [e, c] : terms_)
            if (degree(e) == n) r.terms_.emplace(e, c);
        return r;
    }

    template <typename To>
    TruncatedSeries<To> map_scalars(const std::function<To(const Scalar&)>& f) const
    {
        TruncatedSeries<To> r(nvars_, order_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

private:
    void check(const TruncatedSeries& o) const
    {
        if (nvars_ != o.nvars_) throw std::invalid_argument("TruncatedSeries: variable count mismatch");
    }

    void drop_above(int order)
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = degree(it->first) > order ? terms_.erase(it) : std::next(it);
    }

    int nvars_;
    int order_;
    Terms terms_;
};

/// exp(f) for f with zero constant term, from n g_n = sum_k k f_k g_{n-k} on
/// homogeneous components.
template <typename Scalar>
TruncatedSeries<Scalar> exp_series(const TruncatedSeries<Scalar>& f)
{
    using S = TruncatedSeries<Scalar>;
    if (!is_zero(f.constant_term())) throw std::domain_error("exp_series: nonzero constant term");
    const int n = f.order();
    std::vector<S> fk(n + 1, S(f.nvars(), n)), g(n + 1, S(f.nvars(), n));
    for (int k = 0; k <= n; ++k) fk[k] = f.homogeneous(k) * Scalar(k);
    g[0] = S::constant(f.nvars(), n, Scalar(1));
    S out = g[0];
    for (int m = 1; m <= n; ++m) {
        S acc(f.nvars(), n);
        for (int k = 1; k <= m; ++k) acc += fk[k] * g[m - k];
        g[m] = acc * Scalar(Rational(1, m));
        out += g[m];
    }
    return out;
}

/// log(g) for g with constant term 1.
template <typename Scalar>
TruncatedSeries<Scalar> log_series(const TruncatedSeries<Scalar>& g)
{
    using S = TruncatedSeries<Scalar>;
    if (!(g.constant_term() == Scalar(1))) throw std::domain_error("log_series: constant term must be 1");
    const int n = g.order();
    std::vector<S> gk(n + 1, S(g.nvars(), n)), f(n + 1, S(g.nvars(), n));
    for (int k = 0; k <= n; ++k) gk[k] = g.homogeneous(k);
    S out(g.nvars(), n);
    for (int m = 1; m <= n; ++m) {
        S acc = gk[m] * Scalar(m);
        for (int k = 1; k < m; ++k) acc -= f[k] * Scalar(k) * gk[m - k];
        f[m] = acc * Scalar(Rational(1, m));
        out += f[m];
    }
    return out;
}

/// sum_m c[m] u^m for u with zero constant term.
template <typename Scalar>
TruncatedSeries<Scalar> compose_univariate(const std::vector<Scalar>& c, const TruncatedSeries<Scalar>& u)
{
    using S = TruncatedSeries<Scalar>;
    if (!is_zero(u.constant_term())) throw std::domain_error("compose_univariate: nonzero constant term");
    S out(u.nvars(), u.order());
    S power = S::constant(u.nvars(), u.order(), Scalar(1));
    for (std::size_t m = 0; m < c.size() && m <= static_cast<std::size_t>(u.order()); ++m) {
        out += power * c[m];
        power = power * u;
    }
    return out;
}

/// s(images[0], ..., images[d-1]); every image has zero constant term and
/// lives in the target variables.
template <typename Scalar>
TruncatedSeries<Scalar> substitute(const TruncatedSeries<Scalar>& s, const std::vector<TruncatedSeries<Scalar>>& images)
{
    using S = TruncatedSeries<Scalar>;
    if (static_cast<int>(images.size()) != s.nvars()) throw std::invalid_argument("substitute: wrong image count");
    if (images.empty()) return s;
    const int nv = images.front().nvars();
    int order = s.order();
    for (const auto& im : images) {
        if (im.nvars() != nv) throw std::invalid_argument("substitute: images disagree on variables");
        if (!is_zero(im.constant_term())) throw std::domain_error("substitute: image with constant term");
        order = std::min(order, im.order());
    }
    // powers[i][p] = images[i]^p
    std::vector<std::vector<S>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        powers[i].push_back(S::constant(nv, order, Scalar(1)));
        for (int p = 1; p <= order; ++p) powers[i].push_back(powers[i].back() * images[i].truncated(order));
    }
    S out(nv, order);
    for (const auto& [e, c] : s.terms()) {
        if (S::degree(e) > order) continue;
        S term = S::constant(nv, order, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * powers[i][e[i]];
        out += term;
    }
    return out;
}

using Egf = TruncatedSeries<Rational>;
/// Coefficients are polynomials in (alpha, beta).
using ParamEgf = TruncatedSeries<ParamPoly>;

/// k-subsets of the 0-based variables {0..d-1}, lexicographic.
std::vector<std::vector<int>> variable_subsets(int d, int k);

/// Product of the variables in `vars`.
Egf monomial_of(int nvars, int order, const std::vector<int>& vars);

/// int_{xs} int_{ys} d_{ys}(u) d_{xs}(v), u being the left operand.
Egf pump_series(const Egf& u, const Egf& v, const std::vector<int>& xs, const std::vector<int>& ys);

/// Recursive pumping over a shape in two variables, x + y on the empty tree.
Egf pump_tree(const BinaryTree& shape, int order);

/// (e^x - 1)(e^y - 1).
Egf exp_product_kernel(int order);

Egf gfn_closed(int order);
/// -log(1 - (e^x - 1)(e^y - 1)), constant term 0.
Egf gfh_closed(int order);
/// e^{alpha x + beta y} (1 - u)^{-(alpha + beta)}, u = (e^x - 1)(e^y - 1).
ParamEgf gfn_alpha_beta_closed(int order);

/// N = (1 + int_x N)(1 + int_y N).
Egf fixed_point_2d(int order);
/// N = prod over k-subsets pi of (1 + int_pi N).
Egf fixed_point_dk(int d, int k, int order);

/// sum_n (x_1...x_d)^n / (n!)^d.
Egf gfn_dd_formula(int d, int order);

/// M = int_{1..d} N + sum over (d-k)-subsets pi of x_pi.
Egf build_m(const Egf& n, int d, int k);

/// d_1...d_d M - prod over (d-k)-subsets pi of d_pi M, at order - d.
Egf pde_residual(const Egf& m, int d, int k);

/// Univariate J_0 from a_{k+2} = -a_k / (k+2)^2.
Egf bessel_j0(int order);

/// GFN_{2,2}(x/2, -x/2).
Egf bessel_from_dd(int order);

/// Coefficients multiplied by prod e_i!.
template <typename Scalar>
TruncatedSeries<Scalar> counts_view(const TruncatedSeries<Scalar>& s)
{
    TruncatedSeries<Scalar> r(s.nvars(), s.order());
    for (const auto& [e, c] : s.terms()) {
        Integer f = 1;
        for (int x : e) f *= factorial(x);
        r.add_term(e, c * Rational(f));
    }
    return r;
}

}  // namespace nattree
