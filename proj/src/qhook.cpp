#include "nattree/qhook.hpp"

#include <stdexcept>
#include <vector>

namespace nattree {

namespace {

int index(QVar v) { return static_cast<int>(v); }

QPoly2 q_power(int e, QVar v) { return v == QVar::L ? QPoly2::monomial(e, 0) : QPoly2::monomial(0, e); }

}  // namespace

QPoly2 q_int(int n, QVar v)
{
    if (n < 0) throw std::invalid_argument("q_int: negative argument");
    QPoly2 p;
    for (int i = 0; i < n; ++i) p += q_power(i, v);
    return p;
}

QPoly2 q_factorial(int n, QVar v)
{
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    QPoly2 p(Integer(1));
    for (int i = 2; i <= n; ++i) p *= q_int(i, v);
    return p;
}

QPoly2 q_binomial(int n, int k, QVar v)
{
    if (n < 0) throw std::invalid_argument("q_binomial: negative argument");
    if (k < 0 || k > n) return {};
    // [n, k] = [n-1, k-1] + q^k [n-1, k]
    std::vector<QPoly2> row{QPoly2(Integer(1))};
    for (int m = 1; m <= n; ++m) {
        std::vector<QPoly2> next(m + 1);
        next[0] = QPoly2(Integer(1));
        next[m] = QPoly2(Integer(1));
        for (int j = 1; j < m; ++j) next[j] = row[j - 1] + q_power(j, v) * row[j];
        row = std::move(next);
    }
    return row[k];
}

QPoly2 q_hook_product(const BinaryTree& shape)
{
    if (shape.empty()) throw std::invalid_argument("q_hook_product: empty shape");
    const Layout lay = layout(shape);
    const VertexStats st = vertex_stats(shape);
    QPoly2 p = q_factorial(st.left_count, QVar::L) * q_factorial(st.right_count, QVar::R);
    auto divide = [&p](int e, QVar v) {
        if (e <= 1) return;
        auto q = divide_exact(p, q_int(e, v), index(v));
        if (!q) throw std::logic_error("q_hook_product: inexact division");
        p = std::move(*q);
    };
    for (int v : lay.left_vertices) divide(st.el[v], QVar::L);
    for (int v : lay.right_vertices) divide(st.er[v], QVar::R);
    return p;
}

QPoly2 q_weight(const Nat& t, Statistic s)
{
    const auto [l, r] = extract_sigma(t);
    return QPoly2::monomial(statistic(l, s), statistic(r, s));
}

QPoly2 q_weight_sum(const BinaryTree& shape, Statistic s)
{
    QPoly2 sum;
    for (const auto& t : enumerate_nats_of_shape(shape)) sum += q_weight(t, s);
    return sum;
}

QSeries QSeries::monomial(int a, int b, QPoly2 c)
{
    QSeries s;
    s.add(a, b, c);
    return s;
}

QSeries QSeries::seed()
{
    QSeries s;
    s.add(1, 0, QPoly2(Integer(1)));
    s.add(0, 1, QPoly2(Integer(1)));
    return s;
}

QPoly2 QSeries::coeff(int a, int b) const
{
    auto it = terms_.find({a, b});
    return it == terms_.end() ? QPoly2{} : it->second;
}

void QSeries::add(int a, int b, const QPoly2& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QSeries QSeries::derivative(QVar v) const
{
    QSeries out;
    for (const auto& [e, c] : terms_) {
        auto [a, b] = e;
        if (v == QVar::L ? a == 0 : b == 0) continue;
        out.add(v == QVar::L ? a - 1 : a, v == QVar::R ? b - 1 : b, c);
    }
    return out;
}

QSeries QSeries::integral(QVar v) const
{
    QSeries out;
    for (const auto& [e, c] : terms_) out.add(e.first + (v == QVar::L), e.second + (v == QVar::R), c);
    return out;
}

QSeries operator+(QSeries a, const QSeries& b)
{
    for (const auto& [e, c] : b.terms_) a.add(e.first, e.second, c);
    return a;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            const int x = ea.first + eb.first, y = ea.second + eb.second;
            out.add(x, y, ca * cb * q_binomial(x, ea.first, QVar::L) * q_binomial(y, ea.second, QVar::R));
        }
    return out;
}

QSeries q_pump(const QSeries& u, const QSeries& v)
{
    return (u.derivative(QVar::R) * v.derivative(QVar::L)).integral(QVar::R).integral(QVar::L);
}

QSeries q_pump_tree(const BinaryTree& shape)
{
    if (shape.empty()) return QSeries::seed();
    return q_pump(q_pump_tree(shape.left()), q_pump_tree(shape.right()));
}

namespace {

std::pair<int, QPoly2> weight_sum(const PermSum& s, Statistic st, QVar v)
{
    if (s.empty()) throw std::invalid_argument("psi: empty permutation sum");
    const int n = static_cast<int>(s.begin()->first.size());
    QPoly2 w;
    for (const auto& [p, m] : s) {
        if (static_cast<int>(p.size()) != n) throw std::invalid_argument("psi: mixed permutation lengths");
        w += q_power(statistic(p, st), v) * Integer(m);
    }
    return {n, w};
}

}  // namespace

QSeries psi(const PermSum& left, const PermSum& right, Statistic s)
{
    auto [m, wl] = weight_sum(left, s, QVar::L);
    auto [n, wr] = weight_sum(right, s, QVar::R);
    return QSeries::monomial(m + 1, n + 1, wl * wr);
}

QSeries psi(const std::pair<Perm, Perm>& sigma, Statistic s)
{
    return psi(PermSum{{sigma.first, 1}}, PermSum{{sigma.second, 1}}, s);
}

}  // namespace nattree
