#pragma once

#include <map>
#include <utility>

#include "nattree/nat.hpp"
#include "nattree/perm.hpp"
#include "nattree/poly2.hpp"

namespace nattree {

/// Which q-variable a q-integer lives in: q_L is variable 0, q_R variable 1.
enum class QVar { L = 0, R = 1 };

QPoly2 q_int(int n, QVar v);
QPoly2 q_factorial(int n, QVar v);
QPoly2 q_binomial(int n, int k, QVar v);

/// [|LV|]_{q_L}! [|RV|]_{q_R}! / (prod [EL(U)]_{q_L} prod [ER(U)]_{q_R}),
/// dividing factor by factor. Throws std::logic_error on a remainder.
QPoly2 q_hook_product(const BinaryTree& shape);

/// q_L^{S(sigma_L)} q_R^{S(sigma_R)}.
QPoly2 q_weight(const Nat& t, Statistic s);
QPoly2 q_weight_sum(const BinaryTree& shape, Statistic s);

/// Series in x, y over QPoly2, stored in the divided-power basis: the entry
/// (a, b) -> c stands for c x^a y^b / ([a]_{q_L}! [b]_{q_R}!). In this basis
/// q-derivatives and q-integrals shift exponents, and products pick up
/// q-binomial factors, so coefficients stay polynomial.
class QSeries {
public:
    using Terms = std::map<std::pair<int, int>, QPoly2>;

    QSeries() = default;

    static QSeries monomial(int a, int b, QPoly2 c);
    /// x + y.
    static QSeries seed();

    const Terms& terms() const { return terms_; }
    QPoly2 coeff(int a, int b) const;
    void add(int a, int b, const QPoly2& c);

    QSeries derivative(QVar v) const;
    QSeries integral(QVar v) const;

    friend QSeries operator+(QSeries a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend bool operator==(const QSeries& a, const QSeries& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// int_x int_y d_y(u) d_x(v), u being the left operand.
QSeries q_pump(const QSeries& u, const QSeries& v);

/// Recursive pumping over a shape, starting from x + y on the empty tree.
QSeries q_pump_tree(const BinaryTree& shape);

/// Image of a pair of permutation sums, extended bilinearly.
QSeries psi(const PermSum& left, const PermSum& right, Statistic s);
QSeries psi(const std::pair<Perm, Perm>& sigma, Statistic s);

}  // namespace nattree
