#include "doctest.h"

#include "fixtures.hpp"
#include "nattree/qhook.hpp"

using namespace nattree;

namespace {

const char* example_b = "(((. .) (. .)) ((. (. .)) (. .)))";

QPoly2 one() { return QPoly2(Integer(1)); }
QPoly2 qL(int e = 1) { return QPoly2::monomial(e, 0); }
QPoly2 qR(int e = 1) { return QPoly2::monomial(0, e); }

}  // namespace

TEST_CASE("q-integers")
{
    CHECK(q_int(1, QVar::L) == one());
    CHECK(q_int(3, QVar::L) == one() + qL() + qL(2));
    CHECK(q_factorial(3, QVar::R) == (one() + qR()) * (one() + qR() + qR(2)));
    CHECK(q_factorial(0, QVar::L) == one());
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
            auto lhs = q_binomial(n, k, QVar::L) * q_factorial(k, QVar::L) * q_factorial(n - k, QVar::L);
            CHECK(lhs == q_factorial(n, QVar::L));
        }
}

TEST_CASE("q-hook product on small shapes")
{
    CHECK(q_hook_product(parse_tree("(. .)")) == one());
    CHECK(q_hook_product(parse_tree("((. .) ((. .) .))")) == one() + qL());
    CHECK(q_weight_sum(parse_tree("((. .) ((. .) .))"), Statistic::inv) == one() + qL());
    CHECK(q_weight(Nat{parse_tree("(. .)"), {}, {}}, Statistic::imaj) == one());
}

TEST_CASE("figure 1 weights")
{
    const Nat t = fixtures::figure1();
    CHECK(q_weight(t, Statistic::inv) == QPoly2::monomial(11, 7));
    CHECK(q_weight(t, Statistic::imaj) == QPoly2::monomial(25, 24));
}

TEST_CASE("worked example with eight vertices")
{
    const BinaryTree b = parse_tree(example_b);
    const QPoly2 p = q_hook_product(b);
    // [3]_{q_L} [4]_{q_R} [2]_{q_R}.
    CHECK(p == q_int(3, QVar::L) * q_int(4, QVar::R) * q_int(2, QVar::R));
    CHECK(p.coeff(1, 2) == 2);
    // Reading the display the other way round cannot fit: |LV| = 3.
    CHECK(b.left_count() == 3);
    CHECK(p.degree(0) == 2);

    // The two NATs behind that coefficient, under imaj.
    std::vector<std::pair<Perm, Perm>> witnesses;
    for (const auto& t : enumerate_nats_of_shape(b)) {
        const auto sig = extract_sigma(t);
        if (imaj(sig.first) == 1 && imaj(sig.second) == 2) witnesses.push_back(sig);
    }
    std::sort(witnesses.begin(), witnesses.end());
    CHECK(witnesses == std::vector<std::pair<Perm, Perm>>{{{2, 3, 1}, {1, 3, 4, 2}}, {{2, 3, 1}, {3, 1, 4, 2}}});
}

TEST_CASE("q-hook theorem")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& b : enumerate_binary_trees(n)) {
            const QPoly2 p = q_hook_product(b);
            CHECK(q_weight_sum(b, Statistic::inv) == p);
            CHECK(q_weight_sum(b, Statistic::imaj) == p);
            CHECK(p.evaluate(Integer(1), Integer(1)) == count_nats_hook(b));
            const QSeries s = q_pump_tree(b);
            CHECK(s == QSeries::monomial(b.left_count() + 1, b.right_count() + 1, p));
        }
}

TEST_CASE("q-pumping")
{
    CHECK(q_pump_tree({}) == QSeries::seed());
    // One application to the seed gives xy.
    CHECK(q_pump_tree(parse_tree("(. .)")) == QSeries::monomial(1, 1, one()));
    const QSeries x = QSeries::monomial(1, 0, one());
    CHECK(x.integral(QVar::L) == QSeries::monomial(2, 0, one()));
    CHECK(x.derivative(QVar::L) == QSeries::monomial(0, 0, one()));
    CHECK(x.derivative(QVar::R) == QSeries{});
    // x^1/[1]! * x^1/[1]! = [2]_{q_L} x^2/[2]!.
    CHECK(x * x == QSeries::monomial(2, 0, one() + qL()));
}

TEST_CASE("commutation with psi")
{
    // All lengths a + b + c + e <= 4 for sigma = (a, b), mu = (c, e).
    for (auto st : {Statistic::inv, Statistic::imaj})
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; a + b <= 4; ++b)
                for (int c = 0; a + b + c <= 4; ++c)
                    for (int e = 0; a + b + c + e <= 4; ++e)
                        for (const auto& s1 : all_permutations(a))
                            for (const auto& s2 : all_permutations(b))
                                for (const auto& m1 : all_permutations(c))
                                    for (const auto& m2 : all_permutations(e)) {
                                        const std::pair<Perm, Perm> sigma{s1, s2}, mu{m1, m2};
                                        const auto [l, r] = pump_pair(sigma, mu);
                                        CHECK(psi(l, r, st) == q_pump(psi(sigma, st), psi(mu, st)));
                                    }
}
