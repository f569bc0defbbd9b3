#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "nattree/perm.hpp"

using namespace nattree;

namespace {

PermSum parse_sum(const std::vector<std::string>& words)
{
    PermSum s;
    for (const auto& w : words) {
        Perm p;
        for (char c : w) p.push_back(c - '0');
        ++s[p];
    }
    return s;
}

// Every permutation of length m+n+1 whose prefix and suffix standardize correctly.
PermSum pump_by_filter(const Perm& sigma, const Perm& mu)
{
    const Perm head = append_max(sigma);
    PermSum s;
    for (const auto& p : all_permutations(static_cast<int>(head.size() + mu.size()))) {
        std::span<const int> all(p);
        if (standardize(all.first(head.size())) == head && standardize(all.last(mu.size())) == mu) ++s[p];
    }
    return s;
}

int inversions_naive(const Perm& p)
{
    int n = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
    return n;
}

// Sum of i such that i+1 appears to the left of i.
int imaj_naive(const Perm& p)
{
    std::vector<int> pos(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) pos[p[i]] = static_cast<int>(i);
    int s = 0;
    for (int i = 1; i < static_cast<int>(p.size()); ++i)
        if (pos[i + 1] < pos[i]) s += i;
    return s;
}

std::multiset<Perm> as_multiset(const PermSum& s)
{
    std::multiset<Perm> m;
    for (const auto& [p, k] : s)
        for (long long i = 0; i < k; ++i) m.insert(p);
    return m;
}

}  // namespace

TEST_CASE("figure 1 readings")
{
    const auto [l, r] = extract_sigma(fixtures::figure1());
    CHECK(l == fixtures::figure1_sigma_left);
    CHECK(r == fixtures::figure1_sigma_right);
    CHECK(inversions(l) == 11);
    CHECK(inversions(r) == 7);
    CHECK(imaj(l) == 25);
    CHECK(imaj(r) == 24);
}

TEST_CASE("small readings")
{
    const auto [l, r] = extract_sigma(Nat{parse_tree("(. .)"), {}, {}});
    CHECK(l.empty());
    CHECK(r.empty());
    // A = 2 left of the root, C = 1 left of B.
    CHECK(extract_sigma(Nat{parse_tree("((. .) ((. .) .))"), {2, 1}, {1}}).first == Perm{2, 1});
}

TEST_CASE("statistics")
{
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : all_permutations(n)) {
            CHECK(inversions(p) == inversions_naive(p));
            CHECK(imaj(p) == imaj_naive(p));
            CHECK(inverse(inverse(p)) == p);
        }
    Perm id{1, 2, 3, 4, 5};
    CHECK(inversions(id) == 0);
    CHECK(imaj(id) == 0);
    CHECK(parse_statistic("inv") == Statistic::inv);
    CHECK(parse_statistic("imaj") == Statistic::imaj);
    CHECK_THROWS_AS(parse_statistic("maj"), std::invalid_argument);
}

TEST_CASE("standardization")
{
    CHECK(standardize(std::vector<int>{3, 6, 4, 8, 2}) == Perm{2, 4, 3, 5, 1});
    CHECK(standardize(std::vector<int>{2, 5, 9}) == Perm{1, 2, 3});
    CHECK_THROWS_AS(standardize(std::vector<int>{1, 1}), std::invalid_argument);
    CHECK(append_max({2, 1}) == Perm{2, 1, 3});
}

TEST_CASE("permutation pumping")
{
    CHECK(pump_perm(Perm{2, 1}, Perm{1, 2}) ==
          parse_sum({"21345", "21435", "21534", "31425", "31524", "41523", "32415", "32514", "42513", "43512"}));
    CHECK(pump_perm(Perm{}, Perm{}) == PermSum{{{1}, 1}});
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 5; ++n)
            for (const auto& s : all_permutations(m))
                for (const auto& u : all_permutations(n)) {
                    const PermSum p = pump_perm(s, u);
                    long long total = 0;
                    for (const auto& [w, k] : p) total += k;
                    CHECK(Integer(total) == binomial(m + n + 1, n));
                    CHECK(p == pump_by_filter(s, u));
                }
}

TEST_CASE("pumping matches grafting of NATs")
{
    for (int n = 2; n <= 6; ++n)
        for (const auto& b : enumerate_binary_trees(n)) {
            if (b.left().empty() || b.right().empty()) continue;
            const auto whole = enumerate_nats_of_shape(b);
            for (const auto& c : enumerate_nats_of_shape(b.left()))
                for (const auto& d : enumerate_nats_of_shape(b.right())) {
                    // Pairs over the grafted NATs form the product of both pumpings.
                    std::multiset<std::pair<Perm, Perm>> got, want;
                    for (const auto& t : whole)
                        if (restrict_to_left(t) == c && restrict_to_right(t) == d) got.insert(extract_sigma(t));
                    const auto [pl, pr] = pump_pair(extract_sigma(c), extract_sigma(d));
                    for (const auto& l : as_multiset(pl))
                        for (const auto& r : as_multiset(pr)) want.insert({l, r});
                    CHECK(got == want);
                }
        }
}
