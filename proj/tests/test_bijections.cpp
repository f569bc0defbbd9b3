#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "nattree/bijections.hpp"

using namespace nattree;

namespace {

QPoly2 one() { return QPoly2(Integer(1)); }
QPoly2 q() { return QPoly2::monomial(1, 0); }

// Set partitions of {1..n} into p blocks as restricted growth strings,
// weighted by q^(size of the block of 1, minus one).
QPoly2 stirling_by_blocks(int n, int p)
{
    QPoly2 sum;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            if (used == p) sum += QPoly2::monomial(static_cast<int>(std::count(rgs.begin(), rgs.end(), 0)) - 1, 0);
            return;
        }
        for (int b = 0; b <= used && b < p; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    if (n == 0) return p == 0 ? one() : QPoly2{};
    rgs[0] = 0;
    rec(1, 1);
    return sum;
}

}  // namespace

TEST_CASE("figure 2 tree, words and tuple")
{
    const Nat t = fixtures::figure1();
    const NotTree o = xi(t);
    CHECK(validate_not(o).ok());
    CHECK(o == fixtures::figure2_not());
    CHECK(xi_inverse(o) == t);
    CHECK(hooks_from_not(o) == 8);
    CHECK(hook_partition(t.shape).hook_number() == 8);

    const WordPair wp = omega(o);
    CHECK(wp == fixtures::figure2_words());
    CHECK(omega_inverse(wp) == o);

    const FourTuple ft = four_tuple(wp);
    const FourTuple gold = fixtures::figure2_tuple();
    CHECK(ft.red_singletons == gold.red_singletons);
    CHECK(ft.blue_singletons == gold.blue_singletons);
    REQUIRE(ft.red_cycles.size() == 1);
    REQUIRE(ft.blue_cycles.size() == 2);
    CHECK(same_cycle(ft.red_cycles[0], gold.red_cycles[0]));
    // Blue cycles in either order.
    const bool direct = same_cycle(ft.blue_cycles[0], gold.blue_cycles[0]) && same_cycle(ft.blue_cycles[1], gold.blue_cycles[1]);
    const bool swapped = same_cycle(ft.blue_cycles[0], gold.blue_cycles[1]) && same_cycle(ft.blue_cycles[1], gold.blue_cycles[0]);
    CHECK((direct || swapped));
    CHECK(four_tuple_inverse(ft) == wp);
    // The cycle as printed starts elsewhere.
    CHECK(same_cycle(Cycle{{{8}, {5}}, {{9}, {7}}}, Cycle{{{9}, {7}}, {{8}, {5}}}));
    CHECK_FALSE(same_cycle(Cycle{{{8}, {5}}, {{9}, {7}}}, Cycle{{{9}, {5}}, {{8}, {7}}}));
}

TEST_CASE("single vertex")
{
    const Nat t{parse_tree("(. .)"), {}, {}};
    const NotTree o = xi(t);
    CHECK(o.red_label == 1);
    CHECK(o.blue_label == 1);
    CHECK(o.children.empty());
    const WordPair wp = omega(o);
    CHECK(wp.first.empty());
    CHECK(wp.second.empty());
    CHECK(four_tuple(wp) == FourTuple{});
}

TEST_CASE("xi and omega are bijections onto their images")
{
    for (int n = 1; n <= 6; ++n) {
        std::vector<NotTree> images;
        std::map<std::pair<int, int>, std::set<WordPair>> words_hit;
        int total = 0;
        for (const auto& b : enumerate_binary_trees(n))
            for (const auto& t : enumerate_nats_of_shape(b)) {
                ++total;
                const NotTree o = xi(t);
                CHECK(validate_not(o).ok());
                CHECK(xi_inverse(o) == t);
                CHECK(hooks_from_not(o) == hook_partition(b).hook_number());
                images.push_back(o);
                const WordPair wp = omega(o);
                CHECK(validate_words(wp).ok());
                CHECK(omega_inverse(wp) == o);
                CHECK(four_tuple_inverse(four_tuple(wp)) == wp);
                words_hit[{b.left_count(), b.right_count()}].insert(wp);
            }
        const auto all_nots = enumerate_not_trees(n);
        CHECK(static_cast<int>(all_nots.size()) == total);
        for (const auto& o : all_nots) CHECK(std::find(images.begin(), images.end(), o) != images.end());
        for (const auto& [wh, hit] : words_hit) {
            const auto all_words = enumerate_word_pairs(wh.first, wh.second);
            CHECK(std::set<WordPair>(all_words.begin(), all_words.end()) == hit);
        }
    }
}

TEST_CASE("invalid inputs are rejected")
{
    NotTree o = fixtures::figure2_not();
    std::swap(o.children[1], o.children[2]);
    CHECK(validate_not(o).violation == NotViolation::root_order);
    CHECK_THROWS_AS(xi_inverse(o), std::invalid_argument);

    o = fixtures::figure2_not();
    o.children[0].children[0].colour = Colour::red;
    CHECK_FALSE(validate_not(o).ok());

    o = fixtures::figure2_not();
    o.red_label = 12;
    CHECK(validate_not(o).violation == NotViolation::root_labels);

    WordPair wp = fixtures::figure2_words();
    std::swap(wp.first[7], wp.first[9]);
    CHECK_FALSE(validate_words(wp).ok());
    CHECK_THROWS_AS(omega_inverse(wp), std::invalid_argument);

    const Letter r1{Colour::red, 1}, b1{Colour::blue, 1};
    CHECK(validate_words(WordPair{{r1, b1}, {}}).violation == WordViolation::first_ending);
    CHECK(validate_words(WordPair{{}, {b1, r1}}).violation == WordViolation::second_ending);
    CHECK(validate_words(WordPair{{r1}, {b1}}).ok());

    wp = fixtures::figure2_words();
    wp.second.pop_back();
    CHECK(validate_words(wp).violation == WordViolation::letter_set);
}

TEST_CASE("q-Stirling numbers")
{
    CHECK(q_stirling(2, 1) == q());
    CHECK(q_stirling(3, 2) == q() * Integer(2) + one());
    for (int n = 1; n <= 8; ++n)
        for (int p = 1; p <= n; ++p) {
            CHECK(q_stirling(n, p) == stirling_by_blocks(n, p));
            CHECK(q_stirling_brute(n, p) == stirling_by_blocks(n, p));
        }
}

TEST_CASE("hook-number summands")
{
    const QPoly2 a = QPoly2::monomial(1, 0), b = QPoly2::monomial(0, 1);
    CHECK(stirling_count(1, 1) == a * b + a + b);
    CHECK(stirling_count(0, 0) == one());
    CHECK(stirling_summands(0, 0) == std::map<int, QPoly2>{{1, one()}});
    CHECK(rising_alpha_beta(0) == one());
    CHECK(rising_alpha_beta(2) == (a + b) * (a + b + one()));

    for (int w = 0; w <= 4; ++w)
        for (int h = 0; w + h <= 5; ++h) {
            std::map<int, QPoly2> refined;
            std::map<int, Integer> plain;
            for (const auto& t : enumerate_nats_by_size(w, h)) {
                const auto s = nat_stats(t);
                refined[s.hook_number] += QPoly2::monomial(s.leftmost_left, s.rightmost_right);
                plain[s.hook_number] += 1;
            }
            const auto summands = stirling_summands(w, h);
            CHECK(summands == refined);
            CHECK(refined_counts_by_hooks(w, h) == refined);
            for (const auto& [p, poly] : summands) CHECK(poly.evaluate(Integer(1), Integer(1)) == plain[p]);
        }
}
