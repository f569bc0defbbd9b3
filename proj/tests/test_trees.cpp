#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nattree/trees.hpp"
#include "nattree/numeric.hpp"

using namespace nattree;

namespace {

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// Peel off the root hook and recurse on the remaining forest.
int hooks_by_peeling(const BinaryTree& t)
{
    if (t.empty()) return 0;
    int count = 1;
    std::vector<BinaryTree> rest;
    for (BinaryTree v = t.left(); !v.empty(); v = v.left()) rest.push_back(v.right());
    for (BinaryTree v = t.right(); !v.empty(); v = v.right()) rest.push_back(v.left());
    for (const auto& r : rest) count += hooks_by_peeling(r);
    return count;
}

int leaf_parents(const OrderedTree& t)
{
    int n = 0;
    bool has_leaf = false;
    for (const auto& c : t.children) {
        if (c.children.empty()) has_leaf = true;
        n += leaf_parents(c);
    }
    return n + has_leaf;
}

}  // namespace

TEST_CASE("tree strings round trip")
{
    for (const char* s : {".", "(. .)", "((. .) .)", "(((. .) (. .)) ((. (. .)) (. .)))"})
        CHECK(to_string(parse_tree(s)) == s);
    CHECK(parse_tree(".").empty());
    CHECK(parse_tree("  ( ( .  . )   . ) ") == parse_tree("((. .) .)"));
    for (const char* bad : {"", "(", "(. .", "(. . .)", "x", "(. .))", "((. .)"}) CHECK_THROWS_AS(parse_tree(bad), std::invalid_argument);
}

TEST_CASE("enumeration gives Catalan numbers")
{
    CHECK(enumerate_binary_trees(0).size() == 1);
    CHECK(enumerate_binary_trees(0).front().empty());
    for (int n = 0; n <= 12; ++n) CHECK(Integer(enumerate_binary_trees(n).size()) == catalan(n));
    const auto eight = enumerate_binary_trees(8);
    CHECK(eight.size() == 1430);
    CHECK(std::is_sorted(eight.begin(), eight.end()));
    CHECK(std::adjacent_find(eight.begin(), eight.end()) == eight.end());
}

TEST_CASE("vertex statistics")
{
    const auto single = vertex_stats(parse_tree("(. .)"));
    CHECK(single.left_count == 0);
    CHECK(single.right_count == 0);
    CHECK(single.leftmost_left == 0);
    CHECK(single.rightmost_right == 0);

    // Root; A left; B right with left child C.
    const BinaryTree t = parse_tree("((. .) ((. .) .))");
    const Layout lay = layout(t);
    const auto st = vertex_stats(t);
    REQUIRE(lay.size() == 4);
    CHECK(lay.left_vertices == std::vector<int>{1, 3});
    CHECK(lay.right_vertices == std::vector<int>{2});
    CHECK(st.el[1] == 1);
    CHECK(st.el[3] == 1);
    CHECK(st.er[2] == 1);
    CHECK(st.leftmost_left == 1);
    CHECK(st.rightmost_right == 1);
}

TEST_CASE("hooks partition the vertices")
{
    CHECK(hook_partition(parse_tree("(. .)")).hook_number() == 1);
    CHECK(hook_partition(parse_tree("((. .) (. .))")).hook_number() == 1);
    CHECK(hook_partition(parse_tree("(((. .) .) .)")).hook_number() == 1);
    CHECK(hook_partition(parse_tree("(. (. (. .)))")).hook_number() == 1);
    CHECK(hook_partition(parse_tree("((. (. .)) .)")).hook_number() == 2);
    CHECK(hook_partition(parse_tree("(. ((. .) .))")).hook_number() == 2);

    for (int n = 1; n <= 9; ++n)
        for (const auto& t : enumerate_binary_trees(n)) {
            const auto hp = hook_partition(t);
            std::vector<int> seen;
            for (const auto& h : hp.hooks) seen.insert(seen.end(), h.begin(), h.end());
            std::sort(seen.begin(), seen.end());
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            CHECK(seen == all);
            CHECK(hp.hook_number() >= 1);
            CHECK(hp.hook_number() == hooks_by_peeling(t));
            const auto root_hook = hook_of(layout(t), 0);
            CHECK((hp.hook_number() == 1) == (static_cast<int>(root_hook.size()) == n));
        }
}

TEST_CASE("ordered trees and leaf parents")
{
    const auto one = enumerate_ordered_trees(1);
    REQUIRE(one.size() == 1);
    CHECK(leaf_parent_count(one[0]) == 0);
    const auto two = enumerate_ordered_trees(2);
    REQUIRE(two.size() == 1);
    CHECK(leaf_parent_count(two[0]) == 1);

    std::multiset<int> four;
    for (const auto& t : enumerate_ordered_trees(4)) four.insert(leaf_parent_count(t));
    CHECK(four == std::multiset<int>{1, 1, 1, 2, 2});

    for (int n = 1; n <= 9; ++n) {
        const auto ts = enumerate_ordered_trees(n);
        CHECK(Integer(ts.size()) == catalan(n - 1));
        for (const auto& t : ts) {
            CHECK(t.size() == n);
            CHECK(leaf_parent_count(t) == leaf_parents(t));
        }
    }
}

TEST_CASE("hook numbers and leaf parents share a distribution")
{
    for (int n = 1; n <= 10; ++n) {
        std::map<int, int> hooks, leaves;
        for (const auto& t : enumerate_binary_trees(n)) ++hooks[hook_partition(t).hook_number()];
        for (const auto& t : enumerate_ordered_trees(n + 1)) ++leaves[leaf_parent_count(t)];
        CHECK(hooks == leaves);
        if (n == 3) CHECK(hooks == std::map<int, int>{{1, 3}, {2, 2}});
    }
}
