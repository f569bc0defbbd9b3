#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "nattree/natdk.hpp"
#include "nattree/series.hpp"

using namespace nattree;

namespace {

// Same shape read in dimension (d-1, k); only valid when axis d is unused.
DkShape drop_last_axis(const DkShape& m, int v = 0)
{
    std::vector<std::pair<Direction, DkShape>> kids;
    for (int c : m.children(v)) kids.emplace_back(m.direction(c), drop_last_axis(m, c));
    return DkShape::join(m.d() - 1, m.k(), std::move(kids));
}

bool avoids_last_axis(const DkShape& m)
{
    for (int v = 1; v < m.size(); ++v)
        if (m.direction(v).back() == m.d()) return false;
    return true;
}

std::set<std::vector<int>> point_set(const GeoNat& g)
{
    std::set<std::vector<int>> s;
    for (const auto& p : g.points) s.insert(p.coords);
    return s;
}

}  // namespace

TEST_CASE("directions")
{
    CHECK(directions(3, 2) == std::vector<Direction>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(directions(3, 1).size() == 3);
    CHECK(parse_direction("1,3") == Direction{1, 3});
    CHECK(direction_string(Direction{2, 3}) == "2,3");
    CHECK_THROWS_AS(parse_direction("3,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_direction("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(directions(2, 3), std::invalid_argument);
}

TEST_CASE("figure 3 trees")
{
    const DkNat t32 = fixtures::figure3_dim32();
    CHECK(validate_dk(t32).ok());
    CHECK(root_label_sizes(t32.shape) == std::vector<int>{6, 5, 4});
    CHECK(t32.labels[0] == Tuple{6, 5, 4});

    const DkNat t31 = fixtures::figure3_dim31();
    CHECK(validate_dk(t31).ok());
    CHECK(root_label_sizes(t31.shape) == std::vector<int>{5, 7, 6});

    CHECK_THROWS_AS(dk_from_json(Json::parse(fixtures::figure3_dim31_printed())), std::invalid_argument);
    DkNat printed = t31;
    for (auto& t : printed.labels)
        if (t == Tuple{0, 0, 3}) t = Tuple{0, 0, 4};
    CHECK(validate_dk(printed).violation == DkViolation::duplicate);

    const auto brute = enumerate_dk(t32.shape, EnumerationMode::brute_force);
    CHECK(Integer(brute.size()) == count_dk_hook(t32.shape));
    CHECK(std::binary_search(brute.begin(), brute.end(), t32));
    const auto rec31 = enumerate_dk(t31.shape);
    CHECK(Integer(rec31.size()) == count_dk_hook(t31.shape));
    CHECK(std::find(rec31.begin(), rec31.end(), t31) != rec31.end());
}

TEST_CASE("single vertex")
{
    for (int d = 1; d <= 4; ++d)
        for (int k = 1; k <= d; ++k) {
            const DkShape m = DkShape::leaf(d, k);
            CHECK(root_label_sizes(m) == std::vector<int>(d, 1));
            CHECK(count_dk_hook(m) == 1);
            CHECK(validate_dk(DkNat{m, {Tuple(d, 1)}}).ok());
        }
}

TEST_CASE("validation clauses")
{
    const DkNat t = fixtures::figure3_dim32();
    DkNat bad = t;
    bad.labels[1] = Tuple{5, 3, 1};
    CHECK(validate_dk(bad).violation == DkViolation::structure);
    bad = t;
    bad.labels[0] = Tuple{6, 5};
    CHECK(validate_dk(bad).violation == DkViolation::structure);
    bad = t;
    std::swap(bad.labels[1][0], bad.labels[2][0]);
    CHECK(validate_dk(bad).violation == DkViolation::ancestor_order);
    bad = t;
    bad.labels[0] = Tuple{7, 5, 4};
    CHECK(validate_dk(bad).violation == DkViolation::interval);
}

TEST_CASE("hook formula and enumeration for small shapes")
{
    for (auto [d, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{2, 1}, std::pair{3, 3}})
        for (int n = 1; n <= 4; ++n)
            for (const auto& m : enumerate_dk_shapes(d, k, n)) {
                CHECK(m.size() == n);
                auto rec = enumerate_dk(m);
                std::sort(rec.begin(), rec.end());
                const auto brute = enumerate_dk(m, EnumerationMode::brute_force);
                CHECK(rec == brute);
                CHECK(Integer(rec.size()) == count_dk_hook(m));
                const auto w = root_label_sizes(m);
                for (const auto& t : rec) {
                    CHECK(t.labels[0] == Tuple(w.begin(), w.end()));
                    // Non-root i-components are exactly 1..w_i - 1.
                    for (int i = 0; i < d; ++i) {
                        std::vector<int> vals;
                        for (int v = 1; v < m.size(); ++v)
                            if (t.labels[v][i] > 0) vals.push_back(t.labels[v][i]);
                        std::sort(vals.begin(), vals.end());
                        std::vector<int> want(w[i] - 1);
                        std::iota(want.begin(), want.end(), 1);
                        CHECK(vals == want);
                    }
                    const GeoNat g = to_geometric(t);
                    CHECK(validate_geometric(g).ok());
                    CHECK(from_geometric(g) == t);
                }
                if (d == 3 && k < 3 && avoids_last_axis(m)) CHECK(count_dk_hook(drop_last_axis(m)) == count_dk_hook(m));
            }
}

TEST_CASE("shape counts")
{
    // Trees with at most one child per direction: 1, c, ... for c directions.
    CHECK(enumerate_dk_shapes(2, 1, 3).size() == 5);
    CHECK(enumerate_dk_shapes(3, 1, 2).size() == 3);
    CHECK(enumerate_dk_shapes(3, 1, 3).size() == 12);
    CHECK(enumerate_dk_shapes(3, 3, 4).size() == 1);
}

TEST_CASE("counts by geometric size match the fixed point")
{
    for (auto [d, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{2, 1}}) {
        std::map<std::vector<int>, Integer> by_size;
        for (int n = 1; n <= 4; ++n)
            for (const auto& m : enumerate_dk_shapes(d, k, n)) {
                auto w = root_label_sizes(m);
                for (int& x : w) --x;
                by_size[w] += count_dk_hook(m);
            }
        const Egf counts = counts_view(fixed_point_dk(d, k, 3 * k));
        std::map<std::vector<int>, Integer> from_series;
        for (const auto& [e, c] : counts.terms()) {
            REQUIRE(is_integral(c));
            from_series[e] = numerator_of(c);
        }
        CHECK(by_size == from_series);
    }
}

TEST_CASE("dimension (2,1) is the binary case")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& b : enumerate_binary_trees(n)) {
            const DkShape m = dk_shape_of(b);
            CHECK(binary_tree_of(m) == b);
            CHECK(count_dk_hook(m) == count_nats_hook(b));
            const auto nats = enumerate_nats_of_shape(b);
            std::vector<DkNat> mapped;
            for (const auto& t : nats) {
                const DkNat dk = dk_of(t);
                CHECK(validate_dk(dk).ok());
                CHECK(nat_of(dk) == t);
                mapped.push_back(dk);
            }
            auto direct = enumerate_dk(m);
            std::sort(direct.begin(), direct.end());
            std::sort(mapped.begin(), mapped.end());
            CHECK(direct == mapped);
        }
    const GeoNat g = to_geometric(dk_of(fixtures::figure1()));
    CHECK(point_set(g) == std::set<std::vector<int>>(fixtures::figure1_points.begin(), fixtures::figure1_points.end()));
    CHECK(nat_of(from_geometric(g)) == fixtures::figure1());
}

TEST_CASE("geometric clauses")
{
    const GeoNat g = to_geometric(fixtures::figure3_dim32());
    CHECK(validate_geometric(g).ok());
    CHECK(from_geometric(g) == fixtures::figure3_dim32());

    GeoNat untyped = g;
    for (auto& p : untyped.points) p.type.clear();
    CHECK(from_geometric(untyped) == fixtures::figure3_dim32());

    GeoNat bad = g;
    bad.box = {6, 5, 5};
    CHECK(validate_geometric(bad).violation == GeoViolation::box);

    bad = g;
    bad.points.erase(bad.points.begin());
    CHECK_FALSE(validate_geometric(bad).ok());
    CHECK_THROWS_AS(from_geometric(bad), std::invalid_argument);

    bad = g;
    bad.points.push_back(bad.points.back());
    CHECK(validate_geometric(bad).violation == GeoViolation::malformed);

    bad = g;
    bad.points.push_back(GeoPoint{{1, 1, 1}, {}});
    CHECK_FALSE(validate_geometric(bad).ok());

    const GeoNat g31 = to_geometric(fixtures::figure3_dim31());
    CHECK(validate_geometric(g31).ok());
    CHECK(from_geometric(g31) == fixtures::figure3_dim31());
}
