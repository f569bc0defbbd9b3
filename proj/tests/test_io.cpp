#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "nattree/io.hpp"
#include "nattree/qhook.hpp"

using namespace nattree;

TEST_CASE("binary tree json")
{
    for (const auto& b : enumerate_binary_trees(4)) CHECK(tree_from_json(to_json(b)) == b);
    CHECK(tree_from_json(Json("((. .) .)")) == parse_tree("((. .) .)"));
    CHECK_THROWS_AS(tree_from_json(Json(3)), std::invalid_argument);
}

TEST_CASE("nat json")
{
    const Nat t = fixtures::figure1();
    CHECK(nat_from_json(to_json(t)) == t);
    Json bad = to_json(t);
    bad["left"][0] = 2;
    CHECK_THROWS_AS(nat_from_json(bad), std::invalid_argument);
    for (const auto& u : enumerate_nats_by_size(2, 2)) CHECK(nat_from_json(Json::parse(to_json(u).dump())) == u);
}

TEST_CASE("numbers and polynomials")
{
    CHECK(to_json(Integer(7)) == Json(7));
    const Integer big = factorial(30);
    CHECK(to_json(big).is_string());
    CHECK(to_json(Rational(3, 6)) == Json("1/2"));
    const QPoly2 p = q_hook_product(parse_tree("((. .) (. (. .)))"));
    CHECK(qpoly_from_json(to_json(p)) == p);
}

TEST_CASE("bijection objects")
{
    const NotTree o = fixtures::figure2_not();
    CHECK(not_from_json(to_json(o)) == o);
    const WordPair wp = fixtures::figure2_words();
    const auto back = words_from_json(to_json(wp));
    CHECK(back.first == wp.first);
    CHECK(back.second == wp.second);
    CHECK(to_string(parse_letter("b11")) == "b11");
    CHECK_THROWS_AS(parse_letter("g3"), std::invalid_argument);
    const FourTuple ft = fixtures::figure2_tuple();
    CHECK(four_tuple_from_json(to_json(ft)) == ft);
}

TEST_CASE("dk json")
{
    const DkNat t = fixtures::figure3_dim32();
    CHECK(dk_from_json(to_json(t)) == t);
    CHECK_THROWS_AS(dk_from_json(Json::parse(fixtures::figure3_dim31_printed())), std::invalid_argument);
    CHECK_NOTHROW(dk_from_json(Json::parse(fixtures::figure3_dim31_printed()), false));
    const GeoNat g = to_geometric(t);
    const GeoNat h = geo_from_json(to_json(g));
    CHECK(h.d == g.d);
    CHECK(h.box == g.box);
    CHECK(h.points == g.points);
}

TEST_CASE("series output")
{
    const Egf s = gfn_closed(3);
    std::ostringstream csv, lines;
    write_csv(csv, s);
    write_json_lines(lines, s);
    CHECK(csv.str().find("1,1,") != std::string::npos);
    int rows = 0;
    std::istringstream in(lines.str());
    for (std::string line; std::getline(in, line); ++rows) CHECK_NOTHROW(Json::parse(line));
    CHECK(rows == static_cast<int>(s.terms().size()));
}

TEST_CASE("renderers")
{
    const Nat t = fixtures::figure1();
    const std::string dot = to_dot(t);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("tailport=sw") != std::string::npos);
    CHECK(dot.find("tailport=se") != std::string::npos);
    CHECK(to_dot(t) == dot);
    CHECK(std::count(dot.begin(), dot.end(), '>') >= 21);
    const std::string text = to_text(t);
    CHECK(std::count(text.begin(), text.end(), '\n') == 22);
    CHECK(to_dot(fixtures::figure2_not()).rfind("digraph", 0) == 0);
    CHECK(to_text(fixtures::figure3_dim32()).find("(6,5,4)") != std::string::npos);
}
