#pragma once

#include <string>
#include <vector>

#include "nattree/bijections.hpp"
#include "nattree/io.hpp"
#include "nattree/nat.hpp"
#include "nattree/natdk.hpp"

namespace fixtures {

inline const char* figure1_shape =
    "(((. .) (((. .) ((. .) ((. .) .))) (. .))) (. ((. ((. .) .)) (. (((. (. .)) .) (. .))))))";

inline nattree::Nat figure1()
{
    return nattree::Nat{nattree::parse_tree(figure1_shape), {10, 2, 6, 1, 4, 3, 9, 8, 7, 5},
                        {10, 8, 6, 9, 11, 7, 5, 4, 3, 2, 1}};
}

inline const std::vector<int> figure1_sigma_left{2, 1, 4, 3, 6, 10, 8, 9, 5, 7};
inline const std::vector<int> figure1_sigma_right{1, 2, 3, 4, 5, 7, 11, 9, 6, 8, 10};

// Points of the geometric picture as (red, blue) coordinates.
inline const std::vector<std::vector<int>> figure1_points{
    {11, 12}, {11, 11}, {10, 10}, {10, 9}, {6, 8}, {11, 7}, {6, 6}, {9, 5}, {11, 4}, {11, 3}, {5, 2},
    {11, 1},  {10, 12}, {9, 7},   {8, 5},  {7, 3}, {6, 10}, {5, 3}, {4, 8}, {3, 6},  {2, 12}, {1, 10}};

inline nattree::OrderedTree red(int label, std::vector<nattree::OrderedTree> kids = {})
{
    return nattree::OrderedTree{nattree::Colour::red, label, std::move(kids)};
}

inline nattree::OrderedTree blue(int label, std::vector<nattree::OrderedTree> kids = {})
{
    return nattree::OrderedTree{nattree::Colour::blue, label, std::move(kids)};
}

inline nattree::NotTree figure2_not()
{
    nattree::NotTree o;
    o.red_label = 11;
    o.blue_label = 12;
    o.children = {
        red(10, {blue(10, {red(6, {blue(8, {red(4)}), blue(6, {red(3)})}), red(1)}), blue(9)}),
        red(2),
        blue(11),
        blue(7, {red(9, {blue(5, {red(8)})})}),
        blue(4),
        blue(3, {red(7), red(5, {blue(2)})}),
        blue(1),
    };
    return o;
}

inline nattree::WordPair figure2_words()
{
    auto word = [](std::vector<std::string> ls) {
        std::vector<nattree::Letter> w;
        for (const auto& l : ls) w.push_back(nattree::parse_letter(l));
        return w;
    };
    return {word({"r4", "b8", "r3", "b6", "r6", "r1", "b10", "b9", "r10", "r2"}),
            word({"b11", "r8", "b5", "r9", "b7", "b4", "r7", "b2", "r5", "b3", "b1"})};
}

inline nattree::FourTuple figure2_tuple()
{
    nattree::FourTuple ft;
    ft.red_singletons = {2};
    ft.blue_singletons = {1, 4, 11};
    ft.red_cycles = {{{{10, 4}, {8}}, {{3}, {6}}, {{6, 1}, {10, 9}}}};
    ft.blue_cycles = {{{{9}, {7}}, {{8}, {5}}}, {{{5}, {3}}, {{7}, {2}}}};
    return ft;
}

inline const char* figure3_32 = R"({"d": 3, "k": 2, "root": [6, 5, 4], "children": {
  "1,2": {"tuple": [5, 3, null], "children": {
    "1,2": {"tuple": [3, 1, null]},
    "1,3": {"tuple": [2, null, 2]}}},
  "1,3": {"tuple": [1, null, 1]},
  "2,3": {"tuple": [null, 4, 3], "children": {
    "1,2": {"tuple": [4, 2, null]}}}}})";

inline std::string figure3_31_with(int disputed)
{
    return R"({"d": 3, "k": 1, "root": [5, 7, 6], "children": {
  "1": {"tuple": [4, null, null], "children": {
    "1": {"tuple": [1, null, null]},
    "3": {"tuple": [null, null, 5], "children": {
      "2": {"tuple": [null, 5, null], "children": {
        "2": {"tuple": [null, 3, null]},
        "3": {"tuple": [null, null, )" +
           std::to_string(disputed) + R"(]}}},
      "3": {"tuple": [null, null, 2]}}}}},
  "2": {"tuple": [null, 4, null], "children": {
    "3": {"tuple": [null, null, 1]}}},
  "3": {"tuple": [null, null, 4], "children": {
    "1": {"tuple": [2, null, null]},
    "2": {"tuple": [null, 6, null], "children": {
      "1": {"tuple": [3, null, null], "children": {
        "2": {"tuple": [null, 2, null]}}},
      "2": {"tuple": [null, 1, null]}}}}}}})";
}

inline nattree::DkNat figure3_dim32() { return nattree::dk_from_json(nattree::Json::parse(figure3_32)); }
inline nattree::DkNat figure3_dim31() { return nattree::dk_from_json(nattree::Json::parse(figure3_31_with(3))); }
// As printed: axis 3 repeats 4 and skips 3.
inline std::string figure3_dim31_printed() { return figure3_31_with(4); }

}  // namespace fixtures
