#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nattree/nat.hpp"
#include "nattree/poly2.hpp"
#include "nattree/trees.hpp"

namespace nattree {

/// Labelled two-coloured ordered tree. Red vertices come from left children
/// of the NAT and blue vertices from right children; the root carries the
/// pair of maximal labels.
struct NotTree {
    int red_label = 1;
    int blue_label = 1;
    std::vector<OrderedTree> children;

    int size() const;
    friend bool operator==(const NotTree&, const NotTree&) = default;
};

enum class NotViolation {
    none,
    uncoloured,        // a non-root vertex has no colour
    root_order,        // a blue root child precedes a red one
    colour_alternation,
    label_set,         // labels of one colour are not exactly 1..count
    root_labels,       // root pair differs from (count_red + 1, count_blue + 1)
    descendant_order,  // a same-colour descendant is not smaller
    sibling_order,     // a same-colour right sibling is not smaller
};

struct NotReport {
    NotViolation violation = NotViolation::none;
    std::string message;
    bool ok() const { return violation == NotViolation::none; }
};

NotReport validate_not(const NotTree& o);

NotTree xi(const Nat& t);
/// Throws std::invalid_argument naming the violated clause.
Nat xi_inverse(const NotTree& o);

/// Every valid NotTree on n vertices, from ordered trees, colourings and
/// label permutations filtered by validate_not.
std::vector<NotTree> enumerate_not_trees(int n);

struct Letter {
    Colour colour = Colour::red;
    int value = 0;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct WordPair {
    std::vector<Letter> first;
    std::vector<Letter> second;
    friend auto operator<=>(const WordPair&, const WordPair&) = default;
};

enum class WordViolation {
    none,
    uncoloured,
    letter_set,      // letters of one colour are not exactly 1..count
    block_order,     // a same-colour block is not decreasing
    first_ending,    // first word is non-empty and does not end red
    second_ending,   // second word is non-empty and does not end blue
};

struct WordReport {
    WordViolation violation = WordViolation::none;
    std::string message;
    bool ok() const { return violation == WordViolation::none; }
};

WordReport validate_words(const WordPair& wp);

/// Post-order readings of the red and blue root subtrees.
WordPair omega(const NotTree& o);
/// Throws std::invalid_argument naming the violated clause.
NotTree omega_inverse(const WordPair& wp);

/// Every pair of words on w red and h blue letters satisfying validate_words.
std::vector<WordPair> enumerate_word_pairs(int w, int h);

/// One cycle: (red set, blue set) pairs, sets descending. The pair holding
/// the cycle's anchor (its largest letter of the cycle colour) comes first.
using CyclePair = std::pair<std::vector<int>, std::vector<int>>;
using Cycle = std::vector<CyclePair>;

struct FourTuple {
    std::vector<int> red_singletons;   // ascending
    std::vector<int> blue_singletons;  // ascending
    std::vector<Cycle> red_cycles;     // by anchor, descending
    std::vector<Cycle> blue_cycles;
    friend bool operator==(const FourTuple&, const FourTuple&) = default;
};

FourTuple four_tuple(const WordPair& wp);
WordPair four_tuple_inverse(const FourTuple& ft);

/// Same cycle up to rotation.
bool same_cycle(const Cycle& a, const Cycle& b);

/// Hook number read off the ordered tree: one plus the number of vertices
/// starting a new hook.
int hooks_from_not(const NotTree& o);

/// Univariate polynomials are QPoly2 in variable 0.
QPoly2 q_stirling(int n, int p);
/// Sum over restricted growth strings; the oracle for q_stirling.
QPoly2 q_stirling_brute(int n, int p);

/// Rising factorial a(a+1)...(a+m-1) at a = alpha + beta (variables 0, 1).
QPoly2 rising_alpha_beta(int m);

/// Summands of the hook-number sum in (alpha, beta), keyed by p >= 1.
std::map<int, QPoly2> stirling_summands(int w, int h);
QPoly2 stirling_count(int w, int h);

/// Same statistics read off enumerated NATs: alpha^LO beta^RO, keyed by
/// hook number.
std::map<int, QPoly2> refined_counts_by_hooks(int w, int h);

}  // namespace nattree
