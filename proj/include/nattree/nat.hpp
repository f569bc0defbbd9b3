#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "nattree/numeric.hpp"
#include "nattree/trees.hpp"

namespace nattree {

/// A non-ambiguous tree: a binary tree whose left children carry the labels
/// 1..|LV| and right children 1..|RV|, strictly decreasing along ancestry
/// within each colour.
///
/// Labels are stored as arrays in pre-order of the left (resp. right)
/// children, which is also the serialized form.
struct Nat {
    BinaryTree shape;
    std::vector<int> left_labels;
    std::vector<int> right_labels;

    int size() const { return shape.size(); }
    int width_left() const { return shape.left_count() + 1; }
    int width_right() const { return shape.right_count() + 1; }

    friend bool operator==(const Nat&, const Nat&) = default;
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b)
    {
        if (auto c = a.shape <=> b.shape; c != 0) return c;
        if (auto c = a.left_labels <=> b.left_labels; c != 0) return c;
        return a.right_labels <=> b.right_labels;
    }
};

enum class NatViolation {
    none,
    empty_shape,
    label_count,      // label array length differs from the number of children
    label_range,      // label outside 1..|LV| or 1..|RV|
    duplicate_label,
    ancestor_order,   // a same-side ancestor does not carry a larger label
};

struct NatReport {
    NatViolation violation = NatViolation::none;
    int vertex = -1;  // pre-order id of the offending vertex, when known
    std::string message;

    bool ok() const { return violation == NatViolation::none; }
    bool structural() const
    {
        return violation == NatViolation::label_count || violation == NatViolation::label_range ||
               violation == NatViolation::duplicate_label;
    }
};

NatReport validate_nat(const BinaryTree& shape, std::span<const int> left_labels,
                       std::span<const int> right_labels);
inline NatReport validate_nat(const Nat& t) { return validate_nat(t.shape, t.left_labels, t.right_labels); }

enum class EnumerationMode { recursive, brute_force };

/// Every NAT of the given shape exactly once. Recursive mode splits the label
/// sets with binomial choices; brute-force mode filters every pair of label
/// permutations through validate_nat and is bounded by brute_force_budget().
std::vector<Nat> enumerate_nats_of_shape(const BinaryTree& shape,
                                         EnumerationMode mode = EnumerationMode::recursive);

/// |LV|! |RV|! / (prod EL(U) * prod ER(U)).
Integer count_nats_hook(const BinaryTree& shape);

struct NatStats {
    int size = 0;
    int width_left = 0;
    int width_right = 0;
    int leftmost_left = 0;    // LO
    int rightmost_right = 0;  // RO
    int hook_number = 0;
};

NatStats nat_stats(const Nat& t);

/// All NATs with w left and h right vertices, grouped by shape in
/// enumeration order.
std::vector<Nat> enumerate_nats_by_size(int w, int h);

/// Relabel the left subtree (resp. right subtree) of a NAT into a NAT of that
/// shape by renumbering the restricted labels consecutively.
Nat restrict_to_left(const Nat& t);
Nat restrict_to_right(const Nat& t);

}  // namespace nattree
