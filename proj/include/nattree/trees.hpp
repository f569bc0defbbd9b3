#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace nattree {

/// Unlabelled rooted binary tree. The default-constructed value is the empty
/// tree. Subtrees are shared, so copies are cheap and values are immutable.
class BinaryTree {
public:
    BinaryTree() = default;

    static BinaryTree node(BinaryTree left, BinaryTree right);
    static BinaryTree leaf() { return node({}, {}); }

    bool empty() const { return node_ == nullptr; }
    int size() const;
    int left_count() const;   // |LV|
    int right_count() const;  // |RV|

    // Preconditions: non-empty.
    const BinaryTree& left() const;
    const BinaryTree& right() const;

    friend bool operator==(const BinaryTree& a, const BinaryTree& b);
    friend std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

struct BinaryTree::Node {
    BinaryTree left;
    BinaryTree right;
    int size;
    int left_count;
    int right_count;
};

/// "." for the empty tree, "(L R)" for a node.
std::string to_string(const BinaryTree& t);
BinaryTree parse_tree(std::string_view text);

/// All binary trees on n vertices, ordered by left-subtree size, then
/// lexicographically on (left, right).
std::vector<BinaryTree> enumerate_binary_trees(int n);

enum class Side : std::uint8_t { root, left, right };

/// Pre-order flattening of a binary tree. Vertex ids are pre-order indices
/// (root = 0) and the subtree of v occupies [v, end[v]).
struct Layout {
    std::vector<int> parent;
    std::vector<int> left;   // -1 when absent
    std::vector<int> right;  // -1 when absent
    std::vector<int> end;
    std::vector<Side> side;
    std::vector<int> left_vertices;   // pre-order
    std::vector<int> right_vertices;  // pre-order

    int size() const { return static_cast<int>(parent.size()); }
};

Layout layout(const BinaryTree& t);

struct VertexStats {
    // el[v]: left vertices in the subtree of v (v included); er likewise.
    // Only the entries at left (resp. right) children enter the hook formula.
    std::vector<int> el;
    std::vector<int> er;
    int leftmost_left = 0;    // LO
    int rightmost_right = 0;  // RO
    int left_count = 0;
    int right_count = 0;
};

VertexStats vertex_stats(const BinaryTree& t);

struct HookPartition {
    // Hooks in extraction order; each hook lists its vertices ascending.
    std::vector<std::vector<int>> hooks;

    int hook_number() const { return static_cast<int>(hooks.size()); }
};

HookPartition hook_partition(const BinaryTree& t);

/// Hook of a single vertex: v, its leftmost branch and its rightmost branch.
std::vector<int> hook_of(const Layout& lay, int v);

enum class Colour : std::uint8_t { none, red, blue };

/// Rooted ordered tree. Colour and label are only used by the labelled
/// ordered trees produced by the xi bijection.
struct OrderedTree {
    Colour colour = Colour::none;
    int label = 0;
    std::vector<OrderedTree> children;

    int size() const;
    friend bool operator==(const OrderedTree&, const OrderedTree&) = default;
};

std::vector<OrderedTree> enumerate_ordered_trees(int n);

/// Number of vertices having at least one leaf child.
int leaf_parent_count(const OrderedTree& t);

}  // namespace nattree
