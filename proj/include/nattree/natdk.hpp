#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nattree/nat.hpp"
#include "nattree/numeric.hpp"

namespace nattree {

/// Sorted set of axes, 1-based.
using Direction = std::vector<int>;
/// d entries; 0 stands for the placeholder.
using Tuple = std::vector<int>;

std::vector<Direction> directions(int d, int k);
std::string direction_string(const Direction& dir);
Direction parse_direction(const std::string& text);

/// Tree whose children are indexed by (d,k)-directions, flattened in
/// pre-order with children sorted by direction. The root has direction
/// {1..d}.
class DkShape {
public:
    DkShape() = default;

    static DkShape leaf(int d, int k);
    /// Root with the given children. Directions must be distinct k-subsets.
    static DkShape join(int d, int k, std::vector<std::pair<Direction, DkShape>> children);

    int d() const { return d_; }
    int k() const { return k_; }
    int size() const { return static_cast<int>(parent_.size()); }
    int parent(int v) const { return parent_[v]; }
    const Direction& direction(int v) const { return dir_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    int end(int v) const { return end_[v]; }

    /// Subtree of v as a shape of its own.
    DkShape subtree(int v) const;

    friend bool operator==(const DkShape& a, const DkShape& b)
    {
        return a.d_ == b.d_ && a.k_ == b.k_ && a.parent_ == b.parent_ && a.dir_ == b.dir_;
    }
    friend auto operator<=>(const DkShape& a, const DkShape& b)
    {
        if (auto c = a.parent_.size() <=> b.parent_.size(); c != 0) return c;
        if (auto c = a.dir_ <=> b.dir_; c != 0) return c;
        return a.parent_ <=> b.parent_;
    }

private:
    int d_ = 0;
    int k_ = 0;
    std::vector<int> parent_;
    std::vector<Direction> dir_;
    std::vector<std::vector<int>> children_;
    std::vector<int> end_;
};

struct DkNat {
    DkShape shape;
    std::vector<Tuple> labels;  // pre-order

    friend bool operator==(const DkNat&, const DkNat&) = default;
    friend auto operator<=>(const DkNat& a, const DkNat& b)
    {
        if (auto c = a.shape <=> b.shape; c != 0) return c;
        return a.labels <=> b.labels;
    }
};

enum class DkViolation {
    none,
    structure,       // malformed shape, tuple length or direction mismatch
    duplicate,       // an axis repeats a component
    ancestor_order,  // a shared component does not decrease downwards
    interval,        // an axis does not cover 1..max
};

struct DkReport {
    DkViolation violation = DkViolation::none;
    int vertex = -1;
    int axis = 0;
    std::string message;
    bool ok() const { return violation == DkViolation::none; }
};

DkReport validate_dk(const DkNat& t);

/// w_i = 1 + number of non-root vertices whose direction contains i.
std::vector<int> root_label_sizes(const DkShape& m);

/// E_i(v): vertices of the subtree of v whose direction contains i.
std::vector<std::vector<int>> subtree_axis_counts(const DkShape& m);

Integer count_dk_hook(const DkShape& m);

std::vector<DkNat> enumerate_dk(const DkShape& m, EnumerationMode mode = EnumerationMode::recursive);

/// All shapes with n vertices, canonical order.
std::vector<DkShape> enumerate_dk_shapes(int d, int k, int n);

/// Dictionary with dimension (2,1): {1} is the left child, {2} the right.
DkShape dk_shape_of(const BinaryTree& b);
BinaryTree binary_tree_of(const DkShape& m);
DkNat dk_of(const Nat& t);
Nat nat_of(const DkNat& t);

struct GeoPoint {
    std::vector<int> coords;
    Direction type;  // empty for the root
    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
    friend auto operator<=>(const GeoPoint&, const GeoPoint&) = default;
};

struct GeoNat {
    int d = 0;
    int k = 0;
    std::vector<int> box;
    std::vector<GeoPoint> points;
};

enum class GeoViolation {
    none,
    malformed,  // wrong dimensions, coordinates below 1, repeated points
    box,        // clause 1
    root,       // clause 2
    cone,       // clause 3
    affine,     // clause 4
    hyperplane, // clause 5
};

struct GeoReport {
    GeoViolation violation = GeoViolation::none;
    std::string message;
    bool ok() const { return violation == GeoViolation::none; }
};

/// Points in pre-order of the tree.
GeoNat to_geometric(const DkNat& t);
GeoReport validate_geometric(const GeoNat& g);
/// Throws std::invalid_argument naming the violated clause.
DkNat from_geometric(const GeoNat& g);

}  // namespace nattree
