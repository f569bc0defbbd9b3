#include "nattree/nat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nattree {

namespace {

NatReport fail(NatViolation v, int vertex, std::string msg) { return NatReport{v, vertex, std::move(msg)}; }

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

}  // namespace

NatReport validate_nat(const BinaryTree& shape, std::span<const int> left_labels,
                       std::span<const int> right_labels)
{
    if (shape.empty()) return fail(NatViolation::empty_shape, -1, "a NAT has at least one vertex");
    const Layout lay = layout(shape);

    std::vector<int> label(lay.size(), 0);
    for (Side s : {Side::left, Side::right}) {
        const auto& vertices = s == Side::left ? lay.left_vertices : lay.right_vertices;
        const auto labels = s == Side::left ? left_labels : right_labels;
        const int n = static_cast<int>(vertices.size());
        if (static_cast<int>(labels.size()) != n)
            return fail(NatViolation::label_count, -1,
                        std::string(side_name(s)) + " labels: expected " + std::to_string(n) + ", got " +
                            std::to_string(labels.size()));
        std::vector<bool> seen(n + 1, false);
        for (int i = 0; i < n; ++i) {
            const int v = vertices[i], l = labels[i];
            if (l < 1 || l > n)
                return fail(NatViolation::label_range, v,
                            std::string(side_name(s)) + " label " + std::to_string(l) + " at vertex " +
                                std::to_string(v) + " is outside 1.." + std::to_string(n));
            if (seen[l])
                return fail(NatViolation::duplicate_label, v,
                            std::string(side_name(s)) + " label " + std::to_string(l) + " repeated at vertex " +
                                std::to_string(v));
            seen[l] = true;
            label[v] = l;
        }
    }

    // Comparing each vertex with its nearest same-side ancestor is enough:
    // the order is transitive along the chain.
    for (int v = 1; v < lay.size(); ++v) {
        for (int a = lay.parent[v]; a > 0; a = lay.parent[a]) {
            if (lay.side[a] != lay.side[v]) continue;
            if (label[a] <= label[v])
                return fail(NatViolation::ancestor_order, v,
                            std::string(side_name(lay.side[v])) + " vertex " + std::to_string(v) + " (label " +
                                std::to_string(label[v]) + ") is not below ancestor " + std::to_string(a) +
                                " (label " + std::to_string(label[a]) + ")");
            break;
        }
    }
    return {};
}

namespace {

struct Labelling {
    std::vector<int> left, right;
};

std::vector<int> complement(const std::vector<int>& s, int n)
{
    std::vector<int> out;
    std::size_t j = 0;
    for (int x = 1; x <= n; ++x) {
        if (j < s.size() && s[j] == x)
            ++j;
        else
            out.push_back(x);
    }
    return out;
}

// Labellings of `t` in local pre-order, by the binomial recursion: the
// labels of a node (L, R) are obtained by choosing which left labels go to
// L (its root included) and which right labels go to R (its root included).
std::vector<Labelling> labellings(const BinaryTree& t)
{
    if (t.empty()) return {Labelling{}};
    const BinaryTree& l = t.left();
    const BinaryTree& r = t.right();
    const auto sub_l = labellings(l);
    const auto sub_r = labellings(r);

    const int w = t.left_count(), h = t.right_count();
    const int left_block = l.empty() ? 0 : l.left_count() + 1;   // left labels used by L
    const int right_block = r.empty() ? 0 : r.right_count() + 1;  // right labels used by R

    std::vector<Labelling> out;
    for (const auto& sl : combinations(w, left_block)) {
        const auto cl = complement(sl, w);
        for (const auto& sr : combinations(h, right_block)) {
            const auto cr = complement(sr, h);
            for (const auto& a : sub_l)
                for (const auto& b : sub_r) {
                    Labelling x;
                    x.left.reserve(w);
                    x.right.reserve(h);
                    if (!l.empty()) x.left.push_back(sl.back());
                    for (int lab : a.left) x.left.push_back(sl[lab - 1]);
                    for (int lab : b.left) x.left.push_back(cl[lab - 1]);
                    for (int lab : a.right) x.right.push_back(cr[lab - 1]);
                    if (!r.empty()) x.right.push_back(sr.back());
                    for (int lab : b.right) x.right.push_back(sr[lab - 1]);
                    out.push_back(std::move(x));
                }
        }
    }
    return out;
}

}  // namespace

std::vector<Nat> enumerate_nats_of_shape(const BinaryTree& shape, EnumerationMode mode)
{
    if (shape.empty()) throw std::invalid_argument("enumerate_nats_of_shape: empty shape");
    std::vector<Nat> out;
    if (mode == EnumerationMode::recursive) {
        for (auto& x : labellings(shape)) out.push_back(Nat{shape, std::move(x.left), std::move(x.right)});
        return out;
    }

    const int w = shape.left_count(), h = shape.right_count();
    const Integer candidates = factorial(w) * factorial(h);
    if (candidates > brute_force_budget())
        throw std::length_error("brute-force enumeration needs " + candidates.str() +
                                " candidates, above the budget of " + std::to_string(brute_force_budget()));
    std::vector<int> left(w), right(h);
    std::iota(left.begin(), left.end(), 1);
    do {
        std::iota(right.begin(), right.end(), 1);
        do {
            if (validate_nat(shape, left, right).ok()) out.push_back(Nat{shape, left, right});
        } while (std::next_permutation(right.begin(), right.end()));
    } while (std::next_permutation(left.begin(), left.end()));
    return out;
}

Integer count_nats_hook(const BinaryTree& shape)
{
    if (shape.empty()) throw std::invalid_argument("count_nats_hook: empty shape");
    const Layout lay = layout(shape);
    const VertexStats st = vertex_stats(shape);
    Integer den = 1;
    for (int v : lay.left_vertices) den *= st.el[v];
    for (int v : lay.right_vertices) den *= st.er[v];
    const Integer num = factorial(st.left_count) * factorial(st.right_count);
    if (num % den != 0) throw std::logic_error("count_nats_hook: inexact division");
    return num / den;
}

NatStats nat_stats(const Nat& t)
{
    const VertexStats st = vertex_stats(t.shape);
    return NatStats{t.size(), t.width_left(), t.width_right(), st.leftmost_left, st.rightmost_right,
                    hook_partition(t.shape).hook_number()};
}

std::vector<Nat> enumerate_nats_by_size(int w, int h)
{
    if (w < 0 || h < 0) throw std::invalid_argument("enumerate_nats_by_size: negative size");
    std::vector<Nat> out;
    for (const auto& b : enumerate_binary_trees(w + h + 1)) {
        if (b.left_count() != w || b.right_count() != h) continue;
        auto nats = enumerate_nats_of_shape(b);
        out.insert(out.end(), std::make_move_iterator(nats.begin()), std::make_move_iterator(nats.end()));
    }
    return out;
}

namespace {

std::vector<int> renumber(std::span<const int> labels)
{
    std::vector<int> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    out.reserve(labels.size());
    for (int l : labels)
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), l) - sorted.begin()) + 1);
    return out;
}

}  // namespace

Nat restrict_to_left(const Nat& t)
{
    const BinaryTree& l = t.shape.left();
    if (l.empty()) throw std::invalid_argument("restrict_to_left: empty left subtree");
    const int block = l.left_count() + 1;
    // The block includes the subtree root, which takes the largest label
    // and is dropped once renumbered.
    std::vector<int> left = renumber(std::span<const int>(t.left_labels).first(block));
    left.erase(left.begin());
    std::vector<int> right = renumber(std::span<const int>(t.right_labels).first(l.right_count()));
    return Nat{l, std::move(left), std::move(right)};
}

Nat restrict_to_right(const Nat& t)
{
    const BinaryTree& l = t.shape.left();
    const BinaryTree& r = t.shape.right();
    if (r.empty()) throw std::invalid_argument("restrict_to_right: empty right subtree");
    const int skip_left = l.empty() ? 0 : l.left_count() + 1;
    std::vector<int> left = renumber(std::span<const int>(t.left_labels).subspan(skip_left));
    std::vector<int> right = renumber(std::span<const int>(t.right_labels).subspan(l.right_count()));
    right.erase(right.begin());
    return Nat{r, std::move(left), std::move(right)};
}

}  // namespace nattree
