#include "nattree/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace nattree {

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right)
{
    BinaryTree t;
    const int size = 1 + left.size() + right.size();
    const int lc = left.left_count() + right.left_count() + (left.empty() ? 0 : 1);
    const int rc = left.right_count() + right.right_count() + (right.empty() ? 0 : 1);
    t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), size, lc, rc});
    return t;
}

int BinaryTree::size() const { return node_ ? node_->size : 0; }
int BinaryTree::left_count() const { return node_ ? node_->left_count : 0; }
int BinaryTree::right_count() const { return node_ ? node_->right_count : 0; }

const BinaryTree& BinaryTree::left() const
{
    if (!node_) throw std::logic_error("left() of the empty tree");
    return node_->left;
}

const BinaryTree& BinaryTree::right() const
{
    if (!node_) throw std::logic_error("right() of the empty tree");
    return node_->right;
}

bool operator==(const BinaryTree& a, const BinaryTree& b)
{
    if (a.node_ == b.node_) return true;
    if (a.empty() || b.empty()) return false;
    if (a.size() != b.size()) return false;
    return a.left() == b.left() && a.right() == b.right();
}

// Size first, then the enumeration order: left size, left, right.
std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b)
{
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (a.empty()) return std::strong_ordering::equal;
    if (auto c = a.left().size() <=> b.left().size(); c != 0) return c;
    if (auto c = a.left() <=> b.left(); c != 0) return c;
    return a.right() <=> b.right();
}

namespace {

void write_tree(const BinaryTree& t, std::string& out)
{
    if (t.empty()) {
        out += '.';
        return;
    }
    out += '(';
    write_tree(t.left(), out);
    out += ' ';
    write_tree(t.right(), out);
    out += ')';
}

class TreeParser {
public:
    explicit TreeParser(std::string_view s) : s_(s) {}

    BinaryTree parse()
    {
        BinaryTree t = tree();
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
        return t;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("malformed tree at offset " + std::to_string(pos_) + ": " + what);
    }

    BinaryTree tree()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (s_[pos_] == '.') {
            ++pos_;
            return {};
        }
        if (s_[pos_] != '(') fail("expected '(' or '.'");
        ++pos_;
        BinaryTree l = tree();
        BinaryTree r = tree();
        skip();
        if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
        ++pos_;
        return BinaryTree::node(std::move(l), std::move(r));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const BinaryTree& t)
{
    std::string out;
    write_tree(t, out);
    return out;
}

BinaryTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::vector<BinaryTree> enumerate_binary_trees(int n)
{
    if (n < 0) throw std::invalid_argument("enumerate_binary_trees: negative size");
    std::vector<std::vector<BinaryTree>> by_size(n + 1);
    by_size[0] = {BinaryTree{}};
    for (int m = 1; m <= n; ++m) {
        for (int ls = 0; ls < m; ++ls)
            for (const auto& l : by_size[ls])
                for (const auto& r : by_size[m - 1 - ls]) by_size[m].push_back(BinaryTree::node(l, r));
    }
    return by_size[n];
}

namespace {

int fill_layout(const BinaryTree& t, int parent, Side side, Layout& lay)
{
    const int id = lay.size();
    lay.parent.push_back(parent);
    lay.left.push_back(-1);
    lay.right.push_back(-1);
    lay.end.push_back(-1);
    lay.side.push_back(side);
    if (side == Side::left) lay.left_vertices.push_back(id);
    if (side == Side::right) lay.right_vertices.push_back(id);
    if (!t.left().empty()) {
        int c = fill_layout(t.left(), id, Side::left, lay);
        lay.left[id] = c;
    }
    if (!t.right().empty()) {
        int c = fill_layout(t.right(), id, Side::right, lay);
        lay.right[id] = c;
    }
    lay.end[id] = lay.size();
    return id;
}

void require_nonempty(const BinaryTree& t, const char* what)
{
    if (t.empty()) throw std::invalid_argument(std::string(what) + ": empty tree");
}

}  // namespace

Layout layout(const BinaryTree& t)
{
    Layout lay;
    if (!t.empty()) fill_layout(t, -1, Side::root, lay);
    return lay;
}

VertexStats vertex_stats(const BinaryTree& t)
{
    require_nonempty(t, "vertex_stats");
    const Layout lay = layout(t);
    VertexStats st;
    const int n = lay.size();
    st.el.assign(n, 0);
    st.er.assign(n, 0);
    // Children come after parents in pre-order, so a reverse sweep sees
    // every subtree before its root.
    for (int v = n - 1; v >= 0; --v) {
        st.el[v] = lay.side[v] == Side::left ? 1 : 0;
        st.er[v] = lay.side[v] == Side::right ? 1 : 0;
        for (int c : {lay.left[v], lay.right[v]}) {
            if (c < 0) continue;
            st.el[v] += st.el[c];
            st.er[v] += st.er[c];
        }
    }
    for (int v = lay.left[0]; v >= 0; v = lay.left[v]) ++st.leftmost_left;
    for (int v = lay.right[0]; v >= 0; v = lay.right[v]) ++st.rightmost_right;
    st.left_count = static_cast<int>(lay.left_vertices.size());
    st.right_count = static_cast<int>(lay.right_vertices.size());
    return st;
}

std::vector<int> hook_of(const Layout& lay, int v)
{
    std::vector<int> hook{v};
    for (int u = lay.left[v]; u >= 0; u = lay.left[u]) hook.push_back(u);
    for (int u = lay.right[v]; u >= 0; u = lay.right[u]) hook.push_back(u);
    std::sort(hook.begin(), hook.end());
    return hook;
}

HookPartition hook_partition(const BinaryTree& t)
{
    require_nonempty(t, "hook_partition");
    const Layout lay = layout(t);
    HookPartition part;
    // Extract the root's hook; every child hanging off it roots a tree of
    // the remaining forest. Processing roots in pre-order keeps the result
    // deterministic.
    std::vector<int> pending{0};
    while (!pending.empty()) {
        std::sort(pending.begin(), pending.end(), std::greater<>());
        int r = pending.back();
        pending.pop_back();
        std::vector<int> hook = hook_of(lay, r);
        for (int u = lay.left[r]; u >= 0; u = lay.left[u])
            if (lay.right[u] >= 0) pending.push_back(lay.right[u]);
        for (int u = lay.right[r]; u >= 0; u = lay.right[u])
            if (lay.left[u] >= 0) pending.push_back(lay.left[u]);
        part.hooks.push_back(std::move(hook));
    }
    return part;
}

int OrderedTree::size() const
{
    int s = 1;
    for (const auto& c : children) s += c.size();
    return s;
}

std::vector<OrderedTree> enumerate_ordered_trees(int n)
{
    if (n < 1) throw std::invalid_argument("enumerate_ordered_trees: need at least one vertex");
    // forests[m]: ordered forests with m vertices; trees[m]: trees with m vertices.
    std::vector<std::vector<std::vector<OrderedTree>>> forests(n);
    std::vector<std::vector<OrderedTree>> trees(n + 1);
    forests[0] = {{}};
    for (int m = 1; m <= n; ++m) {
        for (const auto& f : forests[m - 1]) trees[m].push_back(OrderedTree{Colour::none, 0, f});
        if (m == n) break;
        for (int first = 1; first <= m; ++first)
            for (const auto& t : trees[first])
                for (const auto& rest : forests[m - first]) {
                    std::vector<OrderedTree> f;
                    f.reserve(rest.size() + 1);
                    f.push_back(t);
                    f.insert(f.end(), rest.begin(), rest.end());
                    forests[m].push_back(std::move(f));
                }
    }
    return trees[n];
}

int leaf_parent_count(const OrderedTree& t)
{
    int count = 0;
    bool has_leaf = false;
    for (const auto& c : t.children) {
        if (c.children.empty()) has_leaf = true;
        count += leaf_parent_count(c);
    }
    return count + (has_leaf ? 1 : 0);
}

}  // namespace nattree
