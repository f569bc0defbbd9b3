#include "nattree/natdk.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nattree {

std::vector<Direction> directions(int d, int k)
{
    if (k < 1 || k > d) throw std::invalid_argument("directions: need 1 <= k <= d");
    return combinations(d, k);
}

std::string direction_string(const Direction& dir)
{
    std::string s;
    for (std::size_t i = 0; i < dir.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(dir[i]);
    }
    return s;
}

Direction parse_direction(const std::string& text)
{
    Direction dir;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw std::invalid_argument("bad direction '" + text + "'");
        dir.push_back(v);
    }
    if (!std::is_sorted(dir.begin(), dir.end()) || std::adjacent_find(dir.begin(), dir.end()) != dir.end())
        throw std::invalid_argument("direction '" + text + "' is not strictly increasing");
    return dir;
}

namespace {

Direction all_axes(int d)
{
    Direction a(d);
    std::iota(a.begin(), a.end(), 1);
    return a;
}

bool contains(const Direction& dir, int i) { return std::binary_search(dir.begin(), dir.end(), i); }

}  // namespace

DkShape DkShape::leaf(int d, int k)
{
    if (k < 1 || k > d) throw std::invalid_argument("DkShape: need 1 <= k <= d");
    DkShape s;
    s.d_ = d;
    s.k_ = k;
    s.parent_ = {-1};
    s.dir_ = {all_axes(d)};
    s.children_ = {{}};
    s.end_ = {1};
    return s;
}

DkShape DkShape::join(int d, int k, std::vector<std::pair<Direction, DkShape>> children)
{
    DkShape s = leaf(d, k);
    std::sort(children.begin(), children.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t j = 0; j < children.size(); ++j) {
        const auto& [dir, sub] = children[j];
        if (static_cast<int>(dir.size()) != k || dir.front() < 1 || dir.back() > d ||
            !std::is_sorted(dir.begin(), dir.end()) || std::adjacent_find(dir.begin(), dir.end()) != dir.end())
            throw std::invalid_argument("DkShape: '" + direction_string(dir) + "' is not a direction");
        if (j > 0 && children[j - 1].first == dir)
            throw std::invalid_argument("DkShape: two children with direction " + direction_string(dir));
        if (sub.d_ != d || sub.k_ != k) throw std::invalid_argument("DkShape: child dimension mismatch");
        const int offset = s.size();
        for (int v = 0; v < sub.size(); ++v) {
            s.parent_.push_back(v == 0 ? 0 : sub.parent_[v] + offset);
            s.dir_.push_back(v == 0 ? dir : sub.dir_[v]);
        }
    }
    const int n = s.size();
    s.children_.assign(n, {});
    for (int v = 1; v < n; ++v) s.children_[s.parent_[v]].push_back(v);
    s.end_.assign(n, 0);
    for (int v = n - 1; v >= 0; --v) {
        s.end_[v] = v + 1;
        for (int c : s.children_[v]) s.end_[v] = std::max(s.end_[v], s.end_[c]);
    }
    return s;
}

DkShape DkShape::subtree(int v) const
{
    DkShape s;
    s.d_ = d_;
    s.k_ = k_;
    for (int u = v; u < end_[v]; ++u) {
        s.parent_.push_back(u == v ? -1 : parent_[u] - v);
        s.dir_.push_back(u == v ? all_axes(d_) : dir_[u]);
        s.end_.push_back(end_[u] - v);
        std::vector<int> kids;
        for (int c : children_[u]) kids.push_back(c - v);
        s.children_.push_back(std::move(kids));
    }
    return s;
}

namespace {

DkReport dk_fail(DkViolation v, int vertex, int axis, std::string msg)
{
    return DkReport{v, vertex, axis, std::move(msg)};
}

}  // namespace

DkReport validate_dk(const DkNat& t)
{
    const DkShape& m = t.shape;
    const int n = m.size(), d = m.d();
    if (n == 0) return dk_fail(DkViolation::structure, -1, 0, "empty tree");
    if (static_cast<int>(t.labels.size()) != n)
        return dk_fail(DkViolation::structure, -1, 0, "expected " + std::to_string(n) + " labels");
    for (int v = 0; v < n; ++v) {
        const Tuple& u = t.labels[v];
        if (static_cast<int>(u.size()) != d)
            return dk_fail(DkViolation::structure, v, 0, "vertex " + std::to_string(v) + " has a tuple of the wrong length");
        for (int i = 1; i <= d; ++i) {
            const bool on = contains(m.direction(v), i);
            if (u[i - 1] < 0 || (u[i - 1] > 0) != on)
                return dk_fail(DkViolation::structure, v, i,
                               "vertex " + std::to_string(v) + " does not match direction {" + direction_string(m.direction(v)) + "}");
        }
    }
    for (int i = 1; i <= d; ++i) {
        std::vector<int> vals;
        for (int v = 0; v < n; ++v)
            if (t.labels[v][i - 1] > 0) vals.push_back(t.labels[v][i - 1]);
        std::sort(vals.begin(), vals.end());
        if (auto it = std::adjacent_find(vals.begin(), vals.end()); it != vals.end())
            return dk_fail(DkViolation::duplicate, -1, i, "axis " + std::to_string(i) + " repeats " + std::to_string(*it));
    }
    for (int v = 1; v < n; ++v)
        for (int a = m.parent(v); a >= 0; a = m.parent(a))
            for (int i = 1; i <= d; ++i) {
                const int x = t.labels[v][i - 1], y = t.labels[a][i - 1];
                if (x > 0 && y > 0 && y <= x)
                    return dk_fail(DkViolation::ancestor_order, v, i,
                                   "axis " + std::to_string(i) + ": vertex " + std::to_string(v) + " (" +
                                       std::to_string(x) + ") not below ancestor " + std::to_string(a) + " (" +
                                       std::to_string(y) + ")");
            }
    for (int i = 1; i <= d; ++i) {
        int count = 0, top = 0;
        for (int v = 0; v < n; ++v)
            if (t.labels[v][i - 1] > 0) {
                ++count;
                top = std::max(top, t.labels[v][i - 1]);
            }
        if (top != count)
            return dk_fail(DkViolation::interval, -1, i, "axis " + std::to_string(i) + " does not cover 1.." + std::to_string(top));
    }
    return {};
}

std::vector<int> root_label_sizes(const DkShape& m)
{
    std::vector<int> w(m.d(), 1);
    for (int v = 1; v < m.size(); ++v)
        for (int i : m.direction(v)) ++w[i - 1];
    return w;
}

std::vector<std::vector<int>> subtree_axis_counts(const DkShape& m)
{
    std::vector<std::vector<int>> e(m.size(), std::vector<int>(m.d(), 0));
    for (int v = m.size() - 1; v >= 0; --v) {
        for (int i : m.direction(v)) ++e[v][i - 1];
        if (v > 0)
            for (int i = 0; i < m.d(); ++i) e[m.parent(v)][i] += e[v][i];
    }
    // The root counts itself on every axis; children never see that.
    return e;
}

Integer count_dk_hook(const DkShape& m)
{
    if (m.size() == 0) throw std::invalid_argument("count_dk_hook: empty shape");
    const auto w = root_label_sizes(m);
    const auto e = subtree_axis_counts(m);
    Integer num = 1, den = 1;
    for (int x : w) num *= factorial(x - 1);
    for (int v = 1; v < m.size(); ++v)
        for (int i : m.direction(v)) den *= e[v][i - 1];
    if (num % den != 0) throw std::logic_error("count_dk_hook: inexact division");
    return num / den;
}

namespace {

class DkEnumerator {
public:
    DkEnumerator(const DkShape& m, std::vector<DkNat>& out)
        : m_(m), out_(out), e_(subtree_axis_counts(m)), pool_(m.size(), std::vector<std::vector<int>>(m.d())),
          labels_(m.size(), Tuple(m.d(), 0))
    {
        const auto w = root_label_sizes(m);
        for (int i = 0; i < m.d(); ++i) {
            pool_[0][i].resize(w[i]);
            std::iota(pool_[0][i].begin(), pool_[0][i].end(), 1);
        }
    }

    void run() { vertex(0); }

private:
    // Labels vertex v, then spreads the rest of its pools over its children.
    void vertex(int v)
    {
        if (v == m_.size()) {
            out_.push_back(DkNat{m_, labels_});
            return;
        }
        std::vector<std::vector<int>> rest(m_.d());
        for (int i = 0; i < m_.d(); ++i) {
            rest[i] = pool_[v][i];
            labels_[v][i] = 0;
            if (contains(m_.direction(v), i + 1)) {
                labels_[v][i] = rest[i].back();
                rest[i].pop_back();
            }
        }
        axis(v, 0, rest);
    }

    void axis(int v, int i, const std::vector<std::vector<int>>& rest)
    {
        if (i == m_.d()) {
            vertex(v + 1);
            return;
        }
        split(v, i, 0, rest[i], rest);
    }

    // Ordered set partition of `left` among the children of v from child j on.
    void split(int v, int i, std::size_t j, const std::vector<int>& left, const std::vector<std::vector<int>>& rest)
    {
        const auto& kids = m_.children(v);
        if (j == kids.size()) {
            axis(v, i + 1, rest);
            return;
        }
        const int c = kids[j];
        const int need = e_[c][i];
        const int have = static_cast<int>(left.size());
        for (const auto& pick : combinations(have, need)) {
            std::vector<int> mine, others;
            std::size_t p = 0;
            for (int x = 0; x < have; ++x) {
                if (p < pick.size() && pick[p] == x + 1) {
                    mine.push_back(left[x]);
                    ++p;
                } else {
                    others.push_back(left[x]);
                }
            }
            pool_[c][i] = std::move(mine);
            split(v, i, j + 1, others, rest);
        }
    }

    const DkShape& m_;
    std::vector<DkNat>& out_;
    std::vector<std::vector<int>> e_;
    std::vector<std::vector<std::vector<int>>> pool_;
    std::vector<Tuple> labels_;
};

void brute_axis(const DkShape& m, int i, const std::vector<std::vector<int>>& on_axis, std::vector<Tuple>& labels,
                std::vector<DkNat>& out)
{
    if (i == m.d()) {
        DkNat t{m, labels};
        if (validate_dk(t).ok()) out.push_back(std::move(t));
        return;
    }
    const auto& vs = on_axis[i];
    std::vector<int> perm(vs.size());
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (std::size_t j = 0; j < vs.size(); ++j) labels[vs[j]][i] = perm[j];
        brute_axis(m, i + 1, on_axis, labels, out);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::vector<DkNat> enumerate_dk(const DkShape& m, EnumerationMode mode)
{
    if (m.size() == 0) throw std::invalid_argument("enumerate_dk: empty shape");
    std::vector<DkNat> out;
    if (mode == EnumerationMode::recursive) {
        DkEnumerator(m, out).run();
        return out;
    }
    Integer candidates = 1;
    for (int w : root_label_sizes(m)) candidates *= factorial(w);
    if (candidates > brute_force_budget())
        throw std::length_error("brute-force enumeration needs " + candidates.str() +
                                " candidates, above the budget of " + std::to_string(brute_force_budget()));
    std::vector<std::vector<int>> on_axis(m.d());
    for (int v = 0; v < m.size(); ++v)
        for (int i : m.direction(v)) on_axis[i - 1].push_back(v);
    std::vector<Tuple> labels(m.size(), Tuple(m.d(), 0));
    brute_axis(m, 0, on_axis, labels, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DkShape> enumerate_dk_shapes(int d, int k, int n)
{
    if (n < 1) throw std::invalid_argument("enumerate_dk_shapes: need n >= 1");
    const auto dirs = directions(d, k);
    std::vector<std::vector<DkShape>> by_size(n + 1);
    for (int m = 1; m <= n; ++m) {
        std::vector<std::pair<Direction, DkShape>> chosen;
        // Assign a subtree (possibly none) to each direction in turn.
        std::function<void(std::size_t, int)> assign = [&](std::size_t j, int left) {
            if (j == dirs.size()) {
                if (left == 0) by_size[m].push_back(DkShape::join(d, k, chosen));
                return;
            }
            assign(j + 1, left);
            for (int s = 1; s <= left; ++s)
                for (const auto& sub : by_size[s]) {
                    chosen.emplace_back(dirs[j], sub);
                    assign(j + 1, left - s);
                    chosen.pop_back();
                }
        };
        assign(0, m - 1);
    }
    return by_size[n];
}

DkShape dk_shape_of(const BinaryTree& b)
{
    if (b.empty()) throw std::invalid_argument("dk_shape_of: empty tree");
    std::vector<std::pair<Direction, DkShape>> kids;
    if (!b.left().empty()) kids.emplace_back(Direction{1}, dk_shape_of(b.left()));
    if (!b.right().empty()) kids.emplace_back(Direction{2}, dk_shape_of(b.right()));
    return DkShape::join(2, 1, std::move(kids));
}

namespace {

BinaryTree binary_below(const DkShape& m, int v)
{
    BinaryTree l, r;
    for (int c : m.children(v)) (m.direction(c) == Direction{1} ? l : r) = binary_below(m, c);
    return BinaryTree::node(std::move(l), std::move(r));
}

void require_21(const DkShape& m)
{
    if (m.d() != 2 || m.k() != 1) throw std::invalid_argument("expected dimension (2,1)");
}

}  // namespace

BinaryTree binary_tree_of(const DkShape& m)
{
    require_21(m);
    return binary_below(m, 0);
}

DkNat dk_of(const Nat& t)
{
    if (auto r = validate_nat(t); !r.ok()) throw std::invalid_argument("dk_of: " + r.message);
    DkNat out{dk_shape_of(t.shape), {}};
    // Children sorted by direction put left before right: pre-orders agree.
    const Layout lay = layout(t.shape);
    std::size_t li = 0, ri = 0;
    for (int v = 0; v < lay.size(); ++v) {
        if (lay.side[v] == Side::root)
            out.labels.push_back({t.width_left(), t.width_right()});
        else if (lay.side[v] == Side::left)
            out.labels.push_back({t.left_labels[li++], 0});
        else
            out.labels.push_back({0, t.right_labels[ri++]});
    }
    return out;
}

Nat nat_of(const DkNat& t)
{
    require_21(t.shape);
    if (auto r = validate_dk(t); !r.ok()) throw std::invalid_argument("nat_of: " + r.message);
    Nat out{binary_tree_of(t.shape), {}, {}};
    for (int v = 1; v < t.shape.size(); ++v) {
        if (t.shape.direction(v) == Direction{1})
            out.left_labels.push_back(t.labels[v][0]);
        else
            out.right_labels.push_back(t.labels[v][1]);
    }
    return out;
}

GeoNat to_geometric(const DkNat& t)
{
    if (auto r = validate_dk(t); !r.ok()) throw std::invalid_argument("to_geometric: " + r.message);
    const DkShape& m = t.shape;
    GeoNat g{m.d(), m.k(), t.labels[0], {}};
    for (int v = 0; v < m.size(); ++v) {
        GeoPoint p;
        if (v == 0) {
            p.coords = t.labels[0];
        } else {
            p.coords = g.points[m.parent(v)].coords;
            for (int i : m.direction(v)) p.coords[i - 1] = t.labels[v][i - 1];
            p.type = m.direction(v);
        }
        g.points.push_back(std::move(p));
    }
    return g;
}

namespace {

GeoReport geo_fail(GeoViolation v, std::string msg) { return GeoReport{v, std::move(msg)}; }

std::string point_string(const std::vector<int>& c)
{
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

// Q lies in the cone of origin P and direction dir.
bool in_cone(const std::vector<int>& p, const std::vector<int>& q, const Direction& dir)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        const bool free = contains(dir, static_cast<int>(i) + 1);
        if (free ? q[i] < p[i] : q[i] != p[i]) return false;
    }
    return true;
}

// Types of the non-root points by clause 3; -1 when not unique.
std::vector<int> point_types(const GeoNat& g, const std::vector<Direction>& dirs, int root)
{
    std::vector<int> type(g.points.size(), -1);
    for (std::size_t a = 0; a < g.points.size(); ++a) {
        if (static_cast<int>(a) == root) continue;
        int found = 0;
        for (std::size_t j = 0; j < dirs.size(); ++j) {
            bool hit = false;
            for (std::size_t b = 0; b < g.points.size() && !hit; ++b)
                hit = b != a && in_cone(g.points[a].coords, g.points[b].coords, dirs[j]);
            if (hit) {
                ++found;
                type[a] = static_cast<int>(j);
            }
        }
        if (found != 1) type[a] = -1;
    }
    return type;
}

}  // namespace

GeoReport validate_geometric(const GeoNat& g)
{
    if (g.k < 1 || g.k > g.d) return geo_fail(GeoViolation::malformed, "need 1 <= k <= d");
    if (g.points.empty()) return geo_fail(GeoViolation::malformed, "no points");
    if (static_cast<int>(g.box.size()) != g.d) return geo_fail(GeoViolation::malformed, "box has the wrong dimension");
    std::set<std::vector<int>> seen;
    for (const auto& p : g.points) {
        if (static_cast<int>(p.coords.size()) != g.d)
            return geo_fail(GeoViolation::malformed, "point " + point_string(p.coords) + " has the wrong dimension");
        for (int x : p.coords)
            if (x < 1) return geo_fail(GeoViolation::malformed, "point " + point_string(p.coords) + " leaves N^d_{>0}");
        if (!seen.insert(p.coords).second)
            return geo_fail(GeoViolation::malformed, "point " + point_string(p.coords) + " repeated");
    }
    for (int i = 0; i < g.d; ++i) {
        int lo = g.points[0].coords[i], hi = lo;
        for (const auto& p : g.points) {
            lo = std::min(lo, p.coords[i]);
            hi = std::max(hi, p.coords[i]);
        }
        if (lo != 1 || hi != g.box[i])
            return geo_fail(GeoViolation::box, "axis " + std::to_string(i + 1) + " spans " + std::to_string(lo) + ".." +
                                                   std::to_string(hi) + ", box says 1.." + std::to_string(g.box[i]));
    }
    int root = -1;
    for (std::size_t a = 0; a < g.points.size(); ++a)
        if (g.points[a].coords == g.box) root = static_cast<int>(a);
    if (root < 0) return geo_fail(GeoViolation::root, "no point at " + point_string(g.box));

    const auto dirs = directions(g.d, g.k);
    const auto type = point_types(g, dirs, root);
    for (std::size_t a = 0; a < g.points.size(); ++a) {
        const auto& p = g.points[a];
        if (static_cast<int>(a) == root) {
            if (!p.type.empty()) return geo_fail(GeoViolation::cone, "the root carries a type");
            continue;
        }
        if (type[a] < 0)
            return geo_fail(GeoViolation::cone, "point " + point_string(p.coords) + " has no unique cone direction");
        if (!p.type.empty() && p.type != dirs[type[a]])
            return geo_fail(GeoViolation::cone, "point " + point_string(p.coords) + " is of type {" +
                                                    direction_string(dirs[type[a]]) + "}, not {" + direction_string(p.type) + "}");
    }
    for (const auto& dir : dirs)
        for (std::size_t a = 0; a < g.points.size(); ++a)
            for (std::size_t b = a + 1; b < g.points.size(); ++b) {
                const auto& p = g.points[a].coords;
                const auto& q = g.points[b].coords;
                bool same_space = true, p_above = true, q_above = true;
                for (int i = 0; i < g.d; ++i) {
                    if (contains(dir, i + 1)) {
                        p_above = p_above && p[i] > q[i];
                        q_above = q_above && q[i] > p[i];
                    } else if (p[i] != q[i]) {
                        same_space = false;
                    }
                }
                if (same_space && !p_above && !q_above)
                    return geo_fail(GeoViolation::affine, point_string(p) + " and " + point_string(q) +
                                                              " are not comparable along {" + direction_string(dir) + "}");
            }
    for (int i = 1; i <= g.d; ++i)
        for (int l = 1; l < g.box[i - 1]; ++l) {
            int hits = 0;
            for (std::size_t a = 0; a < g.points.size(); ++a)
                if (static_cast<int>(a) != root && contains(dirs[type[a]], i) && g.points[a].coords[i - 1] == l) ++hits;
            if (hits != 1)
                return geo_fail(GeoViolation::hyperplane, "hyperplane x_" + std::to_string(i) + " = " + std::to_string(l) +
                                                              " holds " + std::to_string(hits) + " points of a matching type");
        }
    return {};
}

DkNat from_geometric(const GeoNat& g)
{
    if (auto r = validate_geometric(g); !r.ok()) throw std::invalid_argument("from_geometric: " + r.message);
    const auto dirs = directions(g.d, g.k);
    int root = 0;
    for (std::size_t a = 0; a < g.points.size(); ++a)
        if (g.points[a].coords == g.box) root = static_cast<int>(a);
    const auto type = point_types(g, dirs, root);

    const std::size_t n = g.points.size();
    std::vector<std::vector<int>> kids(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (static_cast<int>(a) == root) continue;
        const auto& p = g.points[a].coords;
        int parent = -1, best = 0;
        for (std::size_t b = 0; b < n; ++b) {
            if (b == a || !in_cone(p, g.points[b].coords, dirs[type[a]])) continue;
            const int s = std::accumulate(g.points[b].coords.begin(), g.points[b].coords.end(), 0);
            if (parent < 0 || s < best) {
                parent = static_cast<int>(b);
                best = s;
            }
        }
        kids[parent].push_back(static_cast<int>(a));
    }

    std::vector<bool> visiting(n, false);
    std::function<std::pair<DkShape, std::vector<Tuple>>(int)> build = [&](int a) {
        if (visiting[a]) throw std::invalid_argument("from_geometric: parent links form a cycle");
        visiting[a] = true;
        Tuple t = g.points[a].coords;
        if (a != root)
            for (int i = 1; i <= g.d; ++i)
                if (!contains(dirs[type[a]], i)) t[i - 1] = 0;
        std::vector<int> order = kids[a];
        std::sort(order.begin(), order.end(), [&](int x, int y) { return dirs[type[x]] < dirs[type[y]]; });
        std::vector<std::pair<Direction, DkShape>> subs;
        std::vector<Tuple> labels{t};
        for (int c : order) {
            auto [shape, sub_labels] = build(c);
            subs.emplace_back(dirs[type[c]], std::move(shape));
            labels.insert(labels.end(), sub_labels.begin(), sub_labels.end());
        }
        return std::pair{DkShape::join(g.d, g.k, std::move(subs)), std::move(labels)};
    };
    auto [shape, labels] = build(root);
    if (shape.size() != static_cast<int>(n)) throw std::invalid_argument("from_geometric: points are not connected");
    DkNat t{std::move(shape), std::move(labels)};
    if (auto r = validate_dk(t); !r.ok()) throw std::invalid_argument("from_geometric: " + r.message);

    std::vector<std::vector<int>> want, got;
    for (const auto& p : g.points) want.push_back(p.coords);
    for (const auto& p : to_geometric(t).points) got.push_back(p.coords);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) throw std::invalid_argument("from_geometric: point set is not the image of a tree");
    return t;
}

}  // namespace nattree
