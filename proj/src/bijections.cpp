#include "nattree/bijections.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace nattree {

int NotTree::size() const
{
    int s = 1;
    for (const auto& c : children) s += c.size();
    return s;
}

namespace {

const char* colour_name(Colour c) { return c == Colour::red ? "red" : c == Colour::blue ? "blue" : "uncoloured"; }

Colour opposite(Colour c) { return c == Colour::red ? Colour::blue : Colour::red; }

NotReport not_fail(NotViolation v, std::string msg) { return NotReport{v, std::move(msg)}; }

struct NotScan {
    std::vector<int> red, blue;
    NotReport report;
};

// Collects labels by colour and checks colours, alternation and sibling
// order. Returns the largest red and blue labels found below `kids`.
std::pair<int, int> scan(const std::vector<OrderedTree>& kids, NotScan& s)
{
    int max_red = 0, max_blue = 0;
    for (std::size_t i = 0; i < kids.size() && s.report.ok(); ++i) {
        const OrderedTree& c = kids[i];
        if (c.colour == Colour::none) {
            s.report = not_fail(NotViolation::uncoloured, "vertex labelled " + std::to_string(c.label) + " has no colour");
            break;
        }
        (c.colour == Colour::red ? s.red : s.blue).push_back(c.label);
        for (std::size_t j = i + 1; j < kids.size(); ++j)
            if (kids[j].colour == c.colour && kids[j].label >= c.label) {
                s.report = not_fail(NotViolation::sibling_order,
                                    std::string(colour_name(c.colour)) + " " + std::to_string(kids[j].label) +
                                        " is a right sibling of " + std::to_string(c.label));
                return {0, 0};
            }
        for (const auto& g : c.children)
            if (g.colour != opposite(c.colour)) {
                s.report = not_fail(NotViolation::colour_alternation,
                                    std::string(colour_name(c.colour)) + " " + std::to_string(c.label) +
                                        " has a child of the same colour or none");
                return {0, 0};
            }
        auto [r, b] = scan(c.children, s);
        if (!s.report.ok()) break;
        const int below = c.colour == Colour::red ? r : b;
        if (below >= c.label) {
            s.report = not_fail(NotViolation::descendant_order,
                                std::string(colour_name(c.colour)) + " " + std::to_string(c.label) +
                                    " has a descendant labelled " + std::to_string(below));
            break;
        }
        max_red = std::max({max_red, r, c.colour == Colour::red ? c.label : 0});
        max_blue = std::max({max_blue, b, c.colour == Colour::blue ? c.label : 0});
    }
    return {max_red, max_blue};
}

bool is_one_to_n(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != static_cast<int>(i) + 1) return false;
    return true;
}

}  // namespace

NotReport validate_not(const NotTree& o)
{
    bool seen_blue = false;
    for (const auto& c : o.children) {
        if (c.colour == Colour::blue) seen_blue = true;
        if (c.colour == Colour::red && seen_blue)
            return not_fail(NotViolation::root_order, "red root child " + std::to_string(c.label) + " follows a blue one");
    }
    NotScan s;
    scan(o.children, s);
    if (!s.report.ok()) return s.report;
    if (!is_one_to_n(s.red)) return not_fail(NotViolation::label_set, "red labels are not 1..count");
    if (!is_one_to_n(s.blue)) return not_fail(NotViolation::label_set, "blue labels are not 1..count");
    const int r = static_cast<int>(s.red.size()) + 1, b = static_cast<int>(s.blue.size()) + 1;
    if (o.red_label != r || o.blue_label != b)
        return not_fail(NotViolation::root_labels, "root pair should be (" + std::to_string(r) + "," +
                                                       std::to_string(b) + ")");
    return {};
}

namespace {

struct XiBuilder {
    const Layout& lay;
    const std::vector<int>& label;

    OrderedTree make(int v) const
    {
        const bool red = lay.side[v] == Side::left;
        OrderedTree t{red ? Colour::red : Colour::blue, label[v], {}};
        // A red vertex collects its right branch, a blue one its left branch.
        const auto& next = red ? lay.right : lay.left;
        for (int u = next[v]; u >= 0; u = next[u]) t.children.push_back(make(u));
        return t;
    }
};

BinaryTree unchain(const std::vector<OrderedTree>& kids, std::size_t i, std::vector<int>& left,
                   std::vector<int>& right)
{
    if (i == kids.size()) return {};
    const OrderedTree& c = kids[i];
    // Labels are emitted in pre-order: the vertex, then its left subtree.
    if (c.colour == Colour::red) {
        left.push_back(c.label);
        BinaryTree l = unchain(kids, i + 1, left, right);
        BinaryTree r = unchain(c.children, 0, left, right);
        return BinaryTree::node(std::move(l), std::move(r));
    }
    right.push_back(c.label);
    BinaryTree l = unchain(c.children, 0, left, right);
    BinaryTree r = unchain(kids, i + 1, left, right);
    return BinaryTree::node(std::move(l), std::move(r));
}

}  // namespace

NotTree xi(const Nat& t)
{
    if (auto r = validate_nat(t); !r.ok()) throw std::invalid_argument("xi: " + r.message);
    const Layout lay = layout(t.shape);
    std::vector<int> label(lay.size(), 0);
    for (std::size_t i = 0; i < lay.left_vertices.size(); ++i) label[lay.left_vertices[i]] = t.left_labels[i];
    for (std::size_t i = 0; i < lay.right_vertices.size(); ++i) label[lay.right_vertices[i]] = t.right_labels[i];
    XiBuilder b{lay, label};
    NotTree o{t.width_left(), t.width_right(), {}};
    for (int u = lay.left[0]; u >= 0; u = lay.left[u]) o.children.push_back(b.make(u));
    for (int u = lay.right[0]; u >= 0; u = lay.right[u]) o.children.push_back(b.make(u));
    return o;
}

Nat xi_inverse(const NotTree& o)
{
    if (auto r = validate_not(o); !r.ok()) throw std::invalid_argument("xi_inverse: " + r.message);
    std::vector<OrderedTree> reds, blues;
    for (const auto& c : o.children) (c.colour == Colour::red ? reds : blues).push_back(c);
    Nat t;
    BinaryTree l = unchain(reds, 0, t.left_labels, t.right_labels);
    BinaryTree r = unchain(blues, 0, t.left_labels, t.right_labels);
    t.shape = BinaryTree::node(std::move(l), std::move(r));
    return t;
}

namespace {

void colour_below(OrderedTree& t, Colour c, std::vector<OrderedTree*>& reds, std::vector<OrderedTree*>& blues)
{
    t.colour = c;
    (c == Colour::red ? reds : blues).push_back(&t);
    for (auto& g : t.children) colour_below(g, opposite(c), reds, blues);
}

}  // namespace

std::vector<NotTree> enumerate_not_trees(int n)
{
    std::vector<NotTree> out;
    for (const auto& shape : enumerate_ordered_trees(n)) {
        const std::size_t k = shape.children.size();
        for (std::size_t split = 0; split <= k; ++split) {
            NotTree o{0, 0, shape.children};
            std::vector<OrderedTree*> reds, blues;
            for (std::size_t i = 0; i < k; ++i) colour_below(o.children[i], i < split ? Colour::red : Colour::blue, reds, blues);
            o.red_label = static_cast<int>(reds.size()) + 1;
            o.blue_label = static_cast<int>(blues.size()) + 1;
            std::vector<int> rl(reds.size()), bl(blues.size());
            std::iota(rl.begin(), rl.end(), 1);
            do {
                for (std::size_t i = 0; i < reds.size(); ++i) reds[i]->label = rl[i];
                std::iota(bl.begin(), bl.end(), 1);
                do {
                    for (std::size_t i = 0; i < blues.size(); ++i) blues[i]->label = bl[i];
                    if (validate_not(o).ok()) out.push_back(o);
                } while (std::next_permutation(bl.begin(), bl.end()));
            } while (std::next_permutation(rl.begin(), rl.end()));
        }
    }
    return out;
}

namespace {

WordReport word_fail(WordViolation v, std::string msg) { return WordReport{v, std::move(msg)}; }

void post_order(const OrderedTree& t, std::vector<Letter>& out)
{
    for (const auto& c : t.children) post_order(c, out);
    out.push_back(Letter{t.colour, t.label});
}

std::vector<OrderedTree> decode(const std::vector<Letter>& word, Colour top)
{
    struct Entry {
        Colour colour;
        int label;
        OrderedTree* node;
    };
    OrderedTree root{opposite(top), INT_MAX, {}};
    std::vector<Entry> path{{top, INT_MAX, nullptr}, {opposite(top), INT_MAX, &root}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = static_cast<int>(path.size()) - 1;
        while (i >= 0 && !(path[i].colour == it->colour && path[i].label > it->value)) --i;
        if (i < 0 || i + 1 >= static_cast<int>(path.size()))
            throw std::invalid_argument("omega_inverse: letter " + std::string(colour_name(it->colour)) + " " +
                                        std::to_string(it->value) + " has no place");
        OrderedTree* parent = path[i + 1].node;
        parent->children.insert(parent->children.begin(), OrderedTree{it->colour, it->value, {}});
        path.resize(i + 2);
        path.push_back({it->colour, it->value, &parent->children.front()});
    }
    return std::move(root.children);
}

}  // namespace

WordReport validate_words(const WordPair& wp)
{
    std::vector<int> red, blue;
    for (const auto* w : {&wp.first, &wp.second}) {
        for (std::size_t i = 0; i < w->size(); ++i) {
            const Letter& l = (*w)[i];
            if (l.colour == Colour::none) return word_fail(WordViolation::uncoloured, "uncoloured letter");
            (l.colour == Colour::red ? red : blue).push_back(l.value);
            if (i > 0 && (*w)[i - 1].colour == l.colour && (*w)[i - 1].value <= l.value)
                return word_fail(WordViolation::block_order,
                                 std::string(colour_name(l.colour)) + " block not decreasing at " + std::to_string(l.value));
        }
    }
    if (!is_one_to_n(red)) return word_fail(WordViolation::letter_set, "red letters are not 1..count");
    if (!is_one_to_n(blue)) return word_fail(WordViolation::letter_set, "blue letters are not 1..count");
    if (!wp.first.empty() && wp.first.back().colour != Colour::red)
        return word_fail(WordViolation::first_ending, "first word must end with a red letter");
    if (!wp.second.empty() && wp.second.back().colour != Colour::blue)
        return word_fail(WordViolation::second_ending, "second word must end with a blue letter");
    return {};
}

WordPair omega(const NotTree& o)
{
    if (auto r = validate_not(o); !r.ok()) throw std::invalid_argument("omega: " + r.message);
    WordPair wp;
    for (const auto& c : o.children) post_order(c, c.colour == Colour::red ? wp.first : wp.second);
    return wp;
}

NotTree omega_inverse(const WordPair& wp)
{
    if (auto r = validate_words(wp); !r.ok()) throw std::invalid_argument("omega_inverse: " + r.message);
    NotTree o;
    o.children = decode(wp.first, Colour::red);
    for (auto& c : decode(wp.second, Colour::blue)) o.children.push_back(std::move(c));
    int reds = 0, blues = 0;
    for (const auto* w : {&wp.first, &wp.second})
        for (const auto& l : *w) ++(l.colour == Colour::red ? reds : blues);
    o.red_label = reds + 1;
    o.blue_label = blues + 1;
    if (auto r = validate_not(o); !r.ok()) throw std::invalid_argument("omega_inverse: decoded tree invalid: " + r.message);
    return o;
}

std::vector<WordPair> enumerate_word_pairs(int w, int h)
{
    std::vector<Letter> letters;
    for (int i = 1; i <= w; ++i) letters.push_back({Colour::red, i});
    for (int i = 1; i <= h; ++i) letters.push_back({Colour::blue, i});
    std::sort(letters.begin(), letters.end());
    std::vector<WordPair> out;
    do {
        for (std::size_t cut = 0; cut <= letters.size(); ++cut) {
            WordPair wp{{letters.begin(), letters.begin() + cut}, {letters.begin() + cut, letters.end()}};
            if (validate_words(wp).ok()) out.push_back(std::move(wp));
        }
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

namespace {

// Splits a word at its top-level letters: right-to-left maxima of `top`.
std::vector<std::vector<Letter>> segments(const std::vector<Letter>& word, Colour top)
{
    std::vector<bool> cut(word.size(), false);
    int best = 0;
    for (std::size_t i = word.size(); i-- > 0;)
        if (word[i].colour == top && word[i].value > best) {
            best = word[i].value;
            cut[i] = true;
        }
    std::vector<std::vector<Letter>> out;
    std::vector<Letter> cur;
    for (std::size_t i = 0; i < word.size(); ++i) {
        cur.push_back(word[i]);
        if (cut[i]) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    return out;
}

Cycle to_cycle(const std::vector<Letter>& seg)
{
    const std::size_t n = seg.size();
    const Letter anchor = seg.back();
    auto at = [&](std::size_t i) -> const Letter& { return seg[i % n]; };
    std::size_t start = 0;
    while (start < n && !(at(start).colour == Colour::red && at(start + n - 1).colour == Colour::blue)) ++start;
    if (start == n) throw std::logic_error("four_tuple: single-coloured segment");
    Cycle c;
    std::size_t anchor_pair = 0;
    for (std::size_t i = start; i < start + n;) {
        CyclePair p;
        for (; i < start + n && at(i).colour == Colour::red; ++i) {
            p.first.push_back(at(i).value);
            if (at(i) == anchor) anchor_pair = c.size();
        }
        for (; i < start + n && at(i).colour == Colour::blue; ++i) {
            p.second.push_back(at(i).value);
            if (at(i) == anchor) anchor_pair = c.size();
        }
        std::sort(p.first.rbegin(), p.first.rend());
        std::sort(p.second.rbegin(), p.second.rend());
        c.push_back(std::move(p));
    }
    std::rotate(c.begin(), c.begin() + anchor_pair, c.end());
    return c;
}

int anchor_of(const Cycle& c, Colour colour)
{
    int best = 0;
    for (const auto& [r, b] : c)
        for (int x : colour == Colour::red ? r : b) best = std::max(best, x);
    return best;
}

std::vector<Letter> from_cycle(const Cycle& c, Colour colour)
{
    std::vector<Letter> cyc;
    for (const auto& [r, b] : c) {
        if (r.empty() || b.empty()) throw std::invalid_argument("four_tuple_inverse: empty set in a cycle");
        std::vector<int> rs(r), bs(b);
        std::sort(rs.rbegin(), rs.rend());
        std::sort(bs.rbegin(), bs.rend());
        for (int x : rs) cyc.push_back({Colour::red, x});
        for (int x : bs) cyc.push_back({Colour::blue, x});
    }
    const Letter anchor{colour, anchor_of(c, colour)};
    auto pos = std::find(cyc.begin(), cyc.end(), anchor);
    std::rotate(cyc.begin(), pos + 1, cyc.end());
    return cyc;
}

void split_word(const std::vector<Letter>& word, Colour top, std::vector<int>& singles, std::vector<Cycle>& cycles)
{
    for (const auto& seg : segments(word, top)) {
        if (seg.size() == 1)
            singles.push_back(seg.front().value);
        else
            cycles.push_back(to_cycle(seg));
    }
    std::sort(singles.begin(), singles.end());
}

std::vector<Letter> join_word(const std::vector<int>& singles, const std::vector<Cycle>& cycles, Colour top)
{
    std::vector<std::pair<int, std::vector<Letter>>> segs;
    for (int s : singles) segs.push_back({s, {Letter{top, s}}});
    for (const auto& c : cycles) segs.push_back({anchor_of(c, top), from_cycle(c, top)});
    std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<Letter> word;
    for (const auto& [a, s] : segs) word.insert(word.end(), s.begin(), s.end());
    return word;
}

}  // namespace

FourTuple four_tuple(const WordPair& wp)
{
    if (auto r = validate_words(wp); !r.ok()) throw std::invalid_argument("four_tuple: " + r.message);
    FourTuple ft;
    split_word(wp.first, Colour::red, ft.red_singletons, ft.red_cycles);
    split_word(wp.second, Colour::blue, ft.blue_singletons, ft.blue_cycles);
    return ft;
}

WordPair four_tuple_inverse(const FourTuple& ft)
{
    WordPair wp{join_word(ft.red_singletons, ft.red_cycles, Colour::red),
                join_word(ft.blue_singletons, ft.blue_cycles, Colour::blue)};
    if (auto r = validate_words(wp); !r.ok()) throw std::invalid_argument("four_tuple_inverse: " + r.message);
    return wp;
}

bool same_cycle(const Cycle& a, const Cycle& b)
{
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (std::size_t s = 0; s < b.size(); ++s) {
        bool eq = true;
        for (std::size_t i = 0; i < a.size() && eq; ++i) eq = a[i] == b[(i + s) % b.size()];
        if (eq) return true;
    }
    return false;
}

namespace {

// Children of a vertex form its opposite branch in the NAT. That branch
// stays in the vertex's hook when the vertex starts one; otherwise its
// first vertex starts a new hook.
int hook_tops(const OrderedTree& t, bool top)
{
    int n = 0;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        const bool starts = !top && i == 0;
        n += starts + hook_tops(t.children[i], starts);
    }
    return n;
}

}  // namespace

int hooks_from_not(const NotTree& o)
{
    int n = 1;
    for (const auto& c : o.children) n += hook_tops(c, false);
    return n;
}

QPoly2 q_stirling(int n, int p)
{
    if (n < 1 || p < 1) throw std::invalid_argument("q_stirling: need n, p >= 1");
    if (p > n) return {};
    // S(m, j) = S(m-1, j-1) + (q + j - 1) S(m-1, j)
    std::vector<QPoly2> row(p + 1);
    row[1] = QPoly2(Integer(1));
    for (int m = 2; m <= n; ++m) {
        std::vector<QPoly2> next(p + 1);
        for (int j = 1; j <= std::min(m, p); ++j)
            next[j] = row[j - 1] + (QPoly2::variable(0) + QPoly2(Integer(j - 1))) * row[j];
        row = std::move(next);
    }
    return row[p];
}

QPoly2 q_stirling_brute(int n, int p)
{
    if (n < 1 || p < 1) throw std::invalid_argument("q_stirling_brute: need n, p >= 1");
    QPoly2 sum;
    std::vector<int> a(n, 0);
    while (true) {
        const int blocks = *std::max_element(a.begin(), a.end()) + 1;
        if (blocks == p) sum += QPoly2::monomial(static_cast<int>(std::count(a.begin() + 1, a.end(), 0)), 0);
        // Next restricted growth string.
        int i = n - 1;
        for (; i > 0; --i) {
            const int m = *std::max_element(a.begin(), a.begin() + i);
            if (a[i] <= m) break;
        }
        if (i == 0) break;
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
    return sum;
}

QPoly2 rising_alpha_beta(int m)
{
    QPoly2 r(Integer(1));
    const QPoly2 ab = QPoly2::variable(0) + QPoly2::variable(1);
    for (int i = 0; i < m; ++i) r *= ab + QPoly2(Integer(i));
    return r;
}

namespace {

QPoly2 in_beta(const QPoly2& p)
{
    QPoly2 r;
    for (const auto& [e, c] : p.terms()) r.add_term(e.second, e.first, c);
    return r;
}

QPoly2 summand(int w, int h, int p)
{
    return QPoly2(factorial(p - 1)) * rising_alpha_beta(p - 1) * q_stirling(w + 1, p) * in_beta(q_stirling(h + 1, p));
}

}  // namespace

std::map<int, QPoly2> stirling_summands(int w, int h)
{
    if (w < 0 || h < 0) throw std::invalid_argument("stirling_summands: negative size");
    std::map<int, QPoly2> out;
    const int last = std::min(w, h) + 1;
    for (int p = 1; p <= last; ++p) out[p] = summand(w, h, p);
    if (!summand(w, h, last + 1).is_zero()) throw std::logic_error("stirling_summands: sum does not stop");
    return out;
}

QPoly2 stirling_count(int w, int h)
{
    QPoly2 s;
    for (const auto& [p, v] : stirling_summands(w, h)) s += v;
    return s;
}

std::map<int, QPoly2> refined_counts_by_hooks(int w, int h)
{
    std::map<int, QPoly2> out;
    for (const auto& t : enumerate_nats_by_size(w, h)) {
        const NatStats st = nat_stats(t);
        out[st.hook_number] += QPoly2::monomial(st.leftmost_left, st.rightmost_right);
    }
    return out;
}

}  // namespace nattree
