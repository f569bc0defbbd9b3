#include "nattree/io.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nattree {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
    return j.at(name);
}

int as_int(const Json& j, const std::string& what)
{
    if (!j.is_number_integer()) bad(what + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_array(const Json& j, const std::string& what)
{
    if (!j.is_array()) bad(what + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(as_int(x, what + " entry"));
    return out;
}

const char* colour_name(Colour c) { return c == Colour::red ? "red" : c == Colour::blue ? "blue" : "none"; }

Colour parse_colour(const Json& j)
{
    if (j == "red" || j == "r") return Colour::red;
    if (j == "blue" || j == "b") return Colour::blue;
    bad("colour must be \"red\" or \"blue\"");
}

}  // namespace

Json to_json(const BinaryTree& t)
{
    if (t.empty()) return nullptr;
    return Json{{"l", to_json(t.left())}, {"r", to_json(t.right())}};
}

BinaryTree tree_from_json(const Json& j)
{
    if (j.is_null()) return {};
    if (j.is_string()) return parse_tree(j.get<std::string>());
    if (!j.is_object()) bad("tree must be null, an object or a tree string");
    return BinaryTree::node(tree_from_json(field(j, "l")), tree_from_json(field(j, "r")));
}

Json to_json(const Nat& t)
{
    return Json{{"shape", to_json(t.shape)}, {"left", t.left_labels}, {"right", t.right_labels}};
}

Nat nat_from_json(const Json& j)
{
    Nat t{tree_from_json(field(j, "shape")), int_array(field(j, "left"), "left"), int_array(field(j, "right"), "right")};
    if (auto r = validate_nat(t); !r.ok()) throw std::invalid_argument("invalid NAT: " + r.message);
    return t;
}

Json to_json(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Json to_json(const Rational& x)
{
    if (is_integral(x)) return to_json(numerator_of(x));
    return to_string(x);
}

Json to_json(const QPoly2& p)
{
    Json out = Json::array();
    for (const auto& [e, c] : p.graded()) out.push_back(Json{e.first, e.second, to_json(c)});
    return out;
}

Json to_json(const ParamPoly& p)
{
    Json out = Json::array();
    for (const auto& [e, c] : p.graded()) out.push_back(Json{e.first, e.second, to_json(c)});
    return out;
}

QPoly2 qpoly_from_json(const Json& j)
{
    if (!j.is_array()) bad("polynomial must be an array of [e0, e1, coeff]");
    QPoly2 p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) bad("polynomial term must be [e0, e1, coeff]");
        Integer c;
        if (t[2].is_number_integer())
            c = t[2].get<std::int64_t>();
        else if (t[2].is_string())
            c = Integer(t[2].get<std::string>());
        else
            bad("coefficient must be an integer");
        p.add_term(as_int(t[0], "exponent"), as_int(t[1], "exponent"), c);
    }
    return p;
}

Json to_json(const PermSum& s)
{
    Json out = Json::array();
    for (const auto& [p, m] : s) out.push_back(Json{{"perm", p}, {"mult", m}});
    return out;
}

std::string to_string(const Letter& l)
{
    return (l.colour == Colour::red ? "r" : l.colour == Colour::blue ? "b" : "?") + std::to_string(l.value);
}

Letter parse_letter(const std::string& s)
{
    if (s.size() < 2 || (s[0] != 'r' && s[0] != 'b')) throw std::invalid_argument("bad letter '" + s + "'");
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s.substr(1), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() - 1) throw std::invalid_argument("bad letter '" + s + "'");
    return Letter{s[0] == 'r' ? Colour::red : Colour::blue, v};
}

std::string to_string(const std::vector<Letter>& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + to_string(w[i]);
    return s;
}

Json to_json(const WordPair& wp)
{
    Json a = Json::array(), b = Json::array();
    for (const auto& l : wp.first) a.push_back(to_string(l));
    for (const auto& l : wp.second) b.push_back(to_string(l));
    return Json{{"first", a}, {"second", b}};
}

WordPair words_from_json(const Json& j)
{
    auto word = [](const Json& w) {
        if (!w.is_array()) bad("word must be an array of letters");
        std::vector<Letter> out;
        for (const auto& l : w) {
            if (!l.is_string()) bad("letter must be a string like \"r4\"");
            out.push_back(parse_letter(l.get<std::string>()));
        }
        return out;
    };
    return WordPair{word(field(j, "first")), word(field(j, "second"))};
}

namespace {

Json ordered_to_json(const OrderedTree& t)
{
    Json kids = Json::array();
    for (const auto& c : t.children) kids.push_back(ordered_to_json(c));
    return Json{{"colour", colour_name(t.colour)}, {"label", t.label}, {"children", kids}};
}

OrderedTree ordered_from_json(const Json& j)
{
    OrderedTree t;
    t.colour = parse_colour(field(j, "colour"));
    t.label = as_int(field(j, "label"), "label");
    if (j.contains("children")) {
        if (!j["children"].is_array()) bad("children must be an array");
        for (const auto& c : j["children"]) t.children.push_back(ordered_from_json(c));
    }
    return t;
}

Json cycle_to_json(const Cycle& c)
{
    Json out = Json::array();
    for (const auto& [r, b] : c) out.push_back(Json{r, b});
    return out;
}

Cycle cycle_from_json(const Json& j)
{
    if (!j.is_array()) bad("cycle must be an array of [red set, blue set]");
    Cycle c;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) bad("cycle entry must be [red set, blue set]");
        c.emplace_back(int_array(p[0], "red set"), int_array(p[1], "blue set"));
    }
    return c;
}

}  // namespace

Json to_json(const NotTree& o)
{
    Json kids = Json::array();
    for (const auto& c : o.children) kids.push_back(ordered_to_json(c));
    return Json{{"root", {o.red_label, o.blue_label}}, {"children", kids}};
}

NotTree not_from_json(const Json& j)
{
    const auto root = int_array(field(j, "root"), "root");
    if (root.size() != 2) bad("root must be [red label, blue label]");
    NotTree o;
    o.red_label = root[0];
    o.blue_label = root[1];
    const Json& kids = field(j, "children");
    if (!kids.is_array()) bad("children must be an array");
    for (const auto& c : kids) o.children.push_back(ordered_from_json(c));
    return o;
}

Json to_json(const FourTuple& ft)
{
    Json rc = Json::array(), bc = Json::array();
    for (const auto& c : ft.red_cycles) rc.push_back(cycle_to_json(c));
    for (const auto& c : ft.blue_cycles) bc.push_back(cycle_to_json(c));
    return Json{{"red_singletons", ft.red_singletons},
                {"blue_singletons", ft.blue_singletons},
                {"red_cycles", rc},
                {"blue_cycles", bc}};
}

FourTuple four_tuple_from_json(const Json& j)
{
    FourTuple ft;
    ft.red_singletons = int_array(field(j, "red_singletons"), "red_singletons");
    ft.blue_singletons = int_array(field(j, "blue_singletons"), "blue_singletons");
    for (const auto& c : field(j, "red_cycles")) ft.red_cycles.push_back(cycle_from_json(c));
    for (const auto& c : field(j, "blue_cycles")) ft.blue_cycles.push_back(cycle_from_json(c));
    return ft;
}

namespace {

Json tuple_json(const Tuple& t)
{
    Json out = Json::array();
    for (int x : t) out.push_back(x == 0 ? Json(nullptr) : Json(x));
    return out;
}

Tuple tuple_from(const Json& j, int d)
{
    if (!j.is_array() || static_cast<int>(j.size()) != d) bad("tuple must have " + std::to_string(d) + " entries");
    Tuple t;
    for (const auto& x : j) t.push_back(x.is_null() ? 0 : as_int(x, "tuple entry"));
    for (int x : t)
        if (x < 0) bad("tuple entries must be positive or null");
    return t;
}

Json dk_children(const DkNat& t, int v)
{
    Json out = Json::object();
    for (int c : t.shape.children(v))
        out[direction_string(t.shape.direction(c))] = Json{{"tuple", tuple_json(t.labels[c])}, {"children", dk_children(t, c)}};
    return out;
}

std::pair<DkShape, std::vector<Tuple>> dk_below(const Json& kids, int d, int k)
{
    if (!kids.is_object()) bad("children must be an object keyed by direction");
    std::vector<std::pair<Direction, std::pair<DkShape, std::vector<Tuple>>>> subs;
    for (const auto& [key, child] : kids.items()) {
        Direction dir = parse_direction(key);
        Tuple t = tuple_from(field(child, "tuple"), d);
        auto inner = child.contains("children") ? dk_below(child["children"], d, k)
                                                : std::pair{DkShape::leaf(d, k), std::vector<Tuple>{Tuple{}}};
        inner.second[0] = t;
        subs.emplace_back(std::move(dir), std::move(inner));
    }
    std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Direction, DkShape>> shapes;
    std::vector<Tuple> labels{Tuple{}};
    for (auto& [dir, sub] : subs) {
        shapes.emplace_back(dir, sub.first);
        labels.insert(labels.end(), sub.second.begin(), sub.second.end());
    }
    return {DkShape::join(d, k, std::move(shapes)), std::move(labels)};
}

}  // namespace

Json to_json(const DkNat& t)
{
    return Json{{"d", t.shape.d()}, {"k", t.shape.k()}, {"root", t.labels.at(0)}, {"children", dk_children(t, 0)}};
}

DkNat dk_from_json(const Json& j, bool validate)
{
    const int d = as_int(field(j, "d"), "d"), k = as_int(field(j, "k"), "k");
    if (k < 1 || k > d) bad("need 1 <= k <= d");
    const Tuple root = tuple_from(field(j, "root"), d);
    DkNat t;
    try {
        auto [shape, labels] = dk_below(j.contains("children") ? j["children"] : Json::object(), d, k);
        labels[0] = root;
        t = DkNat{std::move(shape), std::move(labels)};
    } catch (const nlohmann::json::exception& e) {
        bad(e.what());
    }
    if (auto r = validate_dk(t); validate && !r.ok()) throw std::invalid_argument("invalid (d,k)-NAT: " + r.message);
    return t;
}

Json to_json(const GeoNat& g)
{
    Json pts = Json::array();
    for (const auto& p : g.points)
        pts.push_back(Json{{"coords", p.coords}, {"type", p.type.empty() ? Json("root") : Json(p.type)}});
    return Json{{"d", g.d}, {"k", g.k}, {"box", g.box}, {"points", pts}};
}

GeoNat geo_from_json(const Json& j)
{
    GeoNat g;
    g.box = int_array(field(j, "box"), "box");
    g.d = static_cast<int>(g.box.size());
    const Json& pts = field(j, "points");
    if (!pts.is_array()) bad("points must be an array");
    for (const auto& p : pts) {
        GeoPoint gp;
        gp.coords = int_array(field(p, "coords"), "coords");
        if (p.contains("type") && p["type"] != "root") gp.type = int_array(p["type"], "type");
        g.points.push_back(std::move(gp));
    }
    if (j.contains("k")) {
        g.k = as_int(j["k"], "k");
    } else {
        for (const auto& p : g.points)
            if (!p.type.empty()) g.k = static_cast<int>(p.type.size());
        if (g.k == 0) bad("cannot infer k: give \"k\" or typed points");
    }
    return g;
}

Json to_json(const NatStats& s)
{
    return Json{{"size", s.size},         {"wL", s.width_left}, {"wR", s.width_right},
                {"LO", s.leftmost_left}, {"RO", s.rightmost_right}, {"hooks", s.hook_number}};
}

namespace {

Integer exponent_factorial(const std::vector<int>& e)
{
    Integer f = 1;
    for (int x : e) f *= factorial(x);
    return f;
}

}  // namespace

void write_csv(std::ostream& os, const Egf& s)
{
    for (int i = 0; i < s.nvars(); ++i) os << 'e' << i + 1 << ',';
    os << "numerator,denominator,count\n";
    for (const auto& [e, c] : s.terms()) {
        for (int x : e) os << x << ',';
        os << numerator_of(c) << ',' << denominator_of(c) << ',' << to_string(c * Rational(exponent_factorial(e)))
           << '\n';
    }
}

void write_csv(std::ostream& os, const ParamEgf& s)
{
    for (int i = 0; i < s.nvars(); ++i) os << 'e' << i + 1 << ',';
    os << "alpha,beta,numerator,denominator,count\n";
    for (const auto& [e, p] : s.terms())
        for (const auto& [ab, c] : p.graded()) {
            for (int x : e) os << x << ',';
            os << ab.first << ',' << ab.second << ',' << numerator_of(c) << ',' << denominator_of(c) << ','
               << to_string(c * Rational(exponent_factorial(e))) << '\n';
        }
}

void write_json_lines(std::ostream& os, const Egf& s)
{
    for (const auto& [e, c] : s.terms())
        os << Json{{"exp", e}, {"coeff", to_json(c)}, {"count", to_json(c * Rational(exponent_factorial(e)))}}.dump()
           << '\n';
}

void write_json_lines(std::ostream& os, const ParamEgf& s)
{
    for (const auto& [e, p] : s.terms())
        os << Json{{"exp", e}, {"coeff", to_json(p)}, {"count", to_json(p * Rational(exponent_factorial(e)))}}.dump()
           << '\n';
}

namespace {

const char* red_hex = "#c0392b";
const char* blue_hex = "#2471a3";

}  // namespace

std::string to_dot(const Nat& t)
{
    const Layout lay = layout(t.shape);
    std::ostringstream os;
    os << "digraph nat {\n  node [shape=circle, fontsize=10];\n";
    std::size_t li = 0, ri = 0;
    for (int v = 0; v < lay.size(); ++v) {
        os << "  v" << v << " [label=\"";
        if (lay.side[v] == Side::root)
            os << "\", shape=point";
        else if (lay.side[v] == Side::left)
            os << t.left_labels.at(li++) << "\", fontcolor=\"" << red_hex << '"';
        else
            os << t.right_labels.at(ri++) << "\", fontcolor=\"" << blue_hex << '"';
        os << "];\n";
    }
    for (int v = 0; v < lay.size(); ++v) {
        if (lay.left[v] >= 0) os << "  v" << v << " -> v" << lay.left[v] << " [tailport=sw, color=\"" << red_hex << "\"];\n";
        if (lay.right[v] >= 0)
            os << "  v" << v << " -> v" << lay.right[v] << " [tailport=se, color=\"" << blue_hex << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

std::string tuple_string(const Tuple& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + (t[i] == 0 ? std::string("*") : std::to_string(t[i]));
    return s + ")";
}

}  // namespace

std::string to_dot(const DkNat& t)
{
    std::ostringstream os;
    os << "digraph dknat {\n  node [shape=box, fontsize=10];\n";
    for (int v = 0; v < t.shape.size(); ++v) os << "  v" << v << " [label=\"" << tuple_string(t.labels[v]) << "\"];\n";
    for (int v = 1; v < t.shape.size(); ++v)
        os << "  v" << t.shape.parent(v) << " -> v" << v << " [label=\"{" << direction_string(t.shape.direction(v)) << "}\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const NotTree& o)
{
    std::ostringstream os;
    os << "digraph not {\n  node [shape=circle, fontsize=10];\n";
    os << "  v0 [label=\"" << o.red_label << "," << o.blue_label << "\", shape=box];\n";
    int next = 1;
    std::function<void(const OrderedTree&, int)> walk = [&](const OrderedTree& t, int parent) {
        const int id = next++;
        os << "  v" << id << " [label=\"" << t.label << "\", fontcolor=\""
           << (t.colour == Colour::red ? red_hex : blue_hex) << "\"];\n";
        os << "  v" << parent << " -> v" << id << ";\n";
        for (const auto& c : t.children) walk(c, id);
    };
    for (const auto& c : o.children) walk(c, 0);
    os << "}\n";
    return os.str();
}

std::string to_text(const Nat& t)
{
    const Layout lay = layout(t.shape);
    std::vector<int> label(lay.size(), 0);
    for (std::size_t i = 0; i < lay.left_vertices.size(); ++i) label[lay.left_vertices[i]] = t.left_labels.at(i);
    for (std::size_t i = 0; i < lay.right_vertices.size(); ++i) label[lay.right_vertices[i]] = t.right_labels.at(i);
    std::ostringstream os;
    std::function<void(int, int)> walk = [&](int v, int depth) {
        os << std::string(2 * depth, ' ');
        if (lay.side[v] == Side::root)
            os << "root (" << t.width_left() << "," << t.width_right() << ")";
        else
            os << (lay.side[v] == Side::left ? "L " : "R ") << label[v];
        os << '\n';
        if (lay.left[v] >= 0) walk(lay.left[v], depth + 1);
        if (lay.right[v] >= 0) walk(lay.right[v], depth + 1);
    };
    walk(0, 0);
    return os.str();
}

std::string to_text(const DkNat& t)
{
    std::ostringstream os;
    std::function<void(int, int)> walk = [&](int v, int depth) {
        os << std::string(2 * depth, ' ');
        if (v > 0) os << '{' << direction_string(t.shape.direction(v)) << "} ";
        os << tuple_string(t.labels[v]) << '\n';
        for (int c : t.shape.children(v)) walk(c, depth + 1);
    };
    walk(0, 0);
    return os.str();
}

std::string to_text(const NotTree& o)
{
    std::ostringstream os;
    os << "root (" << o.red_label << "," << o.blue_label << ")\n";
    std::function<void(const OrderedTree&, int)> walk = [&](const OrderedTree& t, int depth) {
        os << std::string(2 * depth, ' ') << (t.colour == Colour::red ? 'r' : 'b') << t.label << '\n';
        for (const auto& c : t.children) walk(c, depth + 1);
    };
    for (const auto& c : o.children) walk(c, 1);
    return os.str();
}

}  // namespace nattree
