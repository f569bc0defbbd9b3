#include "nattree/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "nattree/bijections.hpp"
#include "nattree/io.hpp"
#include "nattree/nat.hpp"
#include "nattree/natdk.hpp"
#include "nattree/qhook.hpp"
#include "nattree/series.hpp"
#include "nattree/verify.hpp"

namespace nattree {

namespace {

enum class Format { json, csv, pretty };

struct Output {
    std::vector<Json> rows;
    int code = 0;
};

Json read_json(const std::string& path)
{
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in '" + path + "': " + e.what());
    }
}

std::string csv_cell(const Json& v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void emit(const Output& o, Format f, std::ostream& out)
{
    if (f == Format::csv) {
        if (o.rows.empty()) return;
        std::vector<std::string> keys;
        for (const auto& row : o.rows)
            for (const auto& [k, v] : row.items())
                if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
        for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
        out << '\n';
        for (const auto& row : o.rows) {
            for (std::size_t i = 0; i < keys.size(); ++i)
                out << (i ? "," : "") << (row.contains(keys[i]) ? csv_cell(row[keys[i]]) : "");
            out << '\n';
        }
        return;
    }
    for (const auto& row : o.rows) out << (f == Format::pretty ? row.dump(2) : row.dump()) << '\n';
}

std::pair<int, int> parse_pair(const std::string& text, const char* what)
{
    const auto comma = text.find(',');
    try {
        if (comma != std::string::npos) {
            std::size_t a = 0, b = 0;
            const int x = std::stoi(text.substr(0, comma), &a);
            const int y = std::stoi(text.substr(comma + 1), &b);
            if (a == comma && b == text.size() - comma - 1 && x >= 0 && y >= 0) return {x, y};
        }
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string(what) + " must look like 'w,h' with non-negative integers");
}

Rational parse_rational(const std::string& text)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Integer(text));
        const Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(Integer(text.substr(0, slash)), den);
    } catch (const std::exception&) {
        throw std::invalid_argument("'" + text + "' is not a rational number");
    }
}

Json stats_json(const Nat& t) { return to_json(nat_stats(t)); }

// count

// Enumerations are skipped above this many trees.
const Integer enumeration_limit = 200000;

Output cmd_count(const std::string& shape_text)
{
    const BinaryTree b = parse_tree(shape_text);
    if (b.empty()) throw std::invalid_argument("the shape must have at least one vertex");
    const Integer hook = count_nats_hook(b);
    Json row{{"shape", to_string(b)}, {"vertices", b.size()}, {"hook_formula", to_json(hook)}};
    bool agree = true;
    if (hook > enumeration_limit) {
        row["recursive"] = nullptr;
        row["brute_force"] = nullptr;
        row["agree"] = nullptr;
        return {{row}};
    }
    const auto rec = enumerate_nats_of_shape(b);
    row["recursive"] = rec.size();
    agree = Integer(rec.size()) == hook;
    try {
        const auto brute = enumerate_nats_of_shape(b, EnumerationMode::brute_force);
        row["brute_force"] = brute.size();
        agree = agree && Integer(brute.size()) == hook;
    } catch (const std::length_error&) {
        row["brute_force"] = nullptr;
    }
    row["agree"] = agree;
    return {{row}, agree ? 0 : 1};
}

// enumerate

Output cmd_enumerate(const std::string& shape_text, const std::string& size_text, bool stats, const std::string& mode)
{
    if (shape_text.empty() == size_text.empty()) throw std::invalid_argument("give exactly one of --shape and --size");
    const EnumerationMode m = mode == "brute" ? EnumerationMode::brute_force : EnumerationMode::recursive;
    std::vector<Nat> nats;
    if (!shape_text.empty()) {
        const BinaryTree b = parse_tree(shape_text);
        if (b.empty()) throw std::invalid_argument("the shape must have at least one vertex");
        nats = enumerate_nats_of_shape(b, m);
    } else {
        const auto [w, h] = parse_pair(size_text, "--size");
        if (m == EnumerationMode::recursive) {
            nats = enumerate_nats_by_size(w, h);
        } else {
            for (const auto& b : enumerate_binary_trees(w + h + 1))
                if (b.left_count() == w && b.right_count() == h) {
                    auto part = enumerate_nats_of_shape(b, m);
                    nats.insert(nats.end(), part.begin(), part.end());
                }
        }
    }
    Output o;
    for (const auto& t : nats) {
        Json row{{"shape", to_string(t.shape)}, {"left", t.left_labels}, {"right", t.right_labels}};
        if (stats) row["stats"] = stats_json(t);
        o.rows.push_back(std::move(row));
    }
    return o;
}

// qhook

Output cmd_qhook(const std::string& shape_text, const std::string& stat)
{
    const BinaryTree b = parse_tree(shape_text);
    if (b.empty()) throw std::invalid_argument("the shape must have at least one vertex");
    const Statistic s = parse_statistic(stat);
    const QPoly2 product = q_hook_product(b);
    const QPoly2 sum = q_weight_sum(b, s);
    Json row{{"shape", to_string(b)},     {"stat", statistic_name(s)},           {"product", to_json(product)},
             {"weight_sum", to_json(sum)}, {"product_text", product.to_string("qL", "qR")}, {"equal", product == sum}};
    return {{row}, product == sum ? 0 : 1};
}

// biject

Output cmd_biject(const std::string& to, const std::string& in)
{
    const Nat t = nat_from_json(read_json(in));
    const NotTree o = xi(t);
    if (to == "not") return {{to_json(o)}};
    const WordPair wp = omega(o);
    if (to == "words") return {{to_json(wp)}};
    return {{to_json(four_tuple(wp))}};
}

// series

int cmd_series(const std::string& which, int d, int k, int order, int restrict_axis, Format f, std::ostream& out)
{
    if (which == "gfnab") {
        if (restrict_axis) throw std::invalid_argument("--restrict applies to gfn, gfh and dk only");
        const ParamEgf s = gfn_alpha_beta_closed(order);
        if (f == Format::csv)
            write_csv(out, s);
        else if (f == Format::pretty)
            for (const auto& [e, c] : s.terms())
                out << "x^" << e[0] << " y^" << e[1] << ": " << c.to_string("alpha", "beta") << '\n';
        else
            write_json_lines(out, s);
        return 0;
    }
    Egf s(0, 0);
    if (which == "gfn") {
        s = gfn_closed(order);
    } else if (which == "gfh") {
        s = gfh_closed(order);
    } else {
        if (k > d) throw std::invalid_argument("--k must not exceed --d");
        s = fixed_point_dk(d, k, order);
    }
    if (restrict_axis) {
        if (restrict_axis > s.nvars()) throw std::invalid_argument("--restrict names a missing variable");
        s = s.restrict_variable(restrict_axis - 1);
    }
    if (f == Format::csv) {
        write_csv(out, s);
    } else if (f == Format::pretty) {
        for (const auto& [e, c] : s.terms()) {
            Integer fact = 1;
            for (int x : e) fact *= factorial(x);
            for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << "x" << i + 1 << "^" << e[i];
            out << ": " << to_string(c) << "  (count " << to_string(c * Rational(fact)) << ")\n";
        }
    } else {
        write_json_lines(out, s);
    }
    return 0;
}

// stirling

Output cmd_stirling(int w, int h, const std::string& alpha, const std::string& beta)
{
    if (alpha.empty() != beta.empty()) throw std::invalid_argument("give both --alpha and --beta or neither");
    const auto summands = stirling_summands(w, h);
    Output o;
    QPoly2 total;
    std::optional<std::pair<Rational, Rational>> at;
    if (!alpha.empty()) at = std::pair{parse_rational(alpha), parse_rational(beta)};
    for (const auto& [p, poly] : summands) {
        total += poly;
        Json row{{"p", p}};
        if (at)
            row["value"] = to_json(poly.evaluate(at->first, at->second));
        else
            row["summand"] = to_json(poly);
        o.rows.push_back(std::move(row));
    }
    Json row{{"p", "total"}};
    if (at)
        row["value"] = to_json(total.evaluate(at->first, at->second));
    else
        row["summand"] = to_json(total);
    o.rows.push_back(std::move(row));
    return o;
}

// dk

const char* dk_violation_name(DkViolation v)
{
    switch (v) {
    case DkViolation::none: return "none";
    case DkViolation::structure: return "structure";
    case DkViolation::duplicate: return "duplicate";
    case DkViolation::ancestor_order: return "ancestor_order";
    case DkViolation::interval: return "interval";
    }
    return "?";
}

const char* geo_violation_name(GeoViolation v)
{
    switch (v) {
    case GeoViolation::none: return "none";
    case GeoViolation::malformed: return "malformed";
    case GeoViolation::box: return "box";
    case GeoViolation::root: return "root";
    case GeoViolation::cone: return "cone";
    case GeoViolation::affine: return "affine";
    case GeoViolation::hyperplane: return "hyperplane";
    }
    return "?";
}

Output cmd_dk(const std::string& validate, const std::string& enumerate, const std::string& geometric)
{
    const int given = !validate.empty() + !enumerate.empty() + !geometric.empty();
    if (given != 1) throw std::invalid_argument("give exactly one of --validate, --enumerate and --geometric");
    if (!validate.empty()) {
        const Json j = read_json(validate);
        if (j.contains("points")) {
            const auto r = validate_geometric(geo_from_json(j));
            return {{Json{{"kind", "geometric"}, {"valid", r.ok()}, {"violation", geo_violation_name(r.violation)},
                          {"message", r.message}}},
                    r.ok() ? 0 : 1};
        }
        const auto r = validate_dk(dk_from_json(j, false));
        return {{Json{{"kind", "dk"}, {"valid", r.ok()}, {"violation", dk_violation_name(r.violation)},
                      {"message", r.message}}},
                r.ok() ? 0 : 1};
    }
    if (!enumerate.empty()) {
        const DkNat t = dk_from_json(read_json(enumerate), false);
        Output o;
        for (const auto& u : enumerate_dk(t.shape)) o.rows.push_back(to_json(u));
        return o;
    }
    const Json j = read_json(geometric);
    if (j.contains("points")) return {{to_json(from_geometric(geo_from_json(j)))}};
    return {{to_json(to_geometric(dk_from_json(j)))}};
}

// verify

Output cmd_verify(const std::string& suite, int max_size)
{
    Output o;
    int passed = 0, failed = 0;
    for (const auto& r : run_suite(suite, max_size)) {
        Json row{{"suite", r.suite}, {"property", r.property}, {"pass", r.passed}, {"checks", r.checks}};
        if (!r.passed) row["detail"] = r.detail;
        (r.passed ? passed : failed) += 1;
        o.rows.push_back(std::move(row));
    }
    o.code = failed == 0 ? 0 : 1;
    return o;
}

// render

std::string cmd_render(const std::string& format, const std::string& in)
{
    const Json j = read_json(in);
    const bool dot = format == "dot";
    if (j.contains("shape")) {
        const Nat t = nat_from_json(j);
        return dot ? to_dot(t) : to_text(t);
    }
    if (j.contains("d") && j.contains("root")) {
        const DkNat t = dk_from_json(j);
        return dot ? to_dot(t) : to_text(t);
    }
    if (j.contains("root") && j.contains("children")) {
        const NotTree o = not_from_json(j);
        if (auto r = validate_not(o); !r.ok()) throw std::invalid_argument("invalid ordered tree: " + r.message);
        return dot ? to_dot(o) : to_text(o);
    }
    if (j.contains("points")) {
        const DkNat t = from_geometric(geo_from_json(j));
        return dot ? to_dot(t) : to_text(t);
    }
    throw std::invalid_argument("cannot tell what '" + in + "' holds");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Non-ambiguous trees: counting, q-analogues, bijections and generating functions", "nattree"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"pretty", Format::pretty}};
    Format format = Format::json;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json (default), csv or pretty")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    std::string shape, size, stat = "inv", mode = "recursive", to, in, which = "gfn", suite = "all";
    std::string alpha, beta, dk_validate, dk_enumerate, dk_geometric, render_format = "text";
    bool stats = false;
    int d = 2, k = 1, order = 6, restrict_axis = 0, w = 0, h = 0, max_size = 6;

    auto* count = app.add_subcommand("count", "Hook formula against both enumerations");
    count->add_option("--shape", shape, "Tree such as \"((. .) (. .))\"")->required();
    add_format(count);

    auto* enumerate = app.add_subcommand("enumerate", "List the NATs of a shape or of a size w,h");
    enumerate->add_option("--shape", shape, "Tree string");
    enumerate->add_option("--size", size, "Left and right vertex counts, as w,h");
    enumerate->add_flag("--stats", stats, "Add widths, LO, RO and hook number");
    enumerate->add_option("--mode", mode, "recursive or brute")->check(CLI::IsMember({"recursive", "brute"}));
    add_format(enumerate);

    auto* qhook = app.add_subcommand("qhook", "q-hook product and weighted sum");
    qhook->add_option("--shape", shape, "Tree string")->required();
    qhook->add_option("--stat", stat, "inv or imaj")->check(CLI::IsMember({"inv", "imaj"}));
    add_format(qhook);

    auto* biject = app.add_subcommand("biject", "Ordered tree, word pair or 4-tuple of a NAT");
    biject->add_option("--to", to, "not, words or tuple")->required()->check(CLI::IsMember({"not", "words", "tuple"}));
    biject->add_option("--in", in, "NAT JSON file, - for stdin")->required();
    add_format(biject);

    auto* series = app.add_subcommand("series", "Generating function coefficients");
    series->add_option("--which", which, "gfn, gfh, gfnab or dk")->check(CLI::IsMember({"gfn", "gfh", "gfnab", "dk"}));
    series->add_option("--d", d, "Dimension for dk")->check(CLI::Range(1, 6));
    series->add_option("--k", k, "Direction size for dk")->check(CLI::Range(1, 6));
    series->add_option("--order", order, "Total degree")->check(CLI::Range(0, 30));
    series->add_option("--restrict", restrict_axis, "Set this variable (1-based) to zero")->check(CLI::Range(1, 6));
    add_format(series);

    auto* stirling = app.add_subcommand("stirling", "Hook-number summands for w left and h right vertices");
    stirling->set_help_flag("--help", "Print this help message and exit");
    stirling->add_option("--w", w, "Left vertices")->required()->check(CLI::Range(0, 40));
    stirling->add_option("--h", h, "Right vertices")->required()->check(CLI::Range(0, 40));
    stirling->add_option("--alpha", alpha, "Rational value of alpha");
    stirling->add_option("--beta", beta, "Rational value of beta");
    add_format(stirling);

    auto* dk = app.add_subcommand("dk", "(d,k)-NAT validation, enumeration and geometric form");
    dk->add_option("--validate", dk_validate, "DkNat or geometric JSON file");
    dk->add_option("--enumerate", dk_enumerate, "DkNat JSON file whose shape is enumerated");
    dk->add_option("--geometric", dk_geometric, "Convert between tree and point forms");
    add_format(dk);

    auto* verify = app.add_subcommand("verify", "Run property suites");
    std::vector<std::string> suites{"all"};
    for (const auto& s : suite_names()) suites.push_back(s);
    verify->add_option("--suite", suite, "all or one suite")->check(CLI::IsMember(suites));
    verify->add_option("--max-size", max_size, "Largest size exercised")->check(CLI::Range(1, 9));
    add_format(verify);

    auto* render = app.add_subcommand("render", "DOT or text drawing of a tree file");
    render->add_option("--format", render_format, "dot or text")->check(CLI::IsMember({"dot", "text"}));
    render->add_option("--in", in, "NAT, DkNat, ordered tree or geometric JSON")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << '\n';
        return 2;
    }

    try {
        Output o;
        if (count->parsed()) {
            o = cmd_count(shape);
        } else if (enumerate->parsed()) {
            o = cmd_enumerate(shape, size, stats, mode);
        } else if (qhook->parsed()) {
            o = cmd_qhook(shape, stat);
        } else if (biject->parsed()) {
            o = cmd_biject(to, in);
        } else if (series->parsed()) {
            return cmd_series(which, d, k, order, restrict_axis, format, out);
        } else if (stirling->parsed()) {
            o = cmd_stirling(w, h, alpha, beta);
        } else if (dk->parsed()) {
            o = cmd_dk(dk_validate, dk_enumerate, dk_geometric);
        } else if (verify->parsed()) {
            o = cmd_verify(suite, max_size);
        } else if (render->parsed()) {
            out << cmd_render(render_format, in);
            return 0;
        }
        emit(o, format, out);
        return o.code;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << '\n';
        return 2;
    }
}

}  // namespace nattree
