#include "nattree/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "nattree/bijections.hpp"
#include "nattree/nat.hpp"
#include "nattree/natdk.hpp"
#include "nattree/perm.hpp"
#include "nattree/qhook.hpp"
#include "nattree/series.hpp"
#include "nattree/trees.hpp"

namespace nattree {

namespace {

class Checker {
public:
    Checker(std::string suite, std::string property)
    {
        r_.suite = std::move(suite);
        r_.property = std::move(property);
    }

    void expect(bool ok, const std::string& what)
    {
        ++r_.checks;
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.detail = what;
        }
    }

    PropertyResult result() const { return r_; }

private:
    PropertyResult r_;
};

using Property = std::function<void(Checker&, int)>;

struct Entry {
    const char* name;
    Property run;
};

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

std::vector<BinaryTree> trees_up_to(int n)
{
    std::vector<BinaryTree> out;
    for (int m = 1; m <= n; ++m) {
        auto ts = enumerate_binary_trees(m);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
}

std::string shape_note(const BinaryTree& b) { return "shape " + to_string(b); }

// trees

void catalan_counts(Checker& c, int s)
{
    for (int n = 0; n <= std::max(s, 1); ++n)
        c.expect(Integer(enumerate_binary_trees(n).size()) == catalan(n), "n = " + std::to_string(n));
}

void hook_partition_sizes(Checker& c, int s)
{
    for (const auto& b : trees_up_to(s)) {
        const auto hp = hook_partition(b);
        std::size_t total = 0;
        for (const auto& h : hp.hooks) total += h.size();
        c.expect(static_cast<int>(total) == b.size(), shape_note(b) + ": hook sizes do not add up");
        c.expect(hp.hook_number() >= 1, shape_note(b) + ": no hooks");
        const bool single = static_cast<int>(hook_of(layout(b), 0).size()) == b.size();
        c.expect((hp.hook_number() == 1) == single, shape_note(b) + ": one hook iff the root hook covers");
    }
}

void hook_leaf_distribution(Checker& c, int s)
{
    for (int n = 1; n <= s; ++n) {
        std::map<int, int> hooks, leaves;
        for (const auto& b : enumerate_binary_trees(n)) ++hooks[hook_partition(b).hook_number()];
        for (const auto& t : enumerate_ordered_trees(n + 1)) ++leaves[leaf_parent_count(t)];
        c.expect(hooks == leaves, "n = " + std::to_string(n));
    }
}

// nat

void oracle_equivalence(Checker& c, int s)
{
    for (const auto& b : trees_up_to(s)) {
        auto rec = enumerate_nats_of_shape(b);
        std::sort(rec.begin(), rec.end());
        const auto brute = enumerate_nats_of_shape(b, EnumerationMode::brute_force);
        c.expect(rec == brute, shape_note(b) + ": recursive and brute force differ");
        c.expect(Integer(rec.size()) == count_nats_hook(b), shape_note(b) + ": hook formula differs");
    }
}

void size_identity(Checker& c, int s)
{
    for (const auto& b : trees_up_to(s))
        for (const auto& t : enumerate_nats_of_shape(b))
            c.expect(t.size() == 1 + static_cast<int>(t.left_labels.size() + t.right_labels.size()), shape_note(b));
}

void restriction(Checker& c, int s)
{
    for (const auto& b : trees_up_to(s))
        for (const auto& t : enumerate_nats_of_shape(b)) {
            if (!b.left().empty()) c.expect(validate_nat(restrict_to_left(t)).ok(), shape_note(b) + ": left restriction");
            if (!b.right().empty())
                c.expect(validate_nat(restrict_to_right(t)).ok(), shape_note(b) + ": right restriction");
        }
}

void coefficient_identity(Checker& c, int s)
{
    const Egf counts = counts_view(gfn_closed(s));
    for (int w = 0; w <= s; ++w)
        for (int h = 0; w + h <= s; ++h)
            c.expect(Rational(enumerate_nats_by_size(w, h).size()) == counts.coeff({w, h}),
                     "(w,h) = (" + std::to_string(w) + "," + std::to_string(h) + ")");
}

// perm

void grafting(Checker& c, int s)
{
    for (const auto& b : trees_up_to(s)) {
        if (b.left().empty() || b.right().empty()) continue;
        const auto whole = enumerate_nats_of_shape(b);
        for (const auto& cl : enumerate_nats_of_shape(b.left()))
            for (const auto& dr : enumerate_nats_of_shape(b.right())) {
                std::map<std::pair<Perm, Perm>, long long> got, want;
                for (const auto& t : whole)
                    if (restrict_to_left(t) == cl && restrict_to_right(t) == dr) ++got[extract_sigma(t)];
                const auto [pl, pr] = pump_pair(extract_sigma(cl), extract_sigma(dr));
                for (const auto& [l, ml] : pl)
                    for (const auto& [r, mr] : pr) want[{l, r}] += ml * mr;
                c.expect(got == want, shape_note(b));
            }
    }
}

void commutation(Checker& c, int s)
{
    for (auto st : {Statistic::inv, Statistic::imaj})
        for (int a = 0; a <= s; ++a)
            for (int b = 0; a + b <= s; ++b)
                for (int d = 0; a + b + d <= s; ++d)
                    for (int e = 0; a + b + d + e <= s; ++e)
                        for (const auto& s1 : all_permutations(a))
                            for (const auto& s2 : all_permutations(b))
                                for (const auto& m1 : all_permutations(d))
                                    for (const auto& m2 : all_permutations(e)) {
                                        const std::pair<Perm, Perm> sigma{s1, s2}, mu{m1, m2};
                                        const auto [l, r] = pump_pair(sigma, mu);
                                        c.expect(psi(l, r, st) == q_pump(psi(sigma, st), psi(mu, st)),
                                                 std::string(statistic_name(st)) + " at sigma = (" + to_string(s1) +
                                                     "," + to_string(s2) + "), mu = (" + to_string(m1) + "," +
                                                     to_string(m2) + ")");
                                    }
}

// qhook

void q_hook_theorem(Checker& c, int s)
{
    for (const auto& b : trees_up_to(s)) {
        const QPoly2 p = q_hook_product(b);
        c.expect(q_weight_sum(b, Statistic::inv) == p, shape_note(b) + ": inv");
        c.expect(q_weight_sum(b, Statistic::imaj) == p, shape_note(b) + ": imaj");
    }
}

void q_specialization(Checker& c, int s)
{
    for (const auto& b : trees_up_to(s))
        c.expect(q_hook_product(b).evaluate(Integer(1), Integer(1)) == count_nats_hook(b), shape_note(b));
}

void q_pumping(Checker& c, int s)
{
    for (const auto& b : trees_up_to(s))
        c.expect(q_pump_tree(b) == QSeries::monomial(b.left_count() + 1, b.right_count() + 1, q_hook_product(b)),
                 shape_note(b));
}

// bijections

void bijectivity(Checker& c, int s)
{
    for (int n = 1; n <= s; ++n) {
        std::vector<NotTree> images;
        std::map<std::pair<int, int>, std::set<WordPair>> words;
        for (const auto& b : enumerate_binary_trees(n))
            for (const auto& t : enumerate_nats_of_shape(b)) {
                const NotTree o = xi(t);
                c.expect(validate_not(o).ok() && xi_inverse(o) == t, shape_note(b) + ": xi round trip");
                const WordPair wp = omega(o);
                c.expect(validate_words(wp).ok() && omega_inverse(wp) == o, shape_note(b) + ": omega round trip");
                c.expect(four_tuple_inverse(four_tuple(wp)) == wp, shape_note(b) + ": four-tuple round trip");
                words[{b.left_count(), b.right_count()}].insert(wp);
                images.push_back(o);
            }
        const auto all = enumerate_not_trees(n);
        c.expect(all.size() == images.size(), "n = " + std::to_string(n) + ": image size");
        for (const auto& o : all)
            c.expect(std::find(images.begin(), images.end(), o) != images.end(), "n = " + std::to_string(n) + ": xi misses a tree");
        for (const auto& [wh, hit] : words) {
            const auto pairs = enumerate_word_pairs(wh.first, wh.second);
            c.expect(std::set<WordPair>(pairs.begin(), pairs.end()) == hit, "n = " + std::to_string(n) + ": omega misses a pair");
        }
    }
}

void hook_correspondence(Checker& c, int s)
{
    for (const auto& b : trees_up_to(s))
        for (const auto& t : enumerate_nats_of_shape(b))
            c.expect(hooks_from_not(xi(t)) == hook_partition(b).hook_number(), shape_note(b));
    for (int w = 0; w <= s; ++w)
        for (int h = 0; w + h <= s; ++h) {
            std::map<int, Integer> plain;
            for (const auto& t : enumerate_nats_by_size(w, h)) plain[nat_stats(t).hook_number] += 1;
            const auto summands = stirling_summands(w, h);
            std::map<int, Integer> at_one;
            for (const auto& [p, poly] : summands) at_one[p] = poly.evaluate(Integer(1), Integer(1));
            c.expect(at_one == plain, "(w,h) = (" + std::to_string(w) + "," + std::to_string(h) + ")");
            c.expect(summands == refined_counts_by_hooks(w, h),
                     "(w,h) = (" + std::to_string(w) + "," + std::to_string(h) + "): formal parameters");
        }
}

void distribution_through_xi(Checker& c, int s)
{
    for (int n = 1; n <= s; ++n) {
        std::map<int, int> from_not, leaves;
        // One representative NAT per shape carries the shape's hook number.
        for (const auto& b : enumerate_binary_trees(n)) ++from_not[hooks_from_not(xi(enumerate_nats_of_shape(b).front()))];
        for (const auto& t : enumerate_ordered_trees(n + 1)) ++leaves[leaf_parent_count(t)];
        c.expect(from_not == leaves, "n = " + std::to_string(n));
    }
}

// series

void series_relations(Checker& c, int s)
{
    const int order = s + 2;
    const Egf n = gfn_closed(order);
    const Egf h = gfh_closed(order);
    const Egf x = Egf::variable(2, order, 0), y = Egf::variable(2, order, 1);
    c.expect(n == fixed_point_2d(order), "closed form and fixed point differ");
    c.expect(h.derivative(0).derivative(1) == n.truncated(order - 2), "N is not the mixed derivative of H");
    const Egf m = (Egf::constant(2, order, Rational(1)) + h) + x + y - Egf::constant(2, order, Rational(1));
    c.expect(m == (x + y + pump_series(m, m, {0}, {1})).truncated(order), "M is not a fixed point of the pumping");
}

void pumping_sum(Checker& c, int s)
{
    const int order = s + 1;
    Egf sum = Egf::variable(2, order, 0) + Egf::variable(2, order, 1);
    for (const auto& b : trees_up_to(s)) sum += pump_tree(b, order);
    const Egf m = gfh_closed(order) + Egf::variable(2, order, 0) + Egf::variable(2, order, 1);
    c.expect(sum == m, "sum over shapes differs from M");
}

void alpha_beta_equation(Checker& c, int s)
{
    const int order = s + 2;
    const ParamEgf nab = gfn_alpha_beta_closed(order);
    auto at_one = [](const ParamEgf& e, int which) {
        return e.map_scalars<ParamPoly>([which](const ParamPoly& p) { return p.specialize(which, Rational(1)); });
    };
    const ParamEgf one = ParamEgf::constant(2, order, ParamPoly(Rational(1)));
    const ParamEgf rhs = (one + at_one(nab, 1).integral(0) * ParamPoly::variable(0)) *
                         (one + at_one(nab, 0).integral(1) * ParamPoly::variable(1));
    c.expect(nab == rhs.truncated(order), "differential equation fails");
    const ParamEgf counts = counts_view(nab);
    for (int w = 0; w <= s; ++w)
        for (int h = 0; w + h <= s; ++h) {
            ParamPoly refined;
            for (const auto& t : enumerate_nats_by_size(w, h)) {
                const auto st = nat_stats(t);
                refined += ParamPoly::monomial(st.leftmost_left, st.rightmost_right);
            }
            c.expect(counts.coeff({w, h}) == refined, "(w,h) = (" + std::to_string(w) + "," + std::to_string(h) + ")");
        }
}

void positivity(Checker& c, int s)
{
    const int order = s + 2;
    const Egf counts = counts_view(gfn_closed(order));
    for (int w = 0; w <= order; ++w)
        for (int h = 0; w + h <= order; ++h) {
            const Rational v = counts.coeff({w, h});
            c.expect(is_integral(v) && v >= 0, "(w,h) = (" + std::to_string(w) + "," + std::to_string(h) + ")");
        }
}

// dk

std::vector<std::pair<int, int>> dk_dimensions() { return {{2, 1}, {3, 1}, {3, 2}, {3, 3}}; }

int dk_size(int s) { return std::clamp(s - 2, 1, 4); }

void root_label_forcing(Checker& c, int s)
{
    for (auto [d, k] : dk_dimensions())
        for (int n = 1; n <= dk_size(s); ++n)
            for (const auto& m : enumerate_dk_shapes(d, k, n)) {
                const auto w = root_label_sizes(m);
                const auto all = enumerate_dk(m);
                c.expect(Integer(all.size()) == count_dk_hook(m), "hook formula on a shape of size " + std::to_string(n));
                for (const auto& t : all) c.expect(t.labels[0] == Tuple(w.begin(), w.end()), "root label");
            }
}

void dk_oracle(Checker& c, int s)
{
    for (auto [d, k] : dk_dimensions())
        for (int n = 1; n <= dk_size(s); ++n)
            for (const auto& m : enumerate_dk_shapes(d, k, n)) {
                auto rec = enumerate_dk(m);
                std::sort(rec.begin(), rec.end());
                c.expect(rec == enumerate_dk(m, EnumerationMode::brute_force), "recursive and brute force differ");
                for (const auto& t : rec) {
                    const GeoNat g = to_geometric(t);
                    c.expect(validate_geometric(g).ok() && from_geometric(g) == t, "geometric round trip");
                }
            }
}

DkShape drop_last_axis(const DkShape& m, int v = 0)
{
    std::vector<std::pair<Direction, DkShape>> kids;
    for (int ch : m.children(v)) kids.emplace_back(m.direction(ch), drop_last_axis(m, ch));
    return DkShape::join(m.d() - 1, m.k(), std::move(kids));
}

void dimension_reduction(Checker& c, int s)
{
    for (int k = 1; k <= 2; ++k) {
        for (int n = 1; n <= dk_size(s); ++n)
            for (const auto& m : enumerate_dk_shapes(3, k, n)) {
                bool avoids = true;
                for (int v = 1; v < m.size(); ++v) avoids = avoids && m.direction(v).back() != 3;
                if (avoids) c.expect(count_dk_hook(drop_last_axis(m)) == count_dk_hook(m), "shape avoiding axis 3");
            }
        const int order = std::min(s, 6);
        c.expect(fixed_point_dk(3, k, order).restrict_variable(2) == fixed_point_dk(2, k, order),
                 "series restriction for k = " + std::to_string(k));
    }
}

void binary_specialization(Checker& c, int s)
{
    for (const auto& b : trees_up_to(s)) {
        const DkShape m = dk_shape_of(b);
        c.expect(binary_tree_of(m) == b && count_dk_hook(m) == count_nats_hook(b), shape_note(b));
        std::vector<DkNat> mapped;
        for (const auto& t : enumerate_nats_of_shape(b)) {
            const DkNat dk = dk_of(t);
            mapped.push_back(dk);
            c.expect(nat_of(from_geometric(to_geometric(dk))) == t, shape_note(b) + ": geometric picture");
        }
        auto direct = enumerate_dk(m);
        std::sort(direct.begin(), direct.end());
        std::sort(mapped.begin(), mapped.end());
        c.expect(direct == mapped, shape_note(b) + ": enumeration");
    }
}

void interval_clause(Checker& c, int s)
{
    for (auto [d, k] : dk_dimensions())
        for (int n = 1; n <= dk_size(s); ++n)
            for (const auto& m : enumerate_dk_shapes(d, k, n)) {
                const auto w = root_label_sizes(m);
                for (const auto& t : enumerate_dk(m))
                    for (int i = 0; i < d; ++i) {
                        std::vector<int> vals;
                        for (int v = 1; v < m.size(); ++v)
                            if (t.labels[v][i] > 0) vals.push_back(t.labels[v][i]);
                        std::sort(vals.begin(), vals.end());
                        bool ok = static_cast<int>(vals.size()) == w[i] - 1;
                        for (std::size_t j = 0; ok && j < vals.size(); ++j) ok = vals[j] == static_cast<int>(j) + 1;
                        c.expect(ok, "axis " + std::to_string(i + 1));
                    }
            }
}

const std::map<std::string, std::vector<Entry>>& registry()
{
    static const std::map<std::string, std::vector<Entry>> r{
        {"trees",
         {{"catalan counts", catalan_counts},
          {"hooks partition the vertices", hook_partition_sizes},
          {"hook and leaf-parent distributions", hook_leaf_distribution}}},
        {"nat",
         {{"recursive, brute force and hook formula agree", oracle_equivalence},
          {"size identity", size_identity},
          {"restriction to subtrees", restriction},
          {"counts match the closed form", coefficient_identity}}},
        {"perm", {{"grafting matches pumping", grafting}, {"commutation with psi", commutation}}},
        {"qhook",
         {{"q-hook theorem", q_hook_theorem},
          {"specialization at q = 1", q_specialization},
          {"q-pumping over shapes", q_pumping}}},
        {"bijections",
         {{"xi and omega are bijections", bijectivity},
          {"hook correspondence and summands", hook_correspondence},
          {"leaf-parent distribution through xi", distribution_through_xi}}},
        {"series",
         {{"relations between N, H and M", series_relations},
          {"pumping sum over shapes", pumping_sum},
          {"alpha-beta differential equation", alpha_beta_equation},
          {"integral non-negative counts", positivity}}},
        {"dk",
         {{"root label forcing and hook formula", root_label_forcing},
          {"brute force and geometric round trip", dk_oracle},
          {"dimension reduction", dimension_reduction},
          {"dimension (2,1) is the binary case", binary_specialization},
          {"interval clause", interval_clause}}},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"trees", "nat", "perm", "qhook", "bijections", "series", "dk"};
    return names;
}

std::vector<PropertyResult> run_suite(const std::string& suite, int max_size)
{
    if (max_size < 1) throw std::invalid_argument("max-size must be at least 1");
    std::vector<std::string> which;
    if (suite == "all")
        which = suite_names();
    else if (registry().count(suite))
        which = {suite};
    else
        throw std::invalid_argument("unknown suite '" + suite + "'");
    std::vector<PropertyResult> out;
    for (const auto& name : which)
        for (const auto& e : registry().at(name)) {
            Checker c(name, e.name);
            try {
                e.run(c, max_size);
            } catch (const std::exception& ex) {
                c.expect(false, std::string("exception: ") + ex.what());
            }
            out.push_back(c.result());
        }
    return out;
}

}  // namespace nattree
