#include "nattree/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nattree {

Statistic parse_statistic(const std::string& name)
{
    if (name == "inv") return Statistic::inv;
    if (name == "imaj") return Statistic::imaj;
    throw std::invalid_argument("unknown statistic '" + name + "' (expected inv or imaj)");
}

const char* statistic_name(Statistic s) { return s == Statistic::inv ? "inv" : "imaj"; }

bool is_permutation(std::span<const int> w)
{
    std::vector<bool> seen(w.size() + 1, false);
    for (int x : w) {
        if (x < 1 || x > static_cast<int>(w.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

namespace {

void read_left(const Layout& lay, const std::vector<int>& label, int v, Perm& out)
{
    if (lay.left[v] >= 0) read_left(lay, label, lay.left[v], out);
    if (lay.right[v] >= 0) read_left(lay, label, lay.right[v], out);
    if (lay.side[v] == Side::left) out.push_back(label[v]);
}

void read_right(const Layout& lay, const std::vector<int>& label, int v, Perm& out)
{
    if (lay.right[v] >= 0) read_right(lay, label, lay.right[v], out);
    if (lay.left[v] >= 0) read_right(lay, label, lay.left[v], out);
    if (lay.side[v] == Side::right) out.push_back(label[v]);
}

}  // namespace

std::pair<Perm, Perm> extract_sigma(const Nat& t)
{
    if (auto r = validate_nat(t); !r.ok()) throw std::invalid_argument("extract_sigma: " + r.message);
    const Layout lay = layout(t.shape);
    std::vector<int> label(lay.size(), 0);
    for (std::size_t i = 0; i < lay.left_vertices.size(); ++i) label[lay.left_vertices[i]] = t.left_labels[i];
    for (std::size_t i = 0; i < lay.right_vertices.size(); ++i) label[lay.right_vertices[i]] = t.right_labels[i];
    std::pair<Perm, Perm> out;
    read_left(lay, label, 0, out.first);
    read_right(lay, label, 0, out.second);
    return out;
}

Perm inverse(const Perm& p)
{
    Perm inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

int inversions(const Perm& p)
{
    int n = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++n;
    return n;
}

int imaj(const Perm& p)
{
    const Perm q = inverse(p);
    int s = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
        if (q[i] > q[i + 1]) s += static_cast<int>(i) + 1;
    return s;
}

int statistic(const Perm& p, Statistic s) { return s == Statistic::inv ? inversions(p) : imaj(p); }

Perm standardize(std::span<const int> w)
{
    std::vector<int> sorted(w.begin(), w.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("standardize: repeated letter");
    Perm out;
    out.reserve(w.size());
    for (int x : w)
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
    return out;
}

Perm append_max(const Perm& p)
{
    Perm out = p;
    out.push_back(static_cast<int>(p.size()) + 1);
    return out;
}

PermSum pump_perm(const Perm& sigma, const Perm& mu)
{
    const Perm u_shape = append_max(sigma);
    const int a = static_cast<int>(u_shape.size());
    const int n = a + static_cast<int>(mu.size());
    PermSum out;
    // Choose the value set of the prefix; both halves are then forced.
    std::vector<bool> in_prefix(n, false);
    std::fill(in_prefix.begin(), in_prefix.begin() + a, true);
    std::vector<int> prefix, suffix;
    do {
        prefix.clear();
        suffix.clear();
        for (int x = 1; x <= n; ++x) (in_prefix[x - 1] ? prefix : suffix).push_back(x);
        Perm w;
        w.reserve(n);
        for (int r : u_shape) w.push_back(prefix[r - 1]);
        for (int r : mu) w.push_back(suffix[r - 1]);
        ++out[w];
    } while (std::prev_permutation(in_prefix.begin(), in_prefix.end()));
    return out;
}

PermSum pump_perm(const PermSum& a, const PermSum& b)
{
    PermSum out;
    for (const auto& [s, ms] : a)
        for (const auto& [m, mm] : b)
            for (const auto& [w, mw] : pump_perm(s, m)) out[w] += ms * mm * mw;
    return out;
}

std::pair<PermSum, PermSum> pump_pair(const std::pair<Perm, Perm>& sigma, const std::pair<Perm, Perm>& mu)
{
    return {pump_perm(sigma.first, mu.first), pump_perm(mu.second, sigma.second)};
}

std::vector<Perm> all_permutations(int n)
{
    if (n < 0) throw std::invalid_argument("all_permutations: negative length");
    std::vector<Perm> out;
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string to_string(const Perm& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace nattree
