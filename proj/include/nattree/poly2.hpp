#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nattree/numeric.hpp"

namespace nattree {

/// Sparse polynomial in two commuting variables with coefficients in `Coeff`.
///
/// Used for the (q_L, q_R) weights of the q-hook formula (Coeff = Integer)
/// and for the formal parameters (alpha, beta) carried by series coefficients
/// (Coeff = Rational). Zero coefficients are never stored.
template <typename Coeff>
class Poly2 {
public:
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, Coeff>;

    Poly2() = default;
    explicit Poly2(const Coeff& c)
    {
        if (!nattree::is_zero(c)) terms_.emplace(Exponent{0, 0}, c);
    }

    static Poly2 monomial(int e0, int e1, const Coeff& c = Coeff(1))
    {
        if (e0 < 0 || e1 < 0) throw std::invalid_argument("Poly2: negative exponent");
        Poly2 p;
        if (!nattree::is_zero(c)) p.terms_.emplace(Exponent{e0, e1}, c);
        return p;
    }

    static Poly2 variable(int which)
    {
        return which == 0 ? monomial(1, 0) : monomial(0, 1);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Coeff coeff(int e0, int e1) const
    {
        auto it = terms_.find({e0, e1});
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add_term(int e0, int e1, const Coeff& c)
    {
        if (nattree::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(Exponent{e0, e1}, c);
        if (!inserted) {
            it->second += c;
            if (nattree::is_zero(it->second)) terms_.erase(it);
        }
    }

    // Highest exponent of the given variable, -1 for the zero polynomial.
    int degree(int which) const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, which == 0 ? e.first : e.second);
        return d;
    }

    int total_degree() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
        return d;
    }

    Poly2& operator+=(const Poly2& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    Poly2& operator-=(const Poly2& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
    Poly2& operator*=(const Coeff& c)
    {
        if (nattree::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator-(Poly2 a)
    {
        for (auto& [e, v] : a.terms_) v = -v;
        return a;
    }
    friend Poly2 operator*(const Poly2& a, const Poly2& b)
    {
        Poly2 r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    friend Poly2 operator*(Poly2 a, const Coeff& c) { return a *= c; }
    friend Poly2 operator*(const Coeff& c, Poly2 a) { return a *= c; }

    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
    friend bool is_zero(const Poly2& p) { return p.is_zero(); }

    template <typename T>
    T evaluate(const T& a, const T& b) const
    {
        T sum(0);
        for (const auto& [e, c] : terms_) {
            T term(c);
            for (int i = 0; i < e.first; ++i) term *= a;
            for (int i = 0; i < e.second; ++i) term *= b;
            sum += term;
        }
        return sum;
    }

    // Substitute a constant for one variable, keeping the other.
    Poly2 specialize(int which, const Coeff& value) const
    {
        Poly2 r;
        for (const auto& [e, c] : terms_) {
            Coeff v = c;
            int k = which == 0 ? e.first : e.second;
            for (int i = 0; i < k; ++i) v *= value;
            if (which == 0)
                r.add_term(0, e.second, v);
            else
                r.add_term(e.first, 0, v);
        }
        return r;
    }

    // Drop every term whose total degree exceeds `max_degree`.
    Poly2 truncated(int max_degree) const
    {
        Poly2 r;
        for (const auto& [e, c] : terms_)
            if (e.first + e.second <= max_degree) r.terms_.emplace(e, c);
        return r;
    }

    // Triples (e0, e1, coeff) in graded-lex order.
    std::vector<std::pair<Exponent, Coeff>> graded() const
    {
        std::vector<std::pair<Exponent, Coeff>> out(terms_.begin(), terms_.end());
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
            if (da != db) return da < db;
            return a.first > b.first;
        });
        return out;
    }

    std::string to_string(const char* v0 = "a", const char* v1 = "b") const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : graded()) {
            if (!first) os << " + ";
            first = false;
            bool unit = c == Coeff(1);
            if (!unit || (e.first == 0 && e.second == 0)) os << c;
            if (e.first > 0) os << (unit ? "" : "*") << v0 << (e.first > 1 ? "^" + std::to_string(e.first) : "");
            if (e.second > 0)
                os << ((unit && e.first == 0) ? "" : "*") << v1
                   << (e.second > 1 ? "^" + std::to_string(e.second) : "");
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << p.to_string(); }

private:
    Terms terms_;
};

/// Exact quotient of `num` by a divisor that depends on variable `which` only.
/// Returns nullopt when the division leaves a remainder.
template <typename Coeff>
std::optional<Poly2<Coeff>> divide_exact(const Poly2<Coeff>& num, const Poly2<Coeff>& divisor, int which)
{
    if (divisor.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    std::vector<Coeff> d(divisor.degree(which) + 1, Coeff(0));
    for (const auto& [e, c] : divisor.terms()) {
        if ((which == 0 ? e.second : e.first) != 0)
            throw std::invalid_argument("divide_exact: divisor is not univariate");
        d[which == 0 ? e.first : e.second] = c;
    }
    const int dd = static_cast<int>(d.size()) - 1;
    const Coeff& lead = d.back();

    // Slice the numerator by the exponent of the other variable.
    std::map<int, std::vector<Coeff>> slices;
    for (const auto& [e, c] : num.terms()) {
        int mine = which == 0 ? e.first : e.second;
        int other = which == 0 ? e.second : e.first;
        auto& s = slices[other];
        if (static_cast<int>(s.size()) <= mine) s.resize(mine + 1, Coeff(0));
        s[mine] = c;
    }

    Poly2<Coeff> quotient;
    for (auto& [other, r] : slices) {
        for (int top = static_cast<int>(r.size()) - 1; top >= dd; --top) {
            if (is_zero(r[top])) continue;
            Coeff q = r[top] / lead;
            if (q * lead != r[top]) return std::nullopt;
            for (int i = 0; i <= dd; ++i) r[top - dd + i] -= q * d[i];
            if (which == 0)
                quotient.add_term(top - dd, other, q);
            else
                quotient.add_term(other, top - dd, q);
        }
        for (const auto& c : r)
            if (!is_zero(c)) return std::nullopt;
    }
    return quotient;
}

template <typename To, typename From>
Poly2<To> convert_coefficients(const Poly2<From>& p)
{
    Poly2<To> r;
    for (const auto& [e, c] : p.terms()) r.add_term(e.first, e.second, To(c));
    return r;
}

using QPoly2 = Poly2<Integer>;
using ParamPoly = Poly2<Rational>;

}  // namespace nattree
