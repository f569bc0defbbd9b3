#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nattree {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);
Integer binomial(int n, int k);

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }

inline Rational make_rational(const Integer& num, const Integer& den = 1)
{
    return Rational(num, den);
}

// True when the rational has denominator 1.
inline bool is_integral(const Rational& x)
{
    return boost::multiprecision::denominator(x) == 1;
}

inline Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

/// k-subsets of {1..n}, each ascending, in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

// Upper bound on brute-force candidate counts. Reads NATTREE_BRUTE_FORCE_BUDGET
// when set, otherwise 10^7.
std::uint64_t brute_force_budget();

}  // namespace nattree
