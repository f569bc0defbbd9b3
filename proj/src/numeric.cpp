#include "nattree/numeric.hpp"

#include <cstdlib>
#include <stdexcept>

namespace nattree {

Integer factorial(int n)
{
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<int>> combinations(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x)
{
    if (is_integral(x)) return numerator_of(x).str();
    return numerator_of(x).str() + "/" + denominator_of(x).str();
}

std::uint64_t brute_force_budget()
{
    if (const char* env = std::getenv("NATTREE_BRUTE_FORCE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 10'000'000ULL;
}

}  // namespace nattree
