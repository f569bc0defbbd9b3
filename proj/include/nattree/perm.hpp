#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nattree/nat.hpp"

namespace nattree {

/// One-line notation, values 1..n. The empty permutation is allowed.
using Perm = std::vector<int>;

/// Formal sum of permutations with multiplicities.
using PermSum = std::map<Perm, long long>;

enum class Statistic { inv, imaj };

Statistic parse_statistic(const std::string& name);
const char* statistic_name(Statistic s);

bool is_permutation(std::span<const int> w);

/// Postfix readings of the left and right labels.
std::pair<Perm, Perm> extract_sigma(const Nat& t);

Perm inverse(const Perm& p);
int inversions(const Perm& p);
// Sum of the descent positions of the inverse.
int imaj(const Perm& p);
int statistic(const Perm& p, Statistic s);

/// Order-isomorphic renumbering of a repetition-free word onto 1..l.
Perm standardize(std::span<const int> w);
Perm append_max(const Perm& p);

/// Every word uv with std(u) = append_max(sigma) and std(v) = mu.
PermSum pump_perm(const Perm& sigma, const Perm& mu);

/// Bilinear extension of pump_perm.
PermSum pump_perm(const PermSum& a, const PermSum& b);

/// (pump(sigma_L, mu_L), pump(mu_R, sigma_R)).
std::pair<PermSum, PermSum> pump_pair(const std::pair<Perm, Perm>& sigma, const std::pair<Perm, Perm>& mu);

std::vector<Perm> all_permutations(int n);

std::string to_string(const Perm& p);

}  // namespace nattree
