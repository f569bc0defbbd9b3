#pragma once

#include <string>
#include <vector>

namespace nattree {

struct PropertyResult {
    std::string suite;
    std::string property;
    bool passed = true;
    long checks = 0;
    std::string detail;  // first failure, if any
};

/// trees, nat, perm, qhook, bijections, series, dk.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") with sizes bounded by max_size. Results come
/// back in a fixed order.
std::vector<PropertyResult> run_suite(const std::string& suite, int max_size);

}  // namespace nattree
