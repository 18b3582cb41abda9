#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

// Test-only oracles, kept independent of the library implementation paths
// they check.

namespace oracle {

// Sum of the p largest entries, recomputed from scratch per prefix (sorts
// ascending and accumulates a suffix), so neither the sort direction nor the
// accumulation order matches the library routine.
inline double top_sum(std::span<const double> v, std::size_t p) {
    std::vector<double> s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    double acc = 0.0;
    for (std::size_t i = 0; i < p; ++i) acc += s[s.size() - 1 - i];
    return acc;
}

inline bool majorizes(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("oracle::majorizes: length mismatch");
    const double tol = 1e-10;
    for (std::size_t p = 1; p + 1 <= x.size(); ++p)
        if (top_sum(x, p) < top_sum(y, p) - tol) return false;
    return std::abs(top_sum(x, x.size()) - top_sum(y, y.size())) <= tol;
}

}  // namespace oracle
