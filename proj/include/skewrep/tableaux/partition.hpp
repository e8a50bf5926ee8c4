#pragma once

/**
 * @file partition.hpp
 * @brief Covariant weights and (a|b)-hook diagrams.
 */

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewrep {

using Weight = std::vector<int>;
/// Weakly decreasing nonnegative row lengths, trailing zeros stripped.
using Partition = std::vector<int>;

struct InvalidShape : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline std::string weight_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

/// Reason the weight is not covariant for gl(a|b), or nullopt.
inline std::optional<std::string> covariance_violation(const Weight& beta, int a, int b) {
    if (static_cast<int>(beta.size()) != a + b)
        return "weight " + weight_string(beta) + " has length " + std::to_string(beta.size()) + ", expected " +
               std::to_string(a + b);
    for (int x : beta)
        if (x < 0) return "weight " + weight_string(beta) + " has a negative entry";
    for (int i = 0; i + 1 < a; ++i)
        if (beta[i] < beta[i + 1]) return "even part of " + weight_string(beta) + " is not weakly decreasing";
    for (int j = a; j + 1 < a + b; ++j)
        if (beta[j] < beta[j + 1]) return "odd part of " + weight_string(beta) + " is not weakly decreasing";
    if (a > 0) {
        int l = 0;
        for (int j = a; j < a + b; ++j) l += beta[j] > 0 ? 1 : 0;
        if (l > beta[a - 1])
            return "weight " + weight_string(beta) + " has " + std::to_string(l) +
                   " nonzero odd entries, more than its last even entry " + std::to_string(beta[a - 1]);
    }
    return std::nullopt;
}

/// Hook diagram of a covariant gl(a|b) weight: rows 1..a are beta_1..beta_a,
/// column j (j <= l) has height beta_{a+j} + a.
inline Partition hook_diagram(const Weight& beta, int a, int b) {
    if (auto v = covariance_violation(beta, a, b)) throw InvalidShape("not covariant: " + *v);
    Partition rows(beta.begin(), beta.begin() + a);
    int height = a;
    for (int j = a; j < a + b; ++j) height = std::max(height, beta[j] + a);
    for (int i = a + 1; i <= height; ++i) {
        int len = 0;
        for (int j = a; j < a + b; ++j)
            if (beta[j] >= i - a) ++len;
        rows.push_back(len);
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return rows;
}

inline bool partition_contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

inline int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

/// Column heights of a partition.
inline std::vector<int> conjugate(const Partition& p) {
    std::vector<int> c(p.empty() ? 0 : p.front(), 0);
    for (int len : p)
        for (int j = 0; j < len; ++j) ++c[j];
    return c;
}

/// All covariant gl(a|b) weights with |beta| <= max_size.
inline std::vector<Weight> covariant_weights(int a, int b, int max_size) {
    std::vector<Weight> out;
    Weight cur(a + b, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == a + b) {
            if (!covariance_violation(cur, a, b)) out.push_back(cur);
            return;
        }
        int cap = remaining;
        if (pos != 0 && pos != a) cap = std::min(cap, cur[pos - 1]);
        for (int v = 0; v <= cap; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, max_size);
    return out;
}

} // namespace skewrep
