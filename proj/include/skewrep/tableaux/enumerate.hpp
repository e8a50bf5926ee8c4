#pragma once

/**
 * @file enumerate.hpp
 * @brief Enumeration of lambda/mu-admissible GT tableaux.
 */

#include "skewrep/tableaux/gt_tableau.hpp"

#include <algorithm>
#include <vector>

namespace skewrep {

namespace detail {

/// Canonical basis order: lexicographically decreasing, so the highest tableau comes first.
inline void canonical_sort(std::vector<GTTableau>& v) {
    std::sort(v.begin(), v.end(), [](const GTTableau& a, const GTTableau& b) { return lex_less(b, a); });
}

} // namespace detail

/// Top-down row backtracking. Per-entry ranges come from A(2) and A(6);
/// every completed tableau is re-checked against A(1)-A(6).
inline std::vector<GTTableau> enumerate_tableaux(const SkewShape& s, A3Reading reading = A3Reading::Corrected) {
    const int mp = s.mprime(), top = s.top(), r = s.r();
    std::vector<std::vector<int>> rows(top - r + 1);
    rows[top - r] = s.lambda();
    rows[0] = s.mu();
    std::vector<GTTableau> out;

    auto rec = [&](auto&& self, int k) -> void {
        if (k == r) {
            GTTableau t(r, rows);
            if (is_admissible(s, t, reading)) out.push_back(std::move(t));
            return;
        }
        const std::vector<int>& above = rows[k + 1 - r];
        std::vector<int>& cur = rows[k - r];
        cur.assign(k, 0);
        auto fill = [&](auto&& fself, int i) -> void {
            if (i > k) {
                self(self, k - 1);
                return;
            }
            int lo, hi;
            if (i <= mp && k >= mp) {
                lo = std::max(0, above[i - 1] - 1);
                hi = above[i - 1];
            } else {
                lo = above[i];
                hi = above[i - 1];
            }
            if (i <= r) lo = std::max(lo, s.mu()[i - 1]);
            for (int v = hi; v >= lo; --v) {
                cur[i - 1] = v;
                // A(5) within odd rows
                if (k >= mp + 1 && i >= 2 && i <= mp && cur[i - 2] < v) continue;
                fself(fself, i + 1);
            }
        };
        fill(fill, 1);
    };

    if (top == r) {
        GTTableau t(r, rows);
        if (is_admissible(s, t, reading)) out.push_back(std::move(t));
    } else {
        rec(rec, top - 1);
    }
    detail::canonical_sort(out);
    return out;
}

/// Independent oracle: every intermediate entry ranges over [0, max lambda].
inline std::vector<GTTableau> enumerate_tableaux_brute_force(const SkewShape& s,
                                                             A3Reading reading = A3Reading::Corrected) {
    const int top = s.top(), r = s.r();
    int hi = 0;
    for (int x : s.lambda()) hi = std::max(hi, x);
    std::vector<std::vector<int>> rows(top - r + 1);
    for (int k = r; k <= top; ++k) rows[k - r].assign(k, 0);
    rows[top - r] = s.lambda();
    rows[0] = s.mu();
    std::vector<std::pair<int, int>> cells;
    for (int k = r + 1; k < top; ++k)
        for (int i = 1; i <= k; ++i) cells.emplace_back(k, i);
    std::vector<GTTableau> out;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            GTTableau t(r, rows);
            if (is_admissible(s, t, reading)) out.push_back(std::move(t));
            return;
        }
        auto [k, i] = cells[idx];
        for (int v = 0; v <= hi; ++v) {
            rows[k - r][i - 1] = v;
            self(self, idx + 1);
        }
    };
    if (top == r) {
        GTTableau t(r, rows);
        if (is_admissible(s, t, reading)) out.push_back(std::move(t));
    } else {
        rec(rec, 0);
    }
    detail::canonical_sort(out);
    return out;
}

} // namespace skewrep
