#pragma once

/**
 * @file ssyt.hpp
 * @brief (m|n)-semistandard fillings of skew diagrams.
 *
 * Letters 1..m are even and m+1..m+n odd. Entries weakly increase along rows
 * and down columns; an even letter may not repeat in a column, an odd letter
 * may not repeat in a row. This enumerator deliberately knows nothing about
 * Gelfand-Tsetlin patterns.
 */

#include "skewrep/tableaux/partition.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace skewrep {

struct SSYT {
    Partition outer;
    Partition inner;
    /// filling[i][c] is the entry in row i, column inner[i] + c (0-based).
    std::vector<std::vector<int>> filling;

    int inner_len(std::size_t row) const { return row < inner.size() ? inner[row] : 0; }

    /// Entry at (row, col), 0-based; 0 for boxes of the inner diagram.
    int at(std::size_t row, int col) const {
        int off = inner_len(row);
        return col < off ? 0 : filling[row][col - off];
    }

    friend bool operator==(const SSYT&, const SSYT&) = default;
};

/// First semistandardness violation, or nullopt.
inline std::optional<std::string> ssyt_violation(const SSYT& s, int m, int n) {
    if (!partition_contains(s.outer, s.inner)) return "inner diagram not contained in outer diagram";
    if (s.filling.size() != s.outer.size()) return "filling has the wrong number of rows";
    for (std::size_t i = 0; i < s.outer.size(); ++i) {
        if (static_cast<int>(s.filling[i].size()) != s.outer[i] - s.inner_len(i))
            return "row " + std::to_string(i + 1) + " has the wrong number of boxes";
        for (int c = s.inner_len(i); c < s.outer[i]; ++c) {
            int x = s.at(i, c);
            if (x < 1 || x > m + n) return "entry out of range at row " + std::to_string(i + 1);
            if (c > s.inner_len(i)) {
                int left = s.at(i, c - 1);
                if (left > x) return "row " + std::to_string(i + 1) + " decreases";
                if (left == x && x > m) return "odd letter repeated in row " + std::to_string(i + 1);
            }
            if (i > 0 && c >= s.inner_len(i - 1) && c < s.outer[i - 1]) {
                int up = s.at(i - 1, c);
                if (up > x) return "column " + std::to_string(c + 1) + " decreases";
                if (up == x && x <= m) return "even letter repeated in column " + std::to_string(c + 1);
            }
        }
    }
    return std::nullopt;
}

namespace detail {

/// Row-major backtracking; the visitor returns false to stop early.
inline void visit_ssyt(const Partition& outer, const Partition& inner, int m, int n,
                       const std::function<bool(const SSYT&)>& visit) {
    SSYT s{outer, inner, {}};
    while (!s.inner.empty() && s.inner.back() == 0) s.inner.pop_back();
    if (!partition_contains(outer, s.inner)) return;
    s.filling.resize(outer.size());
    std::vector<std::pair<int, int>> boxes;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        s.filling[i].assign(outer[i] - s.inner_len(i), 0);
        for (int c = s.inner_len(i); c < outer[i]; ++c) boxes.emplace_back(static_cast<int>(i), c);
    }
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (stop) return;
        if (idx == boxes.size()) {
            if (!visit(s)) stop = true;
            return;
        }
        auto [i, c] = boxes[idx];
        int lo = 1;
        int left = c > s.inner_len(i) ? s.at(i, c - 1) : 0;
        int up = (i > 0 && c >= s.inner_len(i - 1)) ? s.at(i - 1, c) : 0;
        lo = std::max({lo, left, up});
        for (int x = lo; x <= m + n; ++x) {
            if (left == x && x > m) continue;
            if (up == x && x <= m) continue;
            s.filling[i][c - s.inner_len(i)] = x;
            self(self, idx + 1);
            if (stop) return;
        }
        s.filling[i][c - s.inner_len(i)] = 0;
    };
    rec(rec, 0);
}

} // namespace detail

inline std::vector<SSYT> enumerate_ssyt(const Partition& outer, const Partition& inner, int m, int n) {
    std::vector<SSYT> out;
    detail::visit_ssyt(outer, inner, m, n, [&](const SSYT& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

inline std::size_t count_ssyt(const Partition& outer, const Partition& inner, int m, int n) {
    std::size_t count = 0;
    detail::visit_ssyt(outer, inner, m, n, [&](const SSYT&) {
        ++count;
        return true;
    });
    return count;
}

inline bool skew_ssyt_exists(const Partition& outer, const Partition& inner, int m, int n) {
    bool found = false;
    detail::visit_ssyt(outer, inner, m, n, [&](const SSYT&) {
        found = true;
        return false;
    });
    return found;
}

} // namespace skewrep
