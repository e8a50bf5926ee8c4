#pragma once

/**
 * @file gt_tableau.hpp
 * @brief Gelfand-Tsetlin tableaux for skew shapes and the admissibility test.
 *
 * Rows are indexed by the absolute GT index k = r .. m'+n; row k has k
 * entries lambda_{k1} .. lambda_{kk}. The top row is lambda, the bottom row mu.
 */

#include "skewrep/tableaux/shape.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewrep {

class GTTableau {
public:
    GTTableau() = default;
    /// rows[0] is the bottom row (length r), rows.back() the top row.
    GTTableau(int r, std::vector<std::vector<int>> rows) : r_(r), rows_(std::move(rows)) {}

    int bottom() const { return r_; }
    int top() const { return r_ + static_cast<int>(rows_.size()) - 1; }

    /// lambda_{ki}, 1-based i, absolute row index k.
    int operator()(int k, int i) const { return rows_.at(k - r_).at(i - 1); }
    int& operator()(int k, int i) { return rows_.at(k - r_).at(i - 1); }
    const std::vector<int>& row(int k) const { return rows_.at(k - r_); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    long row_sum(int k) const {
        long s = 0;
        for (int x : row(k)) s += x;
        return s;
    }

    /// Lexicographic order on rows top to bottom, left to right.
    friend bool lex_less(const GTTableau& a, const GTTableau& b) {
        for (int k = a.top(); k >= a.bottom(); --k) {
            if (a.row(k) != b.row(k)) return a.row(k) < b.row(k);
        }
        return false;
    }

    friend bool operator==(const GTTableau&, const GTTableau&) = default;

    std::string to_string() const {
        std::string s;
        for (int k = top(); k >= bottom(); --k) {
            s += k == top() ? "" : " / ";
            s += weight_string(row(k));
        }
        return s;
    }

private:
    int r_ = 0;
    std::vector<std::vector<int>> rows_;
};

/// Reading of the lower index bound in A(3); see tests and notes.
enum class A3Reading {
    /// #{i : lambda_{ki} > 0, m'+1 <= i <= k}: counts odd entries only
    Corrected,
    /// #{i : lambda_{ki} > 0, m' <= i <= k}: also counts the last even entry
    Literal,
};

struct Violation {
    int condition;   // 1..6 for A(1)..A(6), 0 for dimension problems
    int row;
    int index;
    std::string message;
};

/// theta_{k i} = lambda_{k+1,i} - lambda_{k,i}
inline int theta(const GTTableau& t, int k, int i) { return t(k + 1, i) - t(k, i); }

/// vartheta_{k i} = theta_{k1}+...+theta_{k,i-1} + theta_{k-1,i+1}+...+theta_{k-1,m'}
inline int vartheta(const GTTableau& t, int mprime, int k, int i) {
    int v = 0;
    for (int j = 1; j < i; ++j) v += theta(t, k, j);
    for (int j = i + 1; j <= mprime; ++j) v += theta(t, k - 1, j);
    return v;
}

/// Content l_{ki} for gl index k = 0..m+n (row k' = r+k) and 1 <= i <= k'.
inline int content(const SkewShape& s, const GTTableau& t, int k, int i) {
    const int kp = s.r() + k, r = s.r(), mp = s.mprime();
    if (i <= mp) return t(kp, i) + r - i + 1;
    return -t(kp, i) + r + i - 2 * mp;
}

/// All l_{ki}, indexed [k][i] with k = 0..m+n and i = 1..k' (index 0 unused).
struct ContentTable {
    std::vector<std::vector<int>> l;
    int operator()(int k, int i) const { return l.at(k).at(i); }
};

inline ContentTable content_table(const SkewShape& s, const GTTableau& t) {
    ContentTable c;
    for (int k = 0; k <= s.m() + s.n(); ++k) {
        std::vector<int> row(s.r() + k + 1, 0);
        for (int i = 1; i <= s.r() + k; ++i) row[i] = content(s, t, k, i);
        c.l.push_back(std::move(row));
    }
    return c;
}

/// Throws std::invalid_argument if the array does not have the triangular shape of s.
inline void check_dimensions(const SkewShape& s, const GTTableau& t) {
    if (t.bottom() != s.r() || t.top() != s.top())
        throw std::invalid_argument("tableau rows do not span r .. r+m+n");
    for (int k = s.r(); k <= s.top(); ++k)
        if (static_cast<int>(t.row(k).size()) != k)
            throw std::invalid_argument("tableau row " + std::to_string(k) + " must have " + std::to_string(k) +
                                        " entries");
}

/// First violated admissibility condition, or nullopt if t is lambda/mu-admissible.
inline std::optional<Violation> admissibility_violation(const SkewShape& s, const GTTableau& t,
                                                        A3Reading reading = A3Reading::Corrected) {
    check_dimensions(s, t);
    const int mp = s.mprime(), top = s.top(), r = s.r();
    auto fail = [](int c, int k, int i, std::string msg) { return Violation{c, k, i, std::move(msg)}; };

    // A(1)
    if (t.row(top) != s.lambda()) return fail(1, top, 0, "top row differs from lambda");
    if (t.row(r) != s.mu()) return fail(1, r, 0, "bottom row differs from mu");

    // A(2)
    for (int k = std::max(mp + 1, r + 1); k <= top; ++k)
        for (int i = 1; i <= mp; ++i) {
            int th = theta(t, k - 1, i);
            if (th != 0 && th != 1)
                return fail(2, k, i, "theta_{" + std::to_string(k - 1) + "," + std::to_string(i) + "} = " +
                                         std::to_string(th) + " is not 0 or 1");
        }

    // A(3)
    if (mp >= 1) {
        const int lo = reading == A3Reading::Corrected ? mp + 1 : mp;
        for (int k = std::max(mp + 1, r); k <= top; ++k) {
            int count = 0;
            for (int i = lo; i <= k; ++i) count += t(k, i) > 0 ? 1 : 0;
            if (t(k, mp) < count)
                return fail(3, k, mp, "lambda_{" + std::to_string(k) + "," + std::to_string(mp) + "} = " +
                                          std::to_string(t(k, mp)) + " is below the count " + std::to_string(count));
        }
    }

    // A(4)
    if (mp >= 1 && s.n() >= 1 && mp >= r && mp + 1 <= top) {
        if (t(mp + 1, mp) == 0 && theta(t, mp, mp) != 0)
            return fail(4, mp, mp, "lambda_{m'+1,m'} = 0 forces theta_{m'm'} = 0");
    }

    // A(5)
    for (int k = std::max(mp + 1, r); k <= top; ++k)
        for (int i = 1; i < mp; ++i)
            if (t(k, i) < t(k, i + 1))
                return fail(5, k, i, "even part of row " + std::to_string(k) + " is not weakly decreasing");

    // A(6), even part below the wall
    for (int k = r; k <= mp - 1; ++k)
        for (int i = 1; i <= k; ++i)
            if (!(t(k + 1, i) >= t(k, i) && t(k, i) >= t(k + 1, i + 1)))
                return fail(6, k, i, "betweenness fails at (" + std::to_string(k) + "," + std::to_string(i) + ")");

    // A(6), odd part above the wall
    for (int k = std::max(mp + 1, r); k <= top - 1; ++k)
        for (int i = mp + 1; i <= k; ++i)
            if (!(t(k + 1, i) >= t(k, i) && t(k, i) >= t(k + 1, i + 1)))
                return fail(6, k, i, "betweenness fails at (" + std::to_string(k) + "," + std::to_string(i) + ")");

    return std::nullopt;
}

inline bool is_admissible(const SkewShape& s, const GTTableau& t, A3Reading reading = A3Reading::Corrected) {
    return !admissibility_violation(s, t, reading).has_value();
}

} // namespace skewrep
