#pragma once

/**
 * @file bijection.hpp
 * @brief GT tableaux <-> semistandard fillings of the skew hook diagram.
 *
 * Row k' of a tableau is a covariant weight of gl(a_k|b_k), a_k = min(k', m'),
 * b_k = k' - a_k. The letter k fills the boxes of Gamma^{(k)} / Gamma^{(k-1)}.
 */

#include "skewrep/tableaux/gt_tableau.hpp"
#include "skewrep/tableaux/ssyt.hpp"

#include <stdexcept>
#include <string>

namespace skewrep {

struct NotSemistandard : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::pair<int, int> row_grading(const SkewShape& s, int k) {
    const int kp = s.r() + k;
    const int a = std::min(kp, s.mprime());
    return {a, kp - a};
}

/// Weight of gl(a|b) whose hook diagram is d; nullopt if d is not such a diagram.
inline std::optional<Weight> weight_of_diagram(const Partition& d, int a, int b) {
    Weight w(a + b, 0);
    for (int i = 0; i < a; ++i) w[i] = i < static_cast<int>(d.size()) ? d[i] : 0;
    auto cols = conjugate(d);
    for (int j = 0; j < b; ++j) w[a + j] = j < static_cast<int>(cols.size()) ? std::max(0, cols[j] - a) : 0;
    if (covariance_violation(w, a, b)) return std::nullopt;
    if (hook_diagram(w, a, b) != d) return std::nullopt;
    return w;
}

} // namespace detail

inline SSYT tableau_to_ssyt(const SkewShape& s, const GTTableau& t) {
    if (auto v = admissibility_violation(s, t))
        throw std::invalid_argument("tableau is not admissible: A(" + std::to_string(v->condition) + ") " + v->message);
    SSYT out{s.outer(), s.inner(), {}};
    out.filling.resize(out.outer.size());
    for (std::size_t i = 0; i < out.outer.size(); ++i) out.filling[i].assign(out.outer[i] - out.inner_len(i), 0);
    Partition prev = out.inner;
    for (int k = 1; k <= s.m() + s.n(); ++k) {
        auto [a, b] = detail::row_grading(s, k);
        Partition cur = hook_diagram(t.row(s.r() + k), a, b);
        if (!partition_contains(cur, prev))
            throw std::logic_error("hook diagrams of consecutive rows are not nested at k = " + std::to_string(k));
        for (std::size_t i = 0; i < cur.size(); ++i) {
            int from = i < prev.size() ? prev[i] : 0;
            for (int c = from; c < cur[i]; ++c) out.filling[i][c - out.inner_len(i)] = k;
        }
        prev = std::move(cur);
    }
    if (auto v = ssyt_violation(out, s.m(), s.n()))
        throw std::logic_error("insertion produced a non-semistandard filling: " + *v);
    return out;
}

inline GTTableau ssyt_to_tableau(const SkewShape& s, const SSYT& y) {
    if (y.outer != s.outer() || [&] {
            Partition a = y.inner, b = s.inner();
            while (!a.empty() && a.back() == 0) a.pop_back();
            while (!b.empty() && b.back() == 0) b.pop_back();
            return a != b;
        }())
        throw NotSemistandard("filling does not have the skew diagram of the shape");
    if (auto v = ssyt_violation(y, s.m(), s.n())) throw NotSemistandard(*v);
    std::vector<std::vector<int>> rows;
    rows.push_back(s.mu());
    for (int k = 1; k <= s.m() + s.n(); ++k) {
        Partition d;
        for (std::size_t i = 0; i < y.outer.size(); ++i) {
            int len = y.inner_len(i);
            for (int c = y.inner_len(i); c < y.outer[i]; ++c)
                if (y.at(i, c) <= k) len = c + 1;
            d.push_back(len);
        }
        while (!d.empty() && d.back() == 0) d.pop_back();
        auto [a, b] = detail::row_grading(s, k);
        auto w = detail::weight_of_diagram(d, a, b);
        if (!w) throw NotSemistandard("letters <= " + std::to_string(k) + " do not form a (" + std::to_string(a) + "|" +
                                      std::to_string(b) + ")-hook diagram");
        rows.push_back(*w);
    }
    GTTableau t(s.r(), std::move(rows));
    if (auto v = admissibility_violation(s, t))
        throw std::logic_error("reconstructed tableau violates A(" + std::to_string(v->condition) + "): " + v->message);
    return t;
}

} // namespace skewrep
