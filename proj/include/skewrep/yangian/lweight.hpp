#pragma once

/**
 * @file lweight.hpp
 * @brief gamma shifts, the series Y_{Lambda,k}(u), l-weights and simple l-roots.
 *
 * All rational functions are in the spectral parameter u and canonical
 * (reduced, monic denominator), so equality is structural.
 */

#include "skewrep/exactmath.hpp"
#include "skewrep/tableaux.hpp"

#include <string>
#include <vector>

namespace skewrep {

inline int parity_sign(int m, int k) { return k <= m ? 1 : -1; }

struct GammaSequence {
    int m = 0, n = 0;
    std::vector<Rational> values;   // gamma_1..gamma_{m+n} at indices 0..m+n-1

    const Rational& operator()(int k) const { return values.at(k - 1); }
    long as_long(int k) const { return values.at(k - 1).to_long(); }
};

inline GammaSequence gamma_sequence(int m, int n) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("gamma_sequence needs m+n >= 1");
    GammaSequence g{m, n, {}};
    g.values.push_back(Rational(m > 0 ? 0 : -1));
    for (int k = 2; k <= m + n; ++k)
        g.values.push_back(g.values.back() + Rational(parity_sign(m, k - 1) + parity_sign(m, k), 2));
    return g;
}

/// s^+_{ki} and s^-_{ki}.
inline int shift_plus(const SkewShape& s, int k, int i) { return i <= s.mprime() ? (s.s(k) + 1) / 2 : -1; }
inline int shift_minus(const SkewShape& s, int k, int i) { return i <= s.mprime() ? (s.s(k) - 1) / 2 : 0; }

inline int shift_of(const SkewShape& s, int k, int i, int sign) { return sign > 0 ? shift_plus(s, k, i) : shift_minus(s, k, i); }

namespace detail {

inline RatFunc u_plus(long c) { return RatFunc::linear(Rational(c)); }
inline RatFunc u_plus(const Rational& c) { return RatFunc::linear(c); }

} // namespace detail

/// Y_{Lambda,k}(u) for 0 <= k <= m+n.
inline RatFunc script_y(const SkewShape& s, const GTTableau& t, int k) {
    if (k < 0 || k > s.m() + s.n()) throw std::out_of_range("script_y: k out of range");
    const int r = s.r();
    const auto gamma = gamma_sequence(s.m(), s.n());
    RatFunc y(1);
    for (int i = 1; i <= r; ++i) y *= detail::u_plus(content(s, t, k, i)) / detail::u_plus(long(r - i + 1));
    for (int j = 1; j <= k; ++j) {
        RatFunc f = detail::u_plus(content(s, t, k, r + j)) / detail::u_plus(-gamma(j));
        y *= s.s(j) > 0 ? f : f.inverse();
    }
    return y;
}

struct LWeight {
    std::vector<RatFunc> components;

    friend bool operator==(const LWeight& a, const LWeight& b) { return a.components == b.components; }
    friend bool operator<(const LWeight& a, const LWeight& b) {
        if (a.components.size() != b.components.size()) return a.components.size() < b.components.size();
        for (std::size_t i = 0; i < a.components.size(); ++i) {
            int c = field_compare(a.components[i], b.components[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
    LWeight operator*(const LWeight& o) const {
        LWeight w = *this;
        for (std::size_t i = 0; i < components.size(); ++i) w.components[i] *= o.components.at(i);
        return w;
    }
    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < components.size(); ++i) out += (i ? ", " : "") + components[i].to_string();
        return out + ")";
    }
};

/// zeta_{Lambda,k}(u) = (Y_k(u+gamma_k) / Y_{k-1}(u+gamma_k))^{s_k}.
inline LWeight l_weight(const SkewShape& s, const GTTableau& t) {
    const auto gamma = gamma_sequence(s.m(), s.n());
    LWeight w;
    RatFunc prev = script_y(s, t, 0);
    for (int k = 1; k <= s.m() + s.n(); ++k) {
        RatFunc cur = script_y(s, t, k);
        RatFunc z = cur.shift(gamma(k)) / prev.shift(gamma(k));
        w.components.push_back(s.s(k) > 0 ? z : z.inverse());
        prev = cur;
    }
    return w;
}

/// Y_beta(u) for a gl(m|n) weight beta.
inline RatFunc script_y_weight(const Weight& beta, int m, int n) {
    if (static_cast<int>(beta.size()) != m + n) throw std::invalid_argument("weight length must be m+n");
    const auto gamma = gamma_sequence(m, n);
    RatFunc y(1);
    for (int i = 1; i <= m + n; ++i) {
        const int si = parity_sign(m, i);
        RatFunc f = detail::u_plus(Rational(si * beta[i - 1]) - gamma(i)) / detail::u_plus(-gamma(i));
        y *= si > 0 ? f : f.inverse();
    }
    return y;
}

/// (alpha_i, epsilon_j) with (epsilon_a, epsilon_b) = s_a delta_ab.
inline int root_pairing(int m, int i, int j) {
    return (i == j ? parity_sign(m, i) : 0) - (i + 1 == j ? parity_sign(m, i + 1) : 0);
}

struct SimpleLRoot {
    int i = 0;
    Rational a;

    /// (A_{i,a})_j(u) = (u-a) / (u-a-(alpha_i, epsilon_j)).
    RatFunc component(int m, int j) const {
        return detail::u_plus(-a) / detail::u_plus(-a - Rational(root_pairing(m, i, j)));
    }
    LWeight as_l_weight(int m, int n) const {
        LWeight w;
        for (int j = 1; j <= m + n; ++j) w.components.push_back(component(m, j));
        return w;
    }
};

} // namespace skewrep
