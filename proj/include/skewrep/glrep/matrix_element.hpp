#pragma once

/**
 * @file matrix_element.hpp
 * @brief Gelfand-Tsetlin matrix elements of e_k, f_k on skew modules.
 *
 * Each regime (k < m, e_m, f_m, m < k < m+n) produces a FactorList: a sign
 * exponent, 0/1 gates and integer numerator/denominator factors. The classical
 * value multiplies the integers; the quantum value multiplies q-numbers of
 * them (see qaffine).
 */

#include "skewrep/exactmath/rational.hpp"
#include "skewrep/tableaux.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace skewrep {

enum class Direction { Raise = +1, Lower = -1 };

inline int sign_of(Direction d) { return d == Direction::Raise ? 1 : -1; }

struct FactorList {
    int sign_exponent = 0;   // value carries (-1)^sign_exponent
    std::vector<long> gates;   // theta or 1 - theta, each 0 or 1
    std::vector<long> num;
    std::vector<long> den;
};

/// A denominator factor vanished although the target tableau is admissible.
struct NonvanishingViolation : std::logic_error {
    using std::logic_error::logic_error;
};

namespace regimes {

namespace detail {

struct Ctx {
    const SkewShape& s;
    const GTTableau& t;
    int mp() const { return s.mprime(); }
    int kp(int k) const { return s.r() + k; }
    long l(int k, int j) const { return content(s, t, k, j); }
};

} // namespace detail

/// 1 <= k <= m-1.
inline FactorList even(const SkewShape& s, const GTTableau& t, int k, int i, Direction dir) {
    detail::Ctx c{s, t};
    FactorList f;
    const int kp = c.kp(k);
    const long li = c.l(k, i);
    if (dir == Direction::Raise) {
        f.sign_exponent = 1;
        for (int j = 1; j <= kp + 1; ++j) f.num.push_back(c.l(k + 1, j) - li);
    } else {
        for (int j = 1; j <= kp - 1; ++j) f.num.push_back(c.l(k - 1, j) - li);
    }
    for (int j = 1; j <= kp; ++j)
        if (j != i) f.den.push_back(c.l(k, j) - li);
    return f;
}

/// k = m, raising.
inline FactorList wall_raise(const SkewShape& s, const GTTableau& t, int i) {
    detail::Ctx c{s, t};
    FactorList f;
    const int k = s.m(), mp = c.mp();
    const long li = c.l(k, i);
    f.gates.push_back(theta(t, mp, i));
    f.sign_exponent = i - 1;
    for (int j = 1; j < i; ++j) f.sign_exponent += theta(t, mp, j);
    for (int j = 1; j < i; ++j) f.num.push_back(c.l(k, j) - li - 1);
    for (int j = i + 1; j <= mp; ++j) f.den.push_back(c.l(k, j) - li);
    for (int j = 1; j <= mp; ++j)
        if (j != i) f.den.push_back(c.l(k + 1, j) - li - 1);
    return f;
}

/// k = m, lowering.
inline FactorList wall_lower(const SkewShape& s, const GTTableau& t, int i) {
    detail::Ctx c{s, t};
    FactorList f;
    const int k = s.m(), mp = c.mp();
    const long li = c.l(k, i);
    f.gates.push_back(1 - theta(t, mp, i));
    f.sign_exponent = i - 1;
    for (int j = 1; j < i; ++j) f.sign_exponent += theta(t, mp, j);
    f.num.push_back(li - c.l(k + 1, mp + 1));
    for (int j = i + 1; j <= mp; ++j) f.num.push_back(c.l(k, j) - li + 1);
    for (int j = 1; j <= mp - 1; ++j) f.num.push_back(c.l(k - 1, j) - li);
    for (int j = 1; j < i; ++j) f.den.push_back(c.l(k, j) - li);
    return f;
}

/// m+1 <= k <= m+n-1.
inline FactorList odd(const SkewShape& s, const GTTableau& t, int k, int i, Direction dir) {
    detail::Ctx c{s, t};
    FactorList f;
    const int kp = c.kp(k), mp = c.mp();
    const long li = c.l(k, i);
    if (dir == Direction::Raise) {
        if (i <= mp) {
            f.gates.push_back(theta(t, kp, i));
            f.gates.push_back(1 - theta(t, kp - 1, i));
            f.sign_exponent = vartheta(t, mp, kp, i);
            for (int j = 1; j <= mp; ++j) {
                if (j == i) continue;
                f.num.push_back(c.l(k, j) - li - 1);
                f.den.push_back(c.l(k + 1, j) - li - 1);
            }
        } else {
            f.sign_exponent = 1;
            for (int j = 1; j <= mp; ++j) {
                f.num.push_back(c.l(k, j) - li);
                f.num.push_back(c.l(k, j) - li + 1);
                f.den.push_back(c.l(k + 1, j) - li);
                f.den.push_back(c.l(k - 1, j) - li + 1);
            }
            for (int j = mp + 1; j <= kp + 1; ++j) f.num.push_back(c.l(k + 1, j) - li);
            for (int j = mp + 1; j <= kp; ++j)
                if (j != i) f.den.push_back(c.l(k, j) - li);
        }
    } else {
        if (i <= mp) {
            f.gates.push_back(theta(t, kp - 1, i));
            f.gates.push_back(1 - theta(t, kp, i));
            f.sign_exponent = vartheta(t, mp, kp, i);
            for (int j = mp + 1; j <= kp + 1; ++j) f.num.push_back(c.l(k + 1, j) - li);
            for (int j = mp + 1; j <= kp - 1; ++j) f.num.push_back(c.l(k - 1, j) - li + 1);
            for (int j = mp + 1; j <= kp; ++j) {
                f.den.push_back(c.l(k, j) - li);
                f.den.push_back(c.l(k, j) - li + 1);
            }
            for (int j = 1; j <= mp; ++j) {
                if (j == i) continue;
                f.num.push_back(c.l(k, j) - li + 1);
                f.den.push_back(c.l(k - 1, j) - li + 1);
            }
        } else {
            for (int j = mp + 1; j <= kp - 1; ++j) f.num.push_back(c.l(k - 1, j) - li);
            for (int j = mp + 1; j <= kp; ++j)
                if (j != i) f.den.push_back(c.l(k, j) - li);
        }
    }
    return f;
}

} // namespace regimes

/// Factor list of E^{+-}_{Lambda,ki}, dispatching on the regime of k.
inline FactorList matrix_element_factors(const SkewShape& s, const GTTableau& t, int k, int i, Direction dir) {
    if (k < 1 || k > s.m() + s.n() - 1) throw std::out_of_range("generator index k out of range");
    if (i < 1 || i > s.r() + k) throw std::out_of_range("tableau index i out of range");
    if (k < s.m()) return regimes::even(s, t, k, i, dir);
    if (k == s.m()) return dir == Direction::Raise ? regimes::wall_raise(s, t, i) : regimes::wall_lower(s, t, i);
    return regimes::odd(s, t, k, i, dir);
}

/// Multiply out a factor list with `lift` applied to each integer factor.
/// Zero factors cancel pairwise between numerator and denominator; a leftover
/// zero in the denominator throws NonvanishingViolation.
template <class V, class Lift>
V evaluate_factors(const FactorList& f, Lift lift, const std::string& where) {
    for (long g : f.gates)
        if (g == 0) return V(0);
    int zn = 0, zd = 0;
    for (long x : f.num) zn += x == 0;
    for (long x : f.den) zd += x == 0;
    if (zd > zn)
        throw NonvanishingViolation("denominator of the matrix element vanishes at " + where);
    if (zn > zd) return V(0);
    V acc = (f.sign_exponent % 2 == 0) ? V(1) : V(-1);
    for (long x : f.num)
        if (x != 0) acc = acc * lift(x);
    V den = V(1);
    for (long x : f.den)
        if (x != 0) den = den * lift(x);
    return acc / den;
}

struct MatrixElement {
    Rational value;
    int k = 0, i = 0;
    Direction direction = Direction::Raise;
};

inline std::string element_location(const SkewShape& s, const GTTableau& t, int k, int i, Direction dir) {
    return s.to_string() + ", tableau " + t.to_string() + ", k=" + std::to_string(k) + ", i=" + std::to_string(i) +
           (dir == Direction::Raise ? ", raising" : ", lowering");
}

/// E^{+-}_{Lambda,ki}; zero when the target is not admissible.
inline MatrixElement matrix_element(const SkewShape& s, const GTTableau& t, int k, int i, Direction dir) {
    MatrixElement e{Rational(0), k, i, dir};
    if (!is_admissible(s, shifted(s, t, k, i, sign_of(dir)))) return e;
    auto f = matrix_element_factors(s, t, k, i, dir);
    e.value = evaluate_factors<Rational>(f, [](long x) { return Rational(x); }, element_location(s, t, k, i, dir));
    return e;
}

/// Transitions to admissible tableaux whose matrix element vanishes or hits a zero denominator.
inline std::vector<std::string> nonvanishing_violations(const SkewShape& s) {
    std::vector<std::string> out;
    for (const auto& t : enumerate_tableaux(s))
        for (int k = 1; k < s.m() + s.n(); ++k)
            for (int i = 1; i <= s.r() + k; ++i)
                for (Direction dir : {Direction::Raise, Direction::Lower}) {
                    if (!is_admissible(s, shifted(s, t, k, i, sign_of(dir)))) continue;
                    try {
                        if (matrix_element(s, t, k, i, dir).value.is_zero()) out.push_back(element_location(s, t, k, i, dir));
                    } catch (const NonvanishingViolation& e) {
                        out.push_back(e.what());
                    }
                }
    return out;
}

/// Eigenvalue of e_kk: row sum k' minus row sum k'-1.
inline Rational cartan_eigenvalue(const SkewShape& s, const GTTableau& t, int k) {
    if (k < 1 || k > s.m() + s.n()) throw std::out_of_range("Cartan index k out of range");
    const int kp = s.r() + k;
    return Rational(t.row_sum(kp) - t.row_sum(kp - 1));
}

} // namespace skewrep
