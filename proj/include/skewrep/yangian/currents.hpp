#pragma once

/**
 * @file currents.hpp
 * @brief Drinfeld currents d_k(u), x^+-_k(u) of a skew module on its GT basis.
 *
 * Column p of x^+_k is the image of basis vector p. Each nonzero entry of an
 * x-matrix is c / (u - pole) with a single simple pole.
 */

#include "skewrep/glrep.hpp"
#include "skewrep/yangian/lweight.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace skewrep {

struct CurrentRep {
    SkewShape shape;
    std::vector<GTTableau> basis;
    /// d[k][p] is the eigenvalue of d_k(u) on basis vector p, k = 1..m+n; d[0] unused.
    std::vector<std::vector<RatFunc>> d;
    /// k = 1..m+n-1; index 0 unused.
    std::vector<Matrix<RatFunc>> x_plus, x_minus;

    std::size_t dim() const { return basis.size(); }
    int rank() const { return shape.m() + shape.n(); }
    int parity(int k) const { return k == shape.m() ? 1 : 0; }

    LWeight l_weight_of(std::size_t p) const {
        LWeight w;
        for (int k = 1; k <= rank(); ++k) w.components.push_back(d[k][p]);
        return w;
    }
    Matrix<RatFunc> d_matrix(int k) const { return Matrix<RatFunc>::diagonal(d.at(k)); }
};

/// Pole -(l_{ki} + s^+-_{ki} + gamma_k) of the (Lambda +- delta_{ki}, Lambda) entry.
inline Rational predicted_pole(const SkewShape& s, const GTTableau& t, int k, int i, int sign) {
    const auto gamma = gamma_sequence(s.m(), s.n());
    return -(Rational(content(s, t, k, i) + shift_of(s, k, i, sign)) + gamma(k));
}

inline CurrentRep build_current_rep(const SkewShape& s) {
    CurrentRep rep{s, enumerate_tableaux(s), {}, {}, {}};
    const std::size_t dim = rep.dim();
    const int N = rep.rank();
    auto idx = index_tableaux(rep.basis);
    rep.d.assign(N + 1, std::vector<RatFunc>(dim, RatFunc(1)));
    rep.x_plus.assign(N, Matrix<RatFunc>(dim, dim));
    rep.x_minus.assign(N, Matrix<RatFunc>(dim, dim));
    for (std::size_t p = 0; p < dim; ++p) {
        const auto& t = rep.basis[p];
        auto w = l_weight(s, t);
        for (int k = 1; k <= N; ++k) rep.d[k][p] = w.components[k - 1];
        for (int k = 1; k < N; ++k)
            for (int i = 1; i <= s.r() + k; ++i)
                for (Direction dir : {Direction::Raise, Direction::Lower}) {
                    const int sign = sign_of(dir);
                    auto it = idx.find(shifted(s, t, k, i, sign).rows());
                    if (it == idx.end()) continue;
                    Rational c = matrix_element(s, t, k, i, dir).value;
                    c = Rational(sign > 0 ? s.s(k) : s.s(k + 1)) * c;
                    if (c.is_zero()) continue;
                    auto& x = sign > 0 ? rep.x_plus[k] : rep.x_minus[k];
                    x(it->second, p) = RatFunc(c) / RatFunc::linear(-predicted_pole(s, t, k, i, sign));
                }
    }
    return rep;
}

/// Entries of x-matrices that are not c/(u - p) at the predicted pole, or sit off a GT transition.
inline std::vector<std::string> pole_violations(const CurrentRep& rep) {
    std::vector<std::string> out;
    const auto& s = rep.shape;
    auto idx = index_tableaux(rep.basis);
    for (int k = 1; k < rep.rank(); ++k)
        for (int sign : {1, -1}) {
            const auto& x = sign > 0 ? rep.x_plus[k] : rep.x_minus[k];
            for (std::size_t q = 0; q < rep.dim(); ++q)
                for (std::size_t p = 0; p < rep.dim(); ++p) {
                    const RatFunc& e = x(q, p);
                    if (e.zero()) continue;
                    const std::string where = std::string(sign > 0 ? "x+_" : "x-_") + std::to_string(k) + " entry (" +
                                              std::to_string(q) + "," + std::to_string(p) + ")";
                    int found = 0;
                    for (int i = 1; i <= s.r() + k && !found; ++i) {
                        auto it = idx.find(shifted(s, rep.basis[p], k, i, sign).rows());
                        if (it != idx.end() && it->second == q) found = i;
                    }
                    if (!found) {
                        out.push_back(where + " is not a GT transition");
                        continue;
                    }
                    Rational pole = predicted_pole(s, rep.basis[p], k, found, sign);
                    if (e.num().degree() != 0 || !(e.den() == RatPoly::linear_root(pole)))
                        out.push_back(where + " = " + e.to_string() + ", expected a simple pole at " + pole.to_short_string());
                }
        }
    return out;
}

/// The l-root relating zeta_Lambda and zeta_{Lambda +- delta_{ki}} failed the simple-root form.
struct LRootViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// a = -l_{ki} - s^+-_{ki} - gamma_k, checked against zeta_{Lambda'} = zeta_Lambda * A_{k,a}^{+-1} componentwise.
inline SimpleLRoot simple_l_root_ratio(const SkewShape& s, const GTTableau& t, int k, int i, int sign) {
    if (k < 1 || k >= s.m() + s.n()) throw std::out_of_range("simple_l_root_ratio: k out of range");
    if (i < 1 || i > s.r() + k) throw std::out_of_range("simple_l_root_ratio: i out of range");
    GTTableau target = shifted(s, t, k, i, sign);
    if (!is_admissible(s, t) || !is_admissible(s, target))
        throw std::invalid_argument("simple_l_root_ratio needs both tableaux admissible");
    SimpleLRoot root{k, predicted_pole(s, t, k, i, sign)};
    auto z0 = l_weight(s, t), z1 = l_weight(s, target);
    for (int j = 1; j <= s.m() + s.n(); ++j) {
        RatFunc ratio = z1.components[j - 1] / z0.components[j - 1];
        RatFunc expect = root.component(s.m(), j);
        if (sign < 0) expect = expect.inverse();
        if (!(ratio == expect))
            throw LRootViolation("l-weight ratio at component " + std::to_string(j) + " is " + ratio.to_string() +
                                 ", not a simple l-root with a = " + root.a.to_short_string() + " (" +
                                 element_location(s, t, k, i, sign > 0 ? Direction::Raise : Direction::Lower) + ")");
    }
    return root;
}

} // namespace skewrep
