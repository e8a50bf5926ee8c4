#pragma once

/**
 * @file currents.hpp
 * @brief Drinfeld currents of skew modules over the quantum affine superalgebra.
 *
 * d_k^+(u) and d_k^-(u) act by the same rational function zeta_k(u), expanded at
 * u = 0 and u = infinity respectively. x_k^{+-}(u) = sum_a x_{k,a} u^a is
 * supported on GT transitions; the entry for Lambda -> Lambda +- delta_ki is
 * A c^{-a} with A = (1 - q_k^{-+2}) [E] and c = q^{2(l_ki + s_ki + gamma_k)}.
 */

#include "skewrep/qaffine/generators.hpp"
#include "skewrep/yangian/lweight.hpp"

#include <map>
#include <string>
#include <vector>

namespace skewrep {

struct QLWeight {
    std::vector<QRatFunc> components;

    friend bool operator==(const QLWeight& a, const QLWeight& b) { return a.components == b.components; }
    friend bool operator<(const QLWeight& a, const QLWeight& b) {
        for (std::size_t i = 0; i < std::min(a.components.size(), b.components.size()); ++i) {
            int c = field_compare(a.components[i], b.components[i]);
            if (c != 0) return c < 0;
        }
        return a.components.size() < b.components.size();
    }
    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < components.size(); ++i) out += (i ? ", " : "") + components[i].to_string();
        return out + ")";
    }
};

/// f(u) -> f(u c).
inline QRatFunc scale_u(const QRatFunc& f, const QElement& c) { return f.scale(c); }

/// Quantum Y_{Lambda,k}(u), 0 <= k <= m+n.
inline QRatFunc q_script_y(const SkewShape& s, const GTTableau& t, int k) {
    if (k < 0 || k > s.m() + s.n()) throw std::out_of_range("q_script_y: k out of range");
    const int r = s.r();
    const auto gamma = gamma_sequence(s.m(), s.n());
    const int row = r + k;
    QRatFunc y(1);
    for (int i = 1; i <= r; ++i) {
        const long l = content(s, t, k, i);
        y *= lift(q_power(t(row, i))) * one_minus(q_power(static_cast<int>(-2 * l))) / one_minus(q_power(-2 * (r - i + 1)));
    }
    for (int j = 1; j <= k; ++j) {
        const long l = content(s, t, k, r + j);
        QRatFunc f = one_minus(q_power(static_cast<int>(-2 * l))) / one_minus(q_power(static_cast<int>(2 * gamma.as_long(j))));
        y *= lift(q_power(t(row, r + j)));
        y *= s.s(j) > 0 ? f : f.inverse();
    }
    return y;
}

/// zeta_k(u) = (Y_k(u q^{-2 gamma_k}) / Y_{k-1}(u q^{-2 gamma_k}))^{s_k}.
inline QLWeight q_l_weight(const SkewShape& s, const GTTableau& t) {
    const auto gamma = gamma_sequence(s.m(), s.n());
    QLWeight w;
    QRatFunc prev = q_script_y(s, t, 0);
    for (int k = 1; k <= s.m() + s.n(); ++k) {
        QRatFunc cur = q_script_y(s, t, k);
        const QElement c = q_power(static_cast<int>(-2 * gamma.as_long(k)));
        QRatFunc z = scale_u(cur, c) / scale_u(prev, c);
        w.components.push_back(s.s(k) > 0 ? z : z.inverse());
        prev = cur;
    }
    return w;
}

/// Value of a quantum l-weight component at u = q^{-2x} in the limit q -> 1.
inline Rational degenerate_at(const QRatFunc& f, long x) {
    QElement v = f.evaluate_at<QElement>(q_power(static_cast<int>(-2 * x)));
    return classical_limit(v);
}

struct QCurrentRep {
    SkewShape shape;
    std::vector<GTTableau> basis;
    /// d[k][p] = zeta_k of basis vector p, k = 1..m+n.
    std::vector<std::vector<QRatFunc>> d;
    /// Mode-0 amplitudes and delta-function supports of x_k^{+-}, k = 1..m+n-1.
    std::vector<Matrix<QElement>> amp_plus, amp_minus, pole_plus, pole_minus;

    std::size_t dim() const { return basis.size(); }
    int rank() const { return shape.m() + shape.n(); }
    int parity(int k) const { return k == shape.m() ? 1 : 0; }
    QLWeight l_weight_of(std::size_t p) const {
        QLWeight w;
        for (int k = 1; k <= rank(); ++k) w.components.push_back(d[k][p]);
        return w;
    }

    /// x_{k,a}^{sign}.
    Matrix<QElement> mode(int k, int sign, int a) const {
        const auto& A = sign > 0 ? amp_plus.at(k) : amp_minus.at(k);
        const auto& C = sign > 0 ? pole_plus.at(k) : pole_minus.at(k);
        Matrix<QElement> out(dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                if (!A(i, j).zero()) out(i, j) = A(i, j) * pow(C(i, j), -a);
        return out;
    }
};

/// c = q^{2(l_ki + s_ki + gamma_k)} for the transition of t by sign * delta_ki.
inline QElement delta_support(const SkewShape& s, const GTTableau& t, int k, int i, int sign) {
    const auto gamma = gamma_sequence(s.m(), s.n());
    const long e = content(s, t, k, i) + shift_of(s, k, i, sign) + gamma.as_long(k);
    return q_power(static_cast<int>(2 * e));
}

/// (1 - q_k^{-2}) for x^+, (1 - q_k^{2}) for x^-.
inline QElement mode_prefactor(const SkewShape& s, int k, int sign) {
    return QElement(1) - q_power(-2 * sign * s.s(k));
}

inline QCurrentRep build_q_current_rep(const SkewShape& s) {
    QCurrentRep rep{s, enumerate_tableaux(s), {}, {}, {}, {}, {}};
    const std::size_t dim = rep.dim();
    const int N = rep.rank();
    auto idx = index_tableaux(rep.basis);
    rep.d.assign(N + 1, std::vector<QRatFunc>(dim, QRatFunc(1)));
    for (auto* v : {&rep.amp_plus, &rep.amp_minus, &rep.pole_plus, &rep.pole_minus}) v->assign(N, Matrix<QElement>(dim, dim));
    for (std::size_t p = 0; p < dim; ++p) {
        const auto& t = rep.basis[p];
        auto w = q_l_weight(s, t);
        for (int k = 1; k <= N; ++k) rep.d[k][p] = w.components[k - 1];
        for (int k = 1; k < N; ++k)
            for (int i = 1; i <= s.r() + k; ++i)
                for (Direction dir : {Direction::Raise, Direction::Lower}) {
                    const int sign = sign_of(dir);
                    auto it = idx.find(shifted(s, t, k, i, sign).rows());
                    if (it == idx.end()) continue;
                    QElement a = q_matrix_element(s, t, k, i, dir);
                    if (a.zero()) continue;
                    (sign > 0 ? rep.amp_plus : rep.amp_minus)[k](it->second, p) = mode_prefactor(s, k, sign) * a;
                    (sign > 0 ? rep.pole_plus : rep.pole_minus)[k](it->second, p) = delta_support(s, t, k, i, sign);
                }
    }
    return rep;
}

/// Column p of x_{k,a}^{sign}: the image of basis vector p.
inline std::vector<QElement> q_mode_action(const QCurrentRep& rep, std::size_t p, int k, int sign, int a) {
    auto m = rep.mode(k, sign, a);
    std::vector<QElement> col;
    for (std::size_t i = 0; i < rep.dim(); ++i) col.push_back(m(i, p));
    return col;
}

/// entry(a+1) = entry(a) c^{-1} for every transition and every a in [-window, window).
inline std::vector<std::string> mode_law_violations(const QCurrentRep& rep, int window) {
    std::vector<std::string> out;
    for (int k = 1; k < rep.rank(); ++k)
        for (int sign : {1, -1}) {
            const auto& C = sign > 0 ? rep.pole_plus[k] : rep.pole_minus[k];
            for (int a = -window; a < window; ++a) {
                auto x0 = rep.mode(k, sign, a), x1 = rep.mode(k, sign, a + 1);
                for (std::size_t i = 0; i < rep.dim(); ++i)
                    for (std::size_t j = 0; j < rep.dim(); ++j) {
                        if (x0(i, j).zero() && x1(i, j).zero()) continue;
                        if (C(i, j).zero() || !(x1(i, j) == x0(i, j) * C(i, j).inverse()))
                            out.push_back(std::string(sign > 0 ? "x+_" : "x-_") + std::to_string(k) + " entry (" +
                                          std::to_string(i) + "," + std::to_string(j) + ") mode " + std::to_string(a));
                    }
            }
        }
    return out;
}

/// Pairwise distinct quantum l-weights.
inline bool is_thin(const QCurrentRep& rep) {
    std::vector<QLWeight> w;
    for (std::size_t p = 0; p < rep.dim(); ++p) w.push_back(rep.l_weight_of(p));
    std::sort(w.begin(), w.end());
    return std::adjacent_find(w.begin(), w.end()) == w.end();
}

struct QIrreducibilityResult {
    bool irreducible = false;
    bool thin = false;
    bool connected = false;
    std::vector<TransformationEdge> certificate;
};

/// Thin and connected through transitions where x_{k,0}^+ and x_{k,0}^- both act nontrivially.
inline QIrreducibilityResult is_irreducible(const QCurrentRep& rep) {
    QIrreducibilityResult res;
    res.thin = is_thin(rep);
    TransformationGraph g;
    g.vertices = rep.dim();
    const int row_offset = rep.shape.r();
    for (int k = 1; k < rep.rank(); ++k)
        for (std::size_t p = 0; p < rep.dim(); ++p)
            for (std::size_t q = 0; q < rep.dim(); ++q) {
                if (rep.amp_plus[k](q, p).zero() || rep.amp_minus[k](p, q).zero()) continue;
                int i = 0;
                const int row = row_offset + k;
                for (int j = 1; j <= row; ++j)
                    if (rep.basis[q](row, j) == rep.basis[p](row, j) + 1) i = j;
                g.edges.push_back({p, q, k, i});
            }
    compute_connectivity(g);
    res.connected = g.connected;
    for (auto e : g.spanning_tree) res.certificate.push_back(g.edges[e]);
    res.irreducible = res.thin && res.connected;
    return res;
}

/// Transitions to admissible tableaux whose q-matrix element vanishes.
inline std::vector<std::string> q_nonvanishing_violations(const SkewShape& s) {
    std::vector<std::string> out;
    for (const auto& t : enumerate_tableaux(s))
        for (int k = 1; k < s.m() + s.n(); ++k)
            for (int i = 1; i <= s.r() + k; ++i)
                for (Direction dir : {Direction::Raise, Direction::Lower}) {
                    if (!is_admissible(s, shifted(s, t, k, i, sign_of(dir)))) continue;
                    if (q_matrix_element(s, t, k, i, dir).zero()) out.push_back(element_location(s, t, k, i, dir));
                }
    return out;
}

struct QCentralSeriesReport {
    bool scalar = true;
    QRatFunc value;
    std::string detail;
};

/// prod_j d_j^+(u q^{2 gamma_j})^{s_j} is the same rational function on every basis vector.
inline QCentralSeriesReport verify_q_central_series(const QCurrentRep& rep) {
    QCentralSeriesReport out;
    const auto gamma = gamma_sequence(rep.shape.m(), rep.shape.n());
    for (std::size_t p = 0; p < rep.dim(); ++p) {
        QRatFunc c(1);
        for (int j = 1; j <= rep.rank(); ++j) {
            QRatFunc f = scale_u(rep.d[j][p], q_power(static_cast<int>(2 * gamma.as_long(j))));
            c *= rep.shape.s(j) > 0 ? f : f.inverse();
        }
        if (p == 0) {
            out.value = c;
        } else if (!(c == out.value)) {
            out.scalar = false;
            out.detail = "basis vector " + std::to_string(p) + " gives " + c.to_string();
            return out;
        }
    }
    return out;
}

} // namespace skewrep
