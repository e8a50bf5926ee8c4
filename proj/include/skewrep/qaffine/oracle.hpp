#pragma once

/**
 * @file oracle.hpp
 * @brief Independent currents for gl(1|1) evaluation modules: pull back the
 * U_q(gl(1|1)) action through the evaluation morphism, Gauss-decompose T(u),
 * and read off modes as the difference of the expansions at 0 and infinity.
 */

#include "skewrep/qaffine/currents.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace skewrep {

struct QGaussCurrents {
    /// d[k] for k = 1, 2.
    std::vector<Matrix<QRatFunc>> d;
    /// x_{1,a}^{+-} for a in [-window, window] at index a + window.
    std::vector<Matrix<QElement>> x_plus, x_minus;
    int window = 0;
};

namespace detail {

inline Matrix<QRatFunc> lift_q(const Matrix<QElement>& m) {
    return m.map<QRatFunc>([](const QElement& x) { return QRatFunc(x); });
}

/// Mode a of g(u) expanded at 0 minus g(u) expanded at infinity, entrywise.
inline Matrix<QElement> delta_mode(const Matrix<QRatFunc>& g, int a) {
    Matrix<QElement> out(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (g(i, j).zero()) continue;
            QElement v(0);
            if (a >= 0) v = v + series_expand(g(i, j), ExpansionPoint::AtZero, a)[a];
            if (a <= 0) v = v - series_expand(g(i, j), ExpansionPoint::AtInfinity, -a)[-a];
            out(i, j) = v;
        }
    return out;
}

} // namespace detail

/// T^+ = [[t_1, (1-q^-2) t_1 e], [0, t_2^-1]], T^- = [[t_1^-1, 0], [(1-q^2) f t_1^-1, t_2]],
/// T(u) = (T^+ - u T^-)/(1 - u); d_1 = t_11, d_2 = t_22 + t_21 t_11^{-1} t_12 (the product
/// (f (x) E_21)(e (x) E_12) in the graded tensor product carries a sign since e and E_21 are odd),
/// x^+ = e_12^{(0)} - e_12^{(inf)} with e_12 = t_11^{-1} t_12, x^- = f_21^{(inf)} - f_21^{(0)} with f_21 = t_21 t_11^{-1}.
inline QGaussCurrents q_evaluation_currents(const QGeneratorMatrices& g, int window) {
    if (g.shape.m() != 1 || g.shape.n() != 1 || g.shape.r() != 0)
        throw std::invalid_argument("evaluation oracle covers (m,n,r) = (1,1,0) only");
    const QElement q = q_var();
    const std::size_t dim = g.dim();
    const Matrix<QElement> zero(dim, dim);
    const Matrix<QElement> t11p = g.t(1, 1), t22p = g.t(2, -1), t11m = g.t(1, -1), t22m = g.t(2, 1);
    const Matrix<QElement> t12p = (QElement(1) - q_power(-2)) * (t11p * g.e[1]);
    const Matrix<QElement> t21m = (QElement(1) - q * q) * (g.f[1] * t11m);
    const QRatFunc U = QRatFunc::u(), denom = (QRatFunc(1) - U).inverse();
    auto eval = [&](const Matrix<QElement>& plus, const Matrix<QElement>& minus) {
        return denom * (detail::lift_q(plus) - U * detail::lift_q(minus));
    };
    auto t11 = eval(t11p, t11m), t12 = eval(t12p, zero), t21 = eval(zero, t21m), t22 = eval(t22p, t22m);
    auto t11inv = t11.inverse();
    QGaussCurrents out;
    out.window = window;
    out.d = {t11, t22 + t21 * t11inv * t12};
    auto e12 = t11inv * t12, f21 = t21 * t11inv;
    for (int a = -window; a <= window; ++a) {
        out.x_plus.push_back(detail::delta_mode(e12, a));
        out.x_minus.push_back(-detail::delta_mode(f21, a));
    }
    return out;
}

struct QOracleComparison {
    bool match = true;
    std::vector<std::string> mismatches;
};

inline QOracleComparison compare_with_q_oracle(const QCurrentRep& rep, int window) {
    QOracleComparison out;
    auto o = q_evaluation_currents(build_q_generator_matrices(rep.shape), window);
    for (int k = 1; k <= 2; ++k) {
        std::vector<QRatFunc> diag(rep.d[k].begin(), rep.d[k].end());
        if (!(Matrix<QRatFunc>::diagonal(diag) == o.d[k - 1])) out.mismatches.push_back("d_" + std::to_string(k));
    }
    for (int a = -window; a <= window; ++a) {
        if (!(rep.mode(1, 1, a) == o.x_plus[a + window])) out.mismatches.push_back("x+ mode " + std::to_string(a));
        if (!(rep.mode(1, -1, a) == o.x_minus[a + window])) out.mismatches.push_back("x- mode " + std::to_string(a));
    }
    out.match = out.mismatches.empty();
    return out;
}

} // namespace skewrep
