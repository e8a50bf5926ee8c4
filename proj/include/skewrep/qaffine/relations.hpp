#pragma once

/**
 * @file relations.hpp
 * @brief Relations between the quantum Drinfeld currents, checked mode by mode.
 *
 * The d-x relations are multiplied through by (u - w) and compared at each
 * power of w over Q(q)(u). The [x+, x-] relation compares the u^a w^b
 * coefficient of both sides: the right side is the u^{a+b} coefficient of
 * d_{i+1}/d_i expanded at 0 when a+b >= 0, minus the u^{-(a+b)} coefficient of
 * its expansion at infinity when a+b <= 0.
 */

#include "skewrep/qaffine/currents.hpp"
#include "skewrep/yangian/relations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace skewrep {

struct QRelationOptions {
    int window = 4;
    int sample_count = 20;
    std::uint64_t seed = 0x5eed2024ULL;
};

struct QRelationReport {
    RelationReport report;
    /// Mode window actually used for [x+_i, x-_i], per i (index 0 unused).
    std::vector<int> effective_window;
};

namespace detail {

/// Values of q avoided when sampling: 0 and +-1.
inline Rational sample_q(RationalSampler& rng) {
    for (;;) {
        Rational x = rng.next();
        if (!x.is_zero() && !(x == Rational(1)) && !(x == Rational(-1))) return x;
    }
}

inline Rational eval_q(const QRatFunc& f, const Rational& q0, const Rational& u0) {
    return specialize(f, q0).evaluate_at(u0);
}

/// Distinct delta supports of x_i^{+-} plus the denominator degree of d_{i+1}/d_i bound the window.
inline int xx_window(const QCurrentRep& rep, int i, int window) {
    std::set<QElement> supports;
    for (const auto* C : {&rep.pole_plus[i], &rep.pole_minus[i]})
        for (std::size_t a = 0; a < rep.dim(); ++a)
            for (std::size_t b = 0; b < rep.dim(); ++b)
                if (!(*C)(a, b).zero()) supports.insert((*C)(a, b));
    int deg = 0;
    for (std::size_t p = 0; p < rep.dim(); ++p) deg = std::max(deg, (rep.d[i + 1][p] / rep.d[i][p]).den().degree());
    const int k = static_cast<int>(supports.size());
    return std::max(window, (k + deg + 1) / 2);
}

} // namespace detail

inline QRelationReport verify_q_relations(const QCurrentRep& rep, const QRelationOptions& opt = {}) {
    QRelationReport out;
    auto& report = out.report;
    const int N = rep.rank(), W = opt.window;
    const std::size_t dim = rep.dim();
    const auto& s = rep.shape;
    const std::string dd = "[d_j(u),d_k(w)]=0", dxfar = "[d_j(u),x_i(w)]=0, |i-j|>1", xxfar = "[x_i(u),x_l(w)]=0, |i-l|>1",
                      dx1 = "d_i(u)x_i(w)", dx2 = "d_{i+1}(u)x_i(w)", xx = "[x+_i(u),x-_l(w)]";
    for (const auto& n : {dd + " [sampled]", dxfar + " [exact]", xxfar + " [exact]", dx1 + " [exact]", dx1 + " [sampled]",
                          dx2 + " [exact]", dx2 + " [sampled]", xx + " [exact]"})
        report.add(n, true);
    out.effective_window.assign(std::max(N, 1), 0);

    std::map<std::tuple<int, int, int>, Matrix<QElement>> modes;
    auto mode = [&](int k, int sign, int a) -> const Matrix<QElement>& {
        auto key = std::make_tuple(k, sign, a);
        auto it = modes.find(key);
        if (it == modes.end()) it = modes.emplace(key, rep.mode(k, sign, a)).first;
        return it->second;
    };

    RationalSampler rng(opt.seed);
    // (a) d's are diagonal in the GT basis; check commutation at sampled points anyway
    for (int smp = 0; smp < opt.sample_count && N > 0; ++smp) {
        const Rational q0 = detail::sample_q(rng), u0 = rng.next(), w0 = rng.next();
        try {
            for (int j = 1; j <= N; ++j)
                for (int k = 1; k <= N; ++k) {
                    std::vector<Rational> a, b;
                    for (std::size_t p = 0; p < dim; ++p) {
                        a.push_back(detail::eval_q(rep.d[j][p], q0, u0));
                        b.push_back(detail::eval_q(rep.d[k][p], q0, w0));
                    }
                    auto A = Matrix<Rational>::diagonal(a), B = Matrix<Rational>::diagonal(b);
                    report.record(dd + " [sampled]", A * B == B * A, "j=" + std::to_string(j) + " k=" + std::to_string(k));
                }
        } catch (const PoleError&) {
            --smp;
        }
    }

    for (int i = 1; i < N; ++i)
        for (int sign : {1, -1}) {
            // far d-x commutation
            for (int j = 1; j <= N; ++j) {
                if (std::abs(i - j) < 2) continue;
                for (int a = -W; a <= W; ++a) {
                    const auto& X = mode(i, sign, a);
                    for (std::size_t q = 0; q < dim; ++q)
                        for (std::size_t p = 0; p < dim; ++p)
                            if (!X(q, p).zero() && !(rep.d[j][q] == rep.d[j][p]))
                                report.record(dxfar + " [exact]", false,
                                              "i=" + std::to_string(i) + " j=" + std::to_string(j) + " mode " + std::to_string(a));
                }
            }
            // far x-x commutation
            for (int l = 1; l < N; ++l) {
                if (std::abs(i - l) < 2) continue;
                for (int a = -W; a <= W; ++a)
                    for (int b = -W; b <= W; ++b)
                        if (!supercommutator(mode(i, sign, a), mode(l, sign, b), rep.parity(i), rep.parity(l)).zero())
                            report.record(xxfar + " [exact]", false,
                                          "i=" + std::to_string(i) + " l=" + std::to_string(l) + " modes " + std::to_string(a) +
                                              "," + std::to_string(b));
            }
            // adjacent d-x relations, cleared of (u - w):
            //   alpha u D X_a - beta D X_{a-1} = u X_a D - X_{a-1} D   (sign +)
            //   u D X_a - D X_{a-1} = alpha u X_a D - beta X_{a-1} D   (sign -)
            for (int which : {0, 1}) {
                const int j = i + which;
                const QElement qj = q_sub(s, j);
                const QElement alpha = which == 0 ? qj : qj.inverse(), beta = which == 0 ? qj.inverse() : qj;
                const std::string name = which == 0 ? dx1 : dx2;
                const QRatFunc U = QRatFunc::u();
                for (int a = -W + 1; a <= W; ++a) {
                    const auto& Xa = mode(i, sign, a);
                    const auto& Xb = mode(i, sign, a - 1);
                    for (std::size_t q = 0; q < dim; ++q)
                        for (std::size_t p = 0; p < dim; ++p) {
                            if (Xa(q, p).zero() && Xb(q, p).zero()) continue;
                            const QRatFunc xa(Xa(q, p)), xb(Xb(q, p));
                            const QRatFunc& Dq = rep.d[j][q];
                            const QRatFunc& Dp = rep.d[j][p];
                            QRatFunc lhs, rhs;
                            if (sign > 0) {
                                lhs = lift(alpha) * U * Dq * xa - lift(beta) * Dq * xb;
                                rhs = U * xa * Dp - xb * Dp;
                            } else {
                                lhs = U * Dq * xa - Dq * xb;
                                rhs = lift(alpha) * U * xa * Dp - lift(beta) * xb * Dp;
                            }
                            if (!(lhs == rhs))
                                report.record(name + " [exact]", false,
                                              std::string(sign > 0 ? "x+" : "x-") + " i=" + std::to_string(i) + " mode " +
                                                  std::to_string(a) + " entry (" + std::to_string(q) + "," + std::to_string(p) + ")");
                        }
                }
                // the same identity at sampled (q, u)
                for (int smp = 0; smp < opt.sample_count; ++smp) {
                    const Rational q0 = detail::sample_q(rng), u0 = rng.next();
                    const int a = smp % (2 * W) - W + 1;
                    try {
                        auto Xa = specialize_matrix(mode(i, sign, a), q0), Xb = specialize_matrix(mode(i, sign, a - 1), q0);
                        std::vector<Rational> dv;
                        for (std::size_t p = 0; p < dim; ++p) dv.push_back(detail::eval_q(rep.d[j][p], q0, u0));
                        auto D = Matrix<Rational>::diagonal(dv);
                        const Rational al = specialize(alpha, q0), be = specialize(beta, q0);
                        const Rational one(1);
                        const Rational l1 = sign > 0 ? al : one, l2 = sign > 0 ? be : one;
                        const Rational r1 = sign > 0 ? one : al, r2 = sign > 0 ? one : be;
                        auto lhs = (l1 * u0) * (D * Xa) - l2 * (D * Xb);
                        auto rhs = (r1 * u0) * (Xa * D) - r2 * (Xb * D);
                        report.record(name + " [sampled]", lhs == rhs,
                                      "i=" + std::to_string(i) + " q=" + q0.to_short_string() + " u=" + u0.to_short_string());
                    } catch (const PoleError&) {
                        --smp;
                    }
                }
            }
        }

    // [x+_i(u), x-_l(w)]
    for (int i = 1; i < N; ++i) {
        const int Wi = detail::xx_window(rep, i, W);
        out.effective_window[i] = Wi;
        std::vector<TruncatedSeries<QElement>> at0, atinf;
        for (std::size_t p = 0; p < dim; ++p) {
            QRatFunc ratio = rep.d[i + 1][p] / rep.d[i][p];
            at0.push_back(series_expand(ratio, ExpansionPoint::AtZero, 2 * Wi));
            atinf.push_back(series_expand(ratio, ExpansionPoint::AtInfinity, 2 * Wi));
        }
        const QElement qi = q_sub(s, i), pref = qi - qi.inverse();
        for (int l = 1; l < N; ++l)
            for (int a = -Wi; a <= Wi; ++a)
                for (int b = -Wi; b <= Wi; ++b) {
                    auto lhs = supercommutator(mode(i, 1, a), mode(l, -1, b), rep.parity(i), rep.parity(l));
                    Matrix<QElement> rhs(dim, dim);
                    if (i == l) {
                        const int n = a + b;
                        std::vector<QElement> diag;
                        for (std::size_t p = 0; p < dim; ++p) {
                            QElement v(0);
                            if (n >= 0) v = v + at0[p][n];
                            if (n <= 0) v = v - atinf[p][-n];
                            diag.push_back(pref * v);
                        }
                        rhs = Matrix<QElement>::diagonal(diag);
                    }
                    if (!(lhs == rhs))
                        report.record(xx + " [exact]", false,
                                      "i=" + std::to_string(i) + " l=" + std::to_string(l) + " modes " + std::to_string(a) + "," +
                                          std::to_string(b));
                }
    }
    return out;
}

} // namespace skewrep
