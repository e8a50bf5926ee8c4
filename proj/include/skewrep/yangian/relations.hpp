#pragma once

/**
 * @file relations.hpp
 * @brief Current relations checked three ways, and the central series.
 *
 * sampled: exact evaluation at random rational pairs (u, v).
 * grid:    exact in u over Q(u) at B+1 distinct values of v, where B bounds the
 *          v-degree of the identity after clearing v-denominators. A polynomial
 *          in v of degree <= B with B+1 roots vanishes, so this is a proof.
 * series:  coefficientwise on expansions at u = infinity, v = infinity.
 */

#include "skewrep/yangian/currents.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>

namespace skewrep {

struct RelationOptions {
    int sample_count = 20;
    int truncation_order = 6;
    std::uint64_t seed = 0x5eed2024ULL;
};

/// Seeded random rationals; raw mt19937_64 output only, so sequences are portable.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}
    Rational next() {
        long num = static_cast<long>(gen_() % 1999) - 999;
        long den = static_cast<long>(gen_() % 97) + 1;
        return Rational(num, den);
    }

private:
    std::mt19937_64 gen_;
};

namespace detail {

inline Matrix<Rational> eval_matrix(const Matrix<RatFunc>& m, const Rational& x) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).zero()) out(i, j) = m(i, j).evaluate_at(x);
    return out;
}

inline std::vector<Rational> eval_diag(const std::vector<RatFunc>& d, const Rational& x) {
    std::vector<Rational> out;
    for (const auto& f : d) out.push_back(f.evaluate_at(x));
    return out;
}

inline Matrix<RatFunc> lift_matrix(const Matrix<Rational>& m) {
    return m.map<RatFunc>([](const Rational& x) { return RatFunc(x); });
}

inline std::vector<RatFunc> lift_diag(const std::vector<Rational>& d) { return {d.begin(), d.end()}; }

/// deg lcm(denominators) + max(0, deg num - deg den): bounds the v-degree after clearing.
inline int v_degree_bound(const std::vector<RatFunc>& entries) {
    RatPoly l(Rational(1));
    int excess = 0;
    for (const auto& f : entries) {
        if (f.zero()) continue;
        l = exact_div(l, gcd(l, f.den())) * f.den();
        excess = std::max(excess, f.num().degree() - f.den().degree());
    }
    return l.degree() + excess;
}

inline std::vector<RatFunc> entries_of(const Matrix<RatFunc>& m) {
    std::vector<RatFunc> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).zero()) out.push_back(m(i, j));
    return out;
}

/// Residual of (u-v)[d_i(u), x_j(v)] = c d_i(u)(x_j(v) - x_j(u))  (plus) or
/// (u-v)[d_i(u), x_j(v)] = c (x_j(u) - x_j(v)) d_i(u)             (minus), d diagonal.
template <class V>
Matrix<V> dx_residual(int sign, const V& c, const V& u_minus_v, const std::vector<V>& du, const Matrix<V>& xu,
                      const Matrix<V>& xv) {
    Matrix<V> out(xu.rows(), xu.cols());
    for (std::size_t p = 0; p < xu.rows(); ++p)
        for (std::size_t q = 0; q < xu.cols(); ++q) {
            if (is_zero(xu(p, q)) && is_zero(xv(p, q))) continue;
            V lhs = u_minus_v * (du[p] - du[q]) * xv(p, q);
            V rhs = sign > 0 ? c * du[p] * (xv(p, q) - xu(p, q)) : c * (xu(p, q) - xv(p, q)) * du[q];
            out(p, q) = lhs - rhs;
        }
    return out;
}

template <class V>
bool dd_commute(const std::vector<V>& a, const std::vector<V>& b) {
    for (std::size_t p = 0; p < a.size(); ++p)
        if (!is_zero(a[p] * b[p] - b[p] * a[p])) return false;
    return true;
}

} // namespace detail

/// (s_i delta_ij - s_i delta_{i,j+1}).
inline int dx_coefficient(const SkewShape& s, int i, int j) { return (i == j ? s.s(i) : 0) - (i == j + 1 ? s.s(i) : 0); }

inline RelationReport verify_drinfeld_relations(const CurrentRep& rep, const RelationOptions& opt = {}) {
    RelationReport report;
    const int N = rep.rank();
    const auto& s = rep.shape;
    const std::string rel_dd = "[d_i(u),d_k(v)]=0", rel_dp = "(u-v)[d_i(u),x+_j(v)]", rel_dm = "(u-v)[d_i(u),x-_j(v)]",
                      rel_xp = "[x+_j(u),x+_l(v)]=0, |j-l|>1", rel_xm = "[x-_j(u),x-_l(v)]=0, |j-l|>1";
    // every relation appears in the report, even when vacuous
    for (const auto& rel : {rel_dd, rel_dp, rel_dm, rel_xp, rel_xm})
        for (const char* method : {"sampled", "grid", "series"}) report.record(rel + " [" + method + "]", true);
    auto fail = [&](const std::string& rel, const char* method, const std::string& detail) {
        report.record(rel + " [" + method + "]", false, detail);
    };
    auto at = [](int a, int b) { return " at (" + std::to_string(a) + "," + std::to_string(b) + ")"; };
    RationalSampler rng(opt.seed);

    // sampled
    for (int sample = 0; sample < opt.sample_count; ++sample) {
        Rational u0, v0;
        std::vector<std::vector<Rational>> du(N + 1), dv(N + 1);
        std::vector<Matrix<Rational>> xpu(N), xpv(N), xmu(N), xmv(N);
        for (;;) {
            u0 = rng.next();
            v0 = rng.next();
            if (u0 == v0) continue;
            try {
                for (int k = 1; k <= N; ++k) {
                    du[k] = detail::eval_diag(rep.d[k], u0);
                    dv[k] = detail::eval_diag(rep.d[k], v0);
                }
                for (int k = 1; k < N; ++k) {
                    xpu[k] = detail::eval_matrix(rep.x_plus[k], u0);
                    xpv[k] = detail::eval_matrix(rep.x_plus[k], v0);
                    xmu[k] = detail::eval_matrix(rep.x_minus[k], u0);
                    xmv[k] = detail::eval_matrix(rep.x_minus[k], v0);
                }
                break;
            } catch (const PoleError&) {
            }
        }
        const std::string pt = " at u=" + u0.to_short_string() + ", v=" + v0.to_short_string();
        for (int i = 1; i <= N; ++i)
            for (int k = 1; k <= N; ++k)
                if (!detail::dd_commute(du[i], dv[k])) fail(rel_dd, "sampled", at(i, k) + pt);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j < N; ++j) {
                Rational c(dx_coefficient(s, i, j));
                if (!detail::dx_residual(1, c, u0 - v0, du[i], xpu[j], xpv[j]).zero()) fail(rel_dp, "sampled", at(i, j) + pt);
                if (!detail::dx_residual(-1, c, u0 - v0, du[i], xmu[j], xmv[j]).zero()) fail(rel_dm, "sampled", at(i, j) + pt);
            }
        for (int j = 1; j < N; ++j)
            for (int l = 1; l < N; ++l) {
                if (std::abs(j - l) <= 1) continue;
                if (!supercommutator(xpu[j], xpv[l], rep.parity(j), rep.parity(l)).zero()) fail(rel_xp, "sampled", at(j, l) + pt);
                if (!supercommutator(xmu[j], xmv[l], rep.parity(j), rep.parity(l)).zero()) fail(rel_xm, "sampled", at(j, l) + pt);
            }
    }

    // grid: exact in u, v at bound+1 pole-free values
    auto v_values = [&](const std::vector<RatFunc>& v_entries, int bound) {
        std::vector<Rational> vs;
        std::set<Rational> used;
        while (static_cast<int>(vs.size()) < bound + 1) {
            Rational v = rng.next();
            if (used.count(v)) continue;
            bool pole = false;
            for (const auto& f : v_entries)
                if (f.den().evaluate(v).is_zero()) pole = true;
            if (pole) continue;
            used.insert(v);
            vs.push_back(v);
        }
        return vs;
    };
    const RatFunc U = RatFunc::u();
    for (int k = 1; k <= N; ++k) {
        const int bound = detail::v_degree_bound(rep.d[k]);
        for (const auto& v0 : v_values(rep.d[k], bound)) {
            auto dv = detail::lift_diag(detail::eval_diag(rep.d[k], v0));
            for (int i = 1; i <= N; ++i)
                if (!detail::dd_commute(rep.d[i], dv)) fail(rel_dd, "grid", at(i, k) + " v=" + v0.to_short_string());
        }
    }
    for (int j = 1; j < N; ++j)
        for (int sign : {1, -1}) {
            const auto& X = sign > 0 ? rep.x_plus[j] : rep.x_minus[j];
            auto ent = detail::entries_of(X);
            const int bound = detail::v_degree_bound(ent) + 1;   // (u - v)
            for (const auto& v0 : v_values(ent, bound)) {
                auto xv = detail::lift_matrix(detail::eval_matrix(X, v0));
                for (int i = 1; i <= N; ++i) {
                    RatFunc c(dx_coefficient(s, i, j));
                    if (!detail::dx_residual(sign, c, U - RatFunc(v0), rep.d[i], X, xv).zero())
                        fail(sign > 0 ? rel_dp : rel_dm, "grid", at(i, j) + " v=" + v0.to_short_string());
                }
            }
        }
    for (int j = 1; j < N; ++j)
        for (int l = 1; l < N; ++l) {
            if (std::abs(j - l) <= 1) continue;
            for (int sign : {1, -1}) {
                const auto& Xj = sign > 0 ? rep.x_plus[j] : rep.x_minus[j];
                const auto& Xl = sign > 0 ? rep.x_plus[l] : rep.x_minus[l];
                auto ent = detail::entries_of(Xl);
                for (const auto& v0 : v_values(ent, detail::v_degree_bound(ent))) {
                    auto xv = detail::lift_matrix(detail::eval_matrix(Xl, v0));
                    if (!supercommutator(Xj, xv, rep.parity(j), rep.parity(l)).zero())
                        fail(sign > 0 ? rel_xp : rel_xm, "grid", at(j, l) + " v=" + v0.to_short_string());
                }
            }
        }

    // series at infinity: coefficient a of u^{-a}, a = 0..K
    const int K = opt.truncation_order;
    const std::size_t dim = rep.dim();
    std::vector<std::vector<std::vector<Rational>>> D(N + 1);   // D[k][a][p]
    std::vector<std::vector<Matrix<Rational>>> XP(N), XM(N);     // XP[k][a]
    for (int k = 1; k <= N; ++k) {
        D[k].assign(K + 1, std::vector<Rational>(dim));
        for (std::size_t p = 0; p < dim; ++p) {
            auto ser = series_expand(rep.d[k][p], ExpansionPoint::AtInfinity, K);
            for (int a = 0; a <= K; ++a) D[k][a][p] = ser[a];
        }
    }
    for (int k = 1; k < N; ++k)
        for (int sign : {1, -1}) {
            auto& XS = sign > 0 ? XP[k] : XM[k];
            const auto& X = sign > 0 ? rep.x_plus[k] : rep.x_minus[k];
            XS.assign(K + 1, Matrix<Rational>(dim, dim));
            for (std::size_t p = 0; p < dim; ++p)
                for (std::size_t q = 0; q < dim; ++q) {
                    if (X(p, q).zero()) continue;
                    auto ser = series_expand(X(p, q), ExpansionPoint::AtInfinity, K);
                    for (int a = 0; a <= K; ++a) XS[a](p, q) = ser[a];
                }
        }
    for (int i = 1; i <= N; ++i)
        for (int k = 1; k <= N; ++k)
            for (int a = 0; a <= K; ++a)
                for (int b = 0; b <= K; ++b)
                    if (!detail::dd_commute(D[i][a], D[k][b])) fail(rel_dd, "series", at(i, k) + " coefficient " + at(a, b));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < N; ++j)
            for (int sign : {1, -1}) {
                const auto& XS = sign > 0 ? XP[j] : XM[j];
                const Rational c(dx_coefficient(s, i, j));
                // F_ab = [D_a, X_b]; lhs_ab = F_{a+1,b} - F_{a,b+1}
                auto F = [&](int a, int b, std::size_t p, std::size_t q) { return (D[i][a][p] - D[i][a][q]) * XS[b](p, q); };
                for (int a = 0; a < K; ++a)
                    for (int b = 0; b < K; ++b)
                        for (std::size_t p = 0; p < dim; ++p)
                            for (std::size_t q = 0; q < dim; ++q) {
                                if ((sign > 0 ? rep.x_plus[j] : rep.x_minus[j])(p, q).zero()) continue;
                                Rational lhs = F(a + 1, b, p, q) - F(a, b + 1, p, q);
                                Rational rhs;
                                if (sign > 0) {
                                    rhs = D[i][a][p] * XS[b](p, q);
                                    if (b == 0)
                                        for (int a2 = 0; a2 <= a; ++a2) rhs -= D[i][a2][p] * XS[a - a2](p, q);
                                } else {
                                    rhs = -XS[b](p, q) * D[i][a][q];
                                    if (b == 0)
                                        for (int a2 = 0; a2 <= a; ++a2) rhs += XS[a - a2](p, q) * D[i][a2][q];
                                }
                                if (!(lhs == c * rhs))
                                    fail(sign > 0 ? rel_dp : rel_dm, "series", at(i, j) + " coefficient" + at(a, b));
                            }
            }
    for (int j = 1; j < N; ++j)
        for (int l = 1; l < N; ++l) {
            if (std::abs(j - l) <= 1) continue;
            for (int a = 0; a <= K; ++a)
                for (int b = 0; b <= K; ++b) {
                    if (!supercommutator(XP[j][a], XP[l][b], rep.parity(j), rep.parity(l)).zero())
                        fail(rel_xp, "series", at(j, l) + " coefficient" + at(a, b));
                    if (!supercommutator(XM[j][a], XM[l][b], rep.parity(j), rep.parity(l)).zero())
                        fail(rel_xm, "series", at(j, l) + " coefficient" + at(a, b));
                }
        }
    return report;
}

struct CentralSeriesReport {
    bool scalar = true;
    RatFunc value = RatFunc(1);
    std::string detail;
};

/// prod_j d_j(u - gamma_j)^{s_j} on every basis vector; it must be one scalar.
inline CentralSeriesReport verify_central_series(const CurrentRep& rep, int truncation_order = 6) {
    CentralSeriesReport out;
    const auto gamma = gamma_sequence(rep.shape.m(), rep.shape.n());
    for (std::size_t p = 0; p < rep.dim(); ++p) {
        RatFunc c(1);
        for (int j = 1; j <= rep.rank(); ++j) {
            RatFunc f = rep.d[j][p].shift(-gamma(j));
            c *= rep.shape.s(j) > 0 ? f : f.inverse();
        }
        if (p == 0) {
            out.value = c;
            continue;
        }
        bool same = c == out.value &&
                    series_expand(c, ExpansionPoint::AtInfinity, truncation_order) ==
                        series_expand(out.value, ExpansionPoint::AtInfinity, truncation_order);
        if (!same && out.scalar) {
            out.scalar = false;
            out.detail = "basis vector " + std::to_string(p) + " gives " + c.to_string() + ", basis vector 0 gives " +
                         out.value.to_string();
        }
    }
    return out;
}

} // namespace skewrep
