#pragma once

/**
 * @file oracle.hpp
 * @brief Independent currents: evaluation map t_ij(u) = delta_ij + s_i e_ij / u
 * followed by block Gauss decomposition T = F D E.
 *
 * For r > 0 the skew module is the subspace of L(lambda) over gl(m'|n) whose
 * first r rows form the gl_r highest pattern of mu, and d_k, x_k of the skew
 * module are d_{r+k}, x_{r+k} of the big module restricted to it.
 */

#include "skewrep/yangian/currents.hpp"

#include <map>
#include <string>
#include <vector>

namespace skewrep {

/// E[i][j] = action of e_ij, 1 <= i,j <= m+n (index 0 unused).
inline std::vector<std::vector<Matrix<Rational>>> gl_matrix_units(const GeneratorMatrices& g) {
    const int N = g.rank(), m = g.shape.m();
    const std::size_t d = g.dim();
    auto p = [m](int i) { return i <= m ? 0 : 1; };
    std::vector<std::vector<Matrix<Rational>>> E(N + 1, std::vector<Matrix<Rational>>(N + 1, Matrix<Rational>(d, d)));
    for (int i = 1; i <= N; ++i) E[i][i] = g.h[i];
    for (int i = 1; i < N; ++i) {
        E[i][i + 1] = g.e[i];
        E[i + 1][i] = g.f[i];
    }
    // e_ij = [e_{i,j-1}, e_{j-1,j}] and e_ji = [e_{j,j-1}, e_{j-1,i}]
    for (int len = 2; len < N; ++len)
        for (int i = 1; i + len <= N; ++i) {
            const int j = i + len;
            E[i][j] = supercommutator(E[i][j - 1], E[j - 1][j], (p(i) + p(j - 1)) % 2, (p(j - 1) + p(j)) % 2);
            E[j][i] = supercommutator(E[j][j - 1], E[j - 1][i], (p(j) + p(j - 1)) % 2, (p(j - 1) + p(i)) % 2);
        }
    return E;
}

namespace detail {

inline Matrix<RatFunc> inverse_fast(const Matrix<RatFunc>& a) {
    if (!a.is_diagonal()) return a.inverse();
    Matrix<RatFunc> b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a(i, i).zero()) throw std::domain_error("singular block in Gauss decomposition");
        b(i, i) = a(i, i).inverse();
    }
    return b;
}

} // namespace detail

struct GaussCurrents {
    std::vector<Matrix<RatFunc>> d;                  // k = 1..N
    std::vector<Matrix<RatFunc>> x_plus, x_minus;    // k = 1..N-1
};

/// Block LDU elimination of T(u) over Q(u), top-left to bottom-right.
inline GaussCurrents gauss_currents(const GeneratorMatrices& g) {
    const int N = g.rank();
    const std::size_t dim = g.dim();
    auto E = gl_matrix_units(g);
    const RatFunc inv_u = RatFunc::u().inverse();
    std::vector<std::vector<Matrix<RatFunc>>> T(N + 1, std::vector<Matrix<RatFunc>>(N + 1, Matrix<RatFunc>(dim, dim)));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const Rational si(g.shape.s(i));
            T[i][j] = E[i][j].map<RatFunc>([&](const Rational& x) { return x.is_zero() ? RatFunc() : RatFunc(si * x) * inv_u; });
            if (i == j)
                for (std::size_t a = 0; a < dim; ++a) T[i][i](a, a) += RatFunc(1);
        }
    GaussCurrents out;
    out.d.assign(N + 1, Matrix<RatFunc>(dim, dim));
    out.x_plus.assign(N, Matrix<RatFunc>(dim, dim));
    out.x_minus.assign(N, Matrix<RatFunc>(dim, dim));
    for (int k = 1; k <= N; ++k) {
        out.d[k] = T[k][k];
        if (k == N) break;
        auto dinv = detail::inverse_fast(T[k][k]);
        std::vector<Matrix<RatFunc>> e_row(N + 1), f_col(N + 1);
        for (int j = k + 1; j <= N; ++j) {
            e_row[j] = dinv * T[k][j];
            f_col[j] = T[j][k] * dinv;
        }
        out.x_plus[k] = e_row[k + 1];
        out.x_minus[k] = f_col[k + 1];
        for (int i = k + 1; i <= N; ++i)
            for (int j = k + 1; j <= N; ++j) {
                if (T[i][k].zero() || T[k][j].zero()) continue;
                T[i][j] -= f_col[i] * T[k][j];
            }
    }
    return out;
}

struct OracleComparison {
    bool match = true;
    std::vector<std::string> mismatches;
};

/// Full tableau of L(lambda) over gl(m'|n) whose rows 1..r are the highest pattern of mu.
inline GTTableau embed_in_full_module(const SkewShape& s, const GTTableau& t) {
    std::vector<std::vector<int>> rows;
    for (int k = 0; k < s.r(); ++k) rows.emplace_back(s.mu().begin(), s.mu().begin() + k);
    for (int k = s.r(); k <= s.top(); ++k) rows.push_back(t.row(k));
    return GTTableau(0, rows);
}

/// Compare rep entry by entry with the Gauss-decomposition currents.
inline OracleComparison compare_with_oracle(const CurrentRep& rep) {
    const auto& s = rep.shape;
    OracleComparison cmp;
    auto full = SkewShape::make(s.mprime(), s.n(), 0, s.lambda(), {});
    auto g = build_generator_matrices(full);
    auto gc = gauss_currents(g);
    auto full_idx = index_tableaux(g.basis);
    std::vector<std::size_t> pos;
    for (const auto& t : rep.basis) {
        auto it = full_idx.find(embed_in_full_module(s, t).rows());
        if (it == full_idx.end()) {
            cmp.match = false;
            cmp.mismatches.push_back("tableau " + t.to_string() + " has no image in the full module");
            return cmp;
        }
        pos.push_back(it->second);
    }
    std::vector<bool> inside(g.dim(), false);
    for (auto p : pos) inside[p] = true;
    auto note = [&](const std::string& what, std::size_t q, std::size_t p, const RatFunc& got, const RatFunc& want) {
        cmp.match = false;
        if (cmp.mismatches.size() < 20)
            cmp.mismatches.push_back(what + " (" + std::to_string(q) + "," + std::to_string(p) + "): formula " +
                                     want.to_string() + ", oracle " + got.to_string());
    };
    const int r = s.r();
    for (std::size_t p = 0; p < rep.dim(); ++p) {
        for (int k = 1; k <= rep.rank(); ++k) {
            const auto& D = gc.d[r + k];
            for (std::size_t a = 0; a < g.dim(); ++a) {
                RatFunc want = a == pos[p] ? rep.d[k][p] : RatFunc();
                if (!(D(a, pos[p]) == want)) note("d_" + std::to_string(k), a, p, D(a, pos[p]), want);
            }
        }
        for (int k = 1; k < rep.rank(); ++k)
            for (int sign : {1, -1}) {
                const auto& X = sign > 0 ? gc.x_plus[r + k] : gc.x_minus[r + k];
                const auto& Y = sign > 0 ? rep.x_plus[k] : rep.x_minus[k];
                const std::string what = std::string(sign > 0 ? "x+_" : "x-_") + std::to_string(k);
                for (std::size_t a = 0; a < g.dim(); ++a)
                    if (!inside[a] && !X(a, pos[p]).zero()) note(what + " leaves the subspace", a, p, X(a, pos[p]), RatFunc());
                for (std::size_t q = 0; q < rep.dim(); ++q)
                    if (!(X(pos[q], pos[p]) == Y(q, p))) note(what, q, p, X(pos[q], pos[p]), Y(q, p));
            }
    }
    return cmp;
}

} // namespace skewrep
