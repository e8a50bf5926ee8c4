#pragma once

/**
 * @file rmatrix.hpp
 * @brief Trigonometric R-matrix on V (x) V for V = C^{m|n}, and a sampled
 * Yang-Baxter check in V (x) V (x) V.
 *
 * Basis v_a (x) v_b has index a N + b (0-based). Operators on tensor powers
 * carry the Koszul sign (A (x) B)(v (x) w) = (-1)^{|B||v|} Av (x) Bw.
 */

#include "skewrep/exactmath/qfield.hpp"
#include "skewrep/yangian/relations.hpp"

#include <string>
#include <vector>

namespace skewrep {

/// coefficient * E_ij (x) E_kl, indices 1-based.
struct RTerm {
    int i, j, k, l;
    QRatFunc coefficient;
};

struct QRMatrix {
    int m = 0, n = 0;
    std::vector<RTerm> terms;
    /// (m+n)^2 x (m+n)^2, entries polynomial in u over Q(q).
    Matrix<QRatFunc> matrix;

    int rank() const { return m + n; }
    int index_parity(int i) const { return i > m ? 1 : 0; }
};

inline QRMatrix build_q_r_matrix(int m, int n) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("R-matrix needs m+n >= 1");
    QRMatrix R{m, n, {}, {}};
    const int N = m + n;
    const QRatFunc U = QRatFunc::u();
    auto qs = [&](int i) { return q_power(i <= m ? 1 : -1); };
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (i == j) {
                R.terms.push_back({i, i, i, i, U * lift(qs(i)) - lift(qs(i).inverse())});
            } else {
                R.terms.push_back({i, i, j, j, U - QRatFunc(1)});
                if (i < j) {
                    R.terms.push_back({j, i, i, j, U * lift(qs(i) - qs(i).inverse())});
                    R.terms.push_back({i, j, j, i, lift(qs(j) - qs(j).inverse())});
                }
            }
        }
    const std::size_t d = static_cast<std::size_t>(N * N);
    R.matrix = Matrix<QRatFunc>(d, d);
    for (const auto& t : R.terms) {
        const int sign = (R.index_parity(t.k) + R.index_parity(t.l)) * R.index_parity(t.j) % 2 ? -1 : 1;
        const std::size_t row = (t.i - 1) * N + (t.k - 1), col = (t.j - 1) * N + (t.l - 1);
        R.matrix(row, col) += sign > 0 ? t.coefficient : -t.coefficient;
    }
    return R;
}

namespace detail {

/// Embed sum c E_ij (x) E_kl into factors a < b of V^{(x)3}, at q = q0 and u = z.
inline Matrix<Rational> embed_r(const QRMatrix& R, int a, int b, const Rational& q0, const Rational& z) {
    const int N = R.rank();
    const std::size_t d = static_cast<std::size_t>(N * N * N);
    Matrix<Rational> out(d, d);
    auto p = [&](int i) { return R.index_parity(i); };
    for (const auto& t : R.terms) {
        const Rational c = specialize(t.coefficient, q0).evaluate_at(z);
        if (c.is_zero()) continue;
        const int pb = (p(t.k) + p(t.l)) % 2;
        for (int x1 = 1; x1 <= N; ++x1)
            for (int x2 = 1; x2 <= N; ++x2)
                for (int x3 = 1; x3 <= N; ++x3) {
                    int in[3] = {x1, x2, x3};
                    if (in[a] != t.j || in[b] != t.l) continue;
                    int outv[3] = {x1, x2, x3};
                    outv[a] = t.i;
                    outv[b] = t.k;
                    // (O_1 (x) O_2 (x) O_3) sign: |O_s| times the parity of the input vectors before slot s
                    int e = 0;
                    for (int s = 0; s < a; ++s) e += p(in[s]);
                    for (int s = 0; s < b; ++s) e += p(in[s]);
                    const int sign = pb * e % 2 ? -1 : 1;
                    const std::size_t row = ((outv[0] - 1) * N + (outv[1] - 1)) * N + (outv[2] - 1);
                    const std::size_t col = ((x1 - 1) * N + (x2 - 1)) * N + (x3 - 1);
                    out(row, col) += sign > 0 ? c : -c;
                }
    }
    return out;
}

} // namespace detail

/// R_12(u/v) R_13(u/w) R_23(v/w) = R_23(v/w) R_13(u/w) R_12(u/v) at `triples` random (u, v, w).
inline RelationReport verify_yang_baxter(const QRMatrix& R, const Rational& q0, int triples,
                                         std::uint64_t seed = 0x5eed2024ULL) {
    RelationReport rep;
    rep.add("Yang-Baxter", true);
    RationalSampler rng(seed);
    for (int t = 0; t < triples; ++t) {
        Rational u = rng.next(), v = rng.next(), w = rng.next();
        if (u.is_zero() || v.is_zero() || w.is_zero()) {
            --t;
            continue;
        }
        auto r12 = detail::embed_r(R, 0, 1, q0, u / v), r13 = detail::embed_r(R, 0, 2, q0, u / w),
             r23 = detail::embed_r(R, 1, 2, q0, v / w);
        rep.record("Yang-Baxter", r12 * r13 * r23 == r23 * r13 * r12,
                   "(u,v,w)=(" + u.to_short_string() + "," + v.to_short_string() + "," + w.to_short_string() + ")");
    }
    return rep;
}

} // namespace skewrep
