#pragma once

/**
 * @file generators.hpp
 * @brief U_q(gl(m|n)) action on skew modules: q-deformed matrix elements,
 * generator matrices over Q(q) and their defining relations.
 */

#include "skewrep/exactmath/qfield.hpp"
#include "skewrep/glrep/generators.hpp"

#include <string>
#include <vector>

namespace skewrep {

/// [E^{+-}_{Lambda,ki}]: the classical factor list with every integer replaced by its q-number.
inline QElement q_matrix_element(const SkewShape& s, const GTTableau& t, int k, int i, Direction dir) {
    if (!is_admissible(s, shifted(s, t, k, i, sign_of(dir)))) return QElement(0);
    auto f = matrix_element_factors(s, t, k, i, dir);
    return evaluate_factors<QElement>(f, [](long x) { return q_number(x); }, element_location(s, t, k, i, dir));
}

/// Value at q = 1 of a reduced element. Throws PoleError if q = 1 is a pole.
inline Rational classical_limit(const QElement& x) { return x.evaluate_at(Rational(1)); }

inline Matrix<Rational> classical_limit(const Matrix<QElement>& m) {
    return m.map<Rational>([](const QElement& x) { return classical_limit(x); });
}

/// q_k = q^{s_k}.
inline QElement q_sub(const SkewShape& s, int k) { return q_power(s.s(k)); }

struct QGeneratorMatrices {
    SkewShape shape;
    std::vector<GTTableau> basis;
    /// e[k], f[k] (e_k^+, e_k^-) for k = 1..m+n-1; index 0 unused.
    std::vector<Matrix<QElement>> e, f;
    /// weight[k][p]: t_k acts on basis vector p by q^{weight[k][p]}.
    std::vector<std::vector<long>> weight;

    std::size_t dim() const { return basis.size(); }
    int rank() const { return shape.m() + shape.n(); }
    int parity(int k) const { return k == shape.m() ? 1 : 0; }

    /// t_k^{power}.
    Matrix<QElement> t(int k, int power = 1) const {
        std::vector<QElement> d;
        for (long w : weight.at(k)) d.push_back(q_power(static_cast<int>(power * w)));
        return Matrix<QElement>::diagonal(d);
    }
};

inline QGeneratorMatrices build_q_generator_matrices(const SkewShape& s) {
    QGeneratorMatrices g{s, enumerate_tableaux(s), {}, {}, {}};
    const std::size_t d = g.dim();
    const int N = g.rank();
    auto idx = index_tableaux(g.basis);
    g.e.assign(N, Matrix<QElement>(d, d));
    g.f.assign(N, Matrix<QElement>(d, d));
    g.weight.assign(N + 1, std::vector<long>(d, 0));
    for (std::size_t col = 0; col < d; ++col) {
        const auto& t = g.basis[col];
        for (int k = 1; k <= N; ++k) g.weight[k][col] = cartan_eigenvalue(s, t, k).to_long();
        for (int k = 1; k < N; ++k)
            for (int i = 1; i <= s.r() + k; ++i)
                for (Direction dir : {Direction::Raise, Direction::Lower}) {
                    auto it = idx.find(shifted(s, t, k, i, sign_of(dir)).rows());
                    if (it == idx.end()) continue;
                    auto& target = dir == Direction::Raise ? g.e[k] : g.f[k];
                    target(it->second, col) = q_matrix_element(s, t, k, i, dir);
                }
    }
    return g;
}

/// [a,b]_c = ab - (-1)^{|a||b|} c ba.
template <class F>
Matrix<F> q_commutator(const Matrix<F>& a, const Matrix<F>& b, int pa, int pb, const F& c) {
    Matrix<F> ba = b * a;
    return a * b - ((pa && pb) ? -c : c) * ba;
}

/// Every q-generator matrix at q = 1 against the classical generator matrices.
inline RelationReport compare_classical_limit(const QGeneratorMatrices& qg, const GeneratorMatrices& g) {
    RelationReport rep;
    rep.add("e_k at q=1", true);
    rep.add("f_k at q=1", true);
    rep.add("t_k weights", true);
    for (int k = 1; k < qg.rank(); ++k) {
        rep.record("e_k at q=1", classical_limit(qg.e[k]) == g.e[k], "k=" + std::to_string(k));
        rep.record("f_k at q=1", classical_limit(qg.f[k]) == g.f[k], "k=" + std::to_string(k));
    }
    for (int k = 1; k <= qg.rank(); ++k)
        for (std::size_t p = 0; p < qg.dim(); ++p)
            rep.record("t_k weights", Rational(qg.weight[k][p]) == g.h[k](p, p), "k=" + std::to_string(k));
    return rep;
}

/// Defining relations of U_q(gl(m|n)) as exact identities over Q(q).
inline RelationReport check_q_relations(const QGeneratorMatrices& g) {
    RelationReport rep;
    const int N = g.rank(), m = g.shape.m();
    const std::size_t d = g.dim();
    const QElement q = q_var(), qi = q.inverse();
    auto at = [](std::string base, int a, int b) { return base + " at (" + std::to_string(a) + "," + std::to_string(b) + ")"; };
    for (const char* n : {"t e t^-1", "t f t^-1", "[e_j,f_k]", "e_m^2 = f_m^2 = 0", "[e_i,e_j] = 0, |i-j|>1", "q-Serre",
                          "quartic Serre"})
        rep.add(n, true);

    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < N; ++j) {
            // q_i^{(eps_i, alpha_j)} with (eps_a, eps_b) = s_a delta_ab
            const int pairing = g.shape.s(i) * ((i == j ? 1 : 0) - (i == j + 1 ? 1 : 0));
            const QElement c = q_power(g.shape.s(i) * pairing);
            rep.record("t e t^-1", g.t(i) * g.e[j] * g.t(i, -1) == c * g.e[j], at("", i, j));
            rep.record("t f t^-1", g.t(i) * g.f[j] * g.t(i, -1) == c.inverse() * g.f[j], at("", i, j));
        }
    for (int j = 1; j < N; ++j)
        for (int k = 1; k < N; ++k) {
            Matrix<QElement> lhs = supercommutator(g.e[j], g.f[k], g.parity(j), g.parity(k));
            Matrix<QElement> rhs(d, d);
            if (j == k) {
                const int sj = g.shape.s(j), sj1 = g.shape.s(j + 1);
                rhs = (g.t(j, sj) * g.t(j + 1, -sj1) - g.t(j, -sj) * g.t(j + 1, sj1));
                rhs = (q_sub(g.shape, j) - q_sub(g.shape, j).inverse()).inverse() * rhs;
            }
            rep.record("[e_j,f_k]", lhs == rhs, at("", j, k));
        }
    if (m >= 1 && m < N)
        rep.record("e_m^2 = f_m^2 = 0", (g.e[m] * g.e[m]).zero() && (g.f[m] * g.f[m]).zero());
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            if (std::abs(i - j) <= 1) continue;
            bool ok = supercommutator(g.e[i], g.e[j], g.parity(i), g.parity(j)).zero() &&
                      supercommutator(g.f[i], g.f[j], g.parity(i), g.parity(j)).zero();
            rep.record("[e_i,e_j] = 0, |i-j|>1", ok, at("", i, j));
        }
    // [x_j,[x_j,x_l]_{q^-1}]_q = 0 for j != m, l = j +- 1
    for (int j = 1; j < N; ++j) {
        if (j == m) continue;
        for (int l : {j - 1, j + 1}) {
            if (l < 1 || l >= N) continue;
            for (const auto* x : {&g.e, &g.f}) {
                const auto& X = *x;
                auto inner = q_commutator(X[j], X[l], g.parity(j), g.parity(l), qi);
                bool ok = q_commutator(X[j], inner, g.parity(j), (g.parity(j) + g.parity(l)) % 2, q).zero();
                rep.record("q-Serre", ok, at(x == &g.e ? "e" : "f", j, l));
            }
        }
    }
    // [[[x_{m-1},x_m]_q,x_{m+1}]_{q^-1},x_m] = 0 when m, n > 1
    if (m >= 2 && m + 1 < N)
        for (const auto* x : {&g.e, &g.f}) {
            const auto& X = *x;
            auto a = q_commutator(X[m - 1], X[m], 0, 1, q);
            auto b = q_commutator(a, X[m + 1], 1, 0, qi);
            rep.record("quartic Serre", supercommutator(b, X[m], 1, 1).zero(), x == &g.e ? "e" : "f");
        }
    return rep;
}

} // namespace skewrep
