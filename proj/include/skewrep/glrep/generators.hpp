#pragma once

/**
 * @file generators.hpp
 * @brief Matrices of e_k, f_k, e_kk on the GT basis, and the gl(m|n) relation checker.
 *
 * Column j of a generator matrix is the image of basis vector j.
 */

#include "skewrep/exactmath/matrix.hpp"
#include "skewrep/glrep/matrix_element.hpp"

#include <string>
#include <vector>

namespace skewrep {

struct GeneratorMatrices {
    SkewShape shape;
    std::vector<GTTableau> basis;
    /// e[k], f[k] for k = 1..m+n-1 and h[k] for k = 1..m+n; index 0 unused.
    std::vector<Matrix<Rational>> e, f, h;

    std::size_t dim() const { return basis.size(); }
    int rank() const { return shape.m() + shape.n(); }
    /// Z/2 degree of e_k and f_k.
    int parity(int k) const { return k == shape.m() ? 1 : 0; }
};

inline GeneratorMatrices build_generator_matrices(const SkewShape& s) {
    GeneratorMatrices g{s, enumerate_tableaux(s), {}, {}, {}};
    const std::size_t d = g.dim();
    const int N = s.m() + s.n();
    auto idx = index_tableaux(g.basis);
    g.e.assign(N, Matrix<Rational>(d, d));
    g.f.assign(N, Matrix<Rational>(d, d));
    g.h.assign(N + 1, Matrix<Rational>(d, d));
    for (std::size_t col = 0; col < d; ++col) {
        const auto& t = g.basis[col];
        for (int k = 1; k <= N; ++k) g.h[k](col, col) = cartan_eigenvalue(s, t, k);
        for (int k = 1; k < N; ++k)
            for (int i = 1; i <= s.r() + k; ++i)
                for (Direction dir : {Direction::Raise, Direction::Lower}) {
                    auto it = idx.find(shifted(s, t, k, i, sign_of(dir)).rows());
                    if (it == idx.end()) continue;
                    auto& target = dir == Direction::Raise ? g.e[k] : g.f[k];
                    target(it->second, col) = matrix_element(s, t, k, i, dir).value;
                }
    }
    return g;
}

struct RelationCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    /// Merge consecutive results under one name.
    void record(const std::string& name, bool pass, const std::string& detail = {}) {
        for (auto& c : checks)
            if (c.name == name) {
                if (!pass && c.pass) {
                    c.pass = false;
                    c.detail = detail;
                }
                return;
            }
        add(name, pass, detail);
    }
};

/// Defining relations of gl(m|n) in Chevalley form, as exact matrix identities.
inline RelationReport check_superalgebra_relations(const GeneratorMatrices& g) {
    RelationReport rep;
    const int N = g.rank(), m = g.shape.m();
    const std::size_t d = g.dim();
    const Matrix<Rational> zero(d, d);
    auto name = [](std::string base, int a, int b) { return base + "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };

    for (int k = 1; k < N; ++k)
        for (int l = 1; l < N; ++l) {
            Matrix<Rational> lhs = supercommutator(g.e[k], g.f[l], g.parity(k), g.parity(l));
            Matrix<Rational> rhs = zero;
            if (k == l) {
                // h_k - s_k s_{k+1} h_{k+1}
                int ss = g.shape.s(k) * g.shape.s(k + 1);
                rhs = ss == 1 ? g.h[k] - g.h[k + 1] : g.h[k] + g.h[k + 1];
            }
            rep.record("[e_k,f_l]", lhs == rhs, name("[e,f] at ", k, l));
        }
    for (int j = 1; j <= N; ++j)
        for (int k = 1; k < N; ++k) {
            Rational c = Rational((j == k ? 1 : 0) - (j == k + 1 ? 1 : 0));
            rep.record("[h_j,e_k]", supercommutator(g.h[j], g.e[k], 0, 0) == c * g.e[k], name("[h,e] at ", j, k));
            rep.record("[h_j,f_k]", supercommutator(g.h[j], g.f[k], 0, 0) == (-c) * g.f[k], name("[h,f] at ", j, k));
        }
    for (int j = 1; j <= N; ++j)
        for (int k = 1; k <= N; ++k) rep.record("[h_j,h_k]", (g.h[j] * g.h[k] - g.h[k] * g.h[j]).zero(), name("[h,h] at ", j, k));
    if (m >= 1 && m < N) {
        rep.record("e_m^2", (g.e[m] * g.e[m]).zero());
        rep.record("f_m^2", (g.f[m] * g.f[m]).zero());
    }
    for (int k = 1; k < N; ++k)
        for (int l = 1; l < N; ++l) {
            if (std::abs(k - l) <= 1) continue;
            rep.record("[e_k,e_l] far", supercommutator(g.e[k], g.e[l], g.parity(k), g.parity(l)).zero(), name("", k, l));
            rep.record("[f_k,f_l] far", supercommutator(g.f[k], g.f[l], g.parity(k), g.parity(l)).zero(), name("", k, l));
        }
    // cubic Serre at even nodes
    for (int k = 1; k < N; ++k) {
        if (k == m) continue;
        for (int l : {k - 1, k + 1}) {
            if (l < 1 || l >= N) continue;
            auto serre = [&](const std::vector<Matrix<Rational>>& x) {
                auto inner = supercommutator(x[k], x[l], g.parity(k), g.parity(l));
                return supercommutator(x[k], inner, g.parity(k), (g.parity(k) + g.parity(l)) % 2).zero();
            };
            rep.record("Serre e", serre(g.e), name("", k, l));
            rep.record("Serre f", serre(g.f), name("", k, l));
        }
    }
    // quartic Serre around the odd node
    if (m >= 2 && m + 1 < N) {
        auto quartic = [&](const std::vector<Matrix<Rational>>& x) {
            auto a = supercommutator(x[m - 1], x[m], 0, 1);
            auto b = supercommutator(a, x[m + 1], 1, 0);
            return supercommutator(b, x[m], 1, 1).zero();
        };
        rep.record("quartic Serre e", quartic(g.e));
        rep.record("quartic Serre f", quartic(g.f));
    }
    return rep;
}

} // namespace skewrep
