#pragma once

/**
 * @file structure.hpp
 * @brief Thinness, irreducibility with a spanning-tree certificate, q-characters.
 */

#include "skewrep/yangian/currents.hpp"

#include <map>
#include <vector>

namespace skewrep {

using QCharacter = std::map<LWeight, int>;

inline std::vector<LWeight> l_weights(const CurrentRep& rep) {
    std::vector<LWeight> out;
    for (std::size_t p = 0; p < rep.dim(); ++p) out.push_back(rep.l_weight_of(p));
    return out;
}

inline QCharacter q_character(const std::vector<LWeight>& weights) {
    QCharacter chi;
    for (const auto& w : weights) ++chi[w];
    return chi;
}

inline QCharacter q_character(const CurrentRep& rep) { return q_character(l_weights(rep)); }

/// Pairwise distinct l-weights, compared as canonical rational functions.
inline bool is_thin(const std::vector<LWeight>& weights) {
    auto chi = q_character(weights);
    return chi.size() == weights.size();
}

inline bool is_thin(const CurrentRep& rep) { return is_thin(l_weights(rep)); }

struct IrreducibilityResult {
    bool irreducible = false;
    bool thin = false;
    bool connected = false;
    /// Edges p -> q with x+_k(q,p) != 0 and x-_k(p,q) != 0 forming a spanning tree.
    std::vector<TransformationEdge> certificate;
};

/// Thin and connected through transitions where both currents act nontrivially.
inline IrreducibilityResult is_irreducible(const CurrentRep& rep) {
    IrreducibilityResult res;
    res.thin = is_thin(rep);
    TransformationGraph g;
    g.vertices = rep.dim();
    for (int k = 1; k < rep.rank(); ++k)
        for (std::size_t p = 0; p < rep.dim(); ++p)
            for (std::size_t q = 0; q < rep.dim(); ++q) {
                if (rep.x_plus[k](q, p).zero() || rep.x_minus[k](p, q).zero()) continue;
                int i = 0;
                const auto& a = rep.basis[p];
                const auto& b = rep.basis[q];
                const int row = rep.shape.r() + k;
                if (a.rows().size() == b.rows().size())
                    for (int j = 1; j <= row; ++j)
                        if (b(row, j) == a(row, j) + 1) i = j;
                g.edges.push_back({p, q, k, i});
            }
    compute_connectivity(g);
    res.connected = g.connected;
    for (auto e : g.spanning_tree) res.certificate.push_back(g.edges[e]);
    res.irreducible = res.thin && res.connected;
    return res;
}

/// Basis vectors annihilated by every x+_k.
inline std::vector<std::size_t> highest_vectors(const CurrentRep& rep) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < rep.dim(); ++p) {
        bool killed = true;
        for (int k = 1; k < rep.rank() && killed; ++k)
            for (std::size_t q = 0; q < rep.dim(); ++q)
                if (!rep.x_plus[k](q, p).zero()) killed = false;
        if (killed) out.push_back(p);
    }
    return out;
}

/// Block-diagonal sum of two current representations on the concatenated basis.
inline CurrentRep direct_sum(const CurrentRep& a, const CurrentRep& b) {
    CurrentRep out{a.shape, a.basis, a.d, {}, {}};
    out.basis.insert(out.basis.end(), b.basis.begin(), b.basis.end());
    const std::size_t n = a.dim() + b.dim();
    for (int k = 1; k <= a.rank(); ++k) out.d[k].insert(out.d[k].end(), b.d[k].begin(), b.d[k].end());
    auto block = [&](const Matrix<RatFunc>& x, const Matrix<RatFunc>& y) {
        Matrix<RatFunc> z(n, n);
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) z(i, j) = x(i, j);
        for (std::size_t i = 0; i < y.rows(); ++i)
            for (std::size_t j = 0; j < y.cols(); ++j) z(a.dim() + i, a.dim() + j) = y(i, j);
        return z;
    };
    out.x_plus.assign(a.rank(), Matrix<RatFunc>(n, n));
    out.x_minus.assign(a.rank(), Matrix<RatFunc>(n, n));
    for (int k = 1; k < a.rank(); ++k) {
        out.x_plus[k] = block(a.x_plus[k], b.x_plus[k]);
        out.x_minus[k] = block(a.x_minus[k], b.x_minus[k]);
    }
    return out;
}

} // namespace skewrep
