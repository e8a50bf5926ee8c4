#pragma once

/**
 * @file json.hpp
 * @brief JSON encodings shared by the CLI and the fixtures. Schemas are listed
 * in the README.
 *
 * Rationals are "p/q" strings ("3" when integral). Polynomials are coefficient
 * lists from the constant term up. Q(q) elements are
 * {"num": [...], "den": [...], "qshift": s} meaning q^s num(q)/den(q) with
 * num(0) and den(0) nonzero.
 */

#include "skewrep/gl11.hpp"
#include "skewrep/glrep.hpp"
#include "skewrep/qaffine.hpp"
#include "skewrep/tableaux.hpp"
#include "skewrep/yangian.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace skewrep::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& x) { return x.to_short_string(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw std::invalid_argument("expected a rational string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

inline json to_json(const RatPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

inline json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

/// QElement is the same C++ type as RatFunc, so it gets its own name.
inline json q_json(const QElement& x) {
    const int vn = x.num().valuation(), vd = x.den().valuation();
    return {{"num", to_json(x.num().drop_low(vn))}, {"den", to_json(x.den().drop_low(vd))}, {"qshift", vn - vd}};
}

inline json to_json(const QRatFunc& f) {
    json num = json::array(), den = json::array();
    for (const auto& c : f.num().coeffs()) num.push_back(q_json(c));
    for (const auto& c : f.den().coeffs()) den.push_back(q_json(c));
    return {{"num", num}, {"den", den}};
}

/// Nonzero entries as [row, col, value].
template <class F, class Enc>
json sparse(const Matrix<F>& m, Enc enc) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) out.push_back({i, j, enc(m(i, j))});
    return out;
}

template <class F>
json sparse(const Matrix<F>& m) {
    return sparse(m, [](const F& x) { return to_json(x); });
}

inline json q_sparse(const Matrix<QElement>& m) { return sparse(m, q_json); }

inline json to_json(const SkewShape& s) {
    return {{"m", s.m()}, {"n", s.n()}, {"r", s.r()}, {"lambda", s.lambda()}, {"mu", s.mu()}};
}

inline json to_json(const GTTableau& t) { return {{"bottom", t.bottom()}, {"rows", t.rows()}}; }

inline json to_json(const SSYT& y) { return {{"outer", y.outer}, {"inner", y.inner}, {"filling", y.filling}}; }

inline json to_json(const RelationReport& r) {
    json out = json::array();
    for (const auto& c : r.checks) {
        json e = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        out.push_back(e);
    }
    return out;
}

inline json basis_json(const std::vector<GTTableau>& basis) {
    json out = json::array();
    for (const auto& t : basis) out.push_back(t.rows());
    return out;
}

inline json to_json(const GeneratorMatrices& g) {
    json e = json::array(), f = json::array(), h = json::array();
    for (int k = 1; k < g.rank(); ++k) {
        e.push_back(sparse(g.e[k]));
        f.push_back(sparse(g.f[k]));
    }
    for (int k = 1; k <= g.rank(); ++k) h.push_back(sparse(g.h[k]));
    return {{"dim", g.dim()}, {"basis", basis_json(g.basis)}, {"e", e}, {"f", f}, {"h", h}};
}

inline json to_json(const LWeight& w) {
    json out = json::array();
    for (const auto& c : w.components) out.push_back(to_json(c));
    return out;
}

inline json to_json(const QLWeight& w) {
    json out = json::array();
    for (const auto& c : w.components) out.push_back(to_json(c));
    return out;
}

/// d as one l-weight tuple per basis vector; x_plus[k-1], x_minus[k-1] sparse.
inline json to_json(const CurrentRep& rep) {
    json d = json::array(), xp = json::array(), xm = json::array();
    for (std::size_t p = 0; p < rep.dim(); ++p) d.push_back(to_json(rep.l_weight_of(p)));
    for (int k = 1; k < rep.rank(); ++k) {
        xp.push_back(sparse(rep.x_plus[k]));
        xm.push_back(sparse(rep.x_minus[k]));
    }
    return {{"dim", rep.dim()}, {"basis", basis_json(rep.basis)}, {"d", d}, {"x_plus", xp}, {"x_minus", xm}};
}

/// x^{+-}_{k,a} = amplitude * support^{-a}, both sparse with the same pattern.
inline json to_json(const QCurrentRep& rep) {
    json d = json::array(), x = json::array();
    for (std::size_t p = 0; p < rep.dim(); ++p) d.push_back(to_json(rep.l_weight_of(p)));
    for (int k = 1; k < rep.rank(); ++k)
        x.push_back({{"amplitude_plus", q_sparse(rep.amp_plus[k])},
                     {"support_plus", q_sparse(rep.pole_plus[k])},
                     {"amplitude_minus", q_sparse(rep.amp_minus[k])},
                     {"support_minus", q_sparse(rep.pole_minus[k])}});
    return {{"dim", rep.dim()}, {"basis", basis_json(rep.basis)}, {"d", d}, {"x", x}};
}

inline json to_json(const QCharacter& chi) {
    json out = json::array();
    for (const auto& [w, mult] : chi) out.push_back({{"l_weight", to_json(w)}, {"multiplicity", mult}});
    return out;
}

/// [[a, b], ...] with rational strings or integers.
inline Gl11ModuleSpec gl11_spec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("gl(1|1) spec must be a JSON list of [a, b] pairs");
    Gl11ModuleSpec spec;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw std::invalid_argument("gl(1|1) spec entry must be [a, b]: " + p.dump());
        spec.pairs.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
    }
    return spec;
}

inline json to_json(const Gl11ModuleSpec& spec) {
    json out = json::array();
    for (const auto& p : spec.pairs) out.push_back(json::array({to_json(p.a), to_json(p.b)}));
    return out;
}

} // namespace skewrep::io
