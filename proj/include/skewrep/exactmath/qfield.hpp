#pragma once

/**
 * @file qfield.hpp
 * @brief The field Q(q) of rational functions in the quantum parameter, and
 * rational functions in u over it.
 */

#include "skewrep/exactmath/matrix.hpp"
#include "skewrep/exactmath/rational_function.hpp"
#include "skewrep/exactmath/series.hpp"

#include <stdexcept>

namespace skewrep {

/// Element of Q(q).
using QElement = RationalFunction<Rational>;
/// Element of Q(q)(u).
using QRatFunc = RationalFunction<QElement>;
using QPoly = Polynomial<QElement>;

inline QElement q_power(int e) {
    if (e >= 0) return QElement(RatPoly::monomial(Rational(1), e));
    return QElement(RatPoly(Rational(1)), RatPoly::monomial(Rational(1), -e));
}

inline QElement q_var() { return q_power(1); }

/// Symmetric q-integer [k] = (q^k - q^{-k}) / (q - q^{-1}).
inline QElement q_number(long k) {
    if (k == 0) return QElement(0);
    const int e = static_cast<int>(k);
    return (q_power(e) - q_power(-e)) / (q_power(1) - q_power(-1));
}

/// Substitute q = q0. Throws PoleError when q0 is a pole.
inline Rational specialize(const QElement& x, const Rational& q0) { return x.evaluate_at(q0); }

/// Substitute q = q0 in every coefficient of a rational function in u.
inline RatFunc specialize(const QRatFunc& f, const Rational& q0) {
    auto map_poly = [&](const QPoly& p) {
        std::vector<Rational> c;
        c.reserve(p.coeffs().size());
        for (const auto& x : p.coeffs()) c.push_back(specialize(x, q0));
        return RatPoly(std::move(c));
    };
    RatPoly d = map_poly(f.den());
    if (d.zero()) throw PoleError("denominator vanishes identically at q = " + q0.to_short_string());
    return RatFunc(map_poly(f.num()), d);
}

inline Matrix<Rational> specialize_matrix(const Matrix<QElement>& m, const Rational& q0) {
    return m.map<Rational>([&](const QElement& x) { return specialize(x, q0); });
}

/// Lift a Q(q) constant into Q(q)(u).
inline QRatFunc lift(const QElement& c) { return QRatFunc(c); }

/// 1 - c u
inline QRatFunc one_minus(const QElement& c) { return QRatFunc(QPoly(std::vector<QElement>{QElement(1), -c})); }

} // namespace skewrep
