#pragma once

/**
 * @file series.hpp
 * @brief Truncated expansions of rational functions at u = infinity or u = 0.
 *
 * At infinity the coefficient list is in powers of u^{-1}; at zero, in powers of u.
 */

#include "skewrep/exactmath/rational_function.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace skewrep {

enum class ExpansionPoint { AtInfinity, AtZero };

inline std::string to_string(ExpansionPoint p) { return p == ExpansionPoint::AtInfinity ? "infinity" : "zero"; }

template <class F>
struct TruncatedSeries {
    ExpansionPoint point = ExpansionPoint::AtInfinity;
    /// Coefficients c_0 .. c_order.
    std::vector<F> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    F operator[](int i) const { return (i >= 0 && i <= order()) ? coeffs[i] : F(0); }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.point == b.point && a.coeffs == b.coeffs;
    }
};

namespace detail {

/// Power series quotient a/b mod w^order; b(0) must be nonzero.
template <class F>
std::vector<F> power_series_divide(const Polynomial<F>& a, const Polynomial<F>& b, int order) {
    std::vector<F> out(order, F(0));
    const F b0 = b.coeff(0);
    for (int n = 0; n < order; ++n) {
        F acc = a.coeff(n);
        for (int j = 1; j <= n && j <= b.degree(); ++j) acc = acc - b.coeff(j) * out[n - j];
        out[n] = acc / b0;
    }
    return out;
}

} // namespace detail

/// Throws PoleError if f has a pole at the expansion point.
template <class F>
TruncatedSeries<F> series_expand(const RationalFunction<F>& f, ExpansionPoint at, int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    TruncatedSeries<F> s;
    s.point = at;
    if (at == ExpansionPoint::AtZero) {
        if (is_zero(f.den().coeff(0))) throw PoleError("rational function has a pole at u = 0");
        s.coeffs = detail::power_series_divide(f.num(), f.den(), order + 1);
        return s;
    }
    const int d = f.den().degree();
    if (f.num().degree() > d) throw PoleError("rational function has a pole at u = infinity");
    // f(1/w) = w^d num(1/w) / (w^d den(1/w))
    Polynomial<F> n = f.num().zero() ? Polynomial<F>() : f.num().reversed(d);
    Polynomial<F> dd = f.den().reversed(d);
    s.coeffs = detail::power_series_divide(n, dd, order + 1);
    return s;
}

} // namespace skewrep
