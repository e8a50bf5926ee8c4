#pragma once

/**
 * @file rational_function.hpp
 * @brief Fraction field F(u) in canonical form: gcd(num, den) = 1, den monic.
 */

#include "skewrep/exactmath/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace skewrep {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

template <class F>
class RationalFunction {
public:
    using Poly = Polynomial<F>;
    using Field = F;

    RationalFunction() : num_(), den_(F(1)) {}
    RationalFunction(int c) : num_(F(c)), den_(F(1)) {}
    RationalFunction(const F& c) : num_(c), den_(F(1)) {}
    RationalFunction(const Poly& p) : num_(p), den_(F(1)) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.zero()) throw std::domain_error("rational function with zero denominator");
        normalize();
    }

    static RationalFunction u() { return RationalFunction(Poly::x()); }
    /// u + c
    static RationalFunction linear(const F& c) { return RationalFunction(Poly(std::vector<F>{c, F(1)})); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool zero() const { return num_.zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    F constant_value() const {
        if (!is_constant()) throw std::domain_error("rational function is not constant");
        return num_.coeff(0);
    }

    /// Throws PoleError when x is a root of the denominator.
    template <class G = F>
    G evaluate_at(const G& x) const {
        G d = den_.template evaluate<G>(x);
        if (is_zero(d)) throw PoleError("pole of rational function at evaluation point " + point_string(x));
        return num_.template evaluate<G>(x) / d;
    }

    RationalFunction inverse() const {
        if (zero()) throw std::domain_error("inverse of zero rational function");
        return RationalFunction(den_, num_);
    }

    /// f(u + s)
    RationalFunction shift(const F& s) const { return RationalFunction(num_.shift(s), den_.shift(s)); }
    /// f(c u)
    RationalFunction scale(const F& c) const {
        if (is_zero(c)) throw std::domain_error("scale by zero");
        return RationalFunction(num_.scale(c), den_.scale(c));
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.zero()) return b;
        if (b.zero()) return a;
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.zero() || b.zero()) return {};
        if (a.den_.degree() == 0 && b.den_.degree() == 0) {
            RationalFunction r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend RationalFunction pow(const RationalFunction& f, int e) {
        if (e < 0) return pow(f.inverse(), -e);
        return RationalFunction(pow(f.num_, e), pow(f.den_, e));
    }

    friend int field_compare(const RationalFunction& a, const RationalFunction& b) {
        int c = field_compare(a.num_, b.num_);
        return c != 0 ? c : field_compare(a.den_, b.den_);
    }
    friend bool operator<(const RationalFunction& a, const RationalFunction& b) { return field_compare(a, b) < 0; }

    std::string to_string(const std::string& var = "u") const {
        if (den_.degree() == 0) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    Poly num_;
    Poly den_;

    void normalize() {
        if (num_.zero()) {
            den_ = Poly(F(1));
            return;
        }
        if (den_.degree() > 0) {
            Poly g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        F lc = den_.leading();
        if (!(lc == F(1))) {
            Poly inv(F(1) / lc);
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    template <class G>
    static std::string point_string(const G& x) {
        if constexpr (requires { x.to_short_string(); }) return x.to_short_string();
        else if constexpr (requires { x.to_string(); }) return x.to_string();
        else return "?";
    }
};

template <class F>
bool is_zero(const RationalFunction<F>& f) {
    return f.zero();
}

/// f^e for any integer e; f must be nonzero when e < 0.
template <class F>
RationalFunction<F> pow(const RationalFunction<F>& f, int e) {
    if (e < 0) return RationalFunction<F>(pow(f.den(), -e), pow(f.num(), -e));
    return RationalFunction<F>(pow(f.num(), e), pow(f.den(), e));
}

/// Rational functions in one variable over the rationals.
using RatFunc = RationalFunction<Rational>;
using RatPoly = Polynomial<Rational>;

} // namespace skewrep
