#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact field.
 */

#include "skewrep/exactmath/rational.hpp"

#include <algorithm>
#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewrep {

template <class F>
concept ExactField = requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    F(0);
    F(1);
};

/// Three-way comparison used to sort multisets of field elements.
inline int field_compare(const Rational& a, const Rational& b) {
    auto c = a <=> b;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

template <class F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) : Polynomial(F(c)) {}
    Polynomial(const F& c) {
        if (!is_zero(c)) c_.push_back(c);
    }
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { strip(); }

    static Polynomial x() { return Polynomial(std::vector<F>{F(0), F(1)}); }
    static Polynomial monomial(const F& c, int deg) {
        std::vector<F> v(static_cast<std::size_t>(deg) + 1, F(0));
        v.back() = c;
        return Polynomial(std::move(v));
    }
    /// x - a
    static Polynomial linear_root(const F& a) { return Polynomial(std::vector<F>{-a, F(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F(0); }
    F leading() const { return c_.empty() ? F(0) : c_.back(); }

    Polynomial monic() const {
        if (zero()) return *this;
        F lc = leading();
        std::vector<F> v(c_);
        for (auto& x : v) x = x / lc;
        return Polynomial(std::move(v));
    }

    template <class G = F>
    G evaluate(const G& x) const {
        G acc = G(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + G(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> v(c_.size() - 1, F(0));
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * F(static_cast<int>(i));
        return Polynomial(std::move(v));
    }

    /// p(x + s)
    Polynomial shift(const F& s) const {
        Polynomial out;
        Polynomial lin(std::vector<F>{s, F(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * lin + Polynomial(*it);
        return out;
    }

    /// p(c x)
    Polynomial scale(const F& c) const {
        std::vector<F> v(c_);
        F pw = F(1);
        for (auto& x : v) {
            x = x * pw;
            pw = pw * c;
        }
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        strip();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        strip();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<F> v(a.c_);
        for (auto& x : v) x = -x;
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.zero() || b.zero()) return {};
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(v));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.zero()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {Polynomial(), a};
        std::vector<F> r(a.c_);
        std::vector<F> q(a.c_.size() - b.c_.size() + 1, F(0));
        const F lc = b.leading();
        const int db = b.degree();
        for (int i = a.degree(); i >= db; --i) {
            if (is_zero(r[i])) continue;
            F f = r[i] / lc;
            q[i - db] = f;
            for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.c_[j];
        }
        r.resize(db);
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    /// Exact division; throws if b does not divide a.
    friend Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.zero()) throw std::logic_error("polynomial exact division left a remainder");
        return q;
    }

    /// Monic gcd; gcd(0, 0) = 0.
    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend Polynomial pow(const Polynomial& p, int e) {
        if (e < 0) throw std::domain_error("negative polynomial power");
        Polynomial acc(F(1)), b = p;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    /// Lowest index with a nonzero coefficient; 0 for the zero polynomial.
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return static_cast<int>(i);
        return 0;
    }

    /// Divide by x^k; the low coefficients must vanish.
    Polynomial drop_low(int k) const {
        if (k <= 0) return *this;
        for (int i = 0; i < k && i < static_cast<int>(c_.size()); ++i)
            if (!is_zero(c_[i])) throw std::logic_error("drop_low on a nonzero coefficient");
        if (k >= static_cast<int>(c_.size())) return {};
        return Polynomial(std::vector<F>(c_.begin() + k, c_.end()));
    }

    /// Coefficient reversal x^d p(1/x) with d = degree().
    Polynomial reversed(int d) const {
        std::vector<F> v(static_cast<std::size_t>(d) + 1, F(0));
        for (int i = 0; i <= degree(); ++i) v[d - i] = c_[i];
        return Polynomial(std::move(v));
    }

    bool is_squarefree() const {
        if (zero()) throw std::domain_error("squarefree test of the zero polynomial");
        if (degree() == 0) return true;
        return gcd(*this, derivative()).degree() == 0;
    }

    friend int field_compare(const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (int i = a.degree(); i >= 0; --i) {
            int c = field_compare(a.c_[i], b.c_[i]);
            if (c != 0) return c;
        }
        return 0;
    }

    std::string to_string(const std::string& var = "u") const {
        if (zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (is_zero(c_[i])) continue;
            std::string c = coeff_string(c_[i]);
            if (!s.empty()) s += " + ";
            if (i == 0) s += c;
            else {
                if (!(c_[i] == F(1))) s += "(" + c + ")*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    std::vector<F> c_;

    void strip() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    static std::string coeff_string(const F& c) {
        if constexpr (requires { c.to_short_string(); }) return c.to_short_string();
        else return c.to_string("q");
    }
};

template <class F>
bool is_zero(const Polynomial<F>& p) {
    return p.zero();
}

} // namespace skewrep
