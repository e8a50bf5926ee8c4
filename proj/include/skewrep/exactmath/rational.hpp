#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary precision rationals on top of GMP.
 *
 * mpq_class uses expression templates, which do not play well with `auto`
 * in generic code, so the value is wrapped and every operator returns a
 * plain Rational.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skewrep {

class Rational {
public:
    Rational() = default;
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(mpz_class(std::to_string(n))) {}
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Accepts "p", "p/q", with optional sign on p.
    static Rational parse(std::string_view s) {
        auto trim = [](std::string_view t) {
            while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
            while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.remove_suffix(1);
            return t;
        };
        s = trim(s);
        if (s.empty()) throw std::invalid_argument("empty rational literal");
        auto slash = s.find('/');
        auto parse_int = [&](std::string_view t) {
            t = trim(t);
            std::string str(t);
            if (str.empty()) throw std::invalid_argument("malformed rational literal: " + std::string(s));
            std::size_t start = (str[0] == '-' || str[0] == '+') ? 1 : 0;
            if (start == str.size()) throw std::invalid_argument("malformed rational literal: " + std::string(s));
            for (std::size_t i = start; i < str.size(); ++i)
                if (str[i] < '0' || str[i] > '9')
                    throw std::invalid_argument("malformed rational literal: " + std::string(s));
            if (str[0] == '+') str.erase(0, 1);
            return mpz_class(str);
        };
        if (slash == std::string_view::npos) return Rational(parse_int(s));
        mpz_class den = parse_int(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator: " + std::string(s));
        return Rational(parse_int(s.substr(0, slash)), den);
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Always "p/q", including q = 1.
    std::string to_string() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }
    /// "p" for integers, "p/q" otherwise.
    std::string to_short_string() const {
        return is_integer() ? v_.get_num().get_str() : to_string();
    }

    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw std::domain_error("rational is not a machine integer: " + to_string());
        return v_.get_num().get_si();
    }
    double to_double() const { return v_.get_d(); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero rational");
        return Rational(mpq_class(1) / v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_short_string();
    }

private:
    mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational pow(const Rational& base, long e) {
    if (e < 0) return pow(base.inverse(), -e);
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace skewrep
