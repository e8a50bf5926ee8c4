#pragma once

/**
 * @file shape.hpp
 * @brief Skew shapes (m, n, r, lambda, mu).
 *
 * m' = r + m. lambda is a covariant weight of gl(m'|n) (length r+m+n) and mu a
 * covariant weight of gl(r) (length r). k' = r + k throughout.
 */

#include "skewrep/tableaux/partition.hpp"
#include "skewrep/tableaux/ssyt.hpp"

namespace skewrep {

class SkewShape {
public:
    /// Validates covariance and hook containment; throws InvalidShape.
    static SkewShape make(int m, int n, int r, Weight lambda, Weight mu) {
        SkewShape s = unchecked(m, n, r, std::move(lambda), std::move(mu));
        if (auto v = covariance_violation(s.lambda_, s.mprime(), n)) throw InvalidShape("lambda " + *v);
        if (auto v = covariance_violation(s.mu_, r, 0)) throw InvalidShape("mu " + *v);
        if (!partition_contains(s.outer(), s.inner()))
            throw InvalidShape("hook diagram of mu " + weight_string(s.mu_) + " is not contained in that of lambda " +
                               weight_string(s.lambda_) + "; the skew module is zero");
        if (!skew_ssyt_exists(s.outer(), s.inner(), m, n))
            throw InvalidShape("no (" + std::to_string(m) + "|" + std::to_string(n) + ")-semistandard filling of " +
                               "the skew diagram exists; the skew module is zero");
        return s;
    }

    /// Dimension checks only. Used by oracles that need to look at zero modules.
    static SkewShape unchecked(int m, int n, int r, Weight lambda, Weight mu) {
        if (m < 0 || n < 0 || r < 0) throw InvalidShape("m, n, r must be nonnegative");
        if (m + n < 1) throw InvalidShape("m + n must be at least 1");
        if (static_cast<int>(lambda.size()) != r + m + n)
            throw InvalidShape("lambda must have length r+m+n = " + std::to_string(r + m + n));
        if (static_cast<int>(mu.size()) != r) throw InvalidShape("mu must have length r = " + std::to_string(r));
        SkewShape s;
        s.m_ = m;
        s.n_ = n;
        s.r_ = r;
        s.lambda_ = std::move(lambda);
        s.mu_ = std::move(mu);
        return s;
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int r() const { return r_; }
    int mprime() const { return r_ + m_; }
    /// GT row index of the top row, r + m + n.
    int top() const { return r_ + m_ + n_; }
    const Weight& lambda() const { return lambda_; }
    const Weight& mu() const { return mu_; }

    /// Parity sign s_k = 1 for k <= m, -1 otherwise (k = 1..m+n).
    int s(int k) const { return k <= m_ ? 1 : -1; }

    Partition outer() const { return hook_diagram(lambda_, mprime(), n_); }
    Partition inner() const { return hook_diagram(mu_, r_, 0); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

    std::string to_string() const {
        return "(m,n,r)=(" + std::to_string(m_) + "," + std::to_string(n_) + "," + std::to_string(r_) +
               ") lambda=" + weight_string(lambda_) + " mu=" + weight_string(mu_);
    }

private:
    SkewShape() = default;
    int m_ = 0, n_ = 0, r_ = 0;
    Weight lambda_, mu_;
};

/// Every nonzero skew shape with the given (m, n, r) and |lambda| <= max_size.
inline std::vector<SkewShape> all_skew_shapes(int m, int n, int r, int max_size) {
    std::vector<SkewShape> out;
    for (const auto& lambda : covariant_weights(r + m, n, max_size))
        for (const auto& mu : covariant_weights(r, 0, max_size)) {
            try {
                out.push_back(SkewShape::make(m, n, r, lambda, mu));
            } catch (const InvalidShape&) {
            }
        }
    return out;
}

} // namespace skewrep
