#pragma once

/**
 * @file rtt.hpp
 * @brief Y(gl(1|1)) modules given by t_ij(u) matrices: evaluation modules
 * L(a,b) and their tensor products through the coproduct.
 *
 * Tensor basis is lexicographic in the factor-local indices, first factor most
 * significant. (A (x) B)(v (x) w) = (-1)^{|B||v|} Av (x) Bw. The one-dimensional
 * twist that would rescale all d's uniformly is not applied.
 */

#include "skewrep/exactmath.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewrep {

struct Gl11Pair {
    Rational a, b;
};

struct Gl11ModuleSpec {
    std::vector<Gl11Pair> pairs;

    std::size_t k() const { return pairs.size(); }
    /// phi(u) = prod (u + a_i)
    RatPoly phi() const {
        RatPoly p(Rational(1));
        for (const auto& x : pairs) p = p * RatPoly::linear_root(-x.a);
        return p;
    }
    /// psi(u) = prod (u - b_j)
    RatPoly psi() const {
        RatPoly p(Rational(1));
        for (const auto& x : pairs) p = p * RatPoly::linear_root(x.b);
        return p;
    }
    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < pairs.size(); ++i)
            out += (i ? ", (" : "(") + pairs[i].a.to_short_string() + "," + pairs[i].b.to_short_string() + ")";
        return out + "]";
    }
};

struct Gl11SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// a_i + b_j != 0 for all i, j.
inline void validate(const Gl11ModuleSpec& spec) {
    for (std::size_t i = 0; i < spec.k(); ++i)
        for (std::size_t j = 0; j < spec.k(); ++j)
            if ((spec.pairs[i].a + spec.pairs[j].b).is_zero())
                throw Gl11SpecError("a_" + std::to_string(i + 1) + " + b_" + std::to_string(j + 1) + " = 0 for " +
                                    spec.to_string());
}

struct RTTRep {
    /// Parity of each basis vector.
    std::vector<int> parity;
    /// t[i][j] for i, j in {1, 2}; row/column 0 unused.
    std::array<std::array<Matrix<RatFunc>, 3>, 3> t;
    /// Parity of the index i: |1| = 0, |2| = 1 (swapped after a flip).
    std::array<int, 3> index_parity{0, 0, 1};

    std::size_t dim() const { return parity.size(); }
    int t_parity(int i, int j) const { return (index_parity[i] + index_parity[j]) % 2; }
};

/// The trivial module: t_ij = delta_ij.
inline RTTRep trivial_rtt_rep() {
    RTTRep rep;
    rep.parity = {0};
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) rep.t[i][j] = Matrix<RatFunc>::scalar(1, RatFunc(i == j ? 1 : 0));
    return rep;
}

/// Evaluation module of the 2-dimensional gl(1|1)-module with highest weight (a, b).
/// v1 is even of weight (a, b), v2 = e_21 v1 is odd, e_12 v2 = (a + b) v1.
inline RTTRep evaluation_module_gl11(const Rational& a, const Rational& b) {
    if ((a + b).is_zero())
        throw Gl11SpecError("L(" + a.to_short_string() + "," + b.to_short_string() + ") is atypical (a + b = 0)");
    Matrix<Rational> e11(2, 2), e22(2, 2), e12(2, 2), e21(2, 2);
    e11(0, 0) = a;
    e11(1, 1) = a - Rational(1);
    e22(0, 0) = b;
    e22(1, 1) = b + Rational(1);
    e12(0, 1) = a + b;
    e21(1, 0) = Rational(1);
    const std::array<std::array<const Matrix<Rational>*, 3>, 3> e{{{nullptr, nullptr, nullptr},
                                                                  {nullptr, &e11, &e12},
                                                                  {nullptr, &e21, &e22}}};
    const RatFunc inv_u = RatFunc::u().inverse();
    RTTRep rep;
    rep.parity = {0, 1};
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const Rational si(i == 1 ? 1 : -1);
            rep.t[i][j] = e[i][j]->map<RatFunc>([&](const Rational& x) { return RatFunc(si * x) * inv_u; });
            if (i == j) rep.t[i][j] += Matrix<RatFunc>::identity(2);
        }
    return rep;
}

namespace detail {

/// Matrix of A (x) B with the Koszul sign (-1)^{|B| |v|} on input v (x) w.
inline Matrix<RatFunc> graded_kron(const Matrix<RatFunc>& A, const Matrix<RatFunc>& B, int parity_b,
                                   const std::vector<int>& parity_v) {
    const std::size_t n = B.rows();
    Matrix<RatFunc> out(A.rows() * n, A.cols() * n);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (A(i, j).zero()) continue;
            RatFunc a = (parity_b && parity_v[j]) ? -A(i, j) : A(i, j);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (!B(k, l).zero()) out(i * n + k, j * n + l) = a * B(k, l);
        }
    return out;
}

} // namespace detail

/// Delta(t_ij) = sum_k t_ik (x) t_kj.
inline RTTRep tensor(const RTTRep& x, const RTTRep& y) {
    RTTRep out;
    out.index_parity = x.index_parity;
    for (int px : x.parity)
        for (int py : y.parity) out.parity.push_back((px + py) % 2);
    const std::size_t n = out.dim();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            Matrix<RatFunc> acc(n, n);
            for (int k = 1; k <= 2; ++k) acc += detail::graded_kron(x.t[i][k], y.t[k][j], y.t_parity(k, j), x.parity);
            out.t[i][j] = acc;
        }
    return out;
}

inline RTTRep tensor_rep(const Gl11ModuleSpec& spec) {
    validate(spec);
    RTTRep rep = trivial_rtt_rep();
    for (const auto& p : spec.pairs) rep = tensor(rep, evaluation_module_gl11(p.a, p.b));
    return rep;
}

/// The same module seen through t~_ij = t_{3-i,3-j} with the parity sequence swapped.
inline RTTRep parity_flip(const RTTRep& rep) {
    RTTRep out = rep;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) out.t[i][j] = rep.t[3 - i][3 - j];
    out.index_parity = {0, rep.index_parity[2], rep.index_parity[1]};
    return out;
}

inline Matrix<RatFunc> gauss_d1(const RTTRep& rep) { return rep.t[1][1]; }

/// d_2(u) = t_22(u) - t_21(u) t_11(u)^{-1} t_12(u).
inline Matrix<RatFunc> gauss_d2(const RTTRep& rep) {
    Matrix<RatFunc> inv = rep.t[1][1].inverse();   // throws domain_error when singular
    return rep.t[2][2] - rep.t[2][1] * inv * rep.t[1][2];
}

/// Apply f(u) -> f(u + c) to every entry.
inline Matrix<RatFunc> shift_matrix(const Matrix<RatFunc>& m, const Rational& c) {
    return m.map<RatFunc>([&](const RatFunc& f) { return f.shift(c); });
}

} // namespace skewrep
