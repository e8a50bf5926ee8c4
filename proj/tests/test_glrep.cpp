#include "skewrep/glrep.hpp"

#include <catch_amalgamated.hpp>

using namespace skewrep;

namespace {

GTTableau two_rows(std::vector<int> top, std::vector<int> bottom) { return GTTableau(0, {{}, bottom, top}); }

Matrix<Rational> mat2(long a, long b, long c, long d) {
    Matrix<Rational> m(2, 2);
    m(0, 0) = Rational(a);
    m(0, 1) = Rational(b);
    m(1, 0) = Rational(c);
    m(1, 1) = Rational(d);
    return m;
}

using Triple = std::tuple<int, int, int>;

} // namespace

TEST_CASE("cartan eigenvalues", "[glrep]") {
    auto s = SkewShape::make(1, 1, 0, {1, 0}, {});
    REQUIRE(cartan_eigenvalue(s, two_rows({1, 0}, {1}), 1) == Rational(1));
    REQUIRE(cartan_eigenvalue(s, two_rows({1, 0}, {1}), 2) == Rational(0));
    REQUIRE(cartan_eigenvalue(s, two_rows({1, 0}, {0}), 1) == Rational(0));
    REQUIRE(cartan_eigenvalue(s, two_rows({1, 0}, {0}), 2) == Rational(1));
    auto z = SkewShape::make(1, 1, 0, {0, 0}, {});
    REQUIRE(cartan_eigenvalue(z, two_rows({0, 0}, {0}), 1) == Rational(0));
    REQUIRE_THROWS_AS(cartan_eigenvalue(s, two_rows({1, 0}, {0}), 3), std::out_of_range);
}

TEST_CASE("matrix element examples", "[glrep]") {
    auto s = SkewShape::make(1, 1, 0, {1, 0}, {});
    REQUIRE(matrix_element(s, two_rows({1, 0}, {0}), 1, 1, Direction::Raise).value == Rational(1));
    REQUIRE(matrix_element(s, two_rows({1, 0}, {1}), 1, 1, Direction::Lower).value == Rational(1));
    // target (1,0)/(2) violates A(2)
    REQUIRE(matrix_element(s, two_rows({1, 0}, {1}), 1, 1, Direction::Raise).value == Rational(0));
}

TEST_CASE("generator matrices of the gl(1|1) vector representation", "[glrep]") {
    auto g = build_generator_matrices(SkewShape::make(1, 1, 0, {1, 0}, {}));
    REQUIRE(g.e[1] == mat2(0, 1, 0, 0));
    REQUIRE(g.f[1] == mat2(0, 0, 1, 0));
    REQUIRE(check_superalgebra_relations(g).all_pass());
    REQUIRE((g.e[1] * g.e[1]).zero());
}

TEST_CASE("trivial shape", "[glrep]") {
    auto g = build_generator_matrices(SkewShape::make(1, 1, 0, {0, 0}, {}));
    REQUIRE(g.dim() == 1);
    REQUIRE(g.e[1].zero());
    REQUIRE(g.f[1].zero());
    REQUIRE(g.h[1].zero());
    REQUIRE(g.h[2].zero());
    REQUIRE(check_superalgebra_relations(g).all_pass());
}

TEST_CASE("pure even gl(2) reduction", "[glrep]") {
    // L(2,1) of gl(2) is 2-dimensional: h_1 - h_2 = diag(1, -1) and [e,f] = h_1 - h_2
    auto g = build_generator_matrices(SkewShape::make(2, 0, 0, {2, 1}, {}));
    REQUIRE(g.dim() == 2);
    REQUIRE(g.e[1] * g.f[1] - g.f[1] * g.e[1] == g.h[1] - g.h[2]);
    REQUIRE(g.h[1] - g.h[2] == mat2(1, 0, 0, -1));
    // gl(3) adjoint-type module of dimension 8 with the standard dimension formula
    auto g3 = build_generator_matrices(SkewShape::make(3, 0, 0, {2, 1, 0}, {}));
    REQUIRE(g3.dim() == 8);
    REQUIRE(check_superalgebra_relations(g3).all_pass());
}

TEST_CASE("gl(1|1) with lambda = (2,1)", "[glrep]") {
    auto g = build_generator_matrices(SkewShape::make(1, 1, 0, {2, 1}, {}));
    REQUIRE(g.dim() == 2);
    REQUIRE(check_superalgebra_relations(g).all_pass());
}

TEST_CASE("superalgebra relations on all small shapes", "[glrep]") {
    for (auto [m, n, r] : std::vector<Triple>{{1, 1, 0}, {1, 1, 1}, {2, 1, 0}, {1, 2, 0}, {2, 1, 1}, {1, 2, 1},
                                              {2, 2, 0}, {0, 2, 1}, {0, 2, 0}, {3, 0, 0}, {2, 0, 1}, {0, 3, 0}}) {
        for (const auto& s : all_skew_shapes(m, n, r, 4)) {
            INFO(s.to_string());
            auto rep = check_superalgebra_relations(build_generator_matrices(s));
            for (const auto& c : rep.checks) {
                INFO(c.name << " " << c.detail);
                REQUIRE(c.pass);
            }
        }
    }
}

TEST_CASE("nonvanishing on admissible transitions", "[glrep]") {
    for (auto [m, n, r] : std::vector<Triple>{{1, 1, 0}, {1, 1, 1}, {2, 1, 0}, {1, 2, 0}, {2, 1, 1}, {2, 2, 0}, {1, 1, 2}}) {
        for (const auto& s : all_skew_shapes(m, n, r, 5)) {
            auto basis = enumerate_tableaux(s);
            auto idx = index_tableaux(basis);
            for (const auto& t : basis)
                for (int k = 1; k < m + n; ++k)
                    for (int i = 1; i <= r + k; ++i)
                        for (Direction dir : {Direction::Raise, Direction::Lower}) {
                            if (!idx.count(shifted(s, t, k, i, sign_of(dir)).rows())) continue;
                            INFO(element_location(s, t, k, i, dir));
                            REQUIRE(!matrix_element(s, t, k, i, dir).value.is_zero());
                        }
        }
    }
}

TEST_CASE("zero-factor cancellation and the hard error", "[glrep]") {
    FactorList f;
    f.num = {0, 2};
    f.den = {0, 4};
    REQUIRE(evaluate_factors<Rational>(f, [](long x) { return Rational(x); }, "test") == Rational(1, 2));
    f.den = {0, 0};
    REQUIRE_THROWS_AS(evaluate_factors<Rational>(f, [](long x) { return Rational(x); }, "test"), NonvanishingViolation);
    f.den = {3};
    REQUIRE(evaluate_factors<Rational>(f, [](long x) { return Rational(x); }, "test") == Rational(0));
    f.num = {2};
    f.sign_exponent = 3;
    REQUIRE(evaluate_factors<Rational>(f, [](long x) { return Rational(x); }, "test") == Rational(-2, 3));
    f.gates = {1, 0};
    REQUIRE(evaluate_factors<Rational>(f, [](long x) { return Rational(x); }, "test") == Rational(0));
}

TEST_CASE("a corrupted generator fails the relation check", "[glrep]") {
    auto g = build_generator_matrices(SkewShape::make(1, 2, 0, {2, 1, 0}, {}));
    REQUIRE(check_superalgebra_relations(g).all_pass());
    g.e[2] = Rational(2) * g.e[2];
    REQUIRE(!check_superalgebra_relations(g).all_pass());
}
