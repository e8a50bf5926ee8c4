#include "skewrep/tableaux.hpp"

#include <catch_amalgamated.hpp>

using namespace skewrep;

namespace {

GTTableau two_rows(std::vector<int> top, std::vector<int> bottom) { return GTTableau(0, {{}, bottom, top}); }

} // namespace

TEST_CASE("hook diagrams", "[tableaux]") {
    REQUIRE(hook_diagram({2, 1}, 1, 1) == Partition{2, 1});
    REQUIRE(hook_diagram({0, 0}, 1, 1).empty());
    REQUIRE(hook_diagram({3, 0}, 1, 1) == Partition{3});
    // gl(2|2), beta = (3,2,2,1): rows 3,2 then columns of heights 4 and 3
    REQUIRE(hook_diagram({3, 2, 2, 1}, 2, 2) == Partition{3, 2, 2, 1});
    // pure odd: conjugate partition
    REQUIRE(hook_diagram({2, 1}, 0, 2) == Partition{2, 1});
    REQUIRE(hook_diagram({3, 1}, 0, 2) == Partition{2, 1, 1});
    REQUIRE(hook_diagram({1, 2}, 1, 1) == Partition{1, 1, 1});
    REQUIRE_THROWS_AS(hook_diagram({0, 1}, 1, 1), InvalidShape);
}

TEST_CASE("covariance violations are named", "[tableaux]") {
    REQUIRE(covariance_violation({1, 2}, 1, 1).has_value() == false);
    REQUIRE(covariance_violation({0, 1}, 1, 1).has_value());
    REQUIRE(covariance_violation({1, 2}, 2, 0).has_value());
    REQUIRE(!covariance_violation({2, 1, 0}, 1, 2).has_value());
    REQUIRE(covariance_violation({2, 0, 1}, 1, 2)->find("odd part") != std::string::npos);
}

TEST_CASE("shape validation", "[tableaux]") {
    REQUIRE_NOTHROW(SkewShape::make(1, 1, 0, {1, 0}, {}));
    REQUIRE_THROWS_AS(SkewShape::make(1, 1, 0, {1}, {}), InvalidShape);
    REQUIRE_THROWS_AS(SkewShape::make(1, 1, 0, {0, 1}, {}), InvalidShape);
    // mu not contained in lambda
    REQUIRE_THROWS_AS(SkewShape::make(1, 1, 1, {1, 0, 0}, {2}), InvalidShape);
    // contained, but a one-row skew strip of length 3 cannot be filled with a single odd letter
    REQUIRE_THROWS_AS(SkewShape::make(0, 1, 1, {3, 0}, {0}), InvalidShape);
}

TEST_CASE("admissibility examples", "[tableaux]") {
    auto s = SkewShape::make(1, 1, 0, {1, 0}, {});
    REQUIRE(is_admissible(s, two_rows({1, 0}, {1})));
    REQUIRE(is_admissible(s, two_rows({1, 0}, {0})));
    auto v = admissibility_violation(s, two_rows({1, 0}, {2}));
    REQUIRE(v.has_value());
    REQUIRE(v->condition == 2);
    auto z = SkewShape::make(1, 1, 0, {0, 0}, {});
    REQUIRE(is_admissible(z, two_rows({0, 0}, {0})));
    REQUIRE_THROWS_AS(admissibility_violation(s, GTTableau(0, {{}, {1}})), std::invalid_argument);
}

TEST_CASE("A(3) literal reading disagrees with the SSYT count", "[tableaux]") {
    // lambda = (1,1) for gl(1|1): the hook diagram is a column of two boxes,
    // fillable as (1,2) or (2,2), so the module has dimension 2.
    auto s = SkewShape::make(1, 1, 0, {1, 1}, {});
    REQUIRE(count_ssyt(s.outer(), s.inner(), 1, 1) == 2);
    REQUIRE(enumerate_tableaux(s, A3Reading::Corrected).size() == 2);
    auto literal = enumerate_tableaux_brute_force(s, A3Reading::Literal);
    REQUIRE(literal.empty());
    auto v = admissibility_violation(s, two_rows({1, 1}, {1}), A3Reading::Literal);
    REQUIRE(v.has_value());
    REQUIRE(v->condition == 3);
    REQUIRE(v->row == 2);
}

TEST_CASE("enumeration examples", "[tableaux]") {
    REQUIRE(enumerate_tableaux(SkewShape::make(1, 1, 0, {1, 0}, {})).size() == 2);
    REQUIRE(enumerate_tableaux(SkewShape::make(1, 1, 0, {2, 1}, {})).size() == 2);
    REQUIRE(enumerate_tableaux(SkewShape::make(1, 1, 0, {0, 0}, {})).size() == 1);
    auto basis = enumerate_tableaux(SkewShape::make(1, 1, 0, {1, 0}, {}));
    REQUIRE(basis[0].row(1) == std::vector<int>{1});
    REQUIRE(basis[1].row(1) == std::vector<int>{0});
    // gl(3): dim of L(2,1,0) is 8
    REQUIRE(enumerate_tableaux(SkewShape::make(3, 0, 0, {2, 1, 0}, {})).size() == 8);
    // gl(1|2) vector representation has dimension 3
    REQUIRE(enumerate_tableaux(SkewShape::make(1, 2, 0, {1, 0, 0}, {})).size() == 3);
}

TEST_CASE("backtracking agrees with the brute-force filter", "[tableaux]") {
    for (auto [m, n, r] : std::vector<std::tuple<int, int, int>>{
             {1, 1, 0}, {1, 1, 1}, {2, 1, 0}, {1, 2, 0}, {2, 1, 1}, {2, 2, 0}, {0, 2, 1}, {3, 0, 0}, {0, 3, 0}}) {
        for (const auto& s : all_skew_shapes(m, n, r, 4)) {
            INFO(s.to_string());
            auto a = enumerate_tableaux(s);
            auto b = enumerate_tableaux_brute_force(s);
            REQUIRE(a == b);
        }
    }
}

TEST_CASE("GT count equals the SSYT count", "[tableaux]") {
    for (auto [m, n, r] : std::vector<std::tuple<int, int, int>>{
             {1, 1, 0}, {1, 1, 1}, {2, 1, 0}, {1, 2, 0}, {2, 1, 1}, {2, 2, 0}, {0, 2, 1}, {1, 0, 2}, {0, 2, 0}}) {
        for (const auto& s : all_skew_shapes(m, n, r, 5)) {
            INFO(s.to_string());
            REQUIRE(enumerate_tableaux(s).size() == count_ssyt(s.outer(), s.inner(), m, n));
        }
    }
}

TEST_CASE("contents", "[tableaux]") {
    auto s = SkewShape::make(1, 1, 0, {1, 0}, {});
    auto c = content_table(s, two_rows({1, 0}, {1}));
    REQUIRE(c(1, 1) == 1);
    REQUIRE(c(2, 1) == 1);
    REQUIRE(c(2, 2) == 0);
    REQUIRE(content_table(s, two_rows({1, 0}, {0}))(1, 1) == 0);
    auto s2 = SkewShape::make(1, 1, 2, {1, 0, 0, 0}, {0, 0});
    for (const auto& t : enumerate_tableaux(s2)) REQUIRE(content(s2, t, 1, 1) == t(3, 1) + 2);
}

TEST_CASE("even contents strictly decrease", "[tableaux]") {
    for (auto [m, n, r] : std::vector<std::tuple<int, int, int>>{{2, 1, 0}, {2, 2, 0}, {2, 1, 1}, {1, 1, 2}}) {
        for (const auto& s : all_skew_shapes(m, n, r, 5))
            for (const auto& t : enumerate_tableaux(s))
                for (int k = 0; k <= m + n; ++k)
                    for (int i = 1; i < std::min(r + k, s.mprime()); ++i) REQUIRE(content(s, t, k, i) > content(s, t, k, i + 1));
    }
}

TEST_CASE("insertion examples", "[tableaux]") {
    auto s = SkewShape::make(1, 1, 0, {2, 1}, {});
    auto y = tableau_to_ssyt(s, two_rows({2, 1}, {2}));
    REQUIRE(y.filling == std::vector<std::vector<int>>{{1, 1}, {2}});
    auto y2 = tableau_to_ssyt(s, two_rows({2, 1}, {1}));
    REQUIRE(y2.filling == std::vector<std::vector<int>>{{1, 2}, {2}});
    auto z = SkewShape::make(1, 1, 0, {0, 0}, {});
    REQUIRE(tableau_to_ssyt(z, two_rows({0, 0}, {0})).filling.empty());
}

TEST_CASE("non-semistandard fillings are rejected", "[tableaux]") {
    auto s = SkewShape::make(1, 1, 0, {2, 1}, {});
    SSYT bad{{2, 1}, {}, {{2, 1}, {2}}};
    REQUIRE_THROWS_AS(ssyt_to_tableau(s, bad), NotSemistandard);
    SSYT odd_row{{2, 1}, {}, {{2, 2}, {2}}};
    REQUIRE_THROWS_AS(ssyt_to_tableau(s, odd_row), NotSemistandard);
}

TEST_CASE("bijection round trips", "[tableaux]") {
    for (auto [m, n, r] : std::vector<std::tuple<int, int, int>>{
             {1, 1, 0}, {1, 1, 1}, {2, 1, 0}, {1, 2, 0}, {2, 1, 1}, {2, 2, 0}, {0, 2, 1}, {1, 2, 1}}) {
        for (const auto& s : all_skew_shapes(m, n, r, 5)) {
            INFO(s.to_string());
            auto basis = enumerate_tableaux(s);
            std::vector<SSYT> images;
            for (const auto& t : basis) {
                auto y = tableau_to_ssyt(s, t);
                REQUIRE(ssyt_to_tableau(s, y) == t);
                images.push_back(y);
            }
            // image is exactly the set of semistandard fillings
            auto all = enumerate_ssyt(s.outer(), s.inner(), m, n);
            REQUIRE(all.size() == images.size());
            for (const auto& y : all) REQUIRE(std::find(images.begin(), images.end(), y) != images.end());
        }
    }
}

TEST_CASE("transformation graph", "[tableaux]") {
    auto g = transformation_graph(SkewShape::make(1, 1, 0, {1, 0}, {}));
    REQUIRE(g.vertices == 2);
    REQUIRE(g.edges.size() == 1);
    REQUIRE(g.connected);
    auto g0 = transformation_graph(SkewShape::make(1, 1, 0, {0, 0}, {}));
    REQUIRE(g0.vertices == 1);
    REQUIRE(g0.edges.empty());
    REQUIRE(g0.connected);
    for (auto [m, n, r] : std::vector<std::tuple<int, int, int>>{
             {1, 1, 0}, {1, 1, 1}, {2, 1, 0}, {1, 2, 0}, {2, 1, 1}, {2, 2, 0}, {1, 1, 2}, {2, 2, 1}}) {
        for (const auto& s : all_skew_shapes(m, n, r, 6)) {
            INFO(s.to_string());
            auto gr = transformation_graph(s);
            REQUIRE(gr.connected);
            REQUIRE(gr.spanning_tree.size() + 1 == gr.vertices);
        }
    }
}

TEST_CASE("a graph with two components is reported disconnected", "[tableaux]") {
    TransformationGraph g;
    g.vertices = 4;
    g.edges = {{0, 1, 1, 1}, {2, 3, 1, 1}};
    compute_connectivity(g);
    REQUIRE(!g.connected);
    REQUIRE(g.spanning_tree.empty());
}

TEST_CASE("enumeration order is deterministic", "[tableaux]") {
    auto s = SkewShape::make(2, 1, 1, {2, 1, 1, 1}, {1});
    auto a = enumerate_tableaux(s);
    auto b = enumerate_tableaux(s);
    REQUIRE(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) REQUIRE(lex_less(a[i], a[i - 1]));
}
