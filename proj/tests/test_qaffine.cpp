#include "skewrep/qaffine.hpp"
#include "skewrep/yangian.hpp"

#include <catch_amalgamated.hpp>

using namespace skewrep;

namespace {

const QElement q = q_var();

GTTableau two_rows(std::vector<int> top, std::vector<int> bottom) { return GTTableau(0, {{}, bottom, top}); }

// sum c_i u^i over Q(q), divided by sum d_i u^i
QRatFunc qrf(std::vector<QElement> num, std::vector<QElement> den) { return QRatFunc(QPoly(num), QPoly(den)); }

using Triple = std::tuple<int, int, int>;

std::vector<SkewShape> shapes(std::vector<Triple> triples, int max_size) {
    std::vector<SkewShape> out;
    for (auto [m, n, r] : triples)
        for (auto& s : all_skew_shapes(m, n, r, max_size)) out.push_back(s);
    return out;
}

// small shapes across every regime, including skew ones
std::vector<SkewShape> tested_shapes() {
    return shapes({{1, 1, 0}, {2, 1, 0}, {1, 2, 0}, {1, 1, 1}, {2, 0, 0}, {0, 2, 0}}, 3);
}

} // namespace

TEST_CASE("q-numbers", "[qaffine]") {
    REQUIRE(q_number(0).zero());
    REQUIRE(q_number(1) == QElement(1));
    REQUIRE(q_number(3) == q * q + QElement(1) + q_power(-2));
    for (long k = -6; k <= 6; ++k) {
        REQUIRE(q_number(-k) == -q_number(k));
        REQUIRE(classical_limit(q_number(k)) == Rational(k));
    }
}

TEST_CASE("q-matrix elements", "[qaffine]") {
    auto s = SkewShape::make(1, 1, 0, {1, 0}, {});
    REQUIRE(q_matrix_element(s, two_rows({1, 0}, {0}), 1, 1, Direction::Raise) == QElement(1));
    REQUIRE(q_matrix_element(s, two_rows({1, 0}, {1}), 1, 1, Direction::Lower) == QElement(1));
    // target not admissible
    REQUIRE(q_matrix_element(s, two_rows({1, 0}, {1}), 1, 1, Direction::Raise).zero());
    // every element reduces to the classical one at q = 1
    for (const auto& sh : tested_shapes())
        for (const auto& t : enumerate_tableaux(sh))
            for (int k = 1; k < sh.m() + sh.n(); ++k)
                for (int i = 1; i <= sh.r() + k; ++i)
                    for (Direction d : {Direction::Raise, Direction::Lower}) {
                        INFO(element_location(sh, t, k, i, d));
                        REQUIRE(classical_limit(q_matrix_element(sh, t, k, i, d)) == matrix_element(sh, t, k, i, d).value);
                    }
}

TEST_CASE("U_q generator matrices", "[qaffine]") {
    auto g = build_q_generator_matrices(SkewShape::make(1, 1, 0, {1, 0}, {}));
    REQUIRE(g.t(1) == Matrix<QElement>::diagonal({q, QElement(1)}));
    REQUIRE(g.t(2) == Matrix<QElement>::diagonal({QElement(1), q}));
    Matrix<QElement> e(2, 2);
    e(0, 1) = QElement(1);
    REQUIRE(g.e[1] == e);

    auto odd = build_q_generator_matrices(SkewShape::make(1, 2, 0, {2, 1, 0}, {}));
    REQUIRE((odd.e[1] * odd.e[1]).zero());
    REQUIRE((odd.f[1] * odd.f[1]).zero());
}

TEST_CASE("U_q relations and the classical limit", "[qaffine]") {
    auto all = tested_shapes();
    all.push_back(SkewShape::make(2, 2, 0, {2, 1, 0, 0}, {}));   // quartic Serre is nontrivial here
    all.push_back(SkewShape::make(2, 2, 0, {2, 2, 1, 0}, {}));
    all.push_back(SkewShape::make(2, 1, 1, {2, 1, 1, 0}, {1}));
    for (const auto& s : all) {
        INFO(s.to_string());
        auto qg = build_q_generator_matrices(s);
        for (const auto& c : check_q_relations(qg).checks) {
            INFO(c.name << " " << c.detail);
            REQUIRE(c.pass);
        }
        for (const auto& c : compare_classical_limit(qg, build_generator_matrices(s)).checks) {
            INFO(c.name << " " << c.detail);
            REQUIRE(c.pass);
        }
    }
}

TEST_CASE("a wrong q-power breaks the U_q relations", "[qaffine]") {
    auto g = build_q_generator_matrices(SkewShape::make(2, 1, 0, {2, 1, 0}, {}));
    REQUIRE(check_q_relations(g).all_pass());
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            if (!g.e[1](i, j).zero()) {
                g.e[1](i, j) = q * g.e[1](i, j);
                REQUIRE(!check_q_relations(g).all_pass());
                return;
            }
    FAIL("no nonzero entry");
}

TEST_CASE("quantum l-weights", "[qaffine]") {
    auto s = SkewShape::make(1, 1, 0, {1, 0}, {});
    auto w = q_l_weight(s, two_rows({1, 0}, {1}));
    // q (1 - u q^{-2}) / (1 - u)
    REQUIRE(w.components[0] == qrf({q, -q.inverse()}, {QElement(1), QElement(-1)}));

    auto trivial = SkewShape::make(1, 1, 0, {0, 0}, {});
    for (const auto& c : q_l_weight(trivial, enumerate_tableaux(trivial)[0]).components) REQUIRE(c == QRatFunc(1));

    // highest vector of an evaluation module: (q^{l} - u q^{-l})/(1-u) on even slots, (q^{-l} - u q^{l})/(1-u) on odd ones
    for (const auto& sh : shapes({{1, 1, 0}, {2, 1, 0}, {1, 2, 0}, {3, 0, 0}}, 4)) {
        INFO(sh.to_string());
        auto basis = enumerate_tableaux(sh);
        auto hw = q_l_weight(sh, basis[0]);
        const auto& lam = sh.lambda();
        for (int i = 1; i <= sh.m() + sh.n(); ++i) {
            const int l = i <= sh.m() ? lam[i - 1] : -lam[i - 1];
            REQUIRE(hw.components[i - 1] == qrf({q_power(l), -q_power(-l)}, {QElement(1), QElement(-1)}));
        }
    }
}

TEST_CASE("quantum l-weights degenerate to the Yangian ones", "[qaffine]") {
    // u = q^{-2x}, q -> 1
    for (const auto& sh : tested_shapes()) {
        INFO(sh.to_string());
        for (const auto& t : enumerate_tableaux(sh)) {
            auto qw = q_l_weight(sh, t);
            auto cw = l_weight(sh, t);
            for (std::size_t k = 0; k < qw.components.size(); ++k)
                for (long x : {7L, 11L, -13L}) REQUIRE(degenerate_at(qw.components[k], x) == cw.components[k].evaluate_at(Rational(x)));
        }
    }
}

TEST_CASE("mode actions", "[qaffine]") {
    auto s = SkewShape::make(1, 1, 0, {1, 0}, {});
    auto rep = build_q_current_rep(s);
    // basis: 0 = bottom (1), 1 = bottom (0); x+ sends 1 to 0
    REQUIRE(q_mode_action(rep, 1, 1, 1, 0)[0] == QElement(1) - q_power(-2));
    REQUIRE(q_mode_action(rep, 1, 1, 1, 1)[0] == q_power(-2) * (QElement(1) - q_power(-2)));
    REQUIRE(q_mode_action(rep, 0, 1, 1, 3)[1].zero());
    for (const auto& sh : tested_shapes()) {
        INFO(sh.to_string());
        auto r = build_q_current_rep(sh);
        auto g = build_q_generator_matrices(sh);
        REQUIRE(mode_law_violations(r, 4).empty());
        // mode 0 is (1 - q_k^{-+2}) e_k^{+-}
        for (int k = 1; k < r.rank(); ++k) {
            REQUIRE(r.mode(k, 1, 0) == mode_prefactor(sh, k, 1) * g.e[k]);
            REQUIRE(r.mode(k, -1, 0) == mode_prefactor(sh, k, -1) * g.f[k]);
        }
    }
}

TEST_CASE("gl(1|1) evaluation oracle", "[qaffine][oracle]") {
    for (const auto& sh : shapes({{1, 1, 0}}, 5)) {
        INFO(sh.to_string());
        auto cmp = compare_with_q_oracle(build_q_current_rep(sh), 4);
        INFO((cmp.mismatches.empty() ? std::string() : cmp.mismatches.front()));
        REQUIRE(cmp.match);
    }
    auto rep = build_q_current_rep(SkewShape::make(1, 1, 0, {2, 0}, {}));
    rep.pole_plus[1](0, 1) = q * rep.pole_plus[1](0, 1);
    REQUIRE(!compare_with_q_oracle(rep, 4).match);
}

TEST_CASE("quantum current relations", "[qaffine][relations]") {
    auto check = [](const SkewShape& s, int window) {
        INFO(s.to_string());
        auto res = verify_q_relations(build_q_current_rep(s), {window, 20, 0x5eed2024ULL});
        for (const auto& c : res.report.checks) {
            INFO(c.name << " " << c.detail);
            REQUIRE(c.pass);
        }
        for (int i = 1; i < s.m() + s.n(); ++i) REQUIRE(res.effective_window[i] >= window);
    };
    check(SkewShape::make(1, 1, 0, {1, 0}, {}), 4);
    check(SkewShape::make(1, 2, 0, {2, 1, 0}, {}), 3);
    check(SkewShape::make(2, 2, 0, {1, 1, 0, 0}, {}), 4);
    for (const auto& s : shapes({{1, 1, 0}, {2, 1, 0}, {1, 2, 0}, {1, 1, 1}}, 2)) check(s, 4);
    // trivial module: nothing acts
    auto trivial = verify_q_relations(build_q_current_rep(SkewShape::make(1, 1, 0, {0, 0}, {})));
    REQUIRE(trivial.report.all_pass());
}

TEST_CASE("a corrupted quantum current fails the relations", "[qaffine][relations]") {
    auto rep = build_q_current_rep(SkewShape::make(2, 1, 0, {2, 1, 0}, {}));
    REQUIRE(verify_q_relations(rep).report.all_pass());
    for (std::size_t i = 0; i < rep.dim(); ++i)
        for (std::size_t j = 0; j < rep.dim(); ++j)
            if (!rep.amp_plus[2](i, j).zero()) {
                rep.pole_plus[2](i, j) = q * q * rep.pole_plus[2](i, j);
                auto res = verify_q_relations(rep);
                REQUIRE(!res.report.all_pass());
                return;
            }
    FAIL("no x+_2 entry");
}

TEST_CASE("quantum thinness, irreducibility and central series", "[qaffine]") {
    for (const auto& sh : tested_shapes()) {
        INFO(sh.to_string());
        auto rep = build_q_current_rep(sh);
        REQUIRE(is_thin(rep));
        auto irr = is_irreducible(rep);
        REQUIRE(irr.irreducible);
        REQUIRE(irr.certificate.size() + 1 == rep.dim());
        REQUIRE(q_nonvanishing_violations(sh).empty());
        REQUIRE(verify_q_central_series(rep).scalar);
    }
}

TEST_CASE("trigonometric R-matrix", "[qaffine]") {
    const QRatFunc U = QRatFunc::u();
    auto r10 = build_q_r_matrix(1, 0);
    REQUIRE(r10.matrix.rows() == 1);
    REQUIRE(r10.matrix(0, 0) == U * lift(q) - lift(q.inverse()));
    auto r11 = build_q_r_matrix(1, 1);
    REQUIRE(r11.matrix.rows() == 4);
    REQUIRE(r11.matrix(3, 3) == U * lift(q.inverse()) - lift(q));
    REQUIRE(r11.matrix(1, 1) == U - QRatFunc(1));
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {1, 1}, {2, 1}, {1, 2}, {0, 2}})
        for (const Rational& q0 : {Rational(2), Rational(3, 2)}) {
            INFO(m << "|" << n << " q=" << q0.to_short_string());
            REQUIRE(verify_yang_baxter(build_q_r_matrix(m, n), q0, 5).all_pass());
        }
    // a wrong off-diagonal coefficient breaks Yang-Baxter
    auto bad = build_q_r_matrix(2, 1);
    for (auto& t : bad.terms)
        if (t.i != t.j) {
            t.coefficient = t.coefficient * lift(q);
            break;
        }
    REQUIRE(!verify_yang_baxter(bad, Rational(2), 5).all_pass());
}
