// Quantum l-weights and a few modes of x^+ for a U_q module, with the q -> 1 check.
#include "skewrep/qaffine.hpp"

#include <iostream>

using namespace skewrep;

int main() {
    auto s = SkewShape::make(1, 2, 0, {2, 1, 0}, {});
    auto rep = build_q_current_rep(s);
    for (std::size_t p = 0; p < rep.dim(); ++p) std::cout << rep.l_weight_of(p).to_string() << "\n";

    for (int a = -1; a <= 1; ++a) {
        auto x = rep.mode(1, 1, a);
        std::cout << "x+_{1," << a << "} nonzero entries:";
        for (std::size_t i = 0; i < rep.dim(); ++i)
            for (std::size_t j = 0; j < rep.dim(); ++j)
                if (!x(i, j).zero()) std::cout << " (" << i << "," << j << ") " << x(i, j).to_string("q");
        std::cout << "\n";
    }

    auto g = build_q_generator_matrices(s);
    auto limit = compare_classical_limit(g, build_generator_matrices(s));
    auto rel = verify_q_relations(rep);
    std::cout << "classical limit " << (limit.all_pass() ? "ok" : "FAILED") << ", relations "
              << (rel.report.all_pass() ? "ok" : "FAILED") << "\n";
    return limit.all_pass() && rel.report.all_pass() ? 0 : 1;
}
