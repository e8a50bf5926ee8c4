// Basis, generator matrices and l-weights of a skew module of Y(gl(2|1)).
#include "skewrep/glrep.hpp"
#include "skewrep/yangian.hpp"

#include <iostream>

using namespace skewrep;

int main() {
    // (m,n,r) = (2,1,1), lambda = (2,1,1,0), mu = (1)
    auto s = SkewShape::make(2, 1, 1, {2, 1, 1, 0}, {1});
    auto rep = build_current_rep(s);
    std::cout << s.to_string() << "  dim " << rep.dim() << "\n";
    for (std::size_t p = 0; p < rep.dim(); ++p)
        std::cout << "  " << rep.basis[p].to_string() << "  " << rep.l_weight_of(p).to_string() << "\n";

    auto irr = is_irreducible(rep);
    std::cout << "thin " << irr.thin << ", irreducible " << irr.irreducible << "\n";
    auto rel = verify_drinfeld_relations(rep);
    for (const auto& c : rel.checks) std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name << "\n";
    return rel.all_pass() && irr.irreducible ? 0 : 1;
}
