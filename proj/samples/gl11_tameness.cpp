// Thin and tame verdicts for tensor products of gl(1|1) evaluation modules.
#include "skewrep/gl11.hpp"

#include <iostream>

using namespace skewrep;

namespace {

Gl11ModuleSpec spec(std::initializer_list<std::pair<Rational, Rational>> pairs) {
    Gl11ModuleSpec s;
    for (const auto& [a, b] : pairs) s.pairs.push_back({a, b});
    return s;
}

} // namespace

int main() {
    for (const auto& s : {spec({{3, 0}, {-1, 0}}), spec({{2, 0}, {2, 1}}), spec({{Rational(1, 2), 0}, {Rational(1, 2), Rational(1, 3)}})}) {
        auto v = analyze_tameness(s);
        auto f = parity_flip_tameness(s);
        std::cout << s.to_string() << "  phi = " << s.phi().to_string() << "\n"
                  << "  thin " << v.thin << ", tame " << v.tame << ", tame after parity flip " << f.tame << "\n";
        if (v.witness) std::cout << "  " << *v.witness << "\n";
    }
}
