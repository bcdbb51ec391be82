#include <iostream>
#include "cyclo/coset.hpp"
#include "cyclo/ideal.hpp"
using namespace cyclo;
int main() {
    auto f20 = build_field(20);
    CycloElem q = parse_element(f20, "1+x-x^3");
    CycloElem prod = q * conjugate(q);
    CycloElem xi5 = CycloElem::one(f20) - root_power(f20, 4);
    std::cout << "ideal_equal(q*conj q, 1-xi5) = " << ideal_equal(prod, xi5) << "\n";
    std::cout << "norm(1-xi5) = " << norm(xi5) << "\n";
    std::cout << "balanced(1-xi5) = " << is_balanced(xi5) << "\n";
    std::cout << "ideal_equal(q, conj q) = " << ideal_equal(q, conjugate(q)) << "\n";
    // unit example
    auto f5 = build_field(5);
    std::cout << "is_unit(1+xi5) = " << is_unit(CycloElem::one(f5) + root_power(f5, 1)) << "\n";
    // canonical associate determinism
    std::cout << "canon(q) = " << format_element(canonical_associate(q)) << "\n";
    // divides example n=3
    auto f3 = build_field(3);
    auto d = divides(parse_element(f3, "1-x"), CycloElem::constant(f3, 3));
    std::cout << "3/(1-x) = " << (d ? format_element(*d) : "none") << "\n";
    return 0;
}
