#include <cassert>
#include <iostream>

#include "expdist.hpp"
#include "graph.hpp"

using namespace qdm;

int main() {
    // K_3 charpoly = (x-(2q+1))(x-(1-q))^2
    Graph k3 = complete_graph(3);
    BiPoly p = charpoly(k3);
    BiPoly x = BiPoly::var_x(), q = BiPoly::var_q(), one = BiPoly::constant(1);
    BiPoly expect = (x - (BiPoly::constant(2) * q + one)) * (x - (one - q)).pow(2);
    std::cout << "charpoly(K3) = " << p.str() << "\n";
    assert(p == expect);

    // round trip
    assert(BiPoly::from_string(p.str()) == p);

    // graph6
    assert(emit_graph6(k3) == "Bw");
    assert(emit_graph6(complete_graph(4)) == "C~");
    assert(parse_graph6("C~") == complete_graph(4));

    // charpoly_at_q agrees with eval path
    GaussianRational half(Rational(1, 2));
    assert(charpoly_at_q(k3, half) == p.eval_q(half));
    GaussianRational twoi(Rational(0), Rational(2));
    assert(charpoly_at_q(path_graph(4), twoi) == charpoly(path_graph(4)).eval_q(twoi));

    // Kronecker stress: big product and exact division round trip
    BiPoly big = (x + q + one).pow(9) * (x - q).pow(8) + BiPoly::monomial(3, 2, -7);
    BiPoly big2 = (x * q - BiPoly::constant(5)).pow(7) + big;
    BiPoly prod = big * big2;
    assert(BiPoly::divexact(prod, big) == big2);
    assert(BiPoly::divexact(prod, big2) == big);

    // numeric spectrum of K3 at 1/2 -> {1/2, 1/2, 2}
    auto ns = numeric_spectrum(k3, Rational(1, 2));
    assert(std::abs(ns.eigenvalues[0] - 0.5) < 1e-12);
    assert(std::abs(ns.eigenvalues[2] - 2.0) < 1e-12);

    // 21-vertex tree charpoly timing probe
    Graph t = path_graph(21);
    BiPoly pt = charpoly(t);
    assert(pt.deg_x() == 21);
    std::cout << "charpoly(P21): " << pt.term_count() << " terms, deg_q " << pt.deg_q() << "\n";
    std::cout << "smoke OK\n";
    return 0;
}
