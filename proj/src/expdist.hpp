#pragma once

#include <vector>

#include "bipoly.hpp"
#include "graph.hpp"
#include "polymatrix.hpp"

namespace qdm {

// D_q of a graph: entry (u,v) = q^dist(u,v), 0 across components.
PolyMatrix build_dq(const Graph& g);

// det(xI - D_q), monic of degree |V|, via fraction-free elimination.
BiPoly charpoly(const Graph& g);

// Characteristic polynomial of D_q(q_val): built directly over Gaussian
// rationals and eliminated fraction-free in GQ[x]. Agrees with
// charpoly(g).eval_q(q_val); the two independent paths cross-check each
// other in the tests.
GQPoly charpoly_at_q(const Graph& g, const GaussianRational& q_val);

// true iff the symbolic characteristic polynomials coincide in Z[q,x]
// (equivalently, the graphs are D_q-cospectral for every q).
bool are_dq_cospectral(const Graph& g, const Graph& h);

bool are_cospectral_at(const Graph& g, const GaussianRational& qg,
                       const Graph& h, const GaussianRational& qh);

// Fast census pre-filter: if the fixed-q charpolys agree at
// n*diameter+1 distinct rational points the symbolic polynomials agree; we
// use q=2 and q=3 only to bucket, never to conclude equality.
std::string charpoly_eval_key(const Graph& g);

struct NumericSpectrum {
    std::vector<double> eigenvalues; // ascending
    Rational q_value;
    double spectral_radius() const;
};

// Eigenvalues of the real symmetric matrix D_q(q_val) via cyclic Jacobi.
NumericSpectrum numeric_spectrum(const Graph& g, const Rational& q_val);

// Jacobi eigensolver on a dense symmetric matrix (row-major), ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

} // namespace qdm
