#ifndef CREMONA_WEYL_HPP
#define CREMONA_WEYL_HPP

// Weyl groups W_n acting on Z^{1,n}: simple roots, reflections, Coxeter
// elements, their characteristic polynomials, and the adjacency spectra
// of the T-shaped Coxeter graphs.

#include <optional>
#include <vector>

#include "cremona/picard.hpp"
#include "cremona/roots.hpp"

namespace cremona::weyl {

using picard::LatticeVector;
using picard::PicardLattice;

struct WeylContext {
  int n = 0;  // number of simple roots, acting on Z^{1,n}
  PicardLattice lattice;
  std::vector<LatticeVector> simple_roots;  // alpha_0 .. alpha_{n-1}
};

// alpha_0 = e_0 - e_1 - e_2 - e_3, alpha_j = e_j - e_{j+1}
WeylContext make_context(int n);

// x -> x + (x . alpha) alpha; requires alpha . alpha = -2
IntegerMatrix reflection_matrix(const WeylContext& ctx, const LatticeVector& alpha);

using CoxeterWord = std::vector<int>;  // permutation of 0..n-1

// product of the n simple reflections in word order
IntegerMatrix coxeter_element(const WeylContext& ctx, const CoxeterWord& word);
CoxeterWord standard_word(int n);  // (0, 1, ..., n-1)

// The standard element (cyclic permutation composed with the Cremona
// reflection): e_0 -> 2e_0 - e_2 - e_3 - e_4, e_1 -> e_0 - e_3 - e_4,
// e_2 -> e_0 - e_2 - e_4, e_3 -> e_0 - e_2 - e_3, e_j -> e_{j+1} for
// 4 <= j <= n-1, e_n -> e_1.  Requires n >= 4.
IntegerMatrix standard_element(const WeylContext& ctx);

// (t^(n-2) (t^3 - t - 1) + (t^3 + t^2 - 1)) / (t - 1), exact division.
IntPolynomial coxeter_char_poly_formula(int n);

// Multiplicative order of the standard-word Coxeter element; finite only
// for 3 <= n <= 8 (throws infinite_order past the iteration cap).
int coxeter_order(int n);

// 0/1 adjacency matrix of the graph: chain s_1 - s_2 - ... - s_{n-1}
// with s_0 attached to s_3.
IntegerMatrix adjacency_matrix(int n);

// Spectral radius of the adjacency matrix; exact (zero-radius) ball 2 at
// n = 9, certified by an explicit positive eigenvector.
RealBall adjacency_spectral_radius(int n, int precision = kDefaultPrecision);

enum class ConicType { Elliptic, Parabolic, Hyperbolic };

struct BipartiteRestriction {
  RealBall lambda;  // adjacency spectral radius lambda_n
  RealBall trace;   // lambda_n^2 - 2
  ConicType type;
  std::optional<RealBall> top_eigenvalue;  // hyperbolic case: the eigenvalue > 1
};

// The 2x2 restriction [[lambda^2 - 1, -lambda], [lambda, -1]] classified
// by |trace| against 2; throws `inconclusive` if the trace enclosure
// meets 2 for n != 9.
BipartiteRestriction bipartite_restriction(int n, int precision = kDefaultPrecision);

// All distinct images of the simple roots under reflection words of
// length <= L (breadth-first closure).
std::vector<LatticeVector> roots_up_to_length(const WeylContext& ctx, int L);

// Coordinates in the simple-root basis; nullopt when outside the span.
std::optional<std::vector<BigRational>> root_coordinates(const WeylContext& ctx,
                                                         const LatticeVector& v);

}  // namespace cremona::weyl

#endif
