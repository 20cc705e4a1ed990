#ifndef CREMONA_PICARD_HPP
#define CREMONA_PICARD_HPP

// The lattice Z^{1,n} with the Minkowski form diag(1,-1,...,-1), isometry
// checks for integer matrices acting on it, and the catalog of printed
// characteristic matrices.

#include <optional>
#include <string>
#include <vector>

#include "cremona/ball.hpp"
#include "cremona/int_matrix.hpp"

namespace cremona::picard {

// Z^{1,n}: basis e_0 (line class), e_1..e_n (exceptional classes).
struct PicardLattice {
  int n = 0;  // number of exceptional classes; rank is n + 1
  int rank() const { return n + 1; }
};

using LatticeVector = std::vector<BigInt>;

LatticeVector basis_vector(const PicardLattice& L, int i);
// K = -3 e_0 + e_1 + ... + e_n
LatticeVector canonical_class(const PicardLattice& L);

// u0 v0 - sum_{i>=1} u_i v_i
BigInt inner_product(const LatticeVector& u, const LatticeVector& v);

enum class Verification { Verified, FailsIsometry, Unchecked };

struct LatticeIsometry {
  IntegerMatrix matrix;
  Verification verified = Verification::Unchecked;
  std::string name;
  std::string source_ref;
  // False when the matrix is not expected to preserve the diagonal form
  // (non-geometric printed basis, or the pullback of a map that is merely
  // birational on the surface); such entries stay Unchecked.
  bool isometry_expected = true;
};

// M^T J M = J for J = diag(1,-1,...,-1), exactly.
bool is_isometry(const IntegerMatrix& m);
// M K = K for the canonical class K.
bool preserves_canonical(const IntegerMatrix& m);

LatticeIsometry make_isometry(IntegerMatrix m, std::string name, std::string source_ref,
                              bool isometry_expected = true);

// All explicit matrices printed in the survey material, verbatim, plus
// independently recomputed variants for the two entries whose printed
// form fails the isometry test.
const std::vector<LatticeIsometry>& catalog();
const LatticeIsometry& catalog_entry(const std::string& name);

// The (n+4)x(n+4) pullback matrix of the linear-fractional family on the
// basis {H, E1, E2, Q, f(Q), ..., f^n(Q)}.
LatticeIsometry bedford_kim_matrix(int n);

// log of the spectral radius; exact zero ball when the spectral radius
// is certified equal to 1.
RealBall entropy(const IntegerMatrix& m, int precision = kDefaultPrecision);

// {"name", "size", "entries", "source_ref", "verified"} records.
std::string catalog_to_json();

}  // namespace cremona::picard

#endif
