#ifndef CREMONA_ROOTS_HPP
#define CREMONA_ROOTS_HPP

#include <optional>
#include <vector>

#include "cremona/ball.hpp"
#include "cremona/int_matrix.hpp"
#include "cremona/int_polynomial.hpp"

namespace cremona {

struct RootBall {
  ComplexBall ball;
  int multiplicity = 1;
  // True iff the enclosed root was certified real by an exact sign change
  // at the rational endpoints of the disc's real section.
  bool is_real = false;
};

// Isolates all complex roots of p: pairwise-disjoint discs, one per
// distinct root, each certified (interval Newton) to contain exactly one
// root of the corresponding squarefree factor.  Multiplicities sum to
// deg p.  Seeds come from a Durand-Kerner sweep at working precision;
// the working precision doubles on certification failure, up to
// max(kMaxPrecision, 4 * precision), then PrecisionExhausted is thrown.
std::vector<RootBall> isolate_roots(const IntPolynomial& p, int precision = kDefaultPrecision);

// Certified enclosure of max |root|.
RealBall max_root_modulus(const IntPolynomial& p, int precision = kDefaultPrecision);

// Certified enclosure of the spectral radius of a square integer matrix,
// with radius at most 2^(-precision/2) * max(1, |mid|).
RealBall spectral_radius(const IntegerMatrix& m, int precision = kDefaultPrecision);

// Enclosure of the largest certified-real root, if any root is real.
std::optional<RealBall> largest_real_root(const IntPolynomial& p,
                                          int precision = kDefaultPrecision);

}  // namespace cremona

#endif
