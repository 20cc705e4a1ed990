#ifndef CREMONA_SALEM_HPP
#define CREMONA_SALEM_HPP

// Integer-polynomial analysis: reciprocality, cyclotomic factor splitting,
// Salem classification, and the named polynomial families.

#include <optional>

#include "cremona/int_polynomial.hpp"
#include "cremona/roots.hpp"

namespace cremona::salem {

// coefficient list equal to its reverse up to a global sign
bool is_reciprocal(const IntPolynomial& p);

// k-th cyclotomic polynomial (cached)
const IntPolynomial& cyclotomic(int k);

struct CyclotomicSplit {
  IntPolynomial cyclo;  // maximal divisor that is a product of cyclotomics
  IntPolynomial rest;   // cyclo * rest = p exactly
};
CyclotomicSplit cyclotomic_part(const IntPolynomial& p);

enum class PolyKind { CyclotomicProduct, Salem, QuadraticReciprocal, Other };

struct PolyClassification {
  PolyKind tag;
  std::optional<ComplexBall> leading_root;  // absent for CyclotomicProduct
  int roots_outside = 0;                    // certified strictly outside the unit disc
  int roots_inside = 0;
  int roots_on_circle = 0;  // remaining enclosures meeting the unit circle
};

// Salem: monic reciprocal with exactly one (real, > 1) root outside the
// closed unit disc, its inverse inside, and every remaining root on the
// circle.  Degree-2 reciprocal polynomials with a real pair (lambda,
// 1/lambda), lambda > 1, classify as QuadraticReciprocal.
PolyClassification classify(const IntPolynomial& p, int precision = kDefaultPrecision);

// t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1
IntPolynomial lehmer();

// chi_n(t) = t^(n+1) (t^3 - t - 1) + t^3 + t^2 - 1
IntPolynomial chi_bk(int n);

// chi_{n,k} = 1 - k (x + ... + x^(n-1)) + x^n
IntPolynomial chi_bk3(int n, int k);

// chi_{n,m}(t) = t (t^(nm) - 1)(t^n - 2 t^(n-1) + 1) / ((t^n - 1)(t - 1)) + 1,
// with the division certified exact.
IntPolynomial chi_rot(int n, int m);

}  // namespace cremona::salem

#endif
