#ifndef CREMONA_INT_POLYNOMIAL_HPP
#define CREMONA_INT_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "cremona/ball.hpp"
#include "cremona/numeric.hpp"

namespace cremona {

// Univariate polynomial with integer coefficients, stored by ascending
// degree with a nonzero trailing (leading) coefficient unless zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }
  static IntPolynomial from_coeffs(std::initializer_list<long> ascending);
  static IntPolynomial zero() { return {}; }
  static IntPolynomial one() { return monomial(0, 1); }
  static IntPolynomial monomial(int degree, BigInt coeff = BigInt(1));
  static IntPolynomial x_power_minus_one(int n);  // t^n - 1

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& coeff(int k) const;
  const BigInt& leading() const { return c_.back(); }
  const BigInt& constant() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  IntPolynomial scaled(const BigInt& k) const;
  IntPolynomial derivative() const;
  IntPolynomial reversed() const;  // coefficient list reversed
  IntPolynomial pow(unsigned e) const;

  BigInt eval(const BigInt& x) const;
  BigRational eval(const BigRational& x) const;
  RealBall eval(const RealBall& x) const;
  ComplexBall eval(const ComplexBall& x) const;
  // Sign of p(x) for exact rational x.
  int sign_at(const BigRational& x) const { return sgn(eval(x)); }

  // Exact division; nullopt if the division leaves a remainder or the
  // quotient is not integral.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& d) const;

  BigInt content() const;  // gcd of coefficients (0 for zero polynomial)
  IntPolynomial primitive_part() const;

  // gcd of primitive parts, normalized primitive with positive leading
  // coefficient; contents are handled by the caller where they matter.
  static IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

  // Yun squarefree decomposition: returns pairs (factor, multiplicity)
  // with p = lc * prod factor_i^mult_i, factors primitive and squarefree.
  std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition() const;

  std::string str(const std::string& var = "t") const;
  static IntPolynomial parse(const std::string& text, const std::string& var = "t");

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace cremona

#endif
