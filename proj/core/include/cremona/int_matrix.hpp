#ifndef CREMONA_INT_MATRIX_HPP
#define CREMONA_INT_MATRIX_HPP

#include <string>
#include <vector>

#include "cremona/int_polynomial.hpp"
#include "cremona/numeric.hpp"

namespace cremona {

// Dense matrix with arbitrary-precision integer entries, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, BigInt(0)) {}
  static IntegerMatrix identity(int n);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& at(int i, int j) { return e_[i * cols_ + j]; }
  const BigInt& at(int i, int j) const { return e_[i * cols_ + j]; }

  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);
  IntegerMatrix scaled(const BigInt& k) const;
  IntegerMatrix transpose() const;
  IntegerMatrix pow(unsigned e) const;

  std::vector<BigInt> apply(const std::vector<BigInt>& v) const;
  BigInt trace() const;
  BigInt det() const;  // fraction-free Bareiss elimination

  bool is_identity() const;
  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<BigInt> e_;
};

// Monic characteristic polynomial det(tI - m), computed fraction-free by
// the Faddeev-LeVerrier recurrence (all divisions are exact over Z).
IntPolynomial char_poly(const IntegerMatrix& m);

// p(m) by Horner; used for Cayley-Hamilton style checks.
IntegerMatrix eval_poly_at_matrix(const IntPolynomial& p, const IntegerMatrix& m);

// Basis of the rational kernel of m, cleared to primitive integer vectors.
std::vector<std::vector<BigInt>> integer_kernel(const IntegerMatrix& m);

}  // namespace cremona

#endif
