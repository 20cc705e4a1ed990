#include "cremona/int_matrix.hpp"

#include <sstream>

#include "cremona/errors.hpp"

namespace cremona {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw dimension_mismatch();
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_mismatch();
  IntegerMatrix r(a.rows_, a.cols_);
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_mismatch();
  IntegerMatrix r(a.rows_, a.cols_);
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw dimension_mismatch();
  IntegerMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

IntegerMatrix IntegerMatrix::scaled(const BigInt& k) const {
  IntegerMatrix r(*this);
  for (auto& x : r.e_) x *= k;
  return r;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntegerMatrix IntegerMatrix::pow(unsigned e) const {
  if (!is_square()) throw non_square();
  IntegerMatrix r = identity(rows_);
  IntegerMatrix base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::vector<BigInt> IntegerMatrix::apply(const std::vector<BigInt>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw dimension_mismatch();
  std::vector<BigInt> r(rows_, BigInt(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

BigInt IntegerMatrix::trace() const {
  if (!is_square()) throw non_square();
  BigInt t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

BigInt IntegerMatrix::det() const {
  if (!is_square()) throw non_square();
  int n = rows_;
  if (n == 0) return BigInt(1);
  // Bareiss fraction-free elimination with row pivoting.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = at(i, j);
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return BigInt(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // exact by Bareiss
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : BigInt(-a[n - 1][n - 1]);
}

bool IntegerMatrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string IntegerMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).get_str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

IntPolynomial char_poly(const IntegerMatrix& m) {
  if (!m.is_square()) throw non_square();
  int n = m.rows();
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] = 1;  // monic, coefficient of t^n
  IntegerMatrix a = m;
  for (int k = 1; k <= n; ++k) {
    BigInt t = a.trace();
    // t is divisible by k (Faddeev-LeVerrier), division exact
    BigInt ck = -t / k;
    if (ck * k != -t) throw error("Faddeev-LeVerrier division not exact");
    c[n - k] = ck;
    if (k < n) {
      IntegerMatrix shifted = a;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
      a = m * shifted;
    }
  }
  return IntPolynomial(std::move(c));
}

IntegerMatrix eval_poly_at_matrix(const IntPolynomial& p, const IntegerMatrix& m) {
  if (!m.is_square()) throw non_square();
  int n = m.rows();
  IntegerMatrix acc(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    for (int i = 0; i < n; ++i) acc.at(i, i) += p.coeff(k);
  }
  return acc;
}

std::vector<std::vector<BigInt>> integer_kernel(const IntegerMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigRational>> a(rows, std::vector<BigRational>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = BigRational(m.at(i, j));
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    BigRational inv = a[r][c];
    for (int j = 0; j < cols; ++j) a[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      BigRational f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<BigInt>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRational> v(cols, BigRational(0));
    v[free] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -a[i][free];
    // clear denominators, divide by gcd
    BigInt lcm(1);
    for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<BigInt> w(cols);
    BigInt g(0);
    for (int j = 0; j < cols; ++j) {
      BigRational scaledq = v[j] * BigRational(lcm);
      w[j] = scaledq.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[j].get_mpz_t());
    }
    if (g > 1)
      for (auto& x : w) x /= g;
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace cremona
