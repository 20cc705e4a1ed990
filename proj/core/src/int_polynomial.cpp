#include "cremona/int_polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cremona/errors.hpp"

namespace cremona {

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::from_coeffs(std::initializer_list<long> ascending) {
  std::vector<BigInt> v;
  v.reserve(ascending.size());
  for (long x : ascending) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = std::move(coeff);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_power_minus_one(int n) {
  std::vector<BigInt> v(n + 1, BigInt(0));
  v[0] = -1;
  v[n] = 1;
  return IntPolynomial(std::move(v));
}

const BigInt& IntPolynomial::coeff(int k) const {
  static const BigInt kZero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const BigInt& IntPolynomial::constant() const { return coeff(0); }

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> v(c_);
  for (auto& x : v) x = -x;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::scaled(const BigInt& k) const {
  std::vector<BigInt> v(c_);
  for (auto& x : v) x *= k;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * BigInt(static_cast<long>(i));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<BigInt> v(c_.rbegin(), c_.rend());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial r = one();
  IntPolynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational IntPolynomial::eval(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRational(*it);
  return acc;
}

RealBall IntPolynomial::eval(const RealBall& x) const {
  RealBall acc(x.prec());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + RealBall::from_rational(BigRational(*it), x.prec());
  return acc;
}

ComplexBall IntPolynomial::eval(const ComplexBall& x) const {
  ComplexBall acc(x.prec());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + ComplexBall::from_gaussian(GaussianRational(BigRational(*it)), x.prec());
  return acc;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& d) const {
  if (d.is_zero()) throw division_by_zero();
  if (is_zero()) return IntPolynomial{};
  if (degree() < d.degree()) return std::nullopt;
  // long division over Q, checking integrality as we go when d is monic is
  // not enough in general; do it in rationals and verify at the end.
  std::vector<BigRational> rem(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) rem[i] = BigRational(c_[i]);
  int dd = d.degree();
  BigRational lead(d.leading());
  std::vector<BigRational> q(degree() - dd + 1, BigRational(0));
  for (int k = degree(); k >= dd; --k) {
    BigRational f = rem[k] / lead;
    if (f == 0) continue;
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * BigRational(d.coeff(j));
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  std::vector<BigInt> qi(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) return std::nullopt;
    qi[i] = q[i].get_num();
  }
  return IntPolynomial(std::move(qi));
}

BigInt IntPolynomial::content() const {
  BigInt g(0);
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<BigInt> v(c_);
  for (auto& x : v) x /= g;
  return IntPolynomial(std::move(v));
}

// Primitive pseudo-remainder sequence.
IntPolynomial IntPolynomial::gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial f = a.primitive_part(), g = b.primitive_part();
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    // pseudo-remainder of f by g
    IntPolynomial r = f;
    const BigInt lg = g.leading();
    while (!r.is_zero() && r.degree() >= g.degree()) {
      int shift = r.degree() - g.degree();
      r = r.scaled(lg) - (g * monomial(shift, r.leading()));
    }
    f = g;
    g = r.primitive_part();
  }
  return f.primitive_part();
}

std::vector<std::pair<IntPolynomial, int>> IntPolynomial::squarefree_decomposition() const {
  std::vector<std::pair<IntPolynomial, int>> out;
  if (is_zero() || degree() == 0) return out;
  // Yun's algorithm on the primitive part.
  IntPolynomial f = primitive_part();
  IntPolynomial fp = f.derivative();
  IntPolynomial a = gcd(f, fp);
  if (a.degree() == 0) {
    out.push_back({f, 1});
    return out;
  }
  // f primitive and a = gcd(f, f') primitive, so both quotients are integral
  IntPolynomial b = *f.divide_exact(a);
  IntPolynomial c = *fp.divide_exact(a);
  IntPolynomial d = c - b.derivative();
  int i = 1;
  while (true) {
    if (b.degree() == 0) break;
    IntPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g.primitive_part(), i});
    IntPolynomial bn = *b.divide_exact(g);
    IntPolynomial cn = *d.divide_exact(g);
    b = bn;
    d = cn - b.derivative();
    ++i;
  }
  return out;
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    BigInt a = c_[k];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    BigInt mag = abs(a);
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

IntPolynomial IntPolynomial::parse(const std::string& text, const std::string& var) {
  // sum of terms: [+-] [int] ['*'] [var ['^' k]]
  std::vector<BigInt> coeffs;
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto put = [&](int k, const BigInt& v) {
    if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, BigInt(0));
    coeffs[k] += v;
  };
  skip();
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw parse_error("expected '+' or '-' in polynomial: " + text);
    }
    first = false;
    BigInt mag(1);
    bool saw_digits = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      mag = BigInt(text.substr(start, pos - start));
      saw_digits = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }
    int k = 0;
    if (text.compare(pos, var.size(), var) == 0) {
      pos += var.size();
      k = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw parse_error("missing exponent in: " + text);
        k = std::stoi(text.substr(start, pos - start));
      }
    } else if (!saw_digits) {
      throw parse_error("bad term in polynomial: " + text);
    }
    put(k, sign < 0 ? BigInt(-mag) : mag);
    skip();
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace cremona
