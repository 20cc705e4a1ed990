#ifndef CREMONA_NUMERIC_HPP
#define CREMONA_NUMERIC_HPP

// Exact coefficient substrate: arbitrary-precision integers and rationals
// are backed by GMP; Q(i) is built on top as a pair of rationals.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw division_by_zero();
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigRational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

// Element of Q(i).  Both parts are kept canonical (gcd 1, positive
// denominator); gmpxx maintains that through arithmetic.
class GaussianRational {
 public:
  BigRational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}  // NOLINT: implicit by design
  GaussianRational(BigRational r) : re(std::move(r)), im(0) {}
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  // |z|^2, exact.
  BigRational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (im == 0 && o.im == 0) {  // common real fast path
      re *= o.re;
      return *this;
    }
    BigRational r = re * o.re - im * o.im;
    BigRational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw division_by_zero();
    if (im == 0 && o.im == 0) {
      re /= o.re;
      return *this;
    }
    BigRational n = o.norm();
    BigRational r = (re * o.re + im * o.im) / n;
    BigRational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational inverse() const {
    if (is_zero()) throw division_by_zero();
    BigRational n = norm();
    return {re / n, -im / n};
  }

  // *this += a * b, reusing scratch storage (hot path of polynomial
  // multiplication).
  void addmul(const GaussianRational& a, const GaussianRational& b) {
    static thread_local BigRational t1, t2;
    if (a.im == 0 && b.im == 0) {
      mpq_mul(t1.get_mpq_t(), a.re.get_mpq_t(), b.re.get_mpq_t());
      mpq_add(re.get_mpq_t(), re.get_mpq_t(), t1.get_mpq_t());
      return;
    }
    mpq_mul(t1.get_mpq_t(), a.re.get_mpq_t(), b.re.get_mpq_t());
    mpq_mul(t2.get_mpq_t(), a.im.get_mpq_t(), b.im.get_mpq_t());
    mpq_sub(t1.get_mpq_t(), t1.get_mpq_t(), t2.get_mpq_t());
    mpq_add(re.get_mpq_t(), re.get_mpq_t(), t1.get_mpq_t());
    mpq_mul(t1.get_mpq_t(), a.re.get_mpq_t(), b.im.get_mpq_t());
    mpq_mul(t2.get_mpq_t(), a.im.get_mpq_t(), b.re.get_mpq_t());
    mpq_add(t1.get_mpq_t(), t1.get_mpq_t(), t2.get_mpq_t());
    mpq_add(im.get_mpq_t(), im.get_mpq_t(), t1.get_mpq_t());
  }

  // Total order used only for canonical sorting, no arithmetic meaning.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  }

  std::string str() const;

  // Parses "a/b+c/d*i" style literals, e.g. "1/2+1/2*i", "-i", "3".
  static GaussianRational parse(const std::string& text);
};

std::string to_string(const BigRational& q);

// -------------------------------------------------------------------------
// implementation

inline std::string to_string(const BigRational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

inline std::string GaussianRational::str() const {
  if (im == 0) return to_string(re);
  std::string ims = to_string(im) + "*i";
  if (im == 1) ims = "i";
  if (im == -1) ims = "-i";
  if (re == 0) return ims;
  if (sgn(im) >= 0) return to_string(re) + "+" + ims;
  return to_string(re) + ims;
}

inline GaussianRational GaussianRational::parse(const std::string& text) {
  // signed term { ('+'|'-') term }, term = rational ['*' 'i'] | 'i'
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  GaussianRational out;
  skip_ws();
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) throw parse_error("empty coefficient");
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw parse_error("expected '+' or '-' in coefficient: " + text);
    }
    first = false;
    bool is_imag = false;
    BigRational mag;
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      is_imag = true;
      mag = 1;
    } else {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      if (start == pos) throw parse_error("bad coefficient literal: " + text);
      std::string numtext = text.substr(start, pos - start);
      try {
        mag = BigRational(numtext);
        mag.canonicalize();
      } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal: " + numtext);
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
        if (pos >= text.size() || text[pos] != 'i') throw parse_error("expected 'i' after '*'");
        ++pos;
        is_imag = true;
      } else if (pos < text.size() && text[pos] == 'i') {
        ++pos;
        is_imag = true;
      }
    }
    if (sign < 0) mag = -mag;
    if (is_imag)
      out.im += mag;
    else
      out.re += mag;
    skip_ws();
  }
  return out;
}

}  // namespace cremona

#endif
