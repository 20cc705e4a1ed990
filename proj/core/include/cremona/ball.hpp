#ifndef CREMONA_BALL_HPP
#define CREMONA_BALL_HPP

// Certified midpoint-radius arithmetic on MPFR midpoints.  Every operation
// is outward rounded: the result ball contains the exact image of the
// input balls.  Radii are kept in low-precision MPFR values that are only
// ever rounded up.

#include <mpfr.h>

#include <string>
#include <utility>

#include "cremona/errors.hpp"
#include "cremona/numeric.hpp"

namespace cremona {

constexpr int kDefaultPrecision = 128;
constexpr int kMaxPrecision = 1024;
constexpr mpfr_prec_t kRadiusPrecision = 32;

// Minimal RAII wrapper over mpfr_t.
class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, kDefaultPrecision); }
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mpfr& operator=(Mpfr&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// Closed interval [mid - rad, mid + rad] on the real line.
class RealBall {
 public:
  RealBall() : RealBall(kDefaultPrecision) {}
  explicit RealBall(int prec) : mid_(prec), rad_(kRadiusPrecision) {
    mpfr_set_zero(mid_.get(), 1);
    mpfr_set_zero(rad_.get(), 1);
  }

  static RealBall from_long(long v, int prec = kDefaultPrecision);
  static RealBall from_rational(const BigRational& q, int prec = kDefaultPrecision);
  static RealBall from_double(double v, int prec = kDefaultPrecision);
  // Zero-radius ball at an MPFR point (the point itself, exactly).
  static RealBall from_mpfr(const Mpfr& v);
  // Smallest ball containing [lo, hi].
  static RealBall from_endpoints(const Mpfr& lo, const Mpfr& hi, int prec);
  static RealBall exact_int(long v, int prec = kDefaultPrecision) { return from_long(v, prec); }

  int prec() const { return static_cast<int>(mid_.prec()); }
  const Mpfr& mid() const { return mid_; }
  const Mpfr& rad() const { return rad_; }
  double mid_double() const { return mid_.to_double(); }
  double rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

  bool is_exact() const { return mpfr_zero_p(rad_.get()); }
  bool contains_zero() const;
  bool contains(const BigRational& q) const;
  // Certified sign tests (false means "cannot certify").
  bool is_positive() const;  // lower bound > 0
  bool is_negative() const;

  Mpfr lower() const;  // rounded down
  Mpfr upper() const;  // rounded up

  friend RealBall operator+(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a, const RealBall& b);
  friend RealBall operator*(const RealBall& a, const RealBall& b);
  friend RealBall operator/(const RealBall& a, const RealBall& b);
  RealBall operator-() const;
  RealBall& operator+=(const RealBall& o) { return *this = *this + o; }
  RealBall& operator-=(const RealBall& o) { return *this = *this - o; }
  RealBall& operator*=(const RealBall& o) { return *this = *this * o; }
  RealBall& operator/=(const RealBall& o) { return *this = *this / o; }

  RealBall abs() const;
  RealBall sqrt() const;  // intersects the result with [0, inf)
  RealBall log() const;   // requires a certified-positive ball

  // a certainly < b
  static bool certainly_less(const RealBall& a, const RealBall& b);
  static bool disjoint(const RealBall& a, const RealBall& b);
  static RealBall hull(const RealBall& a, const RealBall& b);

  std::string str(int digits = 20) const;

 private:
  friend class ComplexBall;
  Mpfr mid_;
  Mpfr rad_;
};

// Closed disc { z : |z - mid| <= rad } in C.
class ComplexBall {
 public:
  ComplexBall() : ComplexBall(kDefaultPrecision) {}
  explicit ComplexBall(int prec) : re_(prec), im_(prec), rad_(kRadiusPrecision) {
    mpfr_set_zero(re_.get(), 1);
    mpfr_set_zero(im_.get(), 1);
    mpfr_set_zero(rad_.get(), 1);
  }

  static ComplexBall from_gaussian(const GaussianRational& z, int prec = kDefaultPrecision);
  static ComplexBall from_real(const RealBall& r);
  static ComplexBall from_doubles(double re, double im, int prec = kDefaultPrecision);
  // Zero-radius ball at an MPFR point.
  static ComplexBall from_mpfr(const Mpfr& re, const Mpfr& im);
  // Zero-radius ball at this ball's midpoint.
  ComplexBall midpoint() const;

  int prec() const { return static_cast<int>(re_.prec()); }
  const Mpfr& mid_re() const { return re_; }
  const Mpfr& mid_im() const { return im_; }
  const Mpfr& rad() const { return rad_; }
  double rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }
  double mid_re_double() const { return re_.to_double(); }
  double mid_im_double() const { return im_.to_double(); }

  bool contains_zero() const;
  bool is_nonzero() const;  // certified 0 not in the disc

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
  ComplexBall operator-() const;
  ComplexBall conj() const;
  ComplexBall& operator+=(const ComplexBall& o) { return *this = *this + o; }
  ComplexBall& operator-=(const ComplexBall& o) { return *this = *this - o; }
  ComplexBall& operator*=(const ComplexBall& o) { return *this = *this * o; }
  ComplexBall& operator/=(const ComplexBall& o) { return *this = *this / o; }

  RealBall abs() const;
  ComplexBall inverse() const;

  // Lower bound for |a - b| minus both radii; positive iff certainly disjoint.
  static bool disjoint(const ComplexBall& a, const ComplexBall& b);
  static bool overlap(const ComplexBall& a, const ComplexBall& b) { return !disjoint(a, b); }
  // True iff the disc a is contained in the interior of disc b.
  static bool inside(const ComplexBall& a, const ComplexBall& b);
  bool contains(const GaussianRational& z) const;
  bool intersects_real_axis() const;

  // Grows the radius to at least r (r >= 0, interpreted exactly).
  ComplexBall inflate(double r) const;

  std::string str(int digits = 20) const;

 private:
  Mpfr re_, im_;
  Mpfr rad_;

  friend RealBall complex_abs_lower(const ComplexBall& z);
};

}  // namespace cremona

#endif
