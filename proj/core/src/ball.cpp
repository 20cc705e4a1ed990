#include "cremona/ball.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cremona {

namespace {

// Adds an upper bound for the rounding error of `mid` (whose last single
// MPFR operation reported ternary value `ternary`) onto `rad`.
void absorb_rounding(Mpfr& rad, const Mpfr& mid, int ternary) {
  if (ternary == 0) return;  // exact, nothing to absorb
  if (!mpfr_regular_p(mid.get())) {
    // rounded all the way to zero/inf: give up on this ball
    mpfr_set_inf(rad.get(), 1);
    return;
  }
  // |error| <= 2^(exp - prec)
  mpfr_exp_t e = mpfr_get_exp(mid.get());
  Mpfr ulp(kRadiusPrecision);
  mpfr_set_ui_2exp(ulp.get(), 1, e - mpfr_get_prec(mid.get()), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), ulp.get(), MPFR_RNDU);
}

// Adds scale * 2^(3 - prec) to rad; bounds the accumulated midpoint
// rounding of a short composite computation whose intermediates are all
// dominated by `scale`.
void absorb_composite(Mpfr& rad, const Mpfr& scale, mpfr_prec_t prec) {
  Mpfr err(kRadiusPrecision);
  mpfr_mul_2si(err.get(), scale.get(), 3 - static_cast<long>(prec), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), err.get(), MPFR_RNDU);
}

void rad_add(Mpfr& acc, const Mpfr& x) { mpfr_add(acc.get(), acc.get(), x.get(), MPFR_RNDU); }

Mpfr abs_upper(const Mpfr& mid, const Mpfr& rad) {
  Mpfr t(kRadiusPrecision);
  mpfr_abs(t.get(), mid.get(), MPFR_RNDU);
  mpfr_add(t.get(), t.get(), rad.get(), MPFR_RNDU);
  return t;
}

}  // namespace

// ---------------------------------------------------------------- RealBall

RealBall RealBall::from_long(long v, int prec) {
  RealBall b(prec);
  int t = mpfr_set_si(b.mid_.get(), v, MPFR_RNDN);
  absorb_rounding(b.rad_, b.mid_, t);
  return b;
}

RealBall RealBall::from_rational(const BigRational& q, int prec) {
  RealBall b(prec);
  int t = mpfr_set_q(b.mid_.get(), q.get_mpq_t(), MPFR_RNDN);
  absorb_rounding(b.rad_, b.mid_, t);
  return b;
}

RealBall RealBall::from_double(double v, int prec) {
  RealBall b(prec);
  mpfr_set_d(b.mid_.get(), v, MPFR_RNDN);
  return b;
}

RealBall RealBall::from_mpfr(const Mpfr& v) {
  RealBall b(static_cast<int>(v.prec()));
  b.mid_ = v;
  return b;
}

RealBall RealBall::from_endpoints(const Mpfr& lo, const Mpfr& hi, int prec) {
  RealBall b(prec);
  int t = mpfr_add(b.mid_.get(), lo.get(), hi.get(), MPFR_RNDN);
  t |= mpfr_div_2ui(b.mid_.get(), b.mid_.get(), 1, MPFR_RNDN);
  // rad >= max(hi - mid, mid - lo), then absorb the midpoint rounding.
  Mpfr d1(kRadiusPrecision), d2(kRadiusPrecision);
  mpfr_sub(d1.get(), hi.get(), b.mid_.get(), MPFR_RNDU);
  mpfr_sub(d2.get(), b.mid_.get(), lo.get(), MPFR_RNDU);
  mpfr_max(b.rad_.get(), d1.get(), d2.get(), MPFR_RNDU);
  absorb_rounding(b.rad_, b.mid_, t);
  return b;
}

bool RealBall::contains_zero() const {
  Mpfr a(kRadiusPrecision);
  mpfr_abs(a.get(), mid_.get(), MPFR_RNDD);
  return mpfr_cmp(a.get(), rad_.get()) <= 0;
}

bool RealBall::contains(const BigRational& q) const {
  // |mid - q| <= rad, with the difference rounded up (safe direction for a
  // positive containment assertion).
  Mpfr d(mid_.prec());
  mpfr_sub_q(d.get(), mid_.get(), q.get_mpq_t(), MPFR_RNDA);
  mpfr_abs(d.get(), d.get(), MPFR_RNDU);
  return mpfr_cmp(d.get(), rad_.get()) <= 0;
}

bool RealBall::is_positive() const {
  Mpfr lo = lower();
  return mpfr_sgn(lo.get()) > 0;
}

bool RealBall::is_negative() const {
  Mpfr hi = upper();
  return mpfr_sgn(hi.get()) < 0;
}

Mpfr RealBall::lower() const {
  Mpfr r(mid_.prec());
  mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return r;
}

Mpfr RealBall::upper() const {
  Mpfr r(mid_.prec());
  mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return r;
}

RealBall operator+(const RealBall& a, const RealBall& b) {
  RealBall r(std::max(a.prec(), b.prec()));
  int t = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

RealBall operator-(const RealBall& a, const RealBall& b) {
  RealBall r(std::max(a.prec(), b.prec()));
  int t = mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

RealBall operator*(const RealBall& a, const RealBall& b) {
  RealBall r(std::max(a.prec(), b.prec()));
  int t = mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // rad = |ma| rb + |mb| ra + ra rb
  Mpfr s(kRadiusPrecision), tmp(kRadiusPrecision);
  mpfr_abs(tmp.get(), a.mid_.get(), MPFR_RNDU);
  mpfr_mul(s.get(), tmp.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_abs(tmp.get(), b.mid_.get(), MPFR_RNDU);
  mpfr_mul(tmp.get(), tmp.get(), a.rad_.get(), MPFR_RNDU);
  rad_add(s, tmp);
  mpfr_mul(tmp.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  rad_add(s, tmp);
  r.rad_ = s;
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

RealBall operator/(const RealBall& a, const RealBall& b) {
  if (b.contains_zero())
    throw precision_exhausted("ball division by an enclosure containing zero");
  RealBall r(std::max(a.prec(), b.prec()));
  int t = mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // |x/y - ma/mb| <= (ra |mb| + rb |ma|) / (|mb| (|mb| - rb))
  Mpfr amb(kRadiusPrecision), ama(kRadiusPrecision), num(kRadiusPrecision),
      den(kRadiusPrecision), tmp(kRadiusPrecision);
  mpfr_abs(amb.get(), b.mid_.get(), MPFR_RNDD);
  mpfr_abs(ama.get(), a.mid_.get(), MPFR_RNDU);
  mpfr_mul(num.get(), a.rad_.get(), amb.get(), MPFR_RNDU);
  mpfr_mul(tmp.get(), b.rad_.get(), ama.get(), MPFR_RNDU);
  rad_add(num, tmp);
  mpfr_sub(den.get(), amb.get(), b.rad_.get(), MPFR_RNDD);
  mpfr_mul(den.get(), den.get(), amb.get(), MPFR_RNDD);
  if (mpfr_sgn(den.get()) <= 0)
    throw precision_exhausted("ball division by an enclosure containing zero");
  mpfr_div(r.rad_.get(), num.get(), den.get(), MPFR_RNDU);
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

RealBall RealBall::operator-() const {
  RealBall r(prec());
  mpfr_neg(r.mid_.get(), mid_.get(), MPFR_RNDN);
  r.rad_ = rad_;
  return r;
}

RealBall RealBall::abs() const {
  if (!contains_zero()) {
    RealBall r(prec());
    mpfr_abs(r.mid_.get(), mid_.get(), MPFR_RNDN);
    r.rad_ = rad_;
    return r;
  }
  Mpfr hi = abs_upper(mid_, rad_);
  Mpfr lo(prec());
  mpfr_set_zero(lo.get(), 1);
  Mpfr hip(prec());
  mpfr_set(hip.get(), hi.get(), MPFR_RNDU);
  return from_endpoints(lo, hip, prec());
}

RealBall RealBall::sqrt() const {
  Mpfr lo = lower(), hi = upper();
  if (mpfr_sgn(hi.get()) < 0) throw precision_exhausted("sqrt of a certified-negative ball");
  if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo.get(), 1);
  Mpfr slo(prec()), shi(prec());
  mpfr_sqrt(slo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqrt(shi.get(), hi.get(), MPFR_RNDU);
  return from_endpoints(slo, shi, prec());
}

RealBall RealBall::log() const {
  Mpfr lo = lower(), hi = upper();
  if (mpfr_sgn(lo.get()) <= 0)
    throw precision_exhausted("log of a ball not certified positive");
  Mpfr llo(prec()), lhi(prec());
  mpfr_log(llo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(lhi.get(), hi.get(), MPFR_RNDU);
  return from_endpoints(llo, lhi, prec());
}

bool RealBall::certainly_less(const RealBall& a, const RealBall& b) {
  Mpfr au = a.upper(), bl = b.lower();
  return mpfr_cmp(au.get(), bl.get()) < 0;
}

bool RealBall::disjoint(const RealBall& a, const RealBall& b) {
  return certainly_less(a, b) || certainly_less(b, a);
}

RealBall RealBall::hull(const RealBall& a, const RealBall& b) {
  Mpfr lo(std::max(a.prec(), b.prec())), hi(lo.prec());
  Mpfr al = a.lower(), bl = b.lower(), au = a.upper(), bu = b.upper();
  mpfr_min(lo.get(), al.get(), bl.get(), MPFR_RNDD);
  mpfr_max(hi.get(), au.get(), bu.get(), MPFR_RNDU);
  return from_endpoints(lo, hi, std::max(a.prec(), b.prec()));
}

std::string RealBall::str(int digits) const {
  char* m = nullptr;
  mpfr_asprintf(&m, "%.*Rg +/- %.3Re", digits, mid_.get(), rad_.get());
  std::string out(m);
  mpfr_free_str(m);
  return out;
}

// -------------------------------------------------------------- ComplexBall

ComplexBall ComplexBall::from_gaussian(const GaussianRational& z, int prec) {
  ComplexBall b(prec);
  int t1 = mpfr_set_q(b.re_.get(), z.re.get_mpq_t(), MPFR_RNDN);
  int t2 = mpfr_set_q(b.im_.get(), z.im.get_mpq_t(), MPFR_RNDN);
  absorb_rounding(b.rad_, b.re_, t1);
  absorb_rounding(b.rad_, b.im_, t2);
  return b;
}

ComplexBall ComplexBall::from_real(const RealBall& r) {
  ComplexBall b(r.prec());
  b.re_ = r.mid();
  b.rad_ = r.rad();
  return b;
}

ComplexBall ComplexBall::from_doubles(double re, double im, int prec) {
  ComplexBall b(prec);
  mpfr_set_d(b.re_.get(), re, MPFR_RNDN);
  mpfr_set_d(b.im_.get(), im, MPFR_RNDN);
  return b;
}

ComplexBall ComplexBall::from_mpfr(const Mpfr& re, const Mpfr& im) {
  ComplexBall b(static_cast<int>(re.prec()));
  b.re_ = re;
  b.im_ = im;
  return b;
}

ComplexBall ComplexBall::midpoint() const {
  ComplexBall b(*this);
  mpfr_set_zero(b.rad_.get(), 1);
  return b;
}

// Lower bound for |mid| as a plain number (not a ball).
static Mpfr mid_abs_lower(const ComplexBall& z) {
  Mpfr h(kRadiusPrecision);
  mpfr_hypot(h.get(), z.mid_re().get(), z.mid_im().get(), MPFR_RNDD);
  // hypot rounds the exact |mid| down; one extra ulp guards the inputs.
  return h;
}

bool ComplexBall::contains_zero() const {
  Mpfr lo = mid_abs_lower(*this);
  return mpfr_cmp(lo.get(), rad_.get()) <= 0;
}

bool ComplexBall::is_nonzero() const { return !contains_zero(); }

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall r(std::max(a.prec(), b.prec()));
  int t1 = mpfr_add(r.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  int t2 = mpfr_add(r.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  absorb_rounding(r.rad_, r.re_, t1);
  absorb_rounding(r.rad_, r.im_, t2);
  return r;
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  ComplexBall r(std::max(a.prec(), b.prec()));
  int t1 = mpfr_sub(r.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  int t2 = mpfr_sub(r.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  absorb_rounding(r.rad_, r.re_, t1);
  absorb_rounding(r.rad_, r.im_, t2);
  return r;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  int prec = std::max(a.prec(), b.prec());
  ComplexBall r(prec);
  // midpoint: complex product at working precision
  Mpfr t1(prec), t2(prec);
  int e = 0;
  e |= mpfr_mul(t1.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  e |= mpfr_mul(t2.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  e |= mpfr_sub(r.re_.get(), t1.get(), t2.get(), MPFR_RNDN);
  e |= mpfr_mul(t1.get(), a.re_.get(), b.im_.get(), MPFR_RNDN);
  e |= mpfr_mul(t2.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  e |= mpfr_add(r.im_.get(), t1.get(), t2.get(), MPFR_RNDN);
  // radius: |ma| rb + |mb| ra + ra rb  (+ accumulated midpoint rounding)
  Mpfr ama(kRadiusPrecision), amb(kRadiusPrecision), s(kRadiusPrecision), tmp(kRadiusPrecision);
  mpfr_hypot(ama.get(), a.re_.get(), a.im_.get(), MPFR_RNDU);
  mpfr_hypot(amb.get(), b.re_.get(), b.im_.get(), MPFR_RNDU);
  mpfr_mul(s.get(), ama.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_mul(tmp.get(), amb.get(), a.rad_.get(), MPFR_RNDU);
  rad_add(s, tmp);
  mpfr_mul(tmp.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  rad_add(s, tmp);
  r.rad_ = s;
  if (e != 0) {
    // all intermediates are bounded by |ma| |mb|
    Mpfr scale(kRadiusPrecision);
    mpfr_mul(scale.get(), ama.get(), amb.get(), MPFR_RNDU);
    absorb_composite(r.rad_, scale, prec);
  }
  return r;
}

ComplexBall ComplexBall::inverse() const {
  Mpfr lo = mid_abs_lower(*this);
  Mpfr margin(kRadiusPrecision);
  mpfr_sub(margin.get(), lo.get(), rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(margin.get()) <= 0)
    throw precision_exhausted("inverse of an enclosure containing zero");
  int p = prec();
  ComplexBall r(p);
  // midpoint: conj(m) / |m|^2
  Mpfr n(p), t(p);
  int e = 0;
  e |= mpfr_sqr(n.get(), re_.get(), MPFR_RNDN);
  e |= mpfr_sqr(t.get(), im_.get(), MPFR_RNDN);
  e |= mpfr_add(n.get(), n.get(), t.get(), MPFR_RNDN);
  e |= mpfr_div(r.re_.get(), re_.get(), n.get(), MPFR_RNDN);
  e |= mpfr_div(r.im_.get(), im_.get(), n.get(), MPFR_RNDN);
  mpfr_neg(r.im_.get(), r.im_.get(), MPFR_RNDN);
  // |1/z - 1/m| <= rad / (|m| (|m| - rad)) for z in the disc
  Mpfr den(kRadiusPrecision);
  mpfr_mul(den.get(), lo.get(), margin.get(), MPFR_RNDD);
  mpfr_div(r.rad_.get(), rad_.get(), den.get(), MPFR_RNDU);
  if (e != 0) {
    // the midpoint and its intermediates are dominated by 1/|m|
    Mpfr scale(kRadiusPrecision);
    mpfr_ui_div(scale.get(), 1, lo.get(), MPFR_RNDU);
    absorb_composite(r.rad_, scale, p);
  }
  return r;
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return a * b.inverse(); }

ComplexBall ComplexBall::operator-() const {
  ComplexBall r(*this);
  mpfr_neg(r.re_.get(), r.re_.get(), MPFR_RNDN);
  mpfr_neg(r.im_.get(), r.im_.get(), MPFR_RNDN);
  return r;
}

ComplexBall ComplexBall::conj() const {
  ComplexBall r(*this);
  mpfr_neg(r.im_.get(), r.im_.get(), MPFR_RNDN);
  return r;
}

RealBall ComplexBall::abs() const {
  int p = prec();
  Mpfr lo(p), hi(p);
  mpfr_hypot(lo.get(), re_.get(), im_.get(), MPFR_RNDD);
  mpfr_hypot(hi.get(), re_.get(), im_.get(), MPFR_RNDU);
  mpfr_sub(lo.get(), lo.get(), rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo.get(), 1);
  mpfr_add(hi.get(), hi.get(), rad_.get(), MPFR_RNDU);
  return RealBall::from_endpoints(lo, hi, p);
}

bool ComplexBall::disjoint(const ComplexBall& a, const ComplexBall& b) {
  int p = std::max(a.prec(), b.prec());
  Mpfr dre(p), dim(p), dist(p);
  // Any rounding here only shrinks the certified separation: take the
  // distance of midpoints rounded down, minus one ulp per inexact sub.
  int t1 = mpfr_sub(dre.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  int t2 = mpfr_sub(dim.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_hypot(dist.get(), dre.get(), dim.get(), MPFR_RNDD);
  Mpfr cushion(kRadiusPrecision);
  mpfr_set_zero(cushion.get(), 1);
  absorb_rounding(cushion, dre, t1);
  absorb_rounding(cushion, dim, t2);
  mpfr_sub(dist.get(), dist.get(), cushion.get(), MPFR_RNDD);
  mpfr_sub(dist.get(), dist.get(), a.rad_.get(), MPFR_RNDD);
  mpfr_sub(dist.get(), dist.get(), b.rad_.get(), MPFR_RNDD);
  return mpfr_sgn(dist.get()) > 0;
}

bool ComplexBall::inside(const ComplexBall& a, const ComplexBall& b) {
  int p = std::max(a.prec(), b.prec());
  Mpfr dre(p), dim(p), dist(p);
  int t1 = mpfr_sub(dre.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  int t2 = mpfr_sub(dim.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_hypot(dist.get(), dre.get(), dim.get(), MPFR_RNDU);
  Mpfr cushion(kRadiusPrecision);
  mpfr_set_zero(cushion.get(), 1);
  absorb_rounding(cushion, dre, t1);
  absorb_rounding(cushion, dim, t2);
  mpfr_add(dist.get(), dist.get(), cushion.get(), MPFR_RNDU);
  mpfr_add(dist.get(), dist.get(), a.rad_.get(), MPFR_RNDU);
  // need dist + rad_a < rad_b
  return mpfr_cmp(dist.get(), b.rad_.get()) < 0;
}

bool ComplexBall::contains(const GaussianRational& z) const {
  int p = prec();
  Mpfr dre(p), dim(p), dist(p);
  mpfr_sub_q(dre.get(), re_.get(), z.re.get_mpq_t(), MPFR_RNDA);
  mpfr_sub_q(dim.get(), im_.get(), z.im.get_mpq_t(), MPFR_RNDA);
  mpfr_hypot(dist.get(), dre.get(), dim.get(), MPFR_RNDU);
  return mpfr_cmp(dist.get(), rad_.get()) <= 0;
}

bool ComplexBall::intersects_real_axis() const {
  Mpfr a(kRadiusPrecision);
  mpfr_abs(a.get(), im_.get(), MPFR_RNDD);
  return mpfr_cmp(a.get(), rad_.get()) <= 0;
}

ComplexBall ComplexBall::inflate(double r) const {
  ComplexBall out(*this);
  Mpfr extra(kRadiusPrecision);
  mpfr_set_d(extra.get(), r, MPFR_RNDU);
  mpfr_add(out.rad_.get(), out.rad_.get(), extra.get(), MPFR_RNDU);
  return out;
}

std::string ComplexBall::str(int digits) const {
  char* m = nullptr;
  mpfr_asprintf(&m, "(%.*Rg %+.*Rg i) +/- %.3Re", digits, re_.get(), digits, im_.get(),
                rad_.get());
  std::string out(m);
  mpfr_free_str(m);
  return out;
}

}  // namespace cremona
