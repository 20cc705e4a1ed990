#include "cremona/roots.hpp"

#include <algorithm>
#include <cmath>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

// Plain complex arithmetic on MPFR midpoints, used only to produce seeds;
// all certification happens in ball arithmetic afterwards.
struct MC {
  Mpfr re, im;
  explicit MC(mpfr_prec_t p) : re(p), im(p) {
    mpfr_set_zero(re.get(), 1);
    mpfr_set_zero(im.get(), 1);
  }
};

void mc_sub(MC& r, const MC& a, const MC& b) {
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void mc_mul(MC& r, const MC& a, const MC& b, Mpfr& t1, Mpfr& t2) {
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  Mpfr newre(t1.prec());
  mpfr_sub(newre.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  r.re = newre;
}

void mc_div(MC& r, const MC& a, const MC& b, Mpfr& t1, Mpfr& t2) {
  Mpfr n(t1.prec());
  mpfr_sqr(t1.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t2.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(n.get(), t1.get(), t2.get(), MPFR_RNDN);
  MC conj(t1.prec());
  mpfr_set(conj.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_neg(conj.im.get(), b.im.get(), MPFR_RNDN);
  MC num(t1.prec());
  mc_mul(num, a, conj, t1, t2);
  mpfr_div(r.re.get(), num.re.get(), n.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), num.im.get(), n.get(), MPFR_RNDN);
}

double mc_abs_d(const MC& a) {
  Mpfr h(64);
  mpfr_hypot(h.get(), a.re.get(), a.im.get(), MPFR_RNDU);
  return mpfr_get_d(h.get(), MPFR_RNDU);
}

// Durand-Kerner sweep for a squarefree polynomial with the given mpz
// coefficients; returns approximate roots at working precision.
std::vector<MC> durand_kerner(const std::vector<BigInt>& coeffs, mpfr_prec_t prec) {
  int d = static_cast<int>(coeffs.size()) - 1;
  std::vector<Mpfr> c;
  c.reserve(coeffs.size());
  for (const auto& z : coeffs) {
    Mpfr m(prec);
    mpfr_set_z(m.get(), z.get_mpz_t(), MPFR_RNDN);
    c.push_back(std::move(m));
  }
  // Cauchy-style start radius
  double maxc = 0;
  double lead = std::abs(mpfr_get_d(c[d].get(), MPFR_RNDN));
  for (int i = 0; i < d; ++i)
    maxc = std::max(maxc, std::abs(mpfr_get_d(c[i].get(), MPFR_RNDN)));
  double radius = 1.0 + maxc / lead;

  std::vector<MC> z;
  z.reserve(d);
  for (int k = 0; k < d; ++k) {
    MC p((mpfr_prec_t)prec);
    double ang = 2.0 * M_PI * k / d + 0.42;
    mpfr_set_d(p.re.get(), radius * std::cos(ang), MPFR_RNDN);
    mpfr_set_d(p.im.get(), radius * std::sin(ang), MPFR_RNDN);
    z.push_back(std::move(p));
  }

  Mpfr t1(prec), t2(prec);
  auto eval = [&](const MC& x, MC& out) {
    mpfr_set(out.re.get(), c[d].get(), MPFR_RNDN);
    mpfr_set_zero(out.im.get(), 1);
    for (int i = d - 1; i >= 0; --i) {
      MC tmp(prec);
      mc_mul(tmp, out, x, t1, t2);
      mpfr_add(out.re.get(), tmp.re.get(), c[i].get(), MPFR_RNDN);
      mpfr_set(out.im.get(), tmp.im.get(), MPFR_RNDN);
    }
  };

  double tol = std::ldexp(1.0, -static_cast<int>(prec) + 16);
  int max_iter = 200 + 20 * d;
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = 0;
    for (int k = 0; k < d; ++k) {
      MC num(prec), den(prec), diff(prec), corr(prec);
      eval(z[k], num);
      mpfr_set(den.re.get(), c[d].get(), MPFR_RNDN);
      mpfr_set_zero(den.im.get(), 1);
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        mc_sub(diff, z[k], z[j]);
        if (mpfr_zero_p(diff.re.get()) && mpfr_zero_p(diff.im.get()))
          mpfr_set_d(diff.re.get(), 1e-20, MPFR_RNDN);
        MC tmp(prec);
        mc_mul(tmp, den, diff, t1, t2);
        den = std::move(tmp);
      }
      mc_div(corr, num, den, t1, t2);
      mpfr_sub(z[k].re.get(), z[k].re.get(), corr.re.get(), MPFR_RNDN);
      mpfr_sub(z[k].im.get(), z[k].im.get(), corr.im.get(), MPFR_RNDN);
      worst = std::max(worst, mc_abs_d(corr) / std::max(1.0, mc_abs_d(z[k])));
    }
    if (worst < tol) break;
  }
  return z;
}

BigRational mpfr_to_rational(const Mpfr& x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x.get());
  return q;
}

// Newton contraction certificate: returns a tightened enclosure if the disc
// is proven to contain exactly one root of f, nullopt otherwise.
std::optional<ComplexBall> certify_disc(const IntPolynomial& f, const IntPolynomial& fp,
                                        const ComplexBall& disc) {
  ComplexBall deriv = fp.eval(disc);
  if (deriv.contains_zero()) return std::nullopt;
  ComplexBall center = disc.midpoint();
  ComplexBall newton = center - f.eval(center) / deriv;
  if (!ComplexBall::inside(newton, disc)) return std::nullopt;
  // Tighten: once the root is inside, each Newton image contains it again
  // by the mean-value enclosure, so keep the smaller of the two.
  ComplexBall best = newton;
  for (int pass = 0; pass < 3; ++pass) {
    ComplexBall d2 = fp.eval(best);
    if (d2.contains_zero()) break;
    ComplexBall c2 = best.midpoint();
    ComplexBall n2 = c2 - f.eval(c2) / d2;
    if (mpfr_cmp(n2.rad().get(), best.rad().get()) >= 0) break;
    best = n2;
  }
  return best;
}

// Exact real-root certificate over the disc's real section
// [mid_re - w, mid_re + w] with w = sqrt(rad^2 - mid_im^2) rounded down,
// so the tested segment lies inside the disc.
bool certify_real(const IntPolynomial& f, const ComplexBall& disc) {
  if (!disc.intersects_real_axis()) return false;
  Mpfr w(disc.prec()), t(disc.prec());
  mpfr_sqr(w.get(), disc.rad().get(), MPFR_RNDD);
  mpfr_sqr(t.get(), disc.mid_im().get(), MPFR_RNDU);
  mpfr_sub(w.get(), w.get(), t.get(), MPFR_RNDD);
  if (mpfr_sgn(w.get()) < 0) return false;
  mpfr_sqrt(w.get(), w.get(), MPFR_RNDD);
  Mpfr lo(disc.prec()), hi(disc.prec());
  mpfr_sub(lo.get(), disc.mid_re().get(), w.get(), MPFR_RNDU);
  mpfr_add(hi.get(), disc.mid_re().get(), w.get(), MPFR_RNDD);
  if (mpfr_cmp(lo.get(), hi.get()) > 0) return false;
  BigRational a = mpfr_to_rational(lo), b = mpfr_to_rational(hi);
  int sa = f.sign_at(a), sb = f.sign_at(b);
  return sa == 0 || sb == 0 || sa * sb < 0;
}

struct FactorTask {
  IntPolynomial poly;
  IntPolynomial deriv;
  int multiplicity;
};

}  // namespace

std::vector<RootBall> isolate_roots(const IntPolynomial& p, int precision) {
  if (p.is_zero()) throw error("isolate_roots: zero polynomial");
  if (p.degree() == 0) return {};

  std::vector<FactorTask> tasks;
  for (auto& [factor, mult] : p.squarefree_decomposition()) {
    if (factor.degree() == 0) continue;
    tasks.push_back({factor, factor.derivative(), mult});
  }

  const int max_prec = std::max(kMaxPrecision, 4 * precision);
  for (int work = std::max(precision, 64); work <= max_prec; work *= 2) {
    std::vector<RootBall> out;
    bool ok = true;
    for (const auto& task : tasks) {
      const auto& f = task.poly;
      int d = f.degree();
      if (d == 1) {
        GaussianRational root(make_rational(-f.coeff(0), f.coeff(1)));
        ComplexBall b = ComplexBall::from_gaussian(root, work);
        out.push_back({b, task.multiplicity, root.im == 0});
        continue;
      }
      std::vector<MC> seeds = durand_kerner(f.coeffs(), work);
      if (getenv("CREMONA_DEBUG_ROOTS"))
        fprintf(stderr, "task deg=%d mult=%d work=%d seeds=%zu\n", d, task.multiplicity, work,
                seeds.size());
      // one disc per seed; radius from nearest-neighbour separation
      for (int k = 0; k < d && ok; ++k) {
        double sep = 1e300;
        for (int j = 0; j < d; ++j) {
          if (j == k) continue;
          MC diff((mpfr_prec_t)work);
          mc_sub(diff, seeds[k], seeds[j]);
          sep = std::min(sep, mc_abs_d(diff));
        }
        // The disc must contain the true root (seed error ~2^-work) yet
        // stay small enough that interval Horner of f' does not blow up.
        double scale = std::max(1.0, mc_abs_d(seeds[k]));
        double r0 = std::min(sep / 8.0,
                             std::max(std::ldexp(1.0, -(3 * work) / 8), 1e-14) * scale);
        std::optional<ComplexBall> cert;
        for (int grow = 0; grow < 5 && !cert; ++grow) {
          ComplexBall disc = ComplexBall::from_mpfr(seeds[k].re, seeds[k].im).inflate(r0);
          try {
            cert = certify_disc(f, task.deriv, disc);
          } catch (const precision_exhausted&) {
            cert = std::nullopt;
          }
          r0 = std::min(r0 * 100, sep / 8.0);
        }
        if (!cert) {
          if (getenv("CREMONA_DEBUG_ROOTS"))
            fprintf(stderr, "certify failed: deg=%d k=%d seed=(%.6g,%.6g) r0=%.3g sep=%.3g work=%d\n",
                    d, k, mpfr_get_d(seeds[k].re.get(), MPFR_RNDN),
                    mpfr_get_d(seeds[k].im.get(), MPFR_RNDN), r0, sep, work);
          ok = false;
          break;
        }
        out.push_back({*cert, task.multiplicity, certify_real(f, *cert)});
      }
      if (!ok) break;
    }
    if (!ok) continue;
    // global pairwise disjointness across all factors
    bool disjoint = true;
    for (size_t i = 0; i < out.size() && disjoint; ++i)
      for (size_t j = i + 1; j < out.size() && disjoint; ++j)
        if (!ComplexBall::disjoint(out[i].ball, out[j].ball)) {
          if (getenv("CREMONA_DEBUG_ROOTS"))
            fprintf(stderr, "overlap: [%zu] %s vs [%zu] %s\n", i, out[i].ball.str(8).c_str(), j,
                    out[j].ball.str(8).c_str());
          disjoint = false;
        }
    if (!disjoint) continue;
    return out;
  }
  throw precision_exhausted("root isolation failed up to maximal precision");
}

RealBall max_root_modulus(const IntPolynomial& p, int precision) {
  auto roots = isolate_roots(p, precision);
  if (roots.empty()) throw error("max_root_modulus: constant polynomial");
  Mpfr best_lo(precision), best_hi(precision);
  mpfr_set_inf(best_lo.get(), -1);
  mpfr_set_inf(best_hi.get(), -1);
  for (const auto& r : roots) {
    RealBall a = r.ball.abs();
    Mpfr lo = a.lower(), hi = a.upper();
    if (mpfr_cmp(lo.get(), best_lo.get()) > 0) mpfr_set(best_lo.get(), lo.get(), MPFR_RNDD);
    if (mpfr_cmp(hi.get(), best_hi.get()) > 0) mpfr_set(best_hi.get(), hi.get(), MPFR_RNDU);
  }
  return RealBall::from_endpoints(best_lo, best_hi, precision);
}

RealBall spectral_radius(const IntegerMatrix& m, int precision) {
  if (!m.is_square()) throw non_square();
  IntPolynomial chi = char_poly(m);
  const int max_prec = std::max(kMaxPrecision, 4 * precision);
  for (int work = std::max(precision, 64); work <= max_prec; work *= 2) {
    RealBall sr = max_root_modulus(chi, work);
    // required: rad <= 2^(-precision/2) * max(1, |mid|)
    Mpfr bound(kRadiusPrecision);
    mpfr_abs(bound.get(), sr.mid().get(), MPFR_RNDD);
    if (mpfr_cmp_ui(bound.get(), 1) < 0) mpfr_set_ui(bound.get(), 1, MPFR_RNDD);
    mpfr_mul_2si(bound.get(), bound.get(), -precision / 2, MPFR_RNDD);
    if (mpfr_cmp(sr.rad().get(), bound.get()) <= 0) return sr;
  }
  throw precision_exhausted("spectral radius certification failed");
}

std::optional<RealBall> largest_real_root(const IntPolynomial& p, int precision) {
  auto roots = isolate_roots(p, precision);
  std::optional<RealBall> best;
  for (const auto& r : roots) {
    if (!r.is_real) continue;
    Mpfr lo(r.ball.prec()), hi(r.ball.prec());
    mpfr_sub(lo.get(), r.ball.mid_re().get(), r.ball.rad().get(), MPFR_RNDD);
    mpfr_add(hi.get(), r.ball.mid_re().get(), r.ball.rad().get(), MPFR_RNDU);
    RealBall enc = RealBall::from_endpoints(lo, hi, r.ball.prec());
    if (!best || RealBall::certainly_less(*best, enc)) best = enc;
  }
  return best;
}

}  // namespace cremona
