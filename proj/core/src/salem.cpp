#include "cremona/salem.hpp"

#include <map>

#include "cremona/errors.hpp"

namespace cremona::salem {

bool is_reciprocal(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  IntPolynomial r = p.reversed();
  return r == p || r == -p;
}

const IntPolynomial& cyclotomic(int k) {
  static std::map<int, IntPolynomial> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  // x^k - 1 divided by the cyclotomics of the proper divisors
  IntPolynomial phi = IntPolynomial::x_power_minus_one(k);
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto q = phi.divide_exact(cyclotomic(d));
    if (!q) throw error("cyclotomic construction failed");
    phi = *q;
  }
  return cache.emplace(k, std::move(phi)).first->second;
}

namespace {

int euler_phi(int k) {
  int result = k;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

}  // namespace

CyclotomicSplit cyclotomic_part(const IntPolynomial& p) {
  if (p.is_zero()) throw error("cyclotomic_part of zero polynomial");
  CyclotomicSplit out;
  out.cyclo = IntPolynomial::one();
  out.rest = p;
  int d = p.degree();
  // phi(k) >= sqrt(k/2), so phi(k) <= d forces k <= 2 d^2 (+ slack)
  int kmax = 2 * d * d + 4;
  for (int k = 1; k <= kmax; ++k) {
    if (euler_phi(k) > d) continue;
    while (true) {
      auto q = out.rest.divide_exact(cyclotomic(k));
      if (!q) break;
      out.rest = *q;
      out.cyclo = out.cyclo * cyclotomic(k);
    }
  }
  return out;
}

PolyClassification classify(const IntPolynomial& p, int precision) {
  if (p.is_zero() || !p.is_monic()) throw error("classify requires a monic polynomial");
  if (p.constant() == 0) throw error("classify requires a nonzero constant term");

  auto split = cyclotomic_part(p);
  if (split.rest.degree() == 0) return {PolyKind::CyclotomicProduct, std::nullopt, 0, 0, 0};

  bool reciprocal = is_reciprocal(p);
  auto roots = isolate_roots(p, precision);
  const RealBall one = RealBall::from_long(1, precision);

  PolyClassification out{PolyKind::Other, std::nullopt, 0, 0, 0};
  std::optional<RootBall> outside_root;
  std::vector<ComplexBall> on_circle;
  std::optional<ComplexBall> best;  // max modulus enclosure, for leading_root
  int multiplicity_outside = 0;
  for (const auto& r : roots) {
    RealBall mod = r.ball.abs();
    if (!best || mpfr_cmp(best->abs().upper().get(), mod.upper().get()) < 0) best = r.ball;
    if (RealBall::certainly_less(one, mod)) {
      out.roots_outside += 1;
      multiplicity_outside += r.multiplicity;
      if (!outside_root || RealBall::certainly_less(outside_root->ball.abs(), mod))
        outside_root = r;
    } else if (RealBall::certainly_less(mod, one)) {
      out.roots_inside += 1;
    } else {
      out.roots_on_circle += 1;
      on_circle.push_back(r.ball);
    }
  }
  out.leading_root = outside_root ? outside_root->ball : best;

  bool one_real_outside = out.roots_outside == 1 && multiplicity_outside == 1 && outside_root &&
                          outside_root->is_real &&
                          mpfr_sgn(outside_root->ball.mid_re().get()) > 0;

  if (reciprocal && p.degree() == 2 && one_real_outside && out.roots_inside == 1 &&
      out.roots_on_circle == 0) {
    out.tag = PolyKind::QuadraticReciprocal;
    return out;
  }

  if (reciprocal && one_real_outside && out.roots_inside == 1 && out.roots_on_circle >= 1) {
    // the reciprocal pairing z <-> 1/z must consume every circle enclosure
    bool paired = true;
    for (const auto& b : on_circle) {
      ComplexBall inv = b.inverse();
      bool found = false;
      for (const auto& c : on_circle)
        if (ComplexBall::overlap(inv, c)) found = true;
      paired = paired && found;
    }
    if (paired) {
      out.tag = PolyKind::Salem;
      return out;
    }
  }
  return out;
}

IntPolynomial lehmer() {
  return IntPolynomial::from_coeffs({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
}

IntPolynomial chi_bk(int n) {
  if (n < 0) throw error("chi_bk requires n >= 0");
  // t^(n+1) (t^3 - t - 1) + t^3 + t^2 - 1
  IntPolynomial p = IntPolynomial::monomial(n + 1) * IntPolynomial::from_coeffs({-1, -1, 0, 1});
  return p + IntPolynomial::from_coeffs({-1, 0, 1, 1});
}

IntPolynomial chi_bk3(int n, int k) {
  if (n < 2 || k < 2) throw error("chi_bk3 requires n >= 2, k >= 2");
  std::vector<BigInt> c(n + 1, BigInt(-k));
  c[0] = 1;
  c[n] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial chi_rot(int n, int m) {
  if (n < 3 || m < 1) throw error("chi_rot requires n >= 3, m >= 1");
  IntPolynomial num = IntPolynomial::monomial(1) * IntPolynomial::x_power_minus_one(n * m);
  // t^n - 2 t^(n-1) + 1
  std::vector<BigInt> w(n + 1, BigInt(0));
  w[0] = 1;
  w[n - 1] = -2;
  w[n] = 1;
  num = num * IntPolynomial(std::move(w));
  IntPolynomial den = IntPolynomial::x_power_minus_one(n) * IntPolynomial::from_coeffs({-1, 1});
  auto q = num.divide_exact(den);
  if (!q) throw non_divisible("chi_rot displayed quotient has a remainder");
  return *q + IntPolynomial::one();
}

}  // namespace cremona::salem
