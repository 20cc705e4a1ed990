#include "cremona/mpoly.hpp"

#include <array>
#include <cassert>
#include <cmath>

namespace cremona {

namespace detail {

using CD = std::complex<double>;

std::vector<CD> numeric_roots(const std::vector<GaussianRational>& coeffs) {
  int d = static_cast<int>(coeffs.size()) - 1;
  while (d >= 0 && coeffs[d].is_zero()) --d;
  if (d <= 0) return {};
  std::vector<CD> c(d + 1);
  for (int i = 0; i <= d; ++i) {
    c[i] = {coeffs[i].re.get_d(), coeffs[i].im.get_d()};
    if (!std::isfinite(c[i].real()) || !std::isfinite(c[i].imag())) return {};
  }
  std::vector<CD> z(d);
  for (int k = 0; k < d; ++k) z[k] = std::polar(1.7, 2 * M_PI * k / d + 0.39);
  for (int it = 0; it < 300; ++it) {
    double worst = 0;
    for (int k = 0; k < d; ++k) {
      CD num = c[d];
      for (int i = d - 1; i >= 0; --i) num = num * z[k] + c[i];
      CD den = c[d];
      for (int j = 0; j < d; ++j)
        if (j != k) den *= (z[k] - z[j]);
      if (std::abs(den) < 1e-300) continue;
      CD corr = num / den;
      z[k] -= corr;
      worst = std::max(worst, std::abs(corr));
    }
    if (worst < 1e-13) break;
  }
  return z;
}

namespace {

std::optional<BigRational> snap_rational(double x, long max_den, double tol) {
  double v = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 40; ++it) {
    double fl = std::floor(v);
    if (fl > 1e17 || fl < -1e17) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - x) < tol) return make_rational(p1, q1);
    double frac = v - fl;
    if (std::abs(frac) < 1e-15) break;
    v = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace

std::optional<GaussianRational> snap_gaussian(CD z, long max_den, double tol) {
  auto re = snap_rational(z.real(), max_den, tol);
  auto im = snap_rational(z.imag(), max_den, tol);
  if (!re || !im) return std::nullopt;
  return GaussianRational{*re, *im};
}

std::vector<GaussianRational> restrict_to_line(const QiPoly& f,
                                               const std::array<GaussianRational, 3>& P,
                                               const std::array<GaussianRational, 3>& Q) {
  using GR = GaussianRational;
  std::array<std::vector<std::vector<GR>>, 3> pows;
  for (int v = 0; v < 3; ++v) {
    int dv = std::max(0, f.degree_in(v));
    pows[v].resize(dv + 1);
    pows[v][0] = {GR(1)};
    for (int e = 1; e <= dv; ++e) {
      const auto& prev = pows[v][e - 1];
      std::vector<GR> cur(prev.size() + 1, GR(0));
      for (size_t i = 0; i < prev.size(); ++i) {
        cur[i] += prev[i] * P[v];
        cur[i + 1] += prev[i] * Q[v];
      }
      pows[v][e] = std::move(cur);
    }
  }
  std::vector<GR> out;
  for (const auto& [m, val] : f.terms()) {
    std::vector<GR> prod = pows[0][m.a];
    for (const auto* next : {&pows[1][m.b], &pows[2][m.c]}) {
      std::vector<GR> acc(prod.size() + next->size() - 1, GR(0));
      for (size_t i = 0; i < prod.size(); ++i)
        for (size_t j = 0; j < next->size(); ++j) acc[i + j] += prod[i] * (*next)[j];
      prod = std::move(acc);
    }
    if (out.size() < prod.size()) out.resize(prod.size(), GR(0));
    for (size_t i = 0; i < prod.size(); ++i) out[i] += prod[i] * val;
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

std::vector<QiPoly> candidate_linear_factors(const QiPoly& f) {
  using GR = GaussianRational;
  auto pt = [](long a, long b, long c) {
    return std::array<GR, 3>{GR(a), GR(b), GR(c)};
  };
  const auto P1 = pt(1, 0, 2), Q1 = pt(0, 1, 5);
  const auto P2 = pt(3, 1, 0), Q2 = pt(-1, 2, 7);
  auto r1 = numeric_roots(restrict_to_line(f, P1, Q1));
  auto r2 = numeric_roots(restrict_to_line(f, P2, Q2));
  auto point_on = [](const std::array<GR, 3>& P, const std::array<GR, 3>& Q, CD t) {
    std::array<CD, 3> p;
    for (int v = 0; v < 3; ++v)
      p[v] = CD{P[v].re.get_d(), P[v].im.get_d()} + t * CD{Q[v].re.get_d(), Q[v].im.get_d()};
    return p;
  };
  std::vector<QiPoly> out;
  for (CD t1 : r1)
    for (CD t2 : r2) {
      auto A = point_on(P1, Q1, t1);
      auto B = point_on(P2, Q2, t2);
      std::array<CD, 3> nvec{A[1] * B[2] - A[2] * B[1], A[2] * B[0] - A[0] * B[2],
                             A[0] * B[1] - A[1] * B[0]};
      double scale = std::max({std::abs(nvec[0]), std::abs(nvec[1]), std::abs(nvec[2])});
      if (!(scale > 1e-9) || !std::isfinite(scale)) continue;
      int piv = -1;
      for (int v = 0; v < 3; ++v)
        if (piv < 0 && std::abs(nvec[v]) > 0.5 * scale) piv = v;
      QiPoly form;
      bool ok = true;
      for (int v = 0; v < 3; ++v) {
        CD c = nvec[v] / nvec[piv];
        if (std::abs(c) < 1e-9) continue;
        auto g = snap_gaussian(c);
        if (!g) {
          ok = false;
          break;
        }
        form = form + QiPoly::variable(v).scaled(*g);
      }
      if (ok && !form.is_zero()) out.push_back(form.monic());
    }
  std::sort(out.begin(), out.end(),
            [](const QiPoly& a, const QiPoly& b) { return a.str() < b.str(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

namespace {

std::vector<QiPoly> to_univariate(const QiPoly& f, int var) {
  std::vector<QiPoly> cs;
  for (const auto& [m, v] : f.terms()) {
    int e = var == 0 ? m.a : var == 1 ? m.b : m.c;
    Mono3 rest = m;
    (var == 0 ? rest.a : var == 1 ? rest.b : rest.c) = 0;
    if (static_cast<int>(cs.size()) <= e) cs.resize(e + 1);
    cs[e] = cs[e] + QiPoly::term(rest, v);
  }
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
  return cs;
}

QiPoly from_univariate(const std::vector<QiPoly>& cs, int var) {
  QiPoly f;
  for (size_t e = 0; e < cs.size(); ++e)
    f = f + cs[e].shifted(var == 0 ? Mono3{static_cast<int>(e), 0, 0}
                          : var == 1 ? Mono3{0, static_cast<int>(e), 0}
                                     : Mono3{0, 0, static_cast<int>(e)});
  return f;
}

std::array<bool, 3> vars_present(const QiPoly& f) {
  std::array<bool, 3> p{false, false, false};
  for (const auto& [m, v] : f.terms()) {
    if (m.a) p[0] = true;
    if (m.b) p[1] = true;
    if (m.c) p[2] = true;
  }
  return p;
}

detail::UPoly<GaussianRational> to_dense_univariate(const QiPoly& f, int var) {
  detail::UPoly<GaussianRational> u;
  for (const auto& [m, v] : f.terms()) {
    int e = var == 0 ? m.a : var == 1 ? m.b : m.c;
    if (static_cast<int>(u.size()) <= e) u.resize(e + 1, GaussianRational(0));
    u[e] += v;
  }
  detail::utrim(u);
  return u;
}

QiPoly from_dense_univariate(const detail::UPoly<GaussianRational>& u, int var) {
  QiPoly f;
  for (size_t e = 0; e < u.size(); ++e) {
    if (u[e].is_zero()) continue;
    Mono3 m;
    (var == 0 ? m.a : var == 1 ? m.b : m.c) = static_cast<int>(e);
    f = f + QiPoly::term(m, u[e]);
  }
  return f;
}

QiPoly coeff_content(const std::vector<QiPoly>& cs) {
  QiPoly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : mpoly_gcd(g, c);
    if (g.is_constant()) return QiPoly::constant(GaussianRational(1));
  }
  return g.is_zero() ? QiPoly::constant(GaussianRational(1)) : g.monic();
}

std::vector<QiPoly> divide_coeffs(const std::vector<QiPoly>& cs, const QiPoly& d) {
  std::vector<QiPoly> out(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_zero()) continue;
    auto q = cs[i].divide_exact(d);
    if (!q) throw error("content division not exact");
    out[i] = *q;
  }
  return out;
}

// pseudo-remainder in R[v] where R is the polynomial ring in the other vars
std::vector<QiPoly> pseudo_rem(std::vector<QiPoly> a, const std::vector<QiPoly>& b) {
  const QiPoly& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  auto trim = [](std::vector<QiPoly>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(a);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    QiPoly la = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    // a <- lb*a - la * v^shift * b
    std::vector<QiPoly> next(a.size());
    for (size_t i = 0; i < a.size(); ++i) next[i] = lb * a[i];
    for (int i = 0; i <= db; ++i) next[shift + i] = next[shift + i] - la * b[i];
    a = std::move(next);
    trim(a);
  }
  return a;
}

}  // namespace

QiPoly mpoly_gcd(const QiPoly& f, const QiPoly& g) {
  if (f.is_zero()) return g.is_zero() ? g : g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return QiPoly::constant(GaussianRational(1));

  // split off monomial content
  Mono3 mf = f.monomial_content(), mg = g.monomial_content();
  Mono3 common{std::min(mf.a, mg.a), std::min(mf.b, mg.b), std::min(mf.c, mg.c)};
  QiPoly fp = f.monomial_quotient(mf);
  QiPoly gp = g.monomial_quotient(mg);

  auto vf = vars_present(fp), vg = vars_present(gp);
  int shared = -1;
  int single_f = -1, single_g = -1, nf = 0, ng = 0;
  for (int v = 0; v < 3; ++v) {
    if (vf[v] && vg[v] && shared < 0) shared = v;
    if (vf[v]) {
      single_f = v;
      ++nf;
    }
    if (vg[v]) {
      single_g = v;
      ++ng;
    }
  }
  QiPoly core;
  if (shared < 0) {
    core = QiPoly::constant(GaussianRational(1));
  } else if (nf == 1 && ng == 1) {
    // plain univariate over the field
    auto u = detail::upoly_gcd(to_dense_univariate(fp, shared), to_dense_univariate(gp, shared));
    core = from_dense_univariate(u, shared);
  } else {
    int var = shared;
    auto a = to_univariate(fp, var);
    auto b = to_univariate(gp, var);
    QiPoly ca = coeff_content(a), cb = coeff_content(b);
    a = divide_coeffs(a, ca);
    b = divide_coeffs(b, cb);
    QiPoly cont = mpoly_gcd(ca, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
      auto r = pseudo_rem(a, b);
      a = std::move(b);
      if (r.empty()) {
        b.clear();
      } else {
        QiPoly cr = coeff_content(r);
        b = divide_coeffs(r, cr);
      }
    }
    QiPoly pp = from_univariate(a, var);
    core = cont * pp;
  }
  return core.shifted(common).monic();
}

QiPoly mpoly_gcd3(const QiPoly& f0, const QiPoly& f1, const QiPoly& f2) {
  QiPoly g = mpoly_gcd(f0, f1);
  if (g.is_constant()) return QiPoly::constant(GaussianRational(1));
  g = mpoly_gcd(g, f2);
  return g;
}

// ------------------------------------------------- modular certificate

namespace {

constexpr uint64_t kP = 2147483647;  // 2^31 - 1, = 3 mod 4, so F_p[i] is a field

struct Fp2 {
  uint64_t re = 0, im = 0;
  bool is_zero() const { return re == 0 && im == 0; }
};

uint64_t addp(uint64_t a, uint64_t b) {
  uint64_t s = a + b;
  return s >= kP ? s - kP : s;
}
uint64_t subp(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kP - b; }
uint64_t mulp(uint64_t a, uint64_t b) { return (a * b) % kP; }
uint64_t powp(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulp(r, a);
    a = mulp(a, a);
    e >>= 1;
  }
  return r;
}
uint64_t invp(uint64_t a) { return powp(a, kP - 2); }

Fp2 add2(Fp2 a, Fp2 b) { return {addp(a.re, b.re), addp(a.im, b.im)}; }
Fp2 sub2(Fp2 a, Fp2 b) { return {subp(a.re, b.re), subp(a.im, b.im)}; }
Fp2 mul2(Fp2 a, Fp2 b) {
  return {subp(mulp(a.re, b.re), mulp(a.im, b.im)), addp(mulp(a.re, b.im), mulp(a.im, b.re))};
}
Fp2 inv2(Fp2 a) {
  uint64_t n = addp(mulp(a.re, a.re), mulp(a.im, a.im));
  uint64_t ni = invp(n);
  return {mulp(a.re, ni), mulp(subp(0, a.im), ni)};
}

std::optional<uint64_t> reduce_rational(const BigRational& q) {
  BigInt den = q.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), kP)) return std::nullopt;
  uint64_t n = mpz_fdiv_ui(q.get_num().get_mpz_t(), kP);
  uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), kP);
  return mulp(n, invp(d));
}

std::optional<Fp2> reduce_gaussian(const GaussianRational& z) {
  auto r = reduce_rational(z.re);
  auto i = reduce_rational(z.im);
  if (!r || !i) return std::nullopt;
  return Fp2{*r, *i};
}

struct ReducedPoly {
  std::vector<std::pair<Mono3, Fp2>> terms;
  int deg[3] = {0, 0, 0};
};

// Reduces all coefficients mod p once; nullopt if a denominator hits p.
std::optional<ReducedPoly> reduce_poly(const QiPoly& f) {
  ReducedPoly out;
  out.terms.reserve(f.term_count());
  for (const auto& [m, v] : f.terms()) {
    auto c = reduce_gaussian(v);
    if (!c) return std::nullopt;
    out.terms.push_back({m, *c});
    out.deg[0] = std::max(out.deg[0], m.a);
    out.deg[1] = std::max(out.deg[1], m.b);
    out.deg[2] = std::max(out.deg[2], m.c);
  }
  return out;
}

Fp2 eval_fp2(const ReducedPoly& f, const std::array<Fp2, 3>& pt) {
  std::array<std::vector<Fp2>, 3> pows;
  for (int v = 0; v < 3; ++v) {
    pows[v].resize(f.deg[v] + 1);
    pows[v][0] = Fp2{1, 0};
    for (int e = 1; e <= f.deg[v]; ++e) pows[v][e] = mul2(pows[v][e - 1], pt[v]);
  }
  Fp2 acc{0, 0};
  for (const auto& [m, c] : f.terms)
    acc = add2(acc, mul2(mul2(c, pows[0][m.a]), mul2(pows[1][m.b], pows[2][m.c])));
  return acc;
}

// Newton interpolation through values at t = 0..n.
std::vector<Fp2> interpolate(const std::vector<Fp2>& values) {
  int n = static_cast<int>(values.size());
  std::vector<Fp2> dd = values;  // divided differences
  for (int level = 1; level < n; ++level)
    for (int i = n - 1; i >= level; --i) {
      Fp2 num = sub2(dd[i], dd[i - 1]);
      uint64_t inv = invp(static_cast<uint64_t>(level) % kP);
      dd[i] = {mulp(num.re, inv), mulp(num.im, inv)};
    }
  // expand newton form dd[0] + dd[1](t-0) + dd[2](t)(t-1)...
  std::vector<Fp2> poly{dd[0]};
  std::vector<Fp2> basis{Fp2{1, 0}};
  for (int k = 1; k < n; ++k) {
    // basis *= (t - (k-1))
    std::vector<Fp2> nb(basis.size() + 1);
    uint64_t c = (k - 1) % kP;
    for (size_t i = 0; i < basis.size(); ++i) {
      nb[i + 1] = add2(nb[i + 1], basis[i]);
      nb[i] = sub2(nb[i], {mulp(basis[i].re, c), mulp(basis[i].im, c)});
    }
    basis = std::move(nb);
    if (poly.size() < basis.size()) poly.resize(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) poly[i] = add2(poly[i], mul2(basis[i], dd[k]));
  }
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  return poly;
}

std::vector<Fp2> fp2_gcd(std::vector<Fp2> a, std::vector<Fp2> b) {
  auto trim = [](std::vector<Fp2>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    Fp2 linv = inv2(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      Fp2 f = mul2(a.back(), linv);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] = sub2(a[shift + i], mul2(f, b[i]));
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace

// ------------------------------------------------------------------
// modular content gcd: Brown-style dense interpolation over F_q,
// q = p^2 for 61-bit primes p = 3 mod 4, CRT across primes, rational
// reconstruction, and an exact divisibility verification back over Q(i).

namespace {

constexpr uint64_t kPrimes61[] = {2305843009213693951ULL, 2305843009213693907ULL,
                                  2305843009213693723ULL, 2305843009213693487ULL,
                                  2305843009213693123ULL, 2305843009213692967ULL};

struct Zq {
  uint64_t P;
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= P ? s - P : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + P - b; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % P);
  }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, P - 2); }
};

struct Fq {
  uint64_t re = 0, im = 0;
  bool is_zero() const { return re == 0 && im == 0; }
};

Fq addq(const Zq& z, Fq a, Fq b) { return {z.add(a.re, b.re), z.add(a.im, b.im)}; }
Fq subq(const Zq& z, Fq a, Fq b) { return {z.sub(a.re, b.re), z.sub(a.im, b.im)}; }
Fq mulq(const Zq& z, Fq a, Fq b) {
  return {z.sub(z.mul(a.re, b.re), z.mul(a.im, b.im)),
          z.add(z.mul(a.re, b.im), z.mul(a.im, b.re))};
}
Fq invq(const Zq& z, Fq a) {
  uint64_t n = z.add(z.mul(a.re, a.re), z.mul(a.im, a.im));
  uint64_t ni = z.inv(n);
  return {z.mul(a.re, ni), z.mul(z.sub(0, a.im), ni)};
}

std::optional<uint64_t> reduce_mod(const Zq& z, const BigRational& q) {
  if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), z.P)) return std::nullopt;
  uint64_t n = mpz_fdiv_ui(q.get_num().get_mpz_t(), z.P);
  uint64_t d = mpz_fdiv_ui(q.get_den().get_mpz_t(), z.P);
  return z.mul(n, z.inv(d));
}

std::optional<Fq> reduce_mod(const Zq& z, const GaussianRational& v) {
  auto r = reduce_mod(z, v.re), i = reduce_mod(z, v.im);
  if (!r || !i) return std::nullopt;
  return Fq{*r, *i};
}

using UQ = std::vector<Fq>;  // univariate over F_q, ascending

void uq_trim(UQ& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UQ uq_gcd(const Zq& z, UQ a, UQ b) {
  uq_trim(a);
  uq_trim(b);
  while (!b.empty()) {
    Fq linv = invq(z, b.back());
    while (a.size() >= b.size() && !a.empty()) {
      Fq f = mulq(z, a.back(), linv);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = subq(z, a[shift + i], mulq(z, f, b[i]));
      uq_trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    Fq linv = invq(z, a.back());
    for (auto& c : a) c = mulq(z, c, linv);
  }
  return a;
}

struct Biv {
  std::vector<std::pair<std::pair<int, int>, Fq>> terms;  // (x-exp, y-exp)
  int deg_x = 0, deg_y = 0;
};

std::optional<Biv> dehomogenize_mod(const Zq& z, const QiPoly& f) {
  Biv out;
  for (const auto& [m, v] : f.terms()) {
    auto c = reduce_mod(z, v);
    if (!c) return std::nullopt;
    out.terms.push_back({{m.a, m.b}, *c});
    out.deg_x = std::max(out.deg_x, m.a);
    out.deg_y = std::max(out.deg_y, m.b);
  }
  return out;
}

UQ eval_at_y(const Zq& z, const Biv& f, uint64_t y) {
  std::vector<Fq> ypow(f.deg_y + 1);
  ypow[0] = {1, 0};
  for (int e = 1; e <= f.deg_y; ++e) ypow[e] = mulq(z, ypow[e - 1], Fq{y, 0});
  UQ out(f.deg_x + 1);
  for (const auto& [ab, c] : f.terms)
    out[ab.first] = addq(z, out[ab.first], mulq(z, c, ypow[ab.second]));
  uq_trim(out);
  return out;
}

// One bivariate term of a per-prime gcd image.
struct ImageTerm {
  int a, b;
  Fq c;
};

enum class ImageKind { Coprime, Image, Failed };

struct PrimeImage {
  ImageKind kind = ImageKind::Failed;
  std::vector<ImageTerm> terms;  // sorted by (a, b); grlex-leading coeff = 1
};

PrimeImage gcd_image_mod_p(const std::array<QiPoly, 3>& comps, uint64_t P) {
  Zq z{P};
  PrimeImage out;
  std::array<std::optional<Biv>, 3> red;
  for (int i = 0; i < 3; ++i) {
    red[i] = dehomogenize_mod(z, comps[i]);
    if (!red[i]) return out;
  }
  int dy = std::max({red[0]->deg_y, red[1]->deg_y, red[2]->deg_y});
  int samples_needed = 2 * dy + 2;

  struct Sample {
    uint64_t y;
    UQ scaled;
  };
  std::vector<Sample> samples;
  int gdeg = INT32_MAX;
  uint64_t y = 1;
  for (int tries = 0; tries < samples_needed * 3 + 16 &&
                      static_cast<int>(samples.size()) < samples_needed;
       ++tries, ++y) {
    UQ a = eval_at_y(z, *red[0], y), b = eval_at_y(z, *red[1], y), c = eval_at_y(z, *red[2], y);
    if (static_cast<int>(a.size()) - 1 != red[0]->deg_x) continue;
    if (a.empty() || b.empty() || c.empty()) continue;
    Fq gamma = a.back();
    UQ g = uq_gcd(z, a, uq_gcd(z, b, c));
    int d = static_cast<int>(g.size()) - 1;
    if (d == 0) {
      out.kind = ImageKind::Coprime;
      return out;
    }
    if (d < gdeg) {
      gdeg = d;
      samples.clear();
    }
    if (d > gdeg) continue;
    for (auto& cf : g) cf = mulq(z, cf, gamma);
    samples.push_back({y, std::move(g)});
  }
  if (static_cast<int>(samples.size()) < samples_needed) return out;

  // Newton interpolation in y per x-coefficient
  int nx = gdeg + 1, ns = static_cast<int>(samples.size());
  std::vector<std::vector<Fq>> dd(nx, std::vector<Fq>(ns));
  for (int k = 0; k < nx; ++k)
    for (int s = 0; s < ns; ++s)
      dd[k][s] = k < static_cast<int>(samples[s].scaled.size()) ? samples[s].scaled[k] : Fq{};
  for (int level = 1; level < ns; ++level)
    for (int s = ns - 1; s >= level; --s) {
      Fq di = invq(z, Fq{z.sub(samples[s].y, samples[s - level].y), 0});
      for (int k = 0; k < nx; ++k) dd[k][s] = mulq(z, subq(z, dd[k][s], dd[k][s - 1]), di);
    }
  std::vector<UQ> coeff_y(nx);
  for (int k = 0; k < nx; ++k) {
    UQ poly{dd[k][0]};
    UQ basis{Fq{1, 0}};
    for (int s = 1; s < ns; ++s) {
      UQ nb(basis.size() + 1);
      uint64_t root = samples[s - 1].y;
      for (size_t i = 0; i < basis.size(); ++i) {
        nb[i + 1] = addq(z, nb[i + 1], basis[i]);
        nb[i] = subq(z, nb[i], mulq(z, basis[i], Fq{root, 0}));
      }
      basis = std::move(nb);
      if (poly.size() < basis.size()) poly.resize(basis.size());
      for (size_t i = 0; i < basis.size(); ++i)
        poly[i] = addq(z, poly[i], mulq(z, basis[i], dd[k][s]));
    }
    uq_trim(poly);
    coeff_y[k] = std::move(poly);
  }

  // strip the spurious y-content in F_q; the primitive part has the gcd's
  // own small heights
  UQ ycontent;
  for (int k = 0; k < nx; ++k) {
    if (coeff_y[k].empty()) continue;
    ycontent = ycontent.empty() ? coeff_y[k] : uq_gcd(z, ycontent, coeff_y[k]);
    if (ycontent.size() == 1) break;
  }
  if (ycontent.size() > 1) {
    for (int k = 0; k < nx; ++k) {
      if (coeff_y[k].empty()) continue;
      UQ num = coeff_y[k];
      UQ quo(num.size() - ycontent.size() + 1);
      Fq linv = invq(z, ycontent.back());
      for (int d = static_cast<int>(num.size()) - 1;
           d >= static_cast<int>(ycontent.size()) - 1; --d) {
        Fq f = mulq(z, num[d], linv);
        if (f.is_zero()) continue;
        quo[d - ycontent.size() + 1] = f;
        for (size_t i = 0; i < ycontent.size(); ++i)
          num[d - ycontent.size() + 1 + i] =
              subq(z, num[d - ycontent.size() + 1 + i], mulq(z, f, ycontent[i]));
      }
      uq_trim(num);
      if (!num.empty()) return out;
      coeff_y[k] = std::move(quo);
    }
  }
  // normalize: grlex-leading bivariate coefficient scaled to 1
  Fq lead{};
  int best_tot = -1, best_a = -1;
  for (int k = 0; k < nx; ++k)
    for (size_t j = 0; j < coeff_y[k].size(); ++j) {
      if (coeff_y[k][j].is_zero()) continue;
      int tot = k + static_cast<int>(j);
      if (tot > best_tot || (tot == best_tot && k > best_a)) {
        best_tot = tot;
        best_a = k;
        lead = coeff_y[k][j];
      }
    }
  if (best_tot < 0) return out;
  Fq lead_inv = invq(z, lead);
  for (int k = 0; k < nx; ++k)
    for (size_t j = 0; j < coeff_y[k].size(); ++j)
      if (!coeff_y[k][j].is_zero())
        out.terms.push_back({k, static_cast<int>(j), mulq(z, coeff_y[k][j], lead_inv)});
  std::sort(out.terms.begin(), out.terms.end(), [](const ImageTerm& s, const ImageTerm& t) {
    return std::pair{s.a, s.b} < std::pair{t.a, t.b};
  });
  out.kind = ImageKind::Image;
  return out;
}

// Wang rational reconstruction modulo M
std::optional<BigRational> rational_reconstruct(const BigInt& u, const BigInt& M) {
  BigInt r0 = M, r1 = u % M;
  if (r1 < 0) r1 += M;
  BigInt t0(0), t1(1);
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), BigInt(M / 2).get_mpz_t());
  while (r1 >= bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  BigInt den = t1, num = r1;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (den > bound || den == 0) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g > 1) return std::nullopt;
  return make_rational(num, den);
}

std::optional<QiPoly> modular_content_gcd(const std::array<QiPoly, 3>& comps) {
  struct Acc {
    int a, b;
    BigInt re, im;  // CRT residues modulo M
  };
  std::vector<Acc> acc;
  BigInt M(1);
  int used = 0;
  for (uint64_t P : kPrimes61) {
    PrimeImage img = gcd_image_mod_p(comps, P);
    if (img.kind == ImageKind::Coprime) return QiPoly::constant(GaussianRational(1));
    if (img.kind == ImageKind::Failed) continue;
    if (used == 0) {
      for (const auto& t : img.terms) acc.push_back({t.a, t.b, BigInt(0), BigInt(0)});
    } else {
      // supports must agree; otherwise one of the primes was unlucky
      if (acc.size() != img.terms.size()) continue;
      bool same = true;
      for (size_t i = 0; i < acc.size(); ++i)
        same = same && acc[i].a == img.terms[i].a && acc[i].b == img.terms[i].b;
      if (!same) continue;
    }
    // CRT combine
    BigInt Pz(0);
    mpz_set_ui(Pz.get_mpz_t(), P);
    if (used == 0) {
      for (size_t i = 0; i < acc.size(); ++i) {
        mpz_set_ui(acc[i].re.get_mpz_t(), img.terms[i].c.re);
        mpz_set_ui(acc[i].im.get_mpz_t(), img.terms[i].c.im);
      }
      M = Pz;
    } else {
      BigInt Minv;  // M^{-1} mod P
      mpz_invert(Minv.get_mpz_t(), M.get_mpz_t(), Pz.get_mpz_t());
      for (size_t i = 0; i < acc.size(); ++i) {
        auto lift = [&](BigInt& cur, uint64_t target) {
          BigInt t(0);
          mpz_set_ui(t.get_mpz_t(), target);
          BigInt delta = ((t - cur % Pz) % Pz + Pz) % Pz;
          cur += M * ((delta * Minv) % Pz);
        };
        lift(acc[i].re, img.terms[i].c.re);
        lift(acc[i].im, img.terms[i].c.im);
      }
      M *= Pz;
    }
    ++used;
    // attempt reconstruction after 1, 2, 4, 6 primes
    if (used != 1 && used != 2 && used != 4 && used != 6) continue;
    QiPoly h;
    bool ok = true;
    for (const auto& t : acc) {
      auto re = rational_reconstruct(t.re, M);
      auto im = rational_reconstruct(t.im, M);
      if (!re || !im) {
        ok = false;
        break;
      }
      GaussianRational v{*re, *im};
      if (!v.is_zero()) h = h + QiPoly::term(Mono3{t.a, t.b, 0}, v);
    }
    if (!ok || h.is_zero()) continue;
    int total = h.total_degree();
    QiPoly hom;
    for (const auto& [m, v] : h.terms())
      hom = hom + QiPoly::term(Mono3{m.a, m.b, total - m.a - m.b}, v);
    hom = hom.monic();
    bool divides = true;
    for (const auto& c : comps) divides = divides && c.divide_exact(hom).has_value();
    if (divides) return hom;
  }
  return std::nullopt;
}

}  // namespace

bool gcd3_is_trivial_certificate(const QiPoly& f0, const QiPoly& f1, const QiPoly& f2) {
  const QiPoly* fs[3] = {&f0, &f1, &f2};
  std::array<std::optional<ReducedPoly>, 3> red;
  std::array<int, 3> deg{};
  for (int i = 0; i < 3; ++i) {
    deg[i] = fs[i]->total_degree();
    if (deg[i] < 0) return false;   // zero component: no certificate
    if (deg[i] > 4096) return false;  // interpolation cost grows as degree^2
    red[i] = reduce_poly(*fs[i]);
    if (!red[i]) return false;  // a coefficient does not reduce mod p
  }
  // small deterministic supply of lines (P + t Q)
  const std::array<std::array<long, 6>, 4> lines = {{{1, 2, 3, 5, -1, 7},
                                                     {2, -3, 1, 1, 4, -5},
                                                     {5, 1, -2, 3, 7, 2},
                                                     {-1, 4, 9, 2, -3, 11}}};
  for (const auto& L : lines) {
    std::array<Fp2, 3> P, Q;
    for (int v = 0; v < 3; ++v) {
      P[v] = {static_cast<uint64_t>((L[v] % static_cast<long>(kP) + kP) % kP), 0};
      Q[v] = {static_cast<uint64_t>((L[v + 3] % static_cast<long>(kP) + kP) % kP), 0};
    }
    std::vector<Fp2> restricted[3];
    bool line_ok = true;
    for (int i = 0; i < 3 && line_ok; ++i) {
      std::vector<Fp2> vals(deg[i] + 1);
      for (int t = 0; t <= deg[i]; ++t) {
        std::array<Fp2, 3> pt;
        for (int v = 0; v < 3; ++v) {
          Fp2 tv = {static_cast<uint64_t>(t) % kP, 0};
          pt[v] = add2(P[v], mul2(tv, Q[v]));
        }
        vals[t] = eval_fp2(*red[i], pt);
      }
      restricted[i] = interpolate(vals);
      // full degree required for the leading-coefficient argument
      if (static_cast<int>(restricted[i].size()) - 1 != deg[i]) line_ok = false;
    }
    if (!line_ok) continue;
    auto g = fp2_gcd(restricted[0], fp2_gcd(restricted[1], restricted[2]));
    if (g.size() == 1) return true;
  }
  return false;
}

std::optional<QiPoly> remove_common_factor(std::array<QiPoly, 3>& comps) {
  QiPoly removed = QiPoly::constant(GaussianRational(1));
  bool nontrivial = false;

  // monomial content first
  Mono3 m0 = comps[0].monomial_content(), m1 = comps[1].monomial_content(),
        m2 = comps[2].monomial_content();
  Mono3 common{std::min({m0.a, m1.a, m2.a}), std::min({m0.b, m1.b, m2.b}),
               std::min({m0.c, m1.c, m2.c})};
  if (common.total() > 0) {
    for (auto& c : comps) c = c.monomial_quotient(common);
    removed = removed.shifted(common);
    nontrivial = true;
  }

  for (int round = 0; round < 16; ++round) {
    bool monomial_bound = false;  // gcd divides a single term, hence is a monomial
    for (const auto& c : comps)
      if (!c.is_zero() && c.term_count() <= 1) monomial_bound = true;
    if (monomial_bound) break;  // monomial content is already out
    if (gcd3_is_trivial_certificate(comps[0], comps[1], comps[2])) break;
    // modular image + rational reconstruction, verified by exact division
    QiPoly g;
    if (auto lifted = modular_content_gcd(comps)) {
      g = *lifted;
    } else {
      g = mpoly_gcd3(comps[0], comps[1], comps[2]);
    }
    if (g.is_constant()) break;
    for (auto& c : comps) {
      auto q = c.divide_exact(g);
      if (!q) throw error("gcd does not divide a component");
      c = *q;
    }
    removed = removed * g;
    nontrivial = true;
  }
  if (!nontrivial) return std::nullopt;
  return removed;
}

QiPoly mpoly_resultant(const QiPoly& f, const QiPoly& g, int var) {
  auto a = to_univariate(f, var);
  auto b = to_univariate(g, var);
  int m = static_cast<int>(a.size()) - 1, n = static_cast<int>(b.size()) - 1;
  if (m < 0 || n < 0) return {};  // resultant with zero polynomial
  if (m == 0 && n == 0) return QiPoly::constant(GaussianRational(1));
  if (m == 0) {
    // Res(a0, g) = a0^deg(g)
    QiPoly r = QiPoly::constant(GaussianRational(1));
    for (int i = 0; i < n; ++i) r = r * a[0];
    return r;
  }
  if (n == 0) {
    QiPoly r = QiPoly::constant(GaussianRational(1));
    for (int i = 0; i < m; ++i) r = r * b[0];
    return r;
  }
  int size = m + n;
  std::vector<std::vector<QiPoly>> s(size, std::vector<QiPoly>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];

  // fraction-free Bareiss with exact polynomial divisions
  QiPoly prev = QiPoly::constant(GaussianRational(1));
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (s[k][k].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < size; ++i)
        if (!s[i][k].is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return {};  // singular: resultant is 0
      std::swap(s[k], s[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i)
      for (int j = k + 1; j < size; ++j) {
        QiPoly num = s[i][j] * s[k][k] - s[i][k] * s[k][j];
        if (num.is_zero()) {
          s[i][j] = {};
          continue;
        }
        auto q = num.divide_exact(prev);
        if (!q) throw error("Bareiss division not exact");
        s[i][j] = *q;
      }
    prev = s[k][k];
  }
  QiPoly det = s[size - 1][size - 1];
  return sign > 0 ? det : -det;
}

}  // namespace cremona
