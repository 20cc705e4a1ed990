#include "cremona/families.hpp"

#include <algorithm>
#include <cmath>

#include "cremona/errors.hpp"

namespace cremona::families {

using GR = GaussianRational;
using projmap::evaluate;
using projmap::Indeterminate;
using projmap::make_map;
using projmap::normalize;

namespace {

QiPoly X() { return QiPoly::variable(0); }
QiPoly Y() { return QiPoly::variable(1); }
QiPoly Z() { return QiPoly::variable(2); }

}  // namespace

FamilyId family_from_string(const std::string& name) {
  if (name == "sigma") return FamilyId::Sigma;
  if (name == "rho") return FamilyId::Rho;
  if (name == "tau") return FamilyId::Tau;
  if (name == "bk_fab") return FamilyId::BK_fab;
  if (name == "bk_FAB") return FamilyId::BK_FAB;
  if (name == "bk_k") return FamilyId::BK_k;
  if (name == "bk_rot") return FamilyId::BK_rot;
  if (name == "mcmullen") return FamilyId::McMullen;
  if (name == "dg_phi") return FamilyId::DG_Phi;
  if (name == "dg_phi_alpha_phi") return FamilyId::DG_phiAlphaPhi;
  if (name == "dg_conic") return FamilyId::DG_conic;
  throw parse_error("unknown family: " + name);
}

std::string family_to_string(FamilyId id) {
  switch (id) {
    case FamilyId::Sigma: return "sigma";
    case FamilyId::Rho: return "rho";
    case FamilyId::Tau: return "tau";
    case FamilyId::BK_fab: return "bk_fab";
    case FamilyId::BK_FAB: return "bk_FAB";
    case FamilyId::BK_k: return "bk_k";
    case FamilyId::BK_rot: return "bk_rot";
    case FamilyId::McMullen: return "mcmullen";
    case FamilyId::DG_Phi: return "dg_phi";
    case FamilyId::DG_phiAlphaPhi: return "dg_phi_alpha_phi";
    case FamilyId::DG_conic: return "dg_conic";
  }
  throw error("unreachable family id");
}

MakeResult make_sigma() { return make_map({Y() * Z(), X() * Z(), X() * Y()}); }

MakeResult make_rho() { return make_map({X() * Y(), Z() * Z(), Y() * Z()}); }

MakeResult make_tau() { return make_map({X() * X(), X() * Y(), Y() * Y() - X() * Z()}); }

MakeResult make_bk_fab(const GR& a, const GR& b) {
  QiPoly bxy = X().scaled(b) + Y();
  QiPoly axz = X().scaled(a) + Z();
  return make_map({X() * bxy, Z() * bxy, X() * axz});
}

MakeResult make_mcmullen(const GR& a, const GR& b) {
  // affine (a + y, b + y/x) in the chart z = 1
  QiPoly azy = Z().scaled(a) + Y();
  QiPoly bxy = X().scaled(b) + Y();
  return make_map({X() * azy, Z() * bxy, X() * Z()});
}

MakeResult make_dg_phi(int n) {
  if (n < 3) throw error("dg_phi requires n >= 3");
  return make_map({QiPoly::variable(0) * QiPoly::variable(2, n - 1) + QiPoly::variable(1, n),
                   QiPoly::variable(1) * QiPoly::variable(2, n - 1), QiPoly::variable(2, n)});
}

ExactMap phi_alpha_matrix(const GR& alpha) {
  const GR& a = alpha;
  std::array<std::array<GR, 3>, 3> rows = {{{a, GR(2) * (GR(1) - a), GR(2) + a - a * a},
                                            {GR(-1), GR(0), a + GR(1)},
                                            {GR(1), GR(-2), GR(1) - a}}};
  std::array<QiPoly, 3> comps;
  for (int i = 0; i < 3; ++i)
    comps[i] = X().scaled(rows[i][0]) + Y().scaled(rows[i][1]) + Z().scaled(rows[i][2]);
  return make_map(std::move(comps)).map;
}

MakeResult make_dg_phi_alpha_phi(const GR& alpha) {
  if (alpha == GR(0) || alpha == GR(1)) throw excluded_parameter("alpha must avoid 0 and 1");
  ExactMap phi = phi_alpha_matrix(alpha);
  ExactMap Phi = make_dg_phi(3).map;
  MakeResult out;
  out.map = projmap::compose(phi, Phi);
  return out;
}

MakeResult make_dg_conic() {
  QiPoly q = X() * Z() + Y() * Y();
  return make_map({Y() * Y() * Z(), X() * q, Y() * q});
}

MakeResult make(FamilyId id, const FamilyParams& p) {
  switch (id) {
    case FamilyId::Sigma: return make_sigma();
    case FamilyId::Rho: return make_rho();
    case FamilyId::Tau: return make_tau();
    case FamilyId::BK_fab: return make_bk_fab(p.a, p.b);
    case FamilyId::McMullen: return make_mcmullen(p.a, p.b);
    case FamilyId::DG_Phi: return make_dg_phi(p.n);
    case FamilyId::DG_phiAlphaPhi: return make_dg_phi_alpha_phi(p.alpha);
    case FamilyId::DG_conic: return make_dg_conic();
    case FamilyId::BK_FAB: {
      if (p.A.size() != 3 || p.B.size() != 3) throw error("bk_FAB expects A and B of size 3");
      QiPoly lb = X().scaled(p.B[0]) + Y().scaled(p.B[1]) + Z().scaled(p.B[2]);
      QiPoly la = X().scaled(p.A[0]) + Y().scaled(p.A[1]) + Z().scaled(p.A[2]);
      return make_map({X() * lb, Z() * lb, X() * la});
    }
    case FamilyId::BK_k: {
      // (x y^k : y^k z : -y^(k+1) + c y^k z + sum_j a_j y^(k-j) x^(j+1) + x^(k+1))
      int k = p.k;
      if (k < 2 || k % 2 != 0) throw error("bk_k expects even k >= 2");
      QiPoly third = -QiPoly::variable(1, k + 1) +
                     (QiPoly::variable(1, k) * Z()).scaled(p.c) + QiPoly::variable(0, k + 1);
      for (size_t idx = 0; idx < p.a_even.size(); ++idx) {
        int j = 2 * static_cast<int>(idx) + 2;  // a_j for even j = 2, 4, ...
        if (j > k - 2) throw error("bk_k inner coefficient index out of range");
        third = third +
                (QiPoly::variable(1, k - j) * QiPoly::variable(0, j + 1)).scaled(p.a_even[idx]);
      }
      return make_map({QiPoly::variable(0) * QiPoly::variable(1, k),
                       QiPoly::variable(1, k) * Z(), std::move(third)});
    }
    case FamilyId::BK_rot: {
      // (y^2 : -delta x y + c y^2 + z^2 : y z)
      QiPoly mid = (X() * Y()).scaled(-p.delta) + (Y() * Y()).scaled(p.c) + Z() * Z();
      return make_map({Y() * Y(), std::move(mid), Y() * Z()});
    }
  }
  throw error("unreachable family id");
}

// --------------------------------------------------------------- V_n

OrbitRecord vn_membership(const GR& a, const GR& b, int n_max) {
  if (n_max < 0) throw error("vn_membership requires n_max >= 0");
  ExactMap f = make_bk_fab(a, b).map;
  ExactPoint q = projmap::make_point(GR(1), -a, GR(0));
  ExactPoint target = projmap::make_point(GR(1), -b, -a);
  OrbitRecord rec;
  rec.points.push_back(q);
  for (int j = 0; j <= n_max; ++j) {
    if (projmap::equal_points(rec.points.back(), target)) {
      rec.hit_index = j;
      rec.terminated_by = OrbitTermination::HitTarget;
      return rec;
    }
    if (j == n_max) break;
    auto img = evaluate(f, rec.points.back());
    if (std::holds_alternative<Indeterminate>(img)) {
      rec.terminated_by = OrbitTermination::Indeterminate;
      return rec;
    }
    rec.points.push_back(std::get<ExactPoint>(img));
  }
  rec.terminated_by = OrbitTermination::Budget;
  return rec;
}

namespace {

bool ball_points_match(const BallPoint& p, const BallPoint& target, double tolerance) {
  // scale-free comparison via the cross products u_i v_j - u_j v_i
  const auto& u = p.coords;
  const auto& v = target.coords;
  double scale = 0;
  for (int i = 0; i < 3; ++i)
    scale = std::max({scale, std::hypot(u[i].mid_re_double(), u[i].mid_im_double()),
                      std::hypot(v[i].mid_re_double(), v[i].mid_im_double())});
  if (scale <= 0) return false;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    ComplexBall cross = u[i] * v[j] - u[j] * v[i];
    Mpfr hi = cross.abs().upper();
    if (mpfr_get_d(hi.get(), MPFR_RNDU) > tolerance * scale * scale) return false;
  }
  return true;
}

}  // namespace

BallOrbitRecord vn_membership(const ComplexBall& a, const ComplexBall& b, int n_max,
                              double tolerance) {
  if (n_max < 0) throw error("vn_membership requires n_max >= 0");
  int prec = std::max(a.prec(), b.prec());
  ComplexBall one = ComplexBall::from_gaussian(GR(1), prec);
  projmap::BallMap f;
  f.degree = 2;
  {
    // x(bx + y), z(bx + y), x(ax + z) assembled directly over balls
    BallPoly x = BallPoly::term(Mono3{1, 0, 0}, one);
    BallPoly y = BallPoly::term(Mono3{0, 1, 0}, one);
    BallPoly z = BallPoly::term(Mono3{0, 0, 1}, one);
    BallPoly bx = BallPoly::term(Mono3{1, 0, 0}, b);
    BallPoly ax = BallPoly::term(Mono3{1, 0, 0}, a);
    f.components[0] = x * (bx + y);
    f.components[1] = z * (bx + y);
    f.components[2] = x * (ax + z);
  }
  BallPoint q{{one, -a, ComplexBall(prec)}};
  BallPoint target{{one, -b, -a}};
  BallOrbitRecord rec;
  rec.points.push_back(normalize(q));
  BallPoint tnorm = normalize(target);
  for (int j = 0; j <= n_max; ++j) {
    if (ball_points_match(rec.points.back(), tnorm, tolerance)) {
      rec.hit_index = j;
      rec.terminated_by = OrbitTermination::HitTarget;
      return rec;
    }
    if (j == n_max) break;
    auto img = evaluate(f, rec.points.back());
    if (std::holds_alternative<Indeterminate>(img)) {
      rec.terminated_by = OrbitTermination::Indeterminate;
      return rec;
    }
    rec.points.push_back(std::get<BallPoint>(img));
  }
  rec.terminated_by = OrbitTermination::Budget;
  return rec;
}

// -------------------------------------------------- invariant cubics

std::pair<GR, GR> phi_curve(int j, const GR& t) {
  if (j < 1 || j > 3) throw error("phi_curve expects j in {1,2,3}");
  if (t == GR(0) || t == GR(1) || t == GR(-1))
    throw excluded_parameter("phi_curve excludes t in {-1, 0, 1}");
  GR one(1), two(2);
  switch (j) {
    case 1: {
      GR den1 = one + two * t + t * t;
      GR den2 = t * t + t * t * t;
      return {(t - t * t * t - t * t * t * t) / den1, (one - t * t * t * t * t) / den2};
    }
    case 2: {
      GR den1 = one + two * t + t * t;
      GR den2 = t + t * t;
      return {(t + t * t + t * t * t) / den1, (t * t * t - one) / den2};
    }
    default:
      return {one + t, t - one / t};
  }
}

QiPoly invariant_cubic(const GR& t, const GR& a, const GR& b) {
  GR one(1), two(2);
  GR t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
  GR tm1 = t - one;
  QiPoly x = X(), y = Y(), z = Z();
  // a x^3 (t-1) t^4
  QiPoly p = QiPoly::variable(0, 3).scaled(a * tm1 * t4);
  // y z (t-1) t (z + t y)
  p = p + (y * z * (z + y.scaled(t))).scaled(tm1 * t);
  // x (2 b y z t^3 + y^2 (t-1) t^3 + z^2 (t-1)(1 + b t))
  p = p + x * ((y * z).scaled(two * b * t3) + (y * y).scaled(tm1 * t3) +
               (z * z).scaled(tm1 * (one + b * t)));
  // x^2 (t-1) t^3 (a (y + t z) + t (y + (t - 2b) z))
  QiPoly inner = (y + z.scaled(t)).scaled(a) + (y + z.scaled(t - two * b)).scaled(t);
  p = p + (x * x * inner).scaled(tm1 * t3);
  return p;
}

bool cubic_invariance_check(const GR& t, const GR& a, const GR& b) {
  QiPoly P = invariant_cubic(t, a, b);
  if (P.is_zero()) throw error("invariant cubic degenerates for these parameters");
  ExactMap f = make_bk_fab(a, b).map;
  QiPoly pulled = P.subst(f.components);
  return pulled.divide_exact(P).has_value();
}

bool cubic_invariance_check(int j, const GR& t) {
  auto [a, b] = phi_curve(j, t);
  return cubic_invariance_check(t, a, b);
}

// ------------------------------------------------- orbit-closure data

bool mcmullen_orbit_check(const GR& a, const GR& b, int n) {
  if (n < 3) throw error("mcmullen_orbit_check requires n >= 3");
  ExactMap f = make_mcmullen(a, b).map;
  ExactPoint p1 = projmap::make_point(GR(0), GR(0), GR(1));
  ExactPoint cur = projmap::make_point(a, b, GR(1));  // p_4
  // p_i for 4 <= i <= n must avoid the triangle lines x=0, y=0, z=0
  for (int i = 4; i <= n; ++i) {
    for (const auto& c : cur.coords)
      if (c.is_zero()) return false;
    auto img = evaluate(f, cur);
    if (std::holds_alternative<Indeterminate>(img)) throw indeterminate_orbit();
    cur = std::get<ExactPoint>(img);
  }
  return projmap::equal_points(cur, p1);  // p_{n+1} = p_1
}

namespace {

using CD = std::complex<double>;

// one affine step (x, y) -> (a + y, b + y/x)
bool mc_step(CD a, CD b, CD& x, CD& y) {
  if (std::abs(x) < 1e-14) return false;
  CD nx = a + y, ny = b + y / x;
  x = nx;
  y = ny;
  return true;
}

// G(a,b) = f^(n-3)(p4) as an affine pair; false on near-blowup
bool mc_orbit_end(int n, CD a, CD b, CD& gx, CD& gy) {
  CD x = a, y = b;
  for (int i = 0; i < n - 3; ++i)
    if (!mc_step(a, b, x, y)) return false;
  gx = x;
  gy = y;
  return std::abs(x) < 1e9 && std::abs(y) < 1e9;
}

struct BallVec2 {
  ComplexBall x, y;
};
struct BallMat2 {
  ComplexBall a, b, c, d;  // [[a, b], [c, d]]
};

BallMat2 mat_mul(const BallMat2& m, const BallMat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
          m.c * n.b + m.d * n.d};
}
BallMat2 mat_add(const BallMat2& m, const BallMat2& n) {
  return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
}
BallVec2 mat_apply(const BallMat2& m, const BallVec2& v) {
  return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

// G and dG/d(a,b) over balls; false when an x enclosure meets zero
bool mc_orbit_ball(int n, const ComplexBall& a, const ComplexBall& b, BallVec2& G, BallMat2& J) {
  int prec = std::max(a.prec(), b.prec());
  ComplexBall one = ComplexBall::from_gaussian(GR(1), prec);
  ComplexBall zero(prec);
  BallVec2 s{a, b};
  J = {one, zero, zero, one};  // ds/d(a,b), p4 = (a, b)
  for (int i = 0; i < n - 3; ++i) {
    if (s.x.contains_zero()) return false;
    ComplexBall inv_x = s.x.inverse();
    ComplexBall y_over_x2 = s.y * inv_x * inv_x;
    // F(s; a, b) = (a + y, b + y/x): dF/ds = [[0, 1], [-y/x^2, 1/x]]
    BallMat2 dFds{zero, one, -y_over_x2, inv_x};
    BallMat2 dFdp{one, zero, zero, one};
    J = mat_add(mat_mul(dFds, J), dFdp);
    BallVec2 next{a + s.y, b + s.y * inv_x};
    s = next;
  }
  G = s;
  return true;
}

}  // namespace

std::optional<CertifiedParams> mcmullen_solve(int n, CD seed_a, CD seed_b, int precision) {
  if (n < 7) throw error("mcmullen_solve requires n >= 7");
  CD a = seed_a, b = seed_b;
  bool converged = false;
  for (int it = 0; it < 80; ++it) {
    CD gx, gy;
    if (!mc_orbit_end(n, a, b, gx, gy)) return std::nullopt;
    double res = std::max(std::abs(gx), std::abs(gy));
    if (res < 1e-13) {
      converged = true;
      break;
    }
    double h = 1e-7 * std::max({1.0, std::abs(a), std::abs(b)});
    CD gxa, gya, gxb, gyb;
    if (!mc_orbit_end(n, a + h, b, gxa, gya) || !mc_orbit_end(n, a, b + h, gxb, gyb))
      return std::nullopt;
    CD j11 = (gxa - gx) / h, j12 = (gxb - gx) / h;
    CD j21 = (gya - gy) / h, j22 = (gyb - gy) / h;
    CD det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-18) return std::nullopt;
    CD da = (gx * j22 - gy * j12) / det;
    CD db = (gy * j11 - gx * j21) / det;
    a -= da;
    b -= db;
    if (std::abs(da) + std::abs(db) > 1e6) return std::nullopt;
  }
  if (!converged) return std::nullopt;

  // Krawczyk contraction around the numeric solution
  for (double r : {1e-9, 1e-7, 1e-5}) {
    ComplexBall ax = ComplexBall::from_doubles(a.real(), a.imag(), precision).inflate(r);
    ComplexBall bx = ComplexBall::from_doubles(b.real(), b.imag(), precision).inflate(r);
    ComplexBall ay = ax.midpoint(), by = bx.midpoint();
    BallVec2 Gy;
    BallMat2 Jy;
    if (!mc_orbit_ball(n, ay, by, Gy, Jy)) continue;
    BallVec2 GX;
    BallMat2 JX;
    if (!mc_orbit_ball(n, ax, bx, GX, JX)) continue;
    ComplexBall det = Jy.a * Jy.d - Jy.b * Jy.c;
    if (det.contains_zero()) continue;
    ComplexBall idet = det.inverse();
    BallMat2 Yi{Jy.d * idet, -Jy.b * idet, -Jy.c * idet, Jy.a * idet};
    int prec = ax.prec();
    ComplexBall one = ComplexBall::from_gaussian(GR(1), prec);
    BallMat2 YJ = mat_mul(Yi, JX);
    BallMat2 R{one - YJ.a, -YJ.b, -YJ.c, one - YJ.d};
    BallVec2 YG = mat_apply(Yi, Gy);
    BallVec2 delta{ax - ay, bx - by};
    BallVec2 Rdelta = mat_apply(R, delta);
    ComplexBall Ka = ay - YG.x + Rdelta.x;
    ComplexBall Kb = by - YG.y + Rdelta.y;
    if (ComplexBall::inside(Ka, ax) && ComplexBall::inside(Kb, bx)) return CertifiedParams{Ka, Kb};
  }
  return std::nullopt;
}

bool mcmullen_orbit_check(const CertifiedParams& p, int n, double tolerance) {
  ComplexBall x = p.a, y = p.b;
  for (int i = 4; i <= n; ++i) {
    if (x.contains_zero() || y.contains_zero()) return false;
    ComplexBall nx = p.a + y;
    ComplexBall ny = p.b + y / x;
    x = nx;
    y = ny;
  }
  // p_{n+1} = p_1 = (0:0:1): both affine coordinates must vanish
  double ax = mpfr_get_d(x.abs().upper().get(), MPFR_RNDU);
  double ay = mpfr_get_d(y.abs().upper().get(), MPFR_RNDU);
  return ax <= tolerance && ay <= tolerance;
}

// ------------------------------------------------------------- jets

Jet2x4 Jet2x4::identity() {
  Jet2x4 j;
  j.m[1][0] = GR(1);
  j.n[0][1] = GR(1);
  return j;
}

namespace {

QiPoly truncate_order(const QiPoly& p, int order) {
  QiPoly out;
  for (const auto& [m, v] : p.terms())
    if (m.total() <= order) out = out + QiPoly::term(m, v);
  return out;
}

// inverse of a bivariate polynomial with nonzero constant term, as a
// series truncated to total order <= order
QiPoly series_inverse(const QiPoly& u, int order) {
  GR d0 = u.coeff(Mono3{});
  if (d0.is_zero()) throw pole_at_base();
  QiPoly h = (u - QiPoly::constant(d0)).divided_by_scalar(d0);  // constant-free
  QiPoly acc = QiPoly::constant(GR(1));
  QiPoly power = QiPoly::constant(GR(1));
  for (int k = 1; k <= order; ++k) {
    power = truncate_order(power * (-h), order);
    acc = acc + power;
  }
  return acc.divided_by_scalar(d0);
}

Jet2x4 jet_from_series(const QiPoly& ms, const QiPoly& ns) {
  Jet2x4 jet;
  for (const auto& [m, v] : ms.terms())
    if (m.a <= 4 && m.b <= 4 && m.c == 0) jet.m[m.a][m.b] = v;
  for (const auto& [m, v] : ns.terms())
    if (m.a <= 4 && m.b <= 4 && m.c == 0) jet.n[m.a][m.b] = v;
  return jet;
}

QiPoly series_from_rows(const GR rows[5][5]) {
  QiPoly p;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j + i <= 4; ++j)
      if (!rows[i][j].is_zero()) p = p + QiPoly::term(Mono3{i, j, 0}, rows[i][j]);
  return p;
}

}  // namespace

Jet2x4 germ_jet(const ExactMap& f, const ExactPoint& base, int chart, int order) {
  if (chart < 0 || chart > 2) throw error("chart must be 0, 1 or 2");
  if (order != 4) throw error("only order-4 jets are supported");
  if (base.coords[chart].is_zero()) throw pole_at_base();
  // affine coordinates (u, v): the two non-chart coordinates over the chart one
  int i1 = chart == 0 ? 1 : 0;
  int i2 = chart == 2 ? 1 : 2;
  std::array<GR, 3> nb;
  for (int i = 0; i < 3; ++i) nb[i] = base.coords[i] / base.coords[chart];
  std::array<QiPoly, 3> par;
  par[chart] = QiPoly::constant(GR(1));
  par[i1] = QiPoly::constant(nb[i1]) + QiPoly::variable(0);
  par[i2] = QiPoly::constant(nb[i2]) + QiPoly::variable(1);

  std::array<QiPoly, 3> P;
  for (int i = 0; i < 3; ++i) P[i] = truncate_order(f.components[i].subst(par), order);
  QiPoly inv = series_inverse(P[chart], order);
  QiPoly g1 = truncate_order(P[i1] * inv, order);
  QiPoly g2 = truncate_order(P[i2] * inv, order);
  // center the target chart at the image of the base point
  g1 = g1 - QiPoly::constant(g1.coeff(Mono3{}));
  g2 = g2 - QiPoly::constant(g2.coeff(Mono3{}));
  return jet_from_series(g1, g2);
}

Jet2x4 jet_compose(const Jet2x4& outer, const Jet2x4& inner) {
  QiPoly im = series_from_rows(inner.m), in = series_from_rows(inner.n);
  QiPoly om = series_from_rows(outer.m), on = series_from_rows(outer.n);
  std::array<QiPoly, 3> sub = {im, in, QiPoly()};
  QiPoly cm = truncate_order(om.subst(sub), 4);
  QiPoly cn = truncate_order(on.subst(sub), 4);
  return jet_from_series(cm, cn);
}

GluingVerdict gluing_check(const Jet2x4& jet) {
  GluingVerdict verdict;
  const GR i = GR::i();
  if (!jet.m[0][0].is_zero() || !jet.n[0][0].is_zero()) return verdict;
  if (!jet.n[1][0].is_zero()) return verdict;
  const GR& m10 = jet.m[1][0];
  const GR& n01 = jet.n[0][1];
  if (m10.is_zero()) {
    // t = 0: conditions force n01 = 0 and the linear relation reduces to n20 = 0
    if (n01.is_zero() && jet.n[2][0].is_zero()) {
      verdict.pass = true;
      verdict.witnesses.push_back(GR(0));
    }
    return verdict;
  }
  // From m10 = t^2 and n01 = i t^3: t = n01 / (i m10).
  GR t = n01 / (i * m10);
  if (t * t != m10) return verdict;
  if (i * t * t * t != n01) return verdict;
  if (GR(3) * jet.m[0][1] * t + GR(2) * i * jet.n[2][0] != GR(0)) return verdict;
  verdict.pass = true;
  verdict.witnesses.push_back(t);
  return verdict;
}

// ------------------------------------------------------ orbit sampler

OmegaTable orbit_projection_samples(CD alpha, CD beta, CD x0, CD y0, long N) {
  if (N < 1) throw error("orbit sampler requires N >= 1");
  constexpr double kCap = 1e12;
  OmegaTable table;
  table.rows.reserve(static_cast<size_t>(N));
  CD x = x0, y = y0;
  bool first = true;
  for (long n = 1; n <= N; ++n) {
    CD den = x + 1.0;
    if (std::abs(den) < 1e-300) {
      table.overflow = true;
      break;
    }
    CD nx = (alpha * x + y) / den;
    CD ny = beta * y;
    x = nx;
    y = ny;
    if (std::abs(x) > kCap || std::abs(y) > kCap) {
      table.overflow = true;
      break;
    }
    OmegaRow row;
    row.n = n;
    row.om1[0] = x.real();
    row.om1[1] = x.imag();
    row.om1[2] = y.imag();
    row.om2[0] = x.real();
    row.om2[1] = y.real();
    row.om2[2] = y.imag();
    table.rows.push_back(row);
    double ay = std::abs(y);
    if (first) {
      table.min_abs_y = table.max_abs_y = ay;
      first = false;
    } else {
      table.min_abs_y = std::min(table.min_abs_y, ay);
      table.max_abs_y = std::max(table.max_abs_y, ay);
    }
  }
  return table;
}

}  // namespace cremona::families
