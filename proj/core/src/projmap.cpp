#include "cremona/projmap.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace cremona::projmap {

namespace {

using GR = GaussianRational;

GR eval_component(const QiPoly& f, const ExactPoint& p) { return f.eval(p.coords); }

}  // namespace

ExactPoint make_point(GR x, GR y, GR z) {
  return normalize(ExactPoint{{std::move(x), std::move(y), std::move(z)}});
}

ExactPoint normalize(const ExactPoint& p) {
  for (const auto& c : p.coords) {
    if (!c.is_zero()) {
      ExactPoint out;
      for (int i = 0; i < 3; ++i) out.coords[i] = p.coords[i] / c;
      return out;
    }
  }
  throw error("projective point with all coordinates zero");
}

BallPoint normalize(const BallPoint& p) {
  int best = -1;
  double best_abs = -1;
  for (int i = 0; i < 3; ++i) {
    double m = std::hypot(p.coords[i].mid_re_double(), p.coords[i].mid_im_double());
    if (m > best_abs) {
      best_abs = m;
      best = i;
    }
  }
  if (best_abs <= 0) throw error("ball point with zero midpoint");
  BallPoint out;
  for (int i = 0; i < 3; ++i) out.coords[i] = p.coords[i] / p.coords[best];
  return out;
}

bool equal_points(const ExactPoint& a, const ExactPoint& b) {
  const auto& u = a.coords;
  const auto& v = b.coords;
  return (u[0] * v[1] - u[1] * v[0]).is_zero() && (u[0] * v[2] - u[2] * v[0]).is_zero() &&
         (u[1] * v[2] - u[2] * v[1]).is_zero();
}

BallPoint to_ball_point(const ExactPoint& p, int prec) {
  BallPoint out;
  for (int i = 0; i < 3; ++i) out.coords[i] = ComplexBall::from_gaussian(p.coords[i], prec);
  return out;
}

MakeResult make_map(std::array<QiPoly, 3> components) {
  bool all_zero = true;
  for (const auto& c : components) all_zero = all_zero && c.is_zero();
  if (all_zero) throw error("map with all components zero");
  int deg = -1;
  for (const auto& c : components) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) throw error("map components must be homogeneous");
    if (deg < 0)
      deg = c.total_degree();
    else if (c.total_degree() != deg)
      throw error("map components must share one degree");
  }
  auto removed = remove_common_factor(components);
  MakeResult r;
  r.map.components = std::move(components);
  r.map.degree = -1;
  for (const auto& c : r.map.components)
    if (!c.is_zero()) r.map.degree = c.total_degree();
  if (r.map.degree < 1) throw error("map must have degree >= 1");
  r.removed_content = std::move(removed);
  return r;
}

BallMap to_ball_map(const ExactMap& f, int prec) {
  BallMap out;
  out.degree = f.degree;
  for (int i = 0; i < 3; ++i) {
    BallPoly p;
    for (const auto& [m, v] : f.components[i].terms())
      p = p + BallPoly::term(m, ComplexBall::from_gaussian(v, prec));
    out.components[i] = std::move(p);
  }
  return out;
}

ExactMap compose(const ExactMap& f, const ExactMap& g) {
  std::array<QiPoly, 3> comp;
  for (int i = 0; i < 3; ++i) comp[i] = f.components[i].subst(g.components);
  bool all_zero = true;
  for (const auto& c : comp) all_zero = all_zero && c.is_zero();
  if (all_zero) throw null_composition();
  remove_common_factor(comp);
  ExactMap out;
  out.components = std::move(comp);
  out.degree = -1;
  for (const auto& c : out.components)
    if (!c.is_zero()) out.degree = c.total_degree();
  return out;
}

EvalOutcome<GR> evaluate(const ExactMap& f, const ExactPoint& p) {
  std::array<GR, 3> img;
  bool all_zero = true;
  for (int i = 0; i < 3; ++i) {
    img[i] = eval_component(f.components[i], p);
    all_zero = all_zero && img[i].is_zero();
  }
  if (all_zero) return Indeterminate{};
  return normalize(ExactPoint{std::move(img)});
}

EvalOutcome<ComplexBall> evaluate(const BallMap& f, const BallPoint& p) {
  std::array<ComplexBall, 3> img;
  bool all_may_vanish = true;
  for (int i = 0; i < 3; ++i) {
    img[i] = f.components[i].eval(p.coords);
    all_may_vanish = all_may_vanish && img[i].contains_zero();
  }
  if (all_may_vanish) return Indeterminate{};
  return normalize(BallPoint{std::move(img)});
}

DegreeSequence degree_sequence(const ExactMap& f, int n_max, long degree_budget) {
  if (n_max < 1) throw error("degree_sequence requires n_max >= 1");
  DegreeSequence out;
  out.degrees.push_back(f.degree);
  ExactMap iter = f;
  for (int n = 2; n <= n_max; ++n) {
    iter = compose(f, iter);
    if (iter.degree > degree_budget) {
      out.truncated = true;
      break;
    }
    out.degrees.push_back(iter.degree);
  }
  return out;
}

GrowthClass growth_class(const std::vector<long>& degrees) {
  constexpr int kWindow = 5;
  if (static_cast<int>(degrees.size()) < 8)
    throw error("growth_class requires at least 8 degrees");
  std::vector<long> tail(degrees.end() - kWindow, degrees.end());

  long tail_max = *std::max_element(tail.begin(), tail.end());
  long head_max = *std::max_element(degrees.begin(), degrees.end() - kWindow);
  if (tail_max <= head_max) return {Growth::Bounded, std::nullopt};

  // Linear and quadratic growth may step with a short period (the torus
  // family grows one degree every other iterate), so the finite
  // differences are taken at lags 1..3 over an extended tail.
  int ext = std::min<int>(8, static_cast<int>(degrees.size()));
  std::vector<long> xtail(degrees.end() - ext, degrees.end());
  for (int lag = 1; lag <= 3; ++lag) {
    if (ext < lag + 3) continue;
    bool linear = true;
    long d1 = xtail[lag] - xtail[0];
    for (int i = 0; i + lag < ext; ++i) linear = linear && (xtail[i + lag] - xtail[i] == d1);
    if (linear && d1 > 0) return {Growth::Linear, std::nullopt};
  }
  for (int lag = 1; lag <= 2; ++lag) {
    if (ext < 2 * lag + 3) continue;
    bool quadratic = true;
    long d2 = xtail[2 * lag] - 2 * xtail[lag] + xtail[0];
    for (int i = 0; i + 2 * lag < ext; ++i)
      quadratic = quadratic &&
                  (xtail[i + 2 * lag] - 2 * xtail[i + lag] + xtail[i] == d2);
    if (quadratic && d2 != 0) return {Growth::Quadratic, std::nullopt};
  }

  bool expo = true;
  for (int i = 0; i + 1 < kWindow; ++i) expo = expo && (10 * tail[i + 1] >= 11 * tail[i]);
  if (expo) {
    // geometric mean of the tail ratios, widened to the hull of the
    // individual ratios so the enclosure reflects the remaining spread
    RealBall q = RealBall::from_rational(make_rational(tail[kWindow - 1], tail[0]), 128);
    RealBall rate = q.sqrt().sqrt();
    for (int i = 0; i + 1 < kWindow; ++i)
      rate = RealBall::hull(
          rate, RealBall::from_rational(make_rational(tail[i + 1], tail[i]), 128));
    return {Growth::Exponential, rate};
  }
  throw inconclusive("degree growth pattern did not stabilize over the tail window");
}

StabilityReport stability_probe(const ExactMap& f, int n_max) {
  StabilityReport rep;
  ExactMap iter = f;
  long expected = f.degree;
  rep.stable_up_to = 1;
  for (int n = 2; n <= n_max; ++n) {
    iter = compose(f, iter);
    expected *= f.degree;
    if (iter.degree < expected) {
      rep.violated_at = n;
      return rep;
    }
    rep.stable_up_to = n;
  }
  return rep;
}

// ------------------------------------------------------------------
// linear factor extraction

JacobianFactors jacobian_divisor(const ExactMap& f) {
  std::array<std::array<QiPoly, 3>, 3> J;
  for (int i = 0; i < 3; ++i)
    for (int v = 0; v < 3; ++v) J[i][v] = f.components[i].derivative(v);
  QiPoly det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
               J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
               J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
  if (det.is_zero()) throw zero_jacobian();

  JacobianFactors out;
  out.total_degree = det.total_degree();

  // coordinate-line factors are exactly the monomial content
  Mono3 mc = det.monomial_content();
  if (mc.a) out.linear_factors.push_back({QiPoly::variable(0), mc.a});
  if (mc.b) out.linear_factors.push_back({QiPoly::variable(1), mc.b});
  if (mc.c) out.linear_factors.push_back({QiPoly::variable(2), mc.c});
  QiPoly rest = det.monomial_quotient(mc).monic();

  if (rest.is_constant()) {
    out.remainder = rest;
    out.fully_split = true;
    return out;
  }

  std::vector<QiPoly> candidates = detail::candidate_linear_factors(rest);
  for (const auto& form : candidates) {
    int mult = 0;
    while (true) {
      auto q = rest.divide_exact(form);
      if (!q) break;
      rest = q->monic();
      ++mult;
    }
    if (mult > 0) out.linear_factors.push_back({form, mult});
  }
  out.remainder = rest;
  out.fully_split = rest.is_constant();
  return out;
}

// ------------------------------------------------------------------
// indeterminacy points

namespace {

using CD = std::complex<double>;

// exact roots over Q(i) of a dense univariate; returns (roots, complete)
std::pair<std::vector<GR>, bool> exact_univariate_roots(std::vector<GR> p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  std::vector<GR> roots;
  if (p.size() <= 1) return {roots, true};
  size_t low = 0;
  while (low < p.size() && p[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(GR(0));
    p.erase(p.begin(), p.begin() + low);
  }
  while (p.size() > 1) {
    auto seeds = detail::numeric_roots(p);
    bool progressed = false;
    for (CD s : seeds) {
      auto cand = detail::snap_gaussian(s);
      if (!cand) continue;
      GR val(0);
      for (auto it = p.rbegin(); it != p.rend(); ++it) val = val * *cand + *it;
      if (!val.is_zero()) continue;
      // synthetic division by (t - cand)
      std::vector<GR> q(p.size() - 1);
      GR carry = p.back();
      for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
        q[i] = carry;
        carry = p[i] + carry * *cand;
      }
      p = std::move(q);
      roots.push_back(*cand);
      progressed = true;
      break;
    }
    if (!progressed) return {roots, false};
  }
  return {roots, true};
}

}  // namespace

IndeterminacySet indeterminacy_points(const ExactMap& f,
                                      const std::vector<ExactPoint>& extra_candidates) {
  IndeterminacySet out;
  auto vanishes_at = [&](const ExactPoint& p) {
    for (int i = 0; i < 3; ++i)
      if (!eval_component(f.components[i], p).is_zero()) return false;
    return true;
  };
  auto add_point = [&](const ExactPoint& p) {
    ExactPoint n = normalize(p);
    for (const auto& q : out.points)
      if (equal_points(n, q)) return;
    out.points.push_back(n);
  };

  for (const auto& cand : extra_candidates)
    if (vanishes_at(cand)) add_point(cand);

  ExactPoint origin{{GR(0), GR(0), GR(1)}};
  if (vanishes_at(origin)) add_point(origin);

  // eliminate z: common (x:y) directions from pairwise resultants
  std::vector<QiPoly> res;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    QiPoly r = mpoly_resultant(f.components[i], f.components[j], 2);
    if (!r.is_zero()) res.push_back(r);
  }
  if (res.empty()) {
    out.complete = false;  // every pair shares a z-positive factor
    return out;
  }
  QiPoly dirs = res[0];
  for (size_t i = 1; i < res.size() && !dirs.is_constant(); ++i) dirs = mpoly_gcd(dirs, res[i]);

  std::vector<ExactPoint> directions;
  bool complete = true;
  if (!dirs.is_constant()) {
    Mono3 mc = dirs.monomial_content();
    if (mc.b > 0) directions.push_back(ExactPoint{{GR(1), GR(0), GR(0)}});
    if (mc.a > 0) directions.push_back(ExactPoint{{GR(0), GR(1), GR(0)}});
    QiPoly core = dirs.monomial_quotient(mc);
    std::vector<GR> dense;
    for (const auto& [m, v] : core.terms()) {
      if (static_cast<int>(dense.size()) <= m.b) dense.resize(m.b + 1, GR(0));
      dense[m.b] += v;
    }
    auto [roots, all] = exact_univariate_roots(dense);
    complete = complete && all;
    for (const auto& t : roots) directions.push_back(ExactPoint{{GR(1), t, GR(0)}});
  }

  for (const auto& dir : directions) {
    std::vector<GR> common;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
      std::vector<GR> uz;
      for (const auto& [m, v] : f.components[i].terms()) {
        GR val = v;
        for (int e = 0; e < m.a; ++e) val *= dir.coords[0];
        for (int e = 0; e < m.b; ++e) val *= dir.coords[1];
        if (static_cast<int>(uz.size()) <= m.c) uz.resize(m.c + 1, GR(0));
        uz[m.c] += val;
      }
      while (!uz.empty() && uz.back().is_zero()) uz.pop_back();
      if (uz.empty()) continue;  // component vanishes along the line
      if (first) {
        common = uz;
        first = false;
      } else {
        common = detail::upoly_gcd(common, uz);
      }
    }
    if (first) {
      complete = false;  // all three vanish on the line: content slipped through
      continue;
    }
    if (common.size() <= 1) continue;
    auto [zs, all] = exact_univariate_roots(common);
    complete = complete && all;
    for (const auto& z0 : zs) {
      ExactPoint p{{dir.coords[0], dir.coords[1], z0}};
      if (vanishes_at(p)) add_point(p);
    }
  }
  out.complete = complete;
  return out;
}

// ------------------------------------------------------------------
// parsing and printing

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  QiPoly parse_poly(char stop1, char stop2) {
    QiPoly acc;
    bool first = true;
    while (true) {
      skip();
      if (pos >= s.size() || peek() == stop1 || peek() == stop2) break;
      int sign = 1;
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        throw parse_error("expected '+' or '-' at: " + s.substr(pos));
      }
      QiPoly term = parse_term();
      acc = sign > 0 ? acc + term : acc - term;
      first = false;
    }
    return acc;
  }

  QiPoly parse_term() {
    QiPoly t = QiPoly::constant(GR(1));
    bool any = false;
    while (true) {
      skip();
      char c = peek();
      if (c == '(') {
        ++pos;
        size_t close = s.find(')', pos);
        if (close == std::string::npos) throw parse_error("missing ')'");
        GR v = GR::parse(s.substr(pos, close - pos));
        pos = close + 1;
        t = t.scaled(v);
        any = true;
      } else if (c == 'x' || c == 'y' || c == 'z') {
        ++pos;
        int var = c == 'x' ? 0 : c == 'y' ? 1 : 2;
        int e = 1;
        if (eat('^')) e = parse_int();
        t = t * QiPoly::variable(var, e);
        any = true;
      } else if (c == 'i') {
        ++pos;
        t = t.scaled(GR::i());
        any = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        long num = parse_int();
        long den = 1;
        if (eat('/')) den = parse_int();
        t = t.scaled(GR(make_rational(num, den)));
        any = true;
      } else {
        break;
      }
      skip();
      if (!eat('*')) {
        char n = peek();
        if (n != 'x' && n != 'y' && n != 'z' && n != '(' && n != 'i') break;
      }
    }
    if (!any) throw parse_error("empty term at: " + s.substr(pos));
    return t;
  }

  int parse_int() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw parse_error("expected integer at: " + s.substr(start));
    return std::stoi(s.substr(start, pos - start));
  }
};

}  // namespace

ExactMap parse_map(const std::string& text) {
  PolyParser p(text);
  if (!p.eat('(')) throw parse_error("map literal must start with '('");
  std::array<QiPoly, 3> comps;
  for (int i = 0; i < 3; ++i) {
    comps[i] = p.parse_poly(':', ')');
    if (i < 2 && !p.eat(':')) throw parse_error("map literal needs three ':'-separated parts");
  }
  if (!p.eat(')')) throw parse_error("map literal must end with ')'");
  return make_map(std::move(comps)).map;
}

std::string map_to_string(const ExactMap& f) {
  std::ostringstream os;
  os << "(" << f.components[0].str() << " : " << f.components[1].str() << " : "
     << f.components[2].str() << ")";
  return os.str();
}

}  // namespace cremona::projmap
