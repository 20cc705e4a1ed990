#ifndef CREMONA_MPOLY_HPP
#define CREMONA_MPOLY_HPP

// Sparse trivariate polynomials over an exact field (Q(i)) or over
// certified balls.  Exact polynomials get the full toolkit (division,
// gcd, resultants); ball polynomials only evaluate.

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "cremona/ball.hpp"
#include "cremona/errors.hpp"
#include "cremona/numeric.hpp"

namespace cremona {

struct Mono3 {
  int a = 0, b = 0, c = 0;  // exponents of x, y, z
  int total() const { return a + b + c; }
  bool divides(const Mono3& m) const { return a <= m.a && b <= m.b && c <= m.c; }
  Mono3 operator+(const Mono3& m) const { return {a + m.a, b + m.b, c + m.c}; }
  Mono3 operator-(const Mono3& m) const { return {a - m.a, b - m.b, c - m.c}; }
  friend bool operator==(const Mono3& x, const Mono3& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
  uint64_t key() const {
    return (static_cast<uint64_t>(a) << 42) | (static_cast<uint64_t>(b) << 21) |
           static_cast<uint64_t>(c);
  }
  static Mono3 from_key(uint64_t k) {
    return {static_cast<int>(k >> 42), static_cast<int>((k >> 21) & 0x1FFFFF),
            static_cast<int>(k & 0x1FFFFF)};
  }
};

// graded lexicographic, leading term first
struct GrlexGreater {
  bool operator()(const Mono3& x, const Mono3& y) const {
    if (x.total() != y.total()) return x.total() > y.total();
    if (x.a != y.a) return x.a > y.a;
    if (x.b != y.b) return x.b > y.b;
    return x.c > y.c;
  }
};

template <class K>
struct field_traits {
  static constexpr bool exact = true;
  static bool is_zero(const K& k) { return k.is_zero(); }
  static K zero() { return K(0); }
  static K one() { return K(1); }
  static K from_long(long v) { return K(v); }
};
template <>
struct field_traits<ComplexBall> {
  static constexpr bool exact = false;
  static bool is_zero(const ComplexBall&) { return false; }
  static ComplexBall zero() { return ComplexBall(); }
  static ComplexBall one() { return from_long(1); }
  static ComplexBall from_long(long v) {
    return ComplexBall::from_gaussian(GaussianRational(v));
  }
};

template <class K>
class MPoly3 {
 public:
  using Term = std::pair<Mono3, K>;

  MPoly3() = default;
  static MPoly3 constant(K v) {
    MPoly3 p;
    if (!field_traits<K>::is_zero(v) || !field_traits<K>::exact) p.t_.push_back({Mono3{}, std::move(v)});
    return p;
  }
  static MPoly3 variable(int i, int e = 1) {
    MPoly3 p;
    Mono3 m;
    (i == 0 ? m.a : i == 1 ? m.b : m.c) = e;
    p.t_.push_back({m, field_traits<K>::one()});
    return p;
  }
  static MPoly3 term(Mono3 m, K v) {
    MPoly3 p;
    if (!field_traits<K>::is_zero(v)) p.t_.push_back({m, std::move(v)});
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.total() == 0); }
  int total_degree() const {
    int d = -1;
    for (const auto& [m, v] : t_) d = std::max(d, m.total());
    return d;
  }
  bool is_homogeneous() const {
    if (t_.empty()) return true;
    int d = t_[0].first.total();
    for (const auto& [m, v] : t_)
      if (m.total() != d) return false;
    return true;
  }
  int degree_in(int var) const {
    int d = -1;
    for (const auto& [m, v] : t_) d = std::max(d, var == 0 ? m.a : var == 1 ? m.b : m.c);
    return d;
  }
  size_t term_count() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  const Term& leading_term() const {
    if (t_.empty()) throw error("leading term of zero polynomial");
    return t_.front();
  }

  K coeff(const Mono3& m) const {
    for (const auto& [mm, v] : t_)
      if (mm == m) return v;
    return field_traits<K>::zero();
  }

  friend MPoly3 operator+(const MPoly3& x, const MPoly3& y) { return merged(x, y, false); }
  friend MPoly3 operator-(const MPoly3& x, const MPoly3& y) { return merged(x, y, true); }
  MPoly3 operator-() const {
    MPoly3 r(*this);
    for (auto& [m, v] : r.t_) v = -v;
    return r;
  }
  friend bool operator==(const MPoly3& x, const MPoly3& y) {
    if (x.t_.size() != y.t_.size()) return false;
    for (size_t i = 0; i < x.t_.size(); ++i)
      if (!(x.t_[i].first == y.t_[i].first) || !(x.t_[i].second == y.t_[i].second)) return false;
    return true;
  }

  friend MPoly3 operator*(const MPoly3& x, const MPoly3& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::unordered_map<uint64_t, K> acc;
    acc.reserve(x.t_.size() * 2 + y.t_.size());
    for (const auto& [mx, vx] : x.t_)
      for (const auto& [my, vy] : y.t_) {
        uint64_t k = (mx + my).key();
        if constexpr (std::is_same_v<K, GaussianRational>) {
          acc.try_emplace(k).first->second.addmul(vx, vy);
        } else {
          auto it = acc.find(k);
          if (it == acc.end())
            acc.emplace(k, vx * vy);
          else
            it->second += vx * vy;
        }
      }
    return from_accumulator(std::move(acc));
  }

  MPoly3 scaled(const K& k) const {
    if (field_traits<K>::is_zero(k)) return {};
    MPoly3 r(*this);
    for (auto& [m, v] : r.t_) v *= k;
    return r;
  }
  MPoly3 divided_by_scalar(const K& k) const {
    MPoly3 r(*this);
    for (auto& [m, v] : r.t_) v /= k;
    return r;
  }
  MPoly3 shifted(const Mono3& m) const {  // multiply by monomial
    MPoly3 r(*this);
    for (auto& [mm, v] : r.t_) mm = mm + m;
    return r;
  }
  // divide by monomial, requires divisibility
  MPoly3 monomial_quotient(const Mono3& m) const {
    MPoly3 r(*this);
    for (auto& [mm, v] : r.t_) {
      if (!m.divides(mm)) throw error("monomial does not divide polynomial");
      mm = mm - m;
    }
    return r;
  }

  Mono3 monomial_content() const {
    if (t_.empty()) return {};
    Mono3 g = t_[0].first;
    for (const auto& [m, v] : t_) {
      g.a = std::min(g.a, m.a);
      g.b = std::min(g.b, m.b);
      g.c = std::min(g.c, m.c);
    }
    return g;
  }

  K eval(const std::array<K, 3>& pt) const {
    // per-variable power tables
    std::array<std::vector<K>, 3> pows;
    for (int v = 0; v < 3; ++v) {
      int d = degree_in(v);
      pows[v].reserve(d + 1);
      pows[v].push_back(field_traits<K>::one());
      for (int e = 1; e <= d; ++e) pows[v].push_back(pows[v].back() * pt[v]);
    }
    K acc = field_traits<K>::zero();
    for (const auto& [m, val] : t_) acc += val * pows[0][m.a] * pows[1][m.b] * pows[2][m.c];
    return acc;
  }

  // substitution of polynomials for the variables (composition)
  MPoly3 subst(const std::array<MPoly3, 3>& g) const {
    std::array<std::vector<MPoly3>, 3> pows;
    for (int v = 0; v < 3; ++v) {
      int d = degree_in(v);
      pows[v].push_back(constant(field_traits<K>::one()));
      for (int e = 1; e <= d; ++e) pows[v].push_back(pows[v].back() * g[v]);
    }
    MPoly3 acc;
    for (const auto& [m, val] : t_) {
      MPoly3 t = (pows[0][m.a] * pows[1][m.b]).scaled(val) * pows[2][m.c];
      acc = acc + t;
    }
    return acc;
  }

  MPoly3 derivative(int var) const {
    MPoly3 r;
    for (const auto& [m, v] : t_) {
      int e = var == 0 ? m.a : var == 1 ? m.b : m.c;
      if (e == 0) continue;
      Mono3 mm = m;
      (var == 0 ? mm.a : var == 1 ? mm.b : mm.c) = e - 1;
      r.t_.push_back({mm, v * field_traits<K>::from_long(e)});
    }
    std::sort(r.t_.begin(), r.t_.end(),
              [](const Term& s, const Term& t) { return GrlexGreater{}(s.first, t.first); });
    return r;
  }

  // Division by a single divisor under grlex; A = q*d + r where no
  // monomial of r is divisible by the leading monomial of d.
  struct DivRem {
    MPoly3 quotient, remainder;
  };
  DivRem divrem(const MPoly3& d) const {
    static_assert(field_traits<K>::exact, "division requires exact coefficients");
    if (d.is_zero()) throw division_by_zero();
    std::map<Mono3, K, GrlexGreater> work;
    for (const auto& [m, v] : t_) work.emplace(m, v);
    const Mono3& lm = d.leading_term().first;
    const K& lc = d.leading_term().second;
    MPoly3 q, r;
    while (!work.empty()) {
      auto it = work.begin();
      Mono3 m = it->first;
      K v = it->second;
      work.erase(it);
      if (field_traits<K>::is_zero(v)) continue;
      if (lm.divides(m)) {
        Mono3 shift = m - lm;
        K f = v / lc;
        q.t_.push_back({shift, f});
        // subtract f * shift * d (skip the leading term, it cancels)
        for (size_t i = 1; i < d.t_.size(); ++i) {
          Mono3 mm = d.t_[i].first + shift;
          K delta = d.t_[i].second * f;
          auto [pos, inserted] = work.emplace(mm, -delta);
          if (!inserted) {
            pos->second -= delta;
            if (field_traits<K>::is_zero(pos->second)) work.erase(pos);
          }
        }
      } else {
        r.t_.push_back({m, v});
      }
    }
    std::sort(q.t_.begin(), q.t_.end(),
              [](const Term& s, const Term& t) { return GrlexGreater{}(s.first, t.first); });
    return {q, r};
  }

  std::optional<MPoly3> divide_exact(const MPoly3& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
  }

  // normalize so the leading coefficient is 1
  MPoly3 monic() const {
    if (is_zero()) return {};
    return divided_by_scalar(leading_term().second);
  }

  std::string str(const std::array<std::string, 3>& vars = {"x", "y", "z"}) const;

 private:
  static MPoly3 merged(const MPoly3& x, const MPoly3& y, bool subtract) {
    MPoly3 r;
    r.t_.reserve(x.t_.size() + y.t_.size());
    size_t i = 0, j = 0;
    GrlexGreater gt;
    while (i < x.t_.size() || j < y.t_.size()) {
      bool take_x;
      if (i >= x.t_.size())
        take_x = false;
      else if (j >= y.t_.size())
        take_x = true;
      else if (x.t_[i].first == y.t_[j].first) {
        K v = subtract ? K(x.t_[i].second - y.t_[j].second) : K(x.t_[i].second + y.t_[j].second);
        if (!field_traits<K>::is_zero(v)) r.t_.push_back({x.t_[i].first, std::move(v)});
        ++i;
        ++j;
        continue;
      } else
        take_x = gt(x.t_[i].first, y.t_[j].first);
      if (take_x) {
        r.t_.push_back(x.t_[i]);
        ++i;
      } else {
        r.t_.push_back(y.t_[j]);
        if (subtract) r.t_.back().second = -r.t_.back().second;
        ++j;
      }
    }
    return r;
  }

  static MPoly3 from_accumulator(std::unordered_map<uint64_t, K>&& acc) {
    MPoly3 r;
    r.t_.reserve(acc.size());
    for (auto& [k, v] : acc)
      if (!field_traits<K>::is_zero(v)) r.t_.push_back({Mono3::from_key(k), std::move(v)});
    std::sort(r.t_.begin(), r.t_.end(),
              [](const Term& s, const Term& t) { return GrlexGreater{}(s.first, t.first); });
    return r;
  }

  std::vector<Term> t_;
};

template <class K>
std::string MPoly3<K>::str(const std::array<std::string, 3>& vars) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : t_) {
    std::string cs;
    if constexpr (std::is_same_v<K, GaussianRational>) {
      cs = v.str();
    } else {
      cs = v.str(6);
    }
    if (!first) os << " + ";
    bool has_vars = m.total() > 0;
    bool unit = cs == "1";
    if (!unit || !has_vars) {
      bool needs_paren = cs.find('+') != std::string::npos ||
                         (cs.find('-') != std::string::npos && cs.rfind('-') > 0);
      os << (needs_paren ? "(" + cs + ")" : cs);
      if (has_vars) os << "*";
    }
    const int exps[3] = {m.a, m.b, m.c};
    bool sep = false;
    for (int i = 0; i < 3; ++i) {
      if (exps[i] == 0) continue;
      if (sep) os << "*";
      os << vars[i];
      if (exps[i] > 1) os << "^" << exps[i];
      sep = true;
    }
    first = false;
  }
  return os.str();
}

using QiPoly = MPoly3<GaussianRational>;
using BallPoly = MPoly3<ComplexBall>;

// ------------------------------------------------------------------ gcd

namespace detail {

// Univariate dense polynomials over K, ascending coefficients.
template <class K>
using UPoly = std::vector<K>;

template <class K>
void utrim(UPoly<K>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class K>
UPoly<K> upoly_rem(UPoly<K> a, const UPoly<K>& b) {
  // remainder of monic-normalized Euclid step sequence
  while (a.size() >= b.size() && !a.empty()) {
    K f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    utrim(a);
  }
  return a;
}

template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly<K> r = upoly_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    K lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace detail

namespace detail {

// Durand-Kerner seeds in doubles; never trusted, used only for snapping.
std::vector<std::complex<double>> numeric_roots(const std::vector<GaussianRational>& coeffs);

// best small-height Q(i) element near z, via continued fractions
std::optional<GaussianRational> snap_gaussian(std::complex<double> z, long max_den = 100000,
                                              double tol = 1e-7);

// restriction of f to the line P + tQ as dense coefficients in t
std::vector<GaussianRational> restrict_to_line(const QiPoly& f,
                                               const std::array<GaussianRational, 3>& P,
                                               const std::array<GaussianRational, 3>& Q);

// Q(i)-linear forms dividing f, found by pairing numeric restriction
// roots on two generic lines and confirmed by exact division.
std::vector<QiPoly> candidate_linear_factors(const QiPoly& f);

}  // namespace detail

// Exact multivariate gcd by primitive pseudo-remainder sequences,
// recursing on the number of variables present.
QiPoly mpoly_gcd(const QiPoly& f, const QiPoly& g);

// gcd of the three components; constant polynomials are returned monic.
QiPoly mpoly_gcd3(const QiPoly& f0, const QiPoly& f1, const QiPoly& f2);

// Fast certified check that gcd(f0,f1,f2) is constant: restrict to a
// random projective line and take a univariate gcd over F_p[i].  "true"
// is a proof; "false" means undecided.
bool gcd3_is_trivial_certificate(const QiPoly& f0, const QiPoly& f1, const QiPoly& f2);

// Removes the full common content (monomial and polynomial) of the three
// components in place; returns the removed factor if nontrivial.
std::optional<QiPoly> remove_common_factor(std::array<QiPoly, 3>& comps);

// Resultant of f and g with respect to `var` (Sylvester determinant,
// fraction-free Bareiss with exact polynomial divisions).
QiPoly mpoly_resultant(const QiPoly& f, const QiPoly& g, int var);

}  // namespace cremona

#endif
