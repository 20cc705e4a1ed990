#include "cremona/weyl.hpp"

#include <algorithm>
#include <set>

#include "cremona/errors.hpp"

namespace cremona::weyl {

using picard::inner_product;

WeylContext make_context(int n) {
  if (n < 3) throw too_small("Weyl context requires n >= 3");
  WeylContext ctx;
  ctx.n = n;
  ctx.lattice = PicardLattice{n};
  LatticeVector a0(n + 1, BigInt(0));
  a0[0] = 1;
  a0[1] = a0[2] = a0[3] = -1;
  ctx.simple_roots.push_back(std::move(a0));
  // alpha_j = e_j - e_{j+1}: the orientation for which the simple pairings
  // are alpha_i . alpha_j = +1 on graph edges and every root of the orbit
  // closure is a positive or negative combination.  The reflections, and
  // hence the group, are unchanged by the orientation.
  for (int j = 1; j < n; ++j) {
    LatticeVector aj(n + 1, BigInt(0));
    aj[j] = 1;
    aj[j + 1] = -1;
    ctx.simple_roots.push_back(std::move(aj));
  }
  return ctx;
}

IntegerMatrix reflection_matrix(const WeylContext& ctx, const LatticeVector& alpha) {
  int r = ctx.lattice.rank();
  if (static_cast<int>(alpha.size()) != r) throw dimension_mismatch();
  if (inner_product(alpha, alpha) != -2) throw not_minus_two();
  IntegerMatrix m = IntegerMatrix::identity(r);
  for (int j = 0; j < r; ++j) {
    // column j: R(e_j) = e_j + (e_j . alpha) alpha
    BigInt c = (j == 0 ? alpha[0] : BigInt(-alpha[j]));
    for (int i = 0; i < r; ++i) m.at(i, j) += c * alpha[i];
  }
  return m;
}

IntegerMatrix coxeter_element(const WeylContext& ctx, const CoxeterWord& word) {
  if (static_cast<int>(word.size()) != ctx.n) throw error("Coxeter word must use every generator once");
  std::vector<bool> seen(ctx.n, false);
  for (int g : word) {
    if (g < 0 || g >= ctx.n || seen[g]) throw error("Coxeter word must be a permutation");
    seen[g] = true;
  }
  IntegerMatrix m = IntegerMatrix::identity(ctx.lattice.rank());
  for (int g : word) m = m * reflection_matrix(ctx, ctx.simple_roots[g]);
  return m;
}

CoxeterWord standard_word(int n) {
  CoxeterWord w(n);
  for (int i = 0; i < n; ++i) w[i] = i;
  return w;
}

IntegerMatrix standard_element(const WeylContext& ctx) {
  int n = ctx.n;
  if (n < 4) throw too_small("standard element requires n >= 4");
  IntegerMatrix m(n + 1, n + 1);
  auto set_col = [&](int j, std::initializer_list<std::pair<int, int>> entries) {
    for (auto [i, v] : entries) m.at(i, j) = v;
  };
  set_col(0, {{0, 2}, {2, -1}, {3, -1}, {4, -1}});
  set_col(1, {{0, 1}, {3, -1}, {4, -1}});
  set_col(2, {{0, 1}, {2, -1}, {4, -1}});
  set_col(3, {{0, 1}, {2, -1}, {3, -1}});
  for (int j = 4; j <= n - 1; ++j) m.at(j + 1, j) = 1;
  m.at(1, n) = 1;
  return m;
}

IntPolynomial coxeter_char_poly_formula(int n) {
  if (n < 3) throw too_small("coxeter_char_poly_formula requires n >= 3");
  IntPolynomial num =
      IntPolynomial::monomial(n - 2) * IntPolynomial::from_coeffs({-1, -1, 0, 1}) +
      IntPolynomial::from_coeffs({-1, 0, 1, 1});
  auto q = num.divide_exact(IntPolynomial::from_coeffs({-1, 1}));
  if (!q) throw non_divisible("the displayed Coxeter characteristic quotient has a remainder");
  return *q;
}

int coxeter_order(int n) {
  constexpr int kCap = 1000;
  WeylContext ctx = make_context(n);
  IntegerMatrix w = coxeter_element(ctx, standard_word(n));
  IntegerMatrix p = w;
  for (int k = 1; k <= kCap; ++k) {
    if (p.is_identity()) return k;
    p = p * w;
  }
  throw infinite_order();
}

IntegerMatrix adjacency_matrix(int n) {
  if (n < 3) throw too_small("adjacency matrix requires n >= 3");
  IntegerMatrix a(n, n);
  for (int i = 1; i + 1 <= n - 1; ++i) {
    a.at(i, i + 1) = 1;
    a.at(i + 1, i) = 1;
  }
  if (n >= 4) {
    a.at(0, 3) = 1;
    a.at(3, 0) = 1;
  }
  return a;
}

RealBall adjacency_spectral_radius(int n, int precision) {
  IntegerMatrix a = adjacency_matrix(n);
  if (n == 9) {
    // 2 is an eigenvalue with a positive eigenvector, so it is the
    // Perron root: check the kernel of A - 2I exactly.
    IntegerMatrix shifted = a;
    for (int i = 0; i < n; ++i) shifted.at(i, i) -= 2;
    auto kernel = integer_kernel(shifted);
    for (const auto& v : kernel) {
      bool pos = true, neg = true;
      for (const auto& x : v) {
        pos = pos && x > 0;
        neg = neg && x < 0;
      }
      if (pos || neg) return RealBall::from_long(2, precision);
    }
    throw error("expected an exact Perron eigenvalue 2 at n = 9");
  }
  return spectral_radius(a, precision);
}

BipartiteRestriction bipartite_restriction(int n, int precision) {
  BipartiteRestriction out{adjacency_spectral_radius(n, precision), RealBall(), ConicType::Elliptic,
                           std::nullopt};
  RealBall two = RealBall::from_long(2, precision);
  out.trace = out.lambda * out.lambda - two;
  if (n == 9) {
    out.type = ConicType::Parabolic;  // trace exactly 2
    return out;
  }
  if (RealBall::certainly_less(out.trace, two)) {
    out.type = ConicType::Elliptic;
    return out;
  }
  if (RealBall::certainly_less(two, out.trace)) {
    out.type = ConicType::Hyperbolic;
    // larger root of t^2 - trace t + 1
    RealBall four = RealBall::from_long(4, precision);
    RealBall disc = (out.trace * out.trace - four).sqrt();
    out.top_eigenvalue = (out.trace + disc) / two;
    return out;
  }
  throw inconclusive("trace enclosure meets 2 away from n = 9");
}

std::vector<LatticeVector> roots_up_to_length(const WeylContext& ctx, int L) {
  if (L < 0) throw error("roots_up_to_length requires L >= 0");
  std::vector<IntegerMatrix> gens;
  for (const auto& a : ctx.simple_roots) gens.push_back(reflection_matrix(ctx, a));

  auto key = [](const LatticeVector& v) {
    std::string k;
    for (const auto& x : v) {
      k += x.get_str();
      k += ',';
    }
    return k;
  };
  std::set<std::string> seen;
  std::vector<LatticeVector> all, frontier;
  for (const auto& a : ctx.simple_roots) {
    if (seen.insert(key(a)).second) {
      all.push_back(a);
      frontier.push_back(a);
    }
  }
  for (int depth = 1; depth <= L; ++depth) {
    std::vector<LatticeVector> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        LatticeVector w = g.apply(v);
        if (seen.insert(key(w)).second) {
          all.push_back(w);
          next.push_back(w);
        }
      }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return all;
}

std::optional<std::vector<BigRational>> root_coordinates(const WeylContext& ctx,
                                                         const LatticeVector& v) {
  // solve [alpha_0 ... alpha_{n-1}] c = v over Q
  int rows = ctx.lattice.rank(), cols = ctx.n;
  std::vector<std::vector<BigRational>> a(rows, std::vector<BigRational>(cols + 1));
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) a[i][j] = BigRational(ctx.simple_roots[j][i]);
  for (int i = 0; i < rows; ++i) a[i][cols] = BigRational(v[i]);
  std::vector<int> pivot_of_col(cols, -1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    BigRational inv = a[r][c];
    for (int j = 0; j <= cols; ++j) a[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      BigRational f = a[i][c];
      for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_of_col[c] = r;
    ++r;
  }
  // consistency: rows beyond the pivots must have zero rhs
  for (int i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  std::vector<BigRational> coords(cols, BigRational(0));
  for (int c = 0; c < cols; ++c)
    if (pivot_of_col[c] >= 0) coords[c] = a[pivot_of_col[c]][cols];
  return coords;
}

}  // namespace cremona::weyl
