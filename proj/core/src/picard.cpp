#include "cremona/picard.hpp"

#include <json.hpp>

#include "cremona/errors.hpp"
#include "cremona/salem.hpp"

namespace cremona::picard {

LatticeVector basis_vector(const PicardLattice& L, int i) {
  LatticeVector v(L.rank(), BigInt(0));
  v[i] = 1;
  return v;
}

LatticeVector canonical_class(const PicardLattice& L) {
  LatticeVector k(L.rank(), BigInt(1));
  k[0] = -3;
  return k;
}

BigInt inner_product(const LatticeVector& u, const LatticeVector& v) {
  if (u.size() != v.size()) throw dimension_mismatch();
  BigInt s = u[0] * v[0];
  for (size_t i = 1; i < u.size(); ++i) s -= u[i] * v[i];
  return s;
}

bool is_isometry(const IntegerMatrix& m) {
  if (!m.is_square()) return false;
  int n = m.rows();
  IntegerMatrix j(n, n);
  j.at(0, 0) = 1;
  for (int i = 1; i < n; ++i) j.at(i, i) = -1;
  return m.transpose() * j * m == j;
}

bool preserves_canonical(const IntegerMatrix& m) {
  if (!m.is_square()) return false;
  PicardLattice L{m.rows() - 1};
  LatticeVector k = canonical_class(L);
  return m.apply(k) == k;
}

LatticeIsometry make_isometry(IntegerMatrix m, std::string name, std::string source_ref,
                              bool isometry_expected) {
  LatticeIsometry iso;
  iso.matrix = std::move(m);
  iso.name = std::move(name);
  iso.source_ref = std::move(source_ref);
  iso.isometry_expected = isometry_expected;
  if (!isometry_expected)
    iso.verified = Verification::Unchecked;
  else if (is_isometry(iso.matrix) && preserves_canonical(iso.matrix))
    iso.verified = Verification::Verified;
  else
    iso.verified = Verification::FailsIsometry;
  return iso;
}

namespace {

// The three-blow-up involution pattern shared by the recomputed matrices:
// H -> 2H - E - F - G and the standard Cremona exchange on the rest.
IntegerMatrix cremona_involution_matrix() {
  return IntegerMatrix::from_rows(
      {{2, 1, 1, 1}, {-1, 0, -1, -1}, {-1, -1, 0, -1}, {-1, -1, -1, 0}});
}

std::vector<LatticeIsometry> build_catalog() {
  std::vector<LatticeIsometry> cat;

  cat.push_back(make_isometry(
      cremona_involution_matrix(), "M_sigma",
      "pullback of sigma = (yz:xz:xy) on the blow-up of its three indeterminacy points, "
      "basis {H,E,F,G}"));

  cat.push_back(make_isometry(
      IntegerMatrix::from_rows({{1, 1, 0, 1}, {-1, 0, 0, -1}, {-1, -1, 1, -1}, {-2, -2, 0, -1}}),
      "M_rho",
      "pullback of rho = (xy:z^2:yz), matrix as printed for the basis {H,E,F,G}; the printed "
      "first column disagrees with the in-text multiplicities"));

  cat.push_back(make_isometry(
      IntegerMatrix::from_rows({{1, 0, 0, 1}, {-1, 1, 0, -1}, {-2, 0, 1, -2}, {-3, 0, 0, -2}}),
      "M_tau",
      "pullback of tau = (x^2:xy:y^2-xz), matrix as printed for the basis {H,E,F,G}; the "
      "printed first column disagrees with the in-text multiplicities"));

  cat.push_back(make_isometry(
      cremona_involution_matrix(), "M_rho_recomputed",
      "pullback of rho recomputed in the orthogonal total-transform basis from the strict/"
      "total transform bookkeeping of its three infinitely-near base points"));

  cat.push_back(make_isometry(
      cremona_involution_matrix(), "M_tau_recomputed",
      "pullback of tau recomputed in the orthogonal total-transform basis from the strict/"
      "total transform bookkeeping of its three infinitely-near base points"));

  cat.push_back(make_isometry(
      IntegerMatrix::from_rows({{2, 1, 1}, {-1, -1, -1}, {-1, 0, -1}}), "M_fabY",
      "pullback of f_{a,b} = (x(bx+y):z(bx+y):x(ax+z)) on the blow-up of p1, p2, basis "
      "{H,E1,E2}; the lifted map is still birational there, so no isometry is expected",
      /*isometry_expected=*/false));

  {
    // 16x16 pullback of phi_alpha o Phi on the strict-transform basis
    // {Delta, E, F, G, H, L, phi E, phi F, phi G, phi K, phi M,
    //  (phi Phi) phi E, ..., (phi Phi) phi M}
    IntegerMatrix m(16, 16);
    auto row = [&](int i, std::initializer_list<int> head) {
      int j = 0;
      for (int v : head) m.at(i, j++) = v;
    };
    row(0, {0, 0, 0, 0, 0, 1});
    row(1, {0, 0, 0, 0, 0, 1});
    m.at(1, 11) = 1;
    row(2, {0, 0, 0, 0, 0, 2});
    m.at(2, 12) = 1;
    row(3, {0, 0, 0, 0, 0, 3});
    m.at(3, 13) = 1;
    row(4, {0, 0, 0, 0, 0, 3});
    m.at(4, 14) = 1;
    row(5, {0, 0, 0, 0, 0, 3});
    m.at(5, 15) = 1;
    row(6, {0, 1, 0, 0, 0, -1});
    row(7, {0, 0, 0, 0, 1, -2});
    row(8, {0, 0, 0, 1, 0, -3});
    row(9, {0, 0, 1, 0, 0, -3});
    row(10, {1, 0, 0, 0, 0, -3});
    for (int i = 0; i < 5; ++i) m.at(11 + i, 6 + i) = 1;
    cat.push_back(make_isometry(
        std::move(m), "phi_Phi_16",
        "pullback of phi_alpha o Phi (Phi = (xz^2+y^3:yz^2:z^3)) on the plane blown up in 15 "
        "points, strict-transform basis as printed",
        /*isometry_expected=*/false));
  }

  {
    // 16x16 pullback for the n = 3, k = 2 member of the family
    // f = (xz^2 : z^3 : x^3 + z^3 - yz^2), strict-transform basis
    // {Delta'', E, G, K, M, Lambda, fF, fN, fL, fH, fOmega, f^2 F, ...}
    IntegerMatrix m(16, 16);
    auto row = [&](int i, std::initializer_list<int> head) {
      int j = 0;
      for (int v : head) m.at(i, j++) = v;
    };
    row(0, {0, 0, 0, 0, 0, 1});
    row(1, {0, 0, 0, 0, 0, 1});
    m.at(1, 11) = 1;
    row(2, {0, 0, 0, 0, 0, 2});
    m.at(2, 12) = 1;
    row(3, {0, 0, 0, 0, 0, 3});
    m.at(3, 13) = 1;
    row(4, {0, 0, 0, 0, 0, 3});
    m.at(4, 14) = 1;
    row(5, {0, 0, 0, 0, 0, 3});
    m.at(5, 15) = 1;
    row(6, {0, 1, 0, 0, 0, -1});
    row(7, {0, 0, 0, 0, 1, -3});
    row(8, {0, 0, 0, 1, 0, -3});
    row(9, {0, 0, 1, 0, 0, -2});
    row(10, {1, 0, 0, 0, 0, -3});
    for (int i = 0; i < 5; ++i) m.at(11 + i, 6 + i) = 1;
    cat.push_back(make_isometry(
        std::move(m), "bk3_16",
        "pullback of f = (xz^2:z^3:x^3+z^3-yz^2) (n = 3, k = 2 linear-fractional family) on "
        "the plane blown up in 10+ points, strict-transform basis as printed",
        /*isometry_expected=*/false));
  }

  {
    // 13x13 pullback for f = (y^2 : -delta xy + c y^2 + z^2 : yz) at n = 4,
    // m = 1, basis {Delta', E, G, K, fF, fH, fL, f^2 F, f^2 H, f^2 L, ...}
    IntegerMatrix m(13, 13);
    auto row = [&](int i, std::initializer_list<int> head) {
      int j = 0;
      for (int v : head) m.at(i, j++) = v;
    };
    row(0, {0, 0, 0, 1});
    row(1, {0, 0, 0, 1});
    m.at(1, 10) = 1;
    row(2, {0, 0, 0, 2});
    m.at(2, 11) = 1;
    row(3, {0, 0, 0, 2});
    m.at(3, 12) = 1;
    row(4, {0, 1, 0, -1});
    row(5, {0, 0, 1, -2});
    row(6, {1, 0, 0, -2});
    for (int i = 0; i < 6; ++i) m.at(7 + i, 4 + i) = 1;
    cat.push_back(make_isometry(
        std::move(m), "rot_13",
        "pullback of f = (y^2:-delta xy+cy^2+z^2:yz) for the n = 4, m = 1 rotation-domain "
        "family, strict-transform basis as printed",
        /*isometry_expected=*/false));
  }

  return cat;
}

}  // namespace

const std::vector<LatticeIsometry>& catalog() {
  static const std::vector<LatticeIsometry> cat = build_catalog();
  return cat;
}

const LatticeIsometry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw error("no catalog entry named " + name);
}

LatticeIsometry bedford_kim_matrix(int n) {
  if (n < 1) throw error("bedford_kim_matrix requires n >= 1");
  int size = n + 4;
  IntegerMatrix m(size, size);
  // H -> 2H - E1 - E2 - Q
  m.at(0, 0) = 2;
  m.at(1, 0) = -1;
  m.at(2, 0) = -1;
  m.at(3, 0) = -1;
  // E1 -> H - E1 - Q
  m.at(0, 1) = 1;
  m.at(1, 1) = -1;
  m.at(3, 1) = -1;
  // E2 -> H - E1 - E2
  m.at(0, 2) = 1;
  m.at(1, 2) = -1;
  m.at(2, 2) = -1;
  // Q -> f(Q) -> ... -> f^n(Q)
  for (int j = 3; j < size - 1; ++j) m.at(j + 1, j) = 1;
  // f^n(Q) -> H - E2 - Q
  m.at(0, size - 1) = 1;
  m.at(2, size - 1) = -1;
  m.at(3, size - 1) = -1;
  return make_isometry(std::move(m), "bedford_kim_" + std::to_string(n),
                       "pullback of f_{a,b} for (a,b) in V_n on the basis {H, E1, E2, Q, "
                       "f(Q), ..., f^n(Q)}");
}

RealBall entropy(const IntegerMatrix& m, int precision) {
  if (!m.is_square()) throw non_square();
  IntPolynomial chi = char_poly(m);
  auto split = salem::cyclotomic_part(chi);
  if (split.rest.degree() == 0) {
    // all eigenvalues are roots of unity: spectral radius exactly 1
    return RealBall::from_long(0, precision);
  }
  RealBall sr = spectral_radius(m, precision);
  return sr.log();
}

std::string catalog_to_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : catalog()) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < e.matrix.rows(); ++i)
      for (int j = 0; j < e.matrix.cols(); ++j) entries.push_back(e.matrix.at(i, j).get_str());
    arr.push_back({{"name", e.name},
                   {"size", e.matrix.rows()},
                   {"entries", entries},
                   {"source_ref", e.source_ref},
                   {"verified", e.verified == Verification::Verified     ? "verified"
                                : e.verified == Verification::FailsIsometry ? "fails-isometry"
                                                                            : "unchecked"}});
  }
  return arr.dump(2);
}

}  // namespace cremona::picard
