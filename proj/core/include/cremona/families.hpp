#ifndef CREMONA_FAMILIES_HPP
#define CREMONA_FAMILIES_HPP

// Constructors for the concrete map families and their realization
// checkers: orbit-data membership, invariant cubics, orbit-closure
// conditions, jets with the gluing-condition test, and the torus-orbit
// projection sampler.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/projmap.hpp"

namespace cremona::families {

using projmap::BallPoint;
using projmap::ExactMap;
using projmap::ExactPoint;
using projmap::MakeResult;

enum class FamilyId {
  Sigma,
  Rho,
  Tau,
  BK_fab,
  BK_FAB,
  BK_k,
  BK_rot,
  McMullen,
  DG_Phi,
  DG_phiAlphaPhi,
  DG_conic,
};

FamilyId family_from_string(const std::string& name);
std::string family_to_string(FamilyId id);

struct FamilyParams {
  GaussianRational a, b;                 // BK_fab, McMullen
  GaussianRational alpha;                // DG_phiAlphaPhi
  GaussianRational c, delta;             // BK_k, BK_rot
  std::vector<GaussianRational> A, B;    // BK_FAB rows (a0,a1,a2), (b0,b1,b2)
  std::vector<GaussianRational> a_even;  // BK_k inner coefficients a_j, even j
  int n = 0;                             // DG_Phi
  int k = 0;                             // BK_k
};

MakeResult make(FamilyId id, const FamilyParams& params = {});

// convenience constructors
MakeResult make_sigma();
MakeResult make_rho();
MakeResult make_tau();
MakeResult make_bk_fab(const GaussianRational& a, const GaussianRational& b);
MakeResult make_mcmullen(const GaussianRational& a, const GaussianRational& b);
MakeResult make_dg_phi(int n);
ExactMap phi_alpha_matrix(const GaussianRational& alpha);  // the PGL_3 element
MakeResult make_dg_phi_alpha_phi(const GaussianRational& alpha);
MakeResult make_dg_conic();

// ------------------------------------------------------------- V_n data

enum class OrbitTermination { HitTarget, Indeterminate, Budget };

struct OrbitRecord {
  std::vector<ExactPoint> points;  // q, f(q), f^2(q), ...
  std::optional<int> hit_index;    // minimal j with f^j(q) = p_*
  OrbitTermination terminated_by = OrbitTermination::Budget;
};

// Iterates q = (1:-a:0) under f_{a,b}; hit when the image equals
// p_* = (1:-b:-a).
OrbitRecord vn_membership(const GaussianRational& a, const GaussianRational& b, int n_max);

struct BallOrbitRecord {
  std::vector<BallPoint> points;
  std::optional<int> hit_index;
  OrbitTermination terminated_by = OrbitTermination::Budget;
};

// Same orbit over balls; a hit is a normalized coordinate match within
// `tolerance` (and not a certified miss).
BallOrbitRecord vn_membership(const ComplexBall& a, const ComplexBall& b, int n_max,
                              double tolerance = 1e-10);

// ------------------------------------------------- invariant cubics

// Parameter curves phi_1, phi_2, phi_3; throws excluded_parameter at the
// poles t in {0, 1, -1} of the displayed formulas.
std::pair<GaussianRational, GaussianRational> phi_curve(int j, const GaussianRational& t);

// The cubic P_{t,a,b}.
QiPoly invariant_cubic(const GaussianRational& t, const GaussianRational& a,
                       const GaussianRational& b);

// true iff P_{t,a,b} o f_{a,b} is exactly divisible by P_{t,a,b}
bool cubic_invariance_check(const GaussianRational& t, const GaussianRational& a,
                            const GaussianRational& b);
bool cubic_invariance_check(int j, const GaussianRational& t);

// ------------------------------------------------- orbit-closure data

// p_1 = (0:0:1), p_2 = (0:1:0), p_3 = (1:0:0), p_4 = (a:b:1),
// p_{i+4} = f^i(p_4): true iff no p_i (4 <= i <= n) lies on a triangle
// line and p_{n+1} = p_1.
bool mcmullen_orbit_check(const GaussianRational& a, const GaussianRational& b, int n);

struct CertifiedParams {
  ComplexBall a, b;
};

// Newton on (a,b) -> f^(n-3)(p_4) - p_1 in the affine chart z = 1, from
// the given seed, certified by a Krawczyk contraction; nullopt when the
// iteration does not converge or the certificate fails.
std::optional<CertifiedParams> mcmullen_solve(int n, std::complex<double> seed_a,
                                              std::complex<double> seed_b,
                                              int precision = kDefaultPrecision);

// Ball variant of the orbit check for certified parameters.
bool mcmullen_orbit_check(const CertifiedParams& p, int n, double tolerance = 1e-10);

// ------------------------------------------------------------- jets

// Taylor coefficients to total order <= 4 of a plane germ
// (u, v) -> (sum m_{ij} u^i v^j, sum n_{ij} u^i v^j).
struct Jet2x4 {
  static constexpr int kOrder = 4;
  GaussianRational m[5][5];
  GaussianRational n[5][5];

  static Jet2x4 identity();
};

// Jet of f at `base` in the affine chart `chart` (0, 1 or 2: the
// coordinate scaled to 1), source translated so base goes to the origin
// and target centered at the image of base.  Requires the chart
// coordinate of both base and image to be nonzero (PoleAtBase).
Jet2x4 germ_jet(const ExactMap& f, const ExactPoint& base, int chart, int order = 4);

// jet of outer o inner, truncated to total order 4
Jet2x4 jet_compose(const Jet2x4& outer, const Jet2x4& inner);

struct GluingVerdict {
  bool pass = false;
  std::vector<GaussianRational> witnesses;  // consistent values of t
};

// Conditions: m00 = n00 = 0, n10 = 0, m10 = t^2 and n01 = i t^3 for a
// consistent t, and 3 m01 t + 2 i n20 = 0.
GluingVerdict gluing_check(const Jet2x4& jet);

// ------------------------------------------------------ orbit sampler

struct OmegaRow {
  long n;
  double om1[3];  // Re x, Im x, Im y
  double om2[3];  // Re x, Re y, Im y
};

struct OmegaTable {
  std::vector<OmegaRow> rows;
  bool overflow = false;  // an iterate exceeded the magnitude cap
  double min_abs_y = 0, max_abs_y = 0;
};

// Samples the orbit of m0 under the affine map
// (x, y) -> ((alpha x + y)/(x + 1), beta y).
OmegaTable orbit_projection_samples(std::complex<double> alpha, std::complex<double> beta,
                                    std::complex<double> x0, std::complex<double> y0, long N);

}  // namespace cremona::families

#endif
