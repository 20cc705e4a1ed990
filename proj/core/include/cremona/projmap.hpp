#ifndef CREMONA_PROJMAP_HPP
#define CREMONA_PROJMAP_HPP

// Homogeneous rational self-maps of P^2 over Q(i) (exact) or over
// certified balls; iteration, degree growth, stability, exceptional loci.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cremona/mpoly.hpp"
#include "cremona/roots.hpp"

namespace cremona::projmap {

template <class K>
struct PointT {
  std::array<K, 3> coords;
};

using ExactPoint = PointT<GaussianRational>;
using BallPoint = PointT<ComplexBall>;

// Canonical normalization: first nonzero coordinate scaled to 1.
ExactPoint normalize(const ExactPoint& p);
// Ball normalization: coordinate of maximal midpoint modulus scaled to 1.
BallPoint normalize(const BallPoint& p);
bool equal_points(const ExactPoint& a, const ExactPoint& b);
ExactPoint make_point(GaussianRational x, GaussianRational y, GaussianRational z);
BallPoint to_ball_point(const ExactPoint& p, int prec = kDefaultPrecision);

template <class K>
struct MapT {
  std::array<MPoly3<K>, 3> components;
  int degree = 0;
};

using ExactMap = MapT<GaussianRational>;
using BallMap = MapT<ComplexBall>;

// Validates homogeneity and a common degree >= 1, removes any common
// factor of the three components; the removed factor is reported.
struct MakeResult {
  ExactMap map;
  std::optional<QiPoly> removed_content;
};
MakeResult make_map(std::array<QiPoly, 3> components);

BallMap to_ball_map(const ExactMap& f, int prec = kDefaultPrecision);

// f o g with exact content removal.
ExactMap compose(const ExactMap& f, const ExactMap& g);

struct Indeterminate {};
template <class K>
using EvalOutcome = std::variant<PointT<K>, Indeterminate>;

// Exact: Indeterminate iff all components vanish exactly at p.
EvalOutcome<GaussianRational> evaluate(const ExactMap& f, const ExactPoint& p);
// Ball: Indeterminate stands for "possibly indeterminate" (all component
// enclosures contain zero).
EvalOutcome<ComplexBall> evaluate(const BallMap& f, const BallPoint& p);

struct DegreeSequence {
  std::vector<long> degrees;  // deg f, deg f^2, ...
  bool truncated = false;     // stopped because a degree exceeded the budget
};
DegreeSequence degree_sequence(const ExactMap& f, int n_max = 12, long degree_budget = 200);

enum class Growth { Bounded, Linear, Quadratic, Exponential };

struct GrowthClass {
  Growth tag;
  std::optional<RealBall> rate;  // present iff Exponential
};

// Classifies a degree sequence by its tail window (window size 5,
// exponential-ratio threshold 1 + 1/10); throws `inconclusive` when no
// pattern stabilizes.  Requires at least 8 entries.
GrowthClass growth_class(const std::vector<long>& degrees);

struct StabilityReport {
  int stable_up_to = 0;              // largest n with deg f^n = (deg f)^n
  std::optional<int> violated_at;    // first n with deg f^n < (deg f)^n
};
StabilityReport stability_probe(const ExactMap& f, int n_max = 12);

struct JacobianFactors {
  std::vector<std::pair<QiPoly, int>> linear_factors;  // (form, multiplicity)
  QiPoly remainder;     // co-factor after splitting linear parts
  bool fully_split = false;
  int total_degree = 0;  // 3(deg f - 1)
};
// Exact Jacobian determinant with Q(i)-linear factors split off; factors
// found by root-snapping on two generic lines are confirmed by exact
// division before being reported.
JacobianFactors jacobian_divisor(const ExactMap& f);

struct IndeterminacySet {
  std::vector<ExactPoint> points;
  // true when every elimination candidate was resolved over Q(i) and
  // verified; candidates outside Q(i) make this false.
  bool complete = true;
};
IndeterminacySet indeterminacy_points(const ExactMap& f,
                                      const std::vector<ExactPoint>& extra_candidates = {});

// Text form "(<poly>:<poly>:<poly>)" with coefficients like "1/2+1/2*i".
ExactMap parse_map(const std::string& text);
std::string map_to_string(const ExactMap& f);

}  // namespace cremona::projmap

#endif
