#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mrc/betti.hpp"
#include "mrc/hilbert.hpp"

namespace mrc {

enum class GorKind { type1, type2, sporadic };

/// Numerics of a relatively compressed arithmetically Gorenstein point set on
/// the surface: socle degree, symmetric h-vector, minimal free resolution and
/// degree |G|.
struct GorensteinSpec {
  int64_t d = 0;
  int64_t socle = 0;
  GorKind kind = GorKind::type1;
  HVector hvec;
  BettiTable resolution;  // entries at i = 1..3 (resolution of the ideal)
  int64_t degree = 0;
};

struct CurveNumerics {
  int64_t degree = 0;
  int64_t genus = 0;
};

struct LinkResult {
  HVector residual_hvec;
  BettiTable residual_table;
  int64_t surplus = 0;
  std::vector<std::pair<int64_t, int64_t>> cancellations;  // (twist, multiplicity)
};

/// h-vector of the residual of x under a Gorenstein link with symmetric
/// h-vector g of socle degree sigma: h_Z(i) = h_G(i) - h_X(sigma - i).
/// Throws when some entry would be negative.
HVector hvector_link(const HVector& g, const HVector& x);

/// Type-1 links use socle degree 2e-2, type-2 (d even) socle degree 2e-1;
/// e is the socle degree of the linkage residual.  For kind sporadic (d = 4
/// only) the second argument is the socle degree itself (6 or 7), giving the
/// two degree-30 and degree-40 Gorenstein sets used for 23/24/28 points.
GorensteinSpec gorenstein_resolution(int64_t d, int64_t e, GorKind kind);

/// The odd-degree analogue of the type-2 Gorenstein set (socle degree 2e-1,
/// d+2 minimal generators).  Its mapping cone keeps a ghost pair at degree
/// e+1 of the residual, which is the obstruction for odd d.
GorensteinSpec odd_degree_type2_candidate(int64_t d, int64_t e);

enum class ConePolicy { paper_splittings_only, maximal };

struct ConeResult {
  BettiTable table;
  std::vector<std::pair<int64_t, int64_t>> cancellations;  // (twist, multiplicity)
};

/// Mapping cone of a link: dualize table_X at the socle twist, add the
/// Gorenstein resolution, and split the canonical pairs (the top twist, and
/// the surface generator when X carries one).  The maximal policy instead
/// cancels every equal-twist pair in adjacent homological degrees; it can
/// overshoot minimality and is for exploration only.
ConeResult mapping_cone_generic(const BettiTable& table_X, const GorensteinSpec& spec,
                                ConePolicy policy);

/// Link X_{e-2,t} (given by its Betti table) by the type-1 Gorenstein set of
/// socle degree 2e-2; the residual is X_{e, h_S(e-2)-t}.
LinkResult link_type1(int64_t d, int64_t e, const BettiTable& table_X);

/// Link X_{e-1,t} by the type-2 Gorenstein set of socle degree 2e-1 (d even);
/// the residual is X_{e, h_S(e-1)-t}.
LinkResult link_type2(int64_t d, int64_t e, const BettiTable& table_X);

/// Residual of a curve of given degree and genus under a complete
/// intersection link of type (a, b).
CurveNumerics ci_curve_link(const CurveNumerics& c, int64_t a, int64_t b);

struct CurveGorenstein {
  int64_t degree = 0;           // deg of the twisted anticanonical divisor
  int64_t dim_lower_bound = 0;  // Riemann-Roch lower bound on dim |mH_C - K_C|
};

/// Degree and linear-system dimension bound of a Gorenstein divisor in
/// |m H_C - K_C| on the curve.
CurveGorenstein gorenstein_from_curve(const CurveNumerics& c, int64_t m);

struct FeasibilitySlacks {
  int64_t generality_slack = 0;  // room to pass the curve through the points
  int64_t system_slack = 0;      // room in the Gorenstein linear system
};

/// Closed-form dimension slacks for d = 4: both must be positive for the
/// link to exist.  Negative values are reported, not thrown.
FeasibilitySlacks feasibility_slacks(int64_t d, int64_t e, int64_t t, GorKind kind);

struct LemmaReport {
  int64_t d = 0, e = 0;
  // type-1 reach covers the type-2 floor: 2*h_S(e) - 5d >= h_S(e)
  bool reach_ok = false;
  int64_t reach_lhs = 0, reach_rhs = 0;
  // m4(e) is within reach of the type-1 interval: h_S(e-1) - 1 >= m4(e)
  bool m4_ok = false;
  int64_t m4_lhs = 0, m4_rhs = 0;
};

LemmaReport lemma_checks(int64_t d, int64_t e);

struct CoverageReport {
  int64_t d = 0, e = 0;
  int64_t type1_lo = 0, type1_hi = 0;  // achievable surpluses via type-1 links
  int64_t type2_lo = 0, type2_hi = 0;  // achievable surpluses via type-2 links
  int64_t m4 = 0;
  bool contiguous = false;
  bool covered = false;  // union is an interval containing [1, m4(e)]
};

CoverageReport coverage_check(int64_t d, int64_t e);

}  // namespace mrc
