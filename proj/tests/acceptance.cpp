// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.

#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mrc/betti.hpp"
#include "mrc/experiment.hpp"
#include "mrc/ff.hpp"
#include "mrc/hilbert.hpp"
#include "mrc/liaison.hpp"

using namespace mrc;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<void()>& body) {
  std::string detail;
  try {
    body();
  } catch (const std::exception& ex) {
    detail = ex.what();
  }
  if (detail.empty()) {
    std::cout << "[PASS] criterion " << n << ": " << what << "\n";
  } else {
    ++failures;
    std::cout << "[FAIL] criterion " << n << ": " << what << " -- " << detail << "\n";
  }
  std::cout.flush();
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

template <typename T>
void require_eq(const T& got, const T& want, const std::string& msg) {
  if (!(got == want)) {
    std::ostringstream os;
    os << msg << " (got " << got << ", want " << want << ")";
    throw std::runtime_error(os.str());
  }
}

BettiTable table_for(const FamilyParams& p) {
  return p.e > p.d ? predict_mrc(p) : predict_generic(cardinality(p));
}

void criterion1() {
  const int64_t expected[3][4] = {{1, 2, 2, 3}, {2, 2, 5, 6}, {3, 4, 8, 8}};
  std::set<int64_t> cards;
  for (int64_t e = 2; e <= 4; ++e) {
    const CriticalValues cv = critical_values(4, e);
    const int64_t got[4] = {cv.m1, cv.m2, cv.m3, cv.m4};
    for (int k = 0; k < 4; ++k)
      require_eq(got[k], expected[e - 2][k],
                 "critical value m" + std::to_string(k + 1) + "(" + std::to_string(e) + ")");
    for (int64_t t : {cv.m1, cv.m2, cv.m3, cv.m4}) cards.insert(cardinality({4, e, t}));
  }
  require(cards == std::set<int64_t>{5, 6, 7, 12, 15, 16, 23, 24, 28},
          "critical cardinalities differ from {5,6,7,12,15,16,23,24,28}");
}

void criterion2() {
  for (int64_t d = 4; d <= 10; ++d) {
    for (int64_t e = d + 1; e <= d + 20; ++e) {
      const int64_t he = surface_h(d, e);
      for (int64_t t = 1; t <= he; ++t) {
        const FamilyParams p{d, e, t};
        const BettiTable tbl = predict_mrc(p);
        require(hilbert_from_table(tbl) == family_hvector(p), "h-vector round trip failed");
        require(validate_mrc_shape(tbl, d, e).ok, "shape validation failed");
        const MrcShape s = mrc_shape(p);
        require(s.a1 == he - t && s.c2 == t, "a1/c2 identities failed");
      }
      // Mustata endpoints: no, resp. exactly one, degree-e generator
      require(mrc_shape({d, e, he}).a1 == 0, "endpoint t = h_S(e) failed");
      require(mrc_shape({d, e, he - 1}).a1 == 1, "endpoint t = h_S(e) - 1 failed");
    }
  }
}

void criterion3() {
  const int64_t d = 4;
  for (int64_t e = 6; e <= 40; ++e) {
    for (int64_t t = critical_values(d, e - 2).m2; t < surface_h(d, e - 2); ++t) {
      const LinkResult r = link_type1(d, e, table_for({d, e - 2, t}));
      require(r.residual_table == predict_mrc({d, e, r.surplus}), "type-1 residual mismatch");
      require(r.surplus == surface_h(d, e - 2) - t, "type-1 surplus mismatch");
      require(r.surplus >= 1 && 3 * r.surplus <= 2 * surface_h(d, e) - 3 * d,
              "type-1 surplus outside the stated bound");
    }
    for (int64_t t = 1; t <= critical_values(d, e - 1).m3; ++t) {
      const LinkResult r = link_type2(d, e, table_for({d, e - 1, t}));
      require(r.residual_table == predict_mrc({d, e, r.surplus}), "type-2 residual mismatch");
      require(r.surplus == surface_h(d, e - 1) - t, "type-2 surplus mismatch");
      require(3 * r.surplus >= surface_h(d, e) && r.surplus <= surface_h(d, e - 1) - 1,
              "type-2 surplus outside the stated bound");
    }
  }
}

void criterion4() {
  for (int64_t d = 4; d <= 20; ++d) {
    for (int64_t e = d + 1; e <= 200; ++e) {
      const LemmaReport r = lemma_checks(d, e);
      const bool excluded = (d == 4 && e == 5);
      require(r.reach_ok == !excluded,
              "reach lemma verdict wrong at (" + std::to_string(d) + "," + std::to_string(e) + ")");
      require(r.m4_ok, "m4 lemma fails at (" + std::to_string(d) + "," + std::to_string(e) + ")");
    }
  }
  for (int64_t e = 5; e <= 100; ++e)
    require(coverage_check(4, e).covered, "coverage fails at e = " + std::to_string(e));
  const CoverageReport base = coverage_check(4, 5);
  require(base.type1_lo == 1 && base.type1_hi == 8 && base.type2_lo == 6 && base.type2_hi == 13,
          "e = 5 coverage intervals differ from [1,8] and [6,13]");
}

void criterion5() {
  for (int64_t e = 5; e <= 40; ++e) {
    // curves living on the quartic, linked out of the sextic of genus 3 and
    // the elliptic quartic inside complete intersections (4, e)
    const CurveNumerics c1 = ci_curve_link({6, 3}, 4, e);
    require(c1.degree == 4 * e - 6 && c1.genus == 2 * e * e - 6 * e + 3, "type-1 curve numerics");
    const CurveNumerics c2 = ci_curve_link({4, 1}, 4, e);
    require(c2.degree == 4 * e - 4 && c2.genus == 2 * e * e - 4 * e + 1, "type-2 curve numerics");

    const int64_t g1 = 8 * binom(e - 1, 2) + 6;
    const int64_t g2 = 4 * e * e - 8 * e + 8;
    if (e >= 5) {
      require(gorenstein_resolution(4, e, GorKind::type1).degree == g1, "|G| type 1");
      require(gorenstein_resolution(4, e, GorKind::type2).degree == g2, "|G| type 2");
    }

    const CurveGorenstein d1 = gorenstein_from_curve(c1, 2 * e - 3);
    require(d1.degree == g1, "anticanonical degree, type 1");
    require(d1.dim_lower_bound == (4 * e * e - 12 * e + 22) / 2, "dimension bound, type 1");
    const CurveGorenstein d2 = gorenstein_from_curve(c2, 2 * e - 2);
    require(d2.degree == g2, "anticanonical degree, type 2");
    require(d2.dim_lower_bound == 2 * e * e - 4 * e + 7, "dimension bound, type 2");

    for (int64_t t = critical_values(4, e - 2).m2; t < surface_h(4, e - 2); ++t) {
      const FeasibilitySlacks s = feasibility_slacks(4, e, t, GorKind::type1);
      require(s.generality_slack == 6 * e - 16 - t && s.generality_slack > 0 &&
                  s.system_slack == 6 * e - 9 - t && s.system_slack > 0,
              "type-1 slacks at t = " + std::to_string(t));
    }
    for (int64_t t = 1; t <= critical_values(4, e - 1).m3; ++t) {
      const FeasibilitySlacks s = feasibility_slacks(4, e, t, GorKind::type2);
      require(s.generality_slack == 4 * e - 8 - t && s.generality_slack > 0 &&
                  s.system_slack == 4 * e - 3 - t && s.system_slack > 0,
              "type-2 slacks at t = " + std::to_string(t));
    }
  }
  const GorensteinSpec g30 = gorenstein_resolution(4, 6, GorKind::sporadic);
  require(g30.degree == 30 && g30.hvec == HVector{1, 3, 6, 10, 6, 3, 1}, "sporadic |G| = 30");
  const GorensteinSpec g40 = gorenstein_resolution(4, 7, GorKind::sporadic);
  require(g40.degree == 40 && g40.hvec == HVector{1, 3, 6, 10, 10, 6, 3, 1}, "sporadic |G| = 40");
}

void criterion6() {
  const PrimeField f(32003);
  Rng rng(2026);
  for (const int64_t n : {1, 2, 4, 12}) {
    const BettiTable expected = predict_generic(n);
    for (int trial = 0; trial < 10; ++trial) {
      const PointSet ps = sample_points_on_surface(sample_surface(f, rng), n, f, rng);
      require(graded_betti(ps, 8) == expected,
              std::to_string(n) + " random points, trial " + std::to_string(trial));
    }
  }
  // the complete intersection of three quadrics, in random coordinates
  BettiTable ci_expected;
  ci_expected.add(0, 0, 1);
  ci_expected.add(1, 2, 3);
  ci_expected.add(2, 4, 3);
  ci_expected.add(3, 6, 1);
  for (int trial = 0; trial < 10; ++trial) {
    PrimeFieldMatrix m(4, 4);
    do
      for (auto& x : m.entries) x = uniform_below(rng, f.p());
    while (rank_of(m, f) != 4);
    PointSet ci{f, {}, std::nullopt};
    const uint64_t one = 1, neg = f.p() - 1;
    for (uint64_t a : {one, neg})
      for (uint64_t b : {one, neg})
        for (uint64_t c : {one, neg}) {
          std::array<uint64_t, 4> src{one, a, b, c}, dst{};
          for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s) dst[r] = f.add(dst[r], f.mul(m.at(r, s), src[s]));
          ci.points.push_back(dst);
        }
    require(graded_betti(ci, 9) == ci_expected, "8 CI points, trial " + std::to_string(trial));
  }
}

void criterion7() {
  const std::vector<FamilyParams> cases = {{4, 5, 2},  {4, 5, 6}, {4, 5, 10},
                                           {4, 5, 11}, {4, 6, 5}, {4, 6, 9},
                                           {4, 4, 3},  {4, 4, 4}, {4, 4, 8}};
  for (const FamilyParams& p : cases) {
    const auto reports = run_trials(p, 32003, 20, 271828);
    int matches = 0;
    for (const auto& r : reports) matches += r.betti_match ? 1 : 0;
    std::ostringstream os;
    os << "(" << p.d << "," << p.e << "," << p.t << ") |X| = " << cardinality(p) << ": " << matches
       << "/20 matches";
    require(matches >= 18, os.str());
  }
}

void criterion8() {
  for (int64_t t = 1; t < critical_values(5, 6).m1; ++t) {
    const ConeResult cone = mapping_cone_generic(
        predict_mrc({5, 6, t}), odd_degree_type2_candidate(5, 7), ConePolicy::paper_splittings_only);
    require(!validate_mrc_shape(cone.table, 5, 7).ok, "cone unexpectedly has the conjectured shape");
    require(cone.table.get(1, 8) > 0 && cone.table.get(2, 8) > 0,
            "ghost pair at internal degree 8 missing, t = " + std::to_string(t));
  }
}

}  // namespace

int main() {
  criterion(1, "critical-value table and cardinalities for d = 4, e = 2..4", criterion1);
  criterion(2, "prediction consistency for d = 4..10, all socle degrees and surpluses", criterion2);
  criterion(3, "link closure for d = 4, e = 6..40, both types, all stated surpluses", criterion3);
  criterion(4, "lemma verdicts (excluded only at (4,5)) and surplus coverage", criterion4);
  criterion(5, "curve liaison numerics, |G| formulas, dimension bounds, slacks", criterion5);
  criterion(6, "Koszul engine oracle suite over GF(32003), 10 trials per table", criterion6);
  criterion(7, "experimental reproduction at p = 32003, >= 18/20 per case", criterion7);
  criterion(8, "negative control: odd-degree cone keeps its degree-8 ghost pair", criterion8);
  std::cout << (failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS" : "ACCEPTANCE FAILURES PRESENT")
            << "\n";
  return failures;
}
