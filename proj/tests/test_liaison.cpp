#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mrc/liaison.hpp"

using namespace mrc;

namespace {

// Prediction for X_{e,t} with the small-socle cases routed to the generic
// (Bohnhorst-Gaeta) shape, as the base cases of the linkage induction need.
BettiTable table_for(const FamilyParams& p) {
  return p.e > p.d ? predict_mrc(p) : predict_generic(cardinality(p));
}

}  // namespace

TEST_CASE("h-vector linkage") {
  const HVector g = gorenstein_hvector(4, 8);  // type-1 set for e = 5
  CHECK(g == HVector{1, 3, 6, 10, 14, 10, 6, 3, 1});
  CHECK(hvector_link(g, HVector{1, 3, 6, 2}) == HVector{1, 3, 6, 10, 14, 8});
  CHECK(hvector_link(g, g).empty());  // self-linked: empty residual
  CHECK_THROWS_AS(hvector_link(g, HVector{1, 3, 6, 11}), std::invalid_argument);
  CHECK_THROWS_AS(hvector_link({}, HVector{1}), std::invalid_argument);
}

TEST_CASE("Gorenstein resolutions: type 1") {
  const GorensteinSpec s = gorenstein_resolution(4, 7, GorKind::type1);
  CHECK(s.socle == 12);
  CHECK(s.resolution.get(3, 15) == 1);
  CHECK(s.resolution.get(2, 11) == 1);
  CHECK(s.resolution.get(2, 8) == 8);
  CHECK(s.resolution.get(1, 7) == 8);
  CHECK(s.resolution.get(1, 4) == 1);
  CHECK(s.degree == hvector_sum(s.hvec));
  CHECK(s.degree == hvector_sum(gorenstein_hvector(4, 12)));
}

TEST_CASE("Gorenstein resolutions: type 2 and the odd-degree obstruction") {
  const GorensteinSpec s = gorenstein_resolution(4, 6, GorKind::type2);
  CHECK(s.socle == 11);
  CHECK(s.resolution.get(3, 14) == 1);
  CHECK(s.resolution.get(2, 10) == 1);
  CHECK(s.resolution.get(2, 8) == 4);
  CHECK(s.resolution.get(1, 6) == 4);
  CHECK(s.resolution.get(1, 4) == 1);
  CHECK_THROWS_AS(gorenstein_resolution(5, 6, GorKind::type2), std::invalid_argument);

  const GorensteinSpec odd = odd_degree_type2_candidate(5, 7);
  CHECK(odd.socle == 13);
  CHECK(odd.resolution.get(1, 8) == 1);  // the extra generator pair
  CHECK(odd.resolution.get(2, 8) == 1);
  CHECK_THROWS_AS(odd_degree_type2_candidate(4, 7), std::invalid_argument);
}

TEST_CASE("sporadic Gorenstein sets of degree 30 and 40") {
  const GorensteinSpec g30 = gorenstein_resolution(4, 6, GorKind::sporadic);
  CHECK(g30.degree == 30);
  CHECK(g30.hvec == HVector{1, 3, 6, 10, 6, 3, 1});
  CHECK(g30.resolution.get(1, 4) == 9);
  const GorensteinSpec g40 = gorenstein_resolution(4, 7, GorKind::sporadic);
  CHECK(g40.degree == 40);
  CHECK(g40.resolution.get(2, 6) == 5);
  CHECK_THROWS_AS(gorenstein_resolution(4, 8, GorKind::sporadic), std::invalid_argument);
}

TEST_CASE("worked type-1 link: X_{5,6} -> X_{7,12}") {
  const LinkResult r = link_type1(4, 7, predict_mrc({4, 5, 6}));
  CHECK(r.surplus == 12);
  CHECK(r.residual_hvec == family_hvector({4, 7, 12}));
  CHECK(r.residual_table == predict_mrc({4, 7, 12}));
  CHECK_FALSE(r.cancellations.empty());
}

TEST_CASE("base-case links out of generic (Bohnhorst-Gaeta) tables") {
  // 12 generic points link to X_{5,8} through the degree-54 type-1 set
  const LinkResult t1 = link_type1(4, 5, predict_generic(12));
  CHECK(t1.residual_table == predict_mrc({4, 5, 8}));
  // 28 generic points link to X_{5,6} through the degree-68 type-2 set
  const LinkResult t2 = link_type2(4, 5, predict_generic(28));
  CHECK(t2.residual_table == predict_mrc({4, 5, 6}));
}

TEST_CASE("link gates exclude the redundant summands") {
  // type 1 needs t >= m2(e-2): m2(5) = 5
  CHECK_THROWS_WITH_AS(static_cast<void>(link_type1(4, 7, predict_mrc({4, 5, 4}))),
                       "link_type1: c1 > 0: redundant R(-e-1) not excluded", std::invalid_argument);
  // type 2 needs t <= m3(e-1): m3(5) = 10
  CHECK_THROWS_WITH_AS(static_cast<void>(link_type2(4, 6, predict_mrc({4, 5, 11}))),
                       "link_type2: a2 > 0: redundant R(-e-2) not excluded", std::invalid_argument);
  // wrong socle degree for the requested link
  CHECK_THROWS_AS(static_cast<void>(link_type1(4, 8, predict_mrc({4, 5, 6}))),
                  std::invalid_argument);
}

TEST_CASE("link closure across the stated surplus intervals") {
  const int64_t d = 4;
  for (int64_t e = 6; e <= 20; ++e) {
    for (int64_t t = critical_values(d, e - 2).m2; t < surface_h(d, e - 2); ++t) {
      const LinkResult r = link_type1(d, e, table_for({d, e - 2, t}));
      CHECK(r.residual_table == predict_mrc({d, e, surface_h(d, e - 2) - t}));
    }
    for (int64_t t = 1; t <= critical_values(d, e - 1).m3; ++t) {
      const LinkResult r = link_type2(d, e, table_for({d, e - 1, t}));
      CHECK(r.residual_table == predict_mrc({d, e, surface_h(d, e - 1) - t}));
    }
  }
}

TEST_CASE("maximal cone policy agrees with the paper policy on honest links") {
  const GorensteinSpec spec = gorenstein_resolution(4, 7, GorKind::type1);
  const BettiTable x = predict_mrc({4, 5, 6});
  const ConeResult paper = mapping_cone_generic(x, spec, ConePolicy::paper_splittings_only);
  const ConeResult maximal = mapping_cone_generic(x, spec, ConePolicy::maximal);
  CHECK(paper.table == maximal.table);  // no ghost pairs left to overshoot on
}

TEST_CASE("odd-degree candidate leaves a ghost pair in the cone") {
  const BettiTable x = predict_mrc({5, 6, 5});  // t < m1(6), both e+1 slots filled
  const ConeResult cone =
      mapping_cone_generic(x, odd_degree_type2_candidate(5, 7), ConePolicy::paper_splittings_only);
  const ShapeCheck check = validate_mrc_shape(cone.table, 5, 7);
  CHECK_FALSE(check.ok);
  CHECK(cone.table.get(1, 8) > 0);
  CHECK(cone.table.get(2, 8) > 0);
}

TEST_CASE("curve liaison numerics") {
  // twisted cubic linked in a (2,2) complete intersection to a line
  const CurveNumerics line = ci_curve_link({3, 0}, 2, 2);
  CHECK(line.degree == 1);
  CHECK(line.genus == 0);
  // (3,4) complete intersection curve has degree 12 and genus 19; linking a
  // degree-5 genus-2 curve inside it leaves degree 7 and genus 4
  const CurveNumerics r = ci_curve_link({5, 2}, 3, 4);
  CHECK(r.degree == 7);
  CHECK(r.genus == 2 + (3 + 4 - 4) * (7 - 5) / 2);
  CHECK_THROWS_AS(ci_curve_link({10, 0}, 3, 3), std::invalid_argument);
}

TEST_CASE("Gorenstein divisors on a curve") {
  // ACM sextic of genus 3: |2H - K| has degree 8 and moves at least 5-dim
  const CurveGorenstein g = gorenstein_from_curve({6, 3}, 2);
  CHECK(g.degree == 2 * 6 - 4);
  CHECK(g.dim_lower_bound == g.degree - 3);
}

TEST_CASE("feasibility slacks, d = 4 closed forms") {
  const FeasibilitySlacks t1 = feasibility_slacks(4, 7, 12, GorKind::type1);
  CHECK(t1.generality_slack == 6 * 7 - 16 - 12);
  CHECK(t1.system_slack == 6 * 7 - 9 - 12);
  const FeasibilitySlacks t2 = feasibility_slacks(4, 6, 8, GorKind::type2);
  CHECK(t2.generality_slack == 4 * 6 - 8 - 8);
  CHECK(t2.system_slack == 4 * 6 - 3 - 8);
  CHECK_THROWS_AS(feasibility_slacks(5, 7, 1, GorKind::type1), std::invalid_argument);
}

TEST_CASE("lemma checks fail exactly at (4,5)") {
  const LemmaReport bad = lemma_checks(4, 5);
  CHECK_FALSE(bad.reach_ok);
  for (int64_t e = 6; e <= 60; ++e) {
    const LemmaReport r = lemma_checks(4, e);
    CHECK(r.reach_ok);
    CHECK(r.m4_ok);
  }
}

TEST_CASE("coverage of the surplus range") {
  const CoverageReport r5 = coverage_check(4, 5);
  CHECK(r5.type1_lo == 1);
  CHECK(r5.type1_hi == 8);
  CHECK(r5.type2_lo == 6);
  CHECK(r5.type2_hi == 13);
  CHECK(r5.m4 == 11);
  CHECK(r5.covered);
  for (int64_t e = 5; e <= 60; ++e) CHECK(coverage_check(4, e).covered);
}
