#include "doctest.h"
#include "hopfgrow/bounds.hpp"
#include "hopfgrow/error.hpp"
#include "hopfgrow/growth.hpp"
#include "support.hpp"

using namespace hopfgrow;
using namespace testing_support;

namespace {

InvariantOptions small_options() {
  InvariantOptions o;
  o.degree = 4;
  o.group_bound = 4;
  return o;
}

const Hypothesis& hyp(const BoundReport& r, const std::string& prefix) {
  for (const auto& h : r.hypotheses)
    if (h.name.rfind(prefix, 0) == 0) return h;
  FAIL("no hypothesis starting with " << prefix);
  static Hypothesis none;
  return none;
}

}  // namespace

TEST_CASE("first bound on quantum planes is rank + number of generators") {
  for (int v = 1; v <= 3; ++v) {
    CAPTURE(v);
    Algebra alg(make_qplane(v));
    std::vector<AlgebraElement> S;
    for (int i = 0; i < v; ++i) S.push_back(alg.y(i));
    BoundReport r = bound_first(alg, S, 4);
    CHECK(r.all_pass());
    CHECK(r.value == std::optional<int>(1 + v));
    CHECK(r.gk_c0 == 1);
  }
}

TEST_CASE("first bound: a root-of-unity diagonal character blocks the bound") {
  Algebra alg(make_taft(3));
  BoundReport r = bound_first(alg, {alg.y(0)}, 4);
  CHECK(hyp(r, "elements of S").passed);
  CHECK(hyp(r, "S is linearly").passed);
  CHECK(!hyp(r, "each lambda_ii").passed);
  CHECK(!r.value);
}

TEST_CASE("first bound: a conjugate of y is dependent with y") {
  Algebra alg(make_qplane(1));
  const GroupElem g = alg.group().generator(0);
  AlgebraElement y = alg.y(0);
  BoundReport r = bound_first(alg, {y, alg.conjugate(y, g)}, 4);
  CHECK(!hyp(r, "S is linearly").passed);
  CHECK(!r.value);
}

TEST_CASE("first bound: non skew primitive input") {
  Algebra alg(make_qplane(2));
  BoundReport r = bound_first(alg, {alg.multiply(alg.y(0), alg.y(1))}, 4);
  CHECK(!hyp(r, "elements of S").passed);
  CHECK(!r.value);
}

TEST_CASE("first bound with empty S is the group rank") {
  Algebra alg(make_example("K", {{"v", "0"}, {"rank", "2"}}));
  BoundReport r = bound_first(alg, {}, 3);
  CHECK(r.value == std::optional<int>(2));
}

TEST_CASE("second bound on the exterior example and on K") {
  {
    Algebra alg(make_exterior(3));
    SecondBounds b = bound_second(alg, compute_invariants(alg, small_options()));
    CHECK(b.base.value == std::optional<int>(0));
    CHECK(b.refined.value == std::optional<int>(0));
  }
  {
    Algebra alg(make_example("K", {{"v", "1"}}));
    InvariantReport rep = compute_invariants(alg, small_options());
    SecondBounds b = bound_second(alg, rep);
    CHECK(b.base.value == std::optional<int>(2));
    CHECK(*b.refined.value >= *b.base.value);
  }
}

TEST_CASE("third bound on quantum planes and pure group algebras") {
  Algebra alg(make_qplane(2));
  InvariantReport rep = compute_invariants(alg, small_options());
  ThirdBounds t = bound_third(alg, rep);
  CHECK(t.quotient.value == std::optional<int>(3));
  CHECK(t.y_star.value == t.quotient.value);

  for (int rank : {1, 2, 3}) {
    Algebra grp(make_example("K", {{"v", "0"}, {"rank", std::to_string(rank)}}));
    InvariantReport r = compute_invariants(grp, small_options());
    CHECK(bound_third(grp, r).quotient.value == std::optional<int>(rank));
    CHECK(bound_second(grp, r).base.value == std::optional<int>(rank));
  }
}

TEST_CASE("third bound dominates second bound on builtins") {
  for (const auto& b : computable_builtins()) {
    CAPTURE(b.name);
    Algebra alg(make_example(b.name, b.params));
    InvariantReport rep = compute_invariants(alg, small_options());
    ThirdBounds t = bound_third(alg, rep);
    SecondBounds s = bound_second(alg, rep);
    REQUIRE(t.quotient.value);
    CHECK(*t.quotient.value >= *s.base.value);
  }
}

TEST_CASE("commutation scalar") {
  Algebra alg(make_qplane(1));
  const GroupElem g = alg.group().generator(0);
  auto lam = commutation_scalar(alg, alg.y(0), g);
  REQUIRE(lam);
  CHECK(*lam == alg.pres().lambda(0, g));
  auto sq = commutation_scalar(alg, alg.multiply(alg.y(0), alg.y(0)), g);
  REQUIRE(sq);
  CHECK(*sq == *lam * *lam);
}

TEST_CASE("detector: free case with independent characters is b4") {
  Algebra alg(make_example("K", {}));
  GrowthVerdict v = detect_exponential(alg, compute_invariants(alg, small_options()));
  CHECK(v.classification == "exponential");
  CHECK(v.detector == "pair-case");
  CHECK(v.case_id == "b4");
}

TEST_CASE("detector: equal non-root characters give b1") {
  Algebra alg(make_example("K", {{"lambda", "q1;q1"}}));
  GrowthVerdict v = detect_exponential(alg, compute_invariants(alg, small_options()));
  CHECK(v.classification == "exponential");
  CHECK(v.case_id == "b1");
}

TEST_CASE("detector: Taft and quantum planes are left to measurement") {
  for (int p : {2, 3}) {
    Algebra alg(make_taft(p));
    GrowthVerdict v = detect_exponential(alg, compute_invariants(alg, small_options()));
    CHECK(v.classification == "inconclusive");
    CHECK(v.detector == "none");
  }
  Algebra qp(make_qplane(2));
  GrowthVerdict v = detect_exponential(qp, compute_invariants(qp, small_options()));
  CHECK(v.classification == "inconclusive");
  bool relation = false;
  for (const auto& e : v.pairs) relation = relation || e.outcome == "relation";
  CHECK(relation);
}

TEST_CASE("detector verdicts agree with measured growth on builtins") {
  for (const auto& b : computable_builtins()) {
    CAPTURE(b.name);
    Algebra alg(make_example(b.name, b.params));
    InvariantReport rep = compute_invariants(alg, small_options());
    GrowthVerdict v = detect_exponential(alg, rep);
    GrowthOptions go;
    go.n_max = 12;
    GrowthReport g = measure_growth(alg, go);
    if (v.classification == "exponential") CHECK(ratio_flags_exponential(g.dims, go));
    if (g.estimate.classification == "polynomial") {
      const int deg = *g.estimate.degree;
      SecondBounds s = bound_second(alg, rep);
      ThirdBounds t = bound_third(alg, rep);
      for (const BoundReport* r : {&s.base, &s.refined, &t.quotient, &t.y_star})
        if (r->value) CHECK(*r->value <= deg);
      BoundReport f = bound_first(alg, greedy_first_set(alg, rep), rep.options.degree);
      if (f.value) CHECK(*f.value <= deg);
    }
  }
}
