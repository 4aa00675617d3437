#include <algorithm>

#include "doctest.h"
#include "hopfgrow/error.hpp"
#include "hopfgrow/format.hpp"
#include "hopfgrow/invariants.hpp"
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

Scalar zeta(int n, int a = 1) { return Scalar(CycloRational::root_of_unity(n, a)); }

}  // namespace

TEST_CASE("exterior example: only the (x, -1) pair, all of it root of unity") {
  for (int s = 1; s <= 4; ++s) {
    CAPTURE(s);
    Algebra alg(make_exterior(s));
    InvariantReport r = compute_invariants(alg, small_options());
    const GroupElem x = alg.group().generator(0);
    REQUIRE(r.Omega.size() == 1);
    CHECK(r.Omega[0].first == x);
    CHECK(r.Omega[0].second == Scalar(-1));
    CHECK(r.Omega_sqrt == r.Omega);
    CHECK(r.W == r.W_sqrt);
    CHECK(r.dim_Y_sqrt == s);
    CHECK(r.quotient_dim == 0);
    const WeightCommutator* cls = r.find_class(x, Scalar(-1));
    REQUIRE(cls != nullptr);
    // The generalized space equals its level-one part.
    CHECK(cls->level == std::optional<int>(1));
    CHECK(static_cast<int>(cls->witnesses.size()) == cls->dim);
    CHECK(cls->dim == s);
    CHECK(cls->direct_power == 2);
    CHECK(r.all_checks_pass());
  }
}

TEST_CASE("Taft algebras: the weight is a root weight") {
  for (int p : {2, 3, 5}) {
    CAPTURE(p);
    Algebra alg(make_taft(p));
    InvariantReport r = compute_invariants(alg, small_options());
    const GroupElem g = alg.group().generator(0);
    CHECK(r.W == std::vector<GroupElem>{g});
    CHECK(r.W_sqrt == r.W);
    CHECK(r.Gamma == std::vector<Scalar>{zeta(p)});
    CHECK(r.Gamma_sqrt == r.Gamma);
    CHECK(r.quotient_dim == 0);
    const WeightCommutator* cls = r.find_class(g, zeta(p));
    REQUIRE(cls != nullptr);
    CHECK(cls->direct_power == p);
    CHECK(cls->root_sqrt);
    CHECK(r.all_checks_pass());
  }
}

TEST_CASE("quantum plane: transcendental commutators are never root weights") {
  Algebra q1(make_qplane(1));
  InvariantReport r = compute_invariants(q1, small_options());
  const GroupElem g = q1.group().generator(0);
  CHECK(r.W == std::vector<GroupElem>{g});
  CHECK(r.W_sqrt.empty());
  CHECK(r.Gamma == std::vector<Scalar>{Scalar::var(0)});
  CHECK(r.quotient_dim == 1);
  CHECK(r.all_checks_pass());
  const WeightCommutator* cls = r.find_class(g, Scalar::var(0));
  REQUIRE(cls != nullptr);
  CHECK_FALSE(cls->direct_sqrt);
  CHECK_FALSE(cls->power_truncated);

  Algebra q2(make_qplane(2));
  InvariantReport r2 = compute_invariants(q2, small_options());
  CHECK(r2.quotient_dim == 2);
  CHECK(r2.W_sqrt.empty());
  CHECK(r2.all_checks_pass());
}

TEST_CASE("single transcendental commutator over Z") {
  Algebra alg(make_example("K", {{"v", "1"}}));
  InvariantReport r = compute_invariants(alg, small_options());
  CHECK(r.W.size() == 1);
  CHECK(r.W_sqrt.empty());
  CHECK(r.quotient_dim == 1);
}

TEST_CASE("conjugation matrices") {
  Algebra k(make_example("K", {{"v", "1"}}));
  const Group& grp = k.group();
  const GroupElem g = grp.generator(0);
  SkewPrimitiveSpace only_group{g, {k.group_element(g) - k.one()}, true, 0, 0};
  CHECK(conjugation_matrix(k, g, only_group) == Matrix{{Scalar(1)}});

  SkewPrimitiveSpace sp = find_skew_primitives(k, g, 1, 1);
  REQUIRE(sp.basis.size() == 2);
  Matrix m = conjugation_matrix(k, g, sp);
  CHECK(m == Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar::var(0)}});

  // tau(g) = t with trivial character: T(y) = y + t (g - 1).
  Algebra kt(make_example("K", {{"v", "1"}, {"lambda", "1"}, {"tau", "5"}}));
  SkewPrimitiveSpace spt = find_skew_primitives(kt, g, 1, 1);
  REQUIRE(spt.basis.size() == 2);
  Matrix mt = conjugation_matrix(kt, g, spt);
  CHECK(mt[0][0] == Scalar(1));
  CHECK(mt[1][1] == Scalar(1));
  CHECK(mt[1][0].is_zero());
  CHECK(spt.basis[0].scaled(mt[0][1]) == (kt.group_element(g) - kt.one()).scaled(Scalar(5)));
}

TEST_CASE("commutator levels") {
  Algebra t(make_taft(3));
  LevelResult lt = commutator_level(t, t.y(0), 4);
  REQUIRE(lt.commutator.has_value());
  CHECK(lt.commutator->gamma == zeta(3));
  CHECK(lt.commutator->level == std::optional<int>(1));
  CHECK(lt.commutator->weight == t.group().generator(0));

  Algebra kt(make_example("K", {{"v", "1"}, {"lambda", "1"}, {"tau", "q1"}}));
  LevelResult lk = commutator_level(kt, kt.y(0), 4);
  REQUIRE(lk.commutator.has_value());
  CHECK(lk.commutator->gamma == Scalar(1));
  CHECK(lk.commutator->level == std::optional<int>(1));

  const GroupElem g = kt.group().generator(0);
  CHECK_THROWS_AS(commutator_level(kt, kt.group_element(g) - kt.one(), 4), Error);
  CHECK_THROWS_AS(commutator_level(kt, kt.multiply(kt.y(0), kt.y(0)), 4), Error);

  // A sum over two eigenvalues has no single commutator.
  Algebra k(make_example("K", {}));
  LevelResult ls = commutator_level(k, k.y(0) + k.y(1), 4);
  CHECK_FALSE(ls.commutator.has_value());
  REQUIRE(ls.decomposition.size() == 2);
  CHECK(ls.decomposition[0].second + ls.decomposition[1].second == k.y(0) + k.y(1));
}

TEST_CASE("generalized commutators") {
  Algebra k(make_example("K", {}));
  for (int i = 0; i < 2; ++i) {
    GeneralizedResult r = generalized_commutator(k, k.y(i), 4);
    REQUIRE(r.character.has_value());
    CHECK(r.character->character == std::vector<Scalar>{Scalar::var(i)});
    CHECK(r.character->level == std::optional<int>(1));
  }
  GeneralizedResult sum = generalized_commutator(k, k.y(0) + k.y(1), 4);
  CHECK_FALSE(sum.character.has_value());
  CHECK(sum.decomposition.size() == 2);

  Algebra e(make_exterior(3));
  for (int i = 0; i < 3; ++i) {
    GeneralizedResult r = generalized_commutator(e, e.y(i), 4);
    REQUIRE(r.character.has_value());
    CHECK(r.character->character == std::vector<Scalar>{Scalar(-1)});
    CHECK(r.character->level == std::optional<int>(1));
  }

  // Two generators of the group: the character records both values.
  Algebra k2(make_example("K", {{"v", "1"}, {"rank", "2"}, {"mu", "1,1"}, {"lambda", "q1,q2"}}));
  GeneralizedResult r2 = generalized_commutator(k2, k2.y(0), 4);
  REQUIRE(r2.character.has_value());
  CHECK(r2.character->character == std::vector<Scalar>{Scalar::var(0), Scalar::var(1)});
  CHECK(r2.character->gamma == Scalar::var(0) * Scalar::var(1));
}

TEST_CASE("conjugates of witnesses keep their weight commutator") {
  for (const auto& b : computable_builtins()) {
    CAPTURE(b.name);
    Algebra alg(make_example(b.name, b.params));
    InvariantReport r = compute_invariants(alg, small_options());
    CHECK(r.all_checks_pass());
    for (const auto& wd : r.weights)
      for (const auto& cls : wd.classes)
        for (const auto& z : cls.witnesses)
          for (const auto& h : alg.group().ball(2)) {
            AlgebraElement c = alg.conjugate(z, h);
            CHECK(is_skew_primitive(alg, c) == std::optional<GroupElem>(wd.weight));
            AlgebraElement t = alg.conjugate(c, wd.weight) - c.scaled(cls.gamma);
            CHECK(modulo_c0(t).is_zero());
          }
  }
}

TEST_CASE("powers of witnesses follow the root of unity criterion") {
  for (const auto& b : computable_builtins()) {
    CAPTURE(b.name);
    Algebra alg(make_example(b.name, b.params));
    InvariantReport r = compute_invariants(alg, small_options());
    for (const auto& wd : r.weights)
      for (const auto& cls : wd.classes) {
        if (cls.power_truncated) continue;
        CHECK(cls.direct_sqrt == cls.root_sqrt);
        if (cls.root_sqrt) CHECK(cls.direct_power == cls.order.value);
      }
  }
}

TEST_CASE("pure group algebra has empty invariants") {
  Presentation p;
  p.group = Group(1, {});
  Algebra a(p);
  InvariantReport r = compute_invariants(a, small_options());
  CHECK(r.W.empty());
  CHECK(r.Omega.empty());
  CHECK(r.quotient_dim == 0);
  CHECK(r.all_checks_pass());
}

TEST_CASE("sequential and parallel runs agree") {
  Algebra alg(make_example("K", {}));
  InvariantOptions a = small_options(), b = small_options();
  b.parallel = false;
  InvariantReport ra = compute_invariants(alg, a), rb = compute_invariants(alg, b);
  CHECK(ra.W == rb.W);
  CHECK(ra.Omega == rb.Omega);
  CHECK(ra.quotient_dim == rb.quotient_dim);
}

TEST_CASE("a truncated power test defers to the root of unity criterion") {
  Algebra alg(make_example("K", {{"v", "3"}, {"N", "7"}, {"lambda", "zeta^2;zeta^5;zeta^0"}, {"mu", "2;0;1"}}));
  InvariantReport r = compute_invariants(alg, small_options());
  const GroupElem g4 = alg.group().pow(alg.group().generator(0), 4);
  const WeightCommutator* cls = r.find_class(g4, zeta(7));
  REQUIRE(cls != nullptr);
  CHECK(cls->power_truncated);
  CHECK_FALSE(cls->direct_sqrt);
  CHECK(cls->root_sqrt);
  CHECK(cls->sqrt());
  CHECK(std::find(r.W_sqrt.begin(), r.W_sqrt.end(), g4) != r.W_sqrt.end());
  CHECK(r.all_checks_pass());

  InvariantOptions tight = small_options();
  tight.power_coproduct_limit = 1;
  InvariantReport t = compute_invariants(Algebra(make_example("taft", {{"p", "3"}})), tight);
  CHECK(t.W_sqrt.size() == 1);
  CHECK(t.all_checks_pass());
}
