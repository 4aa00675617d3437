#include <random>

#include "doctest.h"
#include "hopfgrow/coalgebra.hpp"
#include "hopfgrow/linalg.hpp"
#include "hopf_axioms.hpp"
#include "support.hpp"

using namespace hopfgrow;
using namespace testing_support;

TEST_CASE("coproduct on generators") {
  Algebra k(make_example("K", {}));
  const Group& grp = k.group();
  const GroupElem g = grp.generator(0, 3);
  TensorElement dg;
  dg.add(TensorKey{NormalWord{g, ""}, NormalWord{g, ""}}, Scalar(1));
  CHECK(delta(k, k.group_element(g)) == dg);
  TensorElement dy;
  const NormalWord one{grp.identity(), ""};
  dy.add(TensorKey{NormalWord{grp.identity(), YWord{0}}, one}, Scalar(1));
  dy.add(TensorKey{NormalWord{grp.generator(0), ""}, NormalWord{grp.identity(), YWord{0}}}, Scalar(1));
  CHECK(delta(k, k.y(0)) == dy);

  // Before the quotient the square of a (-1)-commuting y is skew primitive.
  Algebra t(make_taft(2, false));
  const Group& tg = t.group();
  TensorElement dy2;
  dy2.add(TensorKey{NormalWord{tg.identity(), YWord{0, 0}}, NormalWord{tg.identity(), ""}}, Scalar(1));
  dy2.add(TensorKey{NormalWord{tg.pow(tg.generator(0), 2), ""}, NormalWord{tg.identity(), YWord{0, 0}}}, Scalar(1));
  CHECK(delta(t, t.pow(t.y(0), 2)) == dy2);
}

TEST_CASE("Hopf axioms on random elements of every builtin") {
  std::mt19937 rng(5);
  for (const auto& b : computable_builtins()) {
    CAPTURE(b.name);
    Algebra alg(make_example(b.name, b.params));
    for (int trial = 0; trial < 30; ++trial) {
      AlgebraElement x = random_element(alg, rng, 4);
      while (x.y_degree() > 3) x = random_element(alg, rng, 4);
      TensorElement d = delta(alg, x);
      CHECK(delta_left(alg, d) == delta_right(alg, d));
      CHECK(counit_left(alg, d) == x);
      CHECK(counit_right(alg, d) == x);
      AlgebraElement eps = alg.one().scaled(counit(alg, x));
      CHECK(antipode_left(alg, d) == eps);
      CHECK(antipode_right(alg, d) == eps);
      AlgebraElement y = random_element(alg, rng, 3);
      CHECK(delta(alg, alg.multiply(x, y)) == tensor_multiply(alg, d, delta(alg, y)));
      CHECK(counit(alg, alg.multiply(x, y)) == counit(alg, x) * counit(alg, y));
      CHECK(antipode(alg, alg.multiply(x, y)) == alg.multiply(antipode(alg, y), antipode(alg, x)));
    }
  }
}

TEST_CASE("counit and antipode values") {
  Algebra k(make_example("K", {}));
  const GroupElem g = k.group().generator(0);
  AlgebraElement x = k.multiply(k.y(0), k.y(1)) + k.group_element(g).scaled(Scalar(3));
  CHECK(counit(k, x) == Scalar(3));
  CHECK(antipode(k, k.group_element(g)) == k.group_element(k.group().inv(g)));
  CHECK(antipode(k, k.y(0)) == k.multiply(k.group_element(k.group().inv(g)), k.y(0)).scaled(Scalar(-1)));
}

TEST_CASE("closed-form coproduct of powers") {
  std::vector<std::pair<std::string, Params>> cases = {
      {"1", {{"v", "1"}, {"lambda", "1"}}},
      {"-1", {{"v", "1"}, {"lambda", "-1"}}},
      {"zeta3", {{"v", "1"}, {"lambda", "zeta3"}}},
      {"q", {{"v", "1"}, {"lambda", "q1"}}},
      {"q, weight g^2", {{"v", "1"}, {"lambda", "q1"}, {"mu", "2"}}},
      {"zeta3 over Z/3", {{"v", "1"}, {"rank", "0"}, {"torsion", "3"}, {"N", "3"}, {"lambda", "zeta"}}},
  };
  for (const auto& [label, params] : cases) {
    CAPTURE(label);
    Algebra alg(make_example("K", params));
    for (int n = 0; n <= 6; ++n) {
      PowerFormula f = delta_power_formula(alg, 0, n);
      CHECK_FALSE(f.partial);
      CHECK(f.value == delta(alg, alg.pow(alg.y(0), n)));
      CHECK(f.value == delta_y_power(alg, 0, n));
    }
  }
  // n = 2 by hand: y^2 (x) 1 + (1 + lambda) g y (x) y + g^2 (x) y^2.
  Algebra k(make_example("K", {{"v", "1"}}));
  const Group& grp = k.group();
  TensorElement expect;
  const NormalWord one{grp.identity(), ""};
  expect.add(TensorKey{NormalWord{grp.identity(), YWord{0, 0}}, one}, Scalar(1));
  expect.add(TensorKey{NormalWord{grp.generator(0), YWord{0}}, NormalWord{grp.identity(), YWord{0}}},
             Scalar(1) + Scalar::var(0));
  expect.add(TensorKey{NormalWord{grp.generator(0, 2), ""}, NormalWord{grp.identity(), YWord{0, 0}}}, Scalar(1));
  CHECK(delta_power_formula(k, 0, 2).value == expect);

  Algebra kt(make_example("K", {{"v", "1"}, {"lambda", "1"}, {"tau", "1"}}));
  CHECK(delta_power_formula(kt, 0, 3).partial);
}

TEST_CASE("skew primitive recognition") {
  Algebra k(make_example("K", {}));
  const Group& grp = k.group();
  const GroupElem g = grp.generator(0);
  CHECK(is_skew_primitive(k, k.y(0)) == std::optional<GroupElem>(g));
  CHECK_FALSE(is_skew_primitive(k, k.multiply(k.y(0), k.y(1))).has_value());
  AlgebraElement gm1 = k.group_element(grp.generator(0, 2)) - k.one();
  CHECK(is_skew_primitive(k, gm1) == std::optional<GroupElem>(grp.generator(0, 2)));
  CHECK_FALSE(is_skew_primitive(k, AlgebraElement()).has_value());

  for (int p : {2, 3, 5}) {
    Algebra t(make_taft(p, false));
    const Group& tg = t.group();
    CHECK(is_skew_primitive(t, t.pow(t.y(0), p)) == std::optional<GroupElem>(tg.pow(tg.generator(0), p)));
    for (int n = 2; n < p; ++n) CHECK_FALSE(is_skew_primitive(t, t.pow(t.y(0), n)).has_value());
  }
}

TEST_CASE("degree zero skew primitives are multiples of g - 1") {
  for (const auto& b : computable_builtins()) {
    CAPTURE(b.name);
    Algebra alg(make_example(b.name, b.params));
    for (const auto& g : alg.group().ball(2)) {
      SkewPrimitiveSpace sp = find_skew_primitives(alg, g, 0, 3);
      if (alg.group().is_identity(g)) {
        CHECK(sp.basis.empty());
      } else {
        REQUIRE(sp.basis.size() == 1);
        CHECK(sp.includes_group_part);
        AlgebraElement gm1 = alg.group_element(g) - alg.one();
        CHECK(SpanBasis(sp.basis).contains(gm1));
      }
    }
  }
}

TEST_CASE("skew primitive spaces of the free algebra with root of unity characters") {
  // y1 with lambda_1(g) = zeta3 and y2 with lambda_2(g) = zeta3^2, common weight g.
  Algebra k(make_example("K", {{"N", "3"}, {"lambda", "zeta;zeta^2"}}));
  const Group& grp = k.group();
  for (int e = 0; e <= 3; ++e) {
    const GroupElem g = grp.generator(0, e);
    SkewPrimitiveSpace sp = find_skew_primitives(k, g, 3, 3);
    for (const auto& z : sp.basis) {
      CHECK(is_skew_primitive(k, z) == std::optional<GroupElem>(g));
      // Top-degree terms obey prod lambda_ii^(N_i(N_i-1)) prod_{i<j} (lambda_ij lambda_ji)^(N_i N_j) = 1.
      const int top = z.y_degree();
      if (top < 2) continue;
      for (const auto& [w, c] : z.terms()) {
        if (static_cast<int>(w.w.size()) != top) continue;
        std::vector<long> n(k.num_y(), 0);
        for (char ch : w.w) ++n[static_cast<unsigned char>(ch)];
        Scalar prod(1);
        for (int i = 0; i < k.num_y(); ++i) {
          prod *= k.pres().lambda_ij(i, i).pow(n[i] * (n[i] - 1));
          for (int j = i + 1; j < k.num_y(); ++j)
            prod *= (k.pres().lambda_ij(i, j) * k.pres().lambda_ij(j, i)).pow(n[i] * n[j]);
        }
        CHECK(prod.is_one());
      }
    }
    if (e == 1) CHECK(sp.basis.size() == 3);  // g - 1, y1, y2
    if (e == 3) CHECK(sp.basis.size() >= 3);  // at least g^3 - 1, y1^3, y2^3
  }
}
