#include <cstdlib>
#include <set>

#include "doctest.h"
#include "hopfgrow/error.hpp"
#include "hopfgrow/growth.hpp"
#include "support.hpp"

using namespace hopfgrow;
using namespace testing_support;

namespace {

// Number of group elements at each word length, by breadth-first search over
// exponent vectors reduced by hand.
std::vector<long> sphere_sizes(const Group& grp, int n) {
  auto reduce = [&](std::vector<int> e) {
    for (int j = 0; j < grp.num_generators(); ++j)
      if (grp.is_torsion_coord(j)) e[j] = ((e[j] % grp.modulus(j)) + grp.modulus(j)) % grp.modulus(j);
    return e;
  };
  std::set<std::vector<int>> seen{reduce(std::vector<int>(grp.num_generators(), 0))};
  std::vector<std::vector<int>> layer(seen.begin(), seen.end());
  std::vector<long> out{1};
  for (int l = 1; l <= n; ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& e : layer)
      for (int j = 0; j < grp.num_generators(); ++j)
        for (int s : {1, -1}) {
          auto f = e;
          f[j] += s;
          f = reduce(f);
          if (seen.insert(f).second) next.push_back(f);
        }
    out.push_back(static_cast<long>(next.size()));
    layer = std::move(next);
  }
  return out;
}

// Words of each length avoiding every rule left-hand side as a factor,
// counted by brute force.
std::vector<long> irreducible_counts(const Presentation& p, int n) {
  std::vector<long> out{1};
  std::vector<std::string> cur{""};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::string> next;
    for (const auto& w : cur)
      for (int i = 0; i < p.num_y(); ++i) {
        std::string x = w + static_cast<char>(i);
        bool ok = true;
        for (const auto& r : p.relations)
          if (x.size() >= r.lhs.size() && x.compare(x.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) ok = false;
        if (ok) next.push_back(x);
      }
    out.push_back(static_cast<long>(next.size()));
    cur = std::move(next);
  }
  return out;
}

GrowthOptions opts(int n) {
  GrowthOptions o;
  o.n_max = n;
  return o;
}

}  // namespace

TEST_CASE("closure enumeration matches the word-count oracle on homogeneous builtins") {
  const std::vector<Builtin> cases = {
      {"K", {}},
      {"K", {{"v", "3"}}},
      {"K", {{"v", "1"}, {"rank", "2"}}},
      {"taft", {{"p", "3"}}},
      {"taft", {{"p", "5"}}},
      {"qplane", {{"v", "1"}}},
      {"qplane", {{"v", "2"}}},
      {"qplane", {{"v", "3"}}},
      {"ex3_13", {{"s", "2"}}},
      {"ex3_13", {{"s", "3"}}},
  };
  const int n = 8;
  for (const auto& b : cases) {
    CAPTURE(b.name);
    CAPTURE(b.params.size());
    Presentation p = make_example(b.name, b.params);
    Algebra alg(p);
    GrowthReport r = measure_growth(alg, opts(n));
    auto sphere = sphere_sizes(p.group, n);
    auto words = irreducible_counts(p, n);
    REQUIRE(r.dims.size() == static_cast<size_t>(n + 1));
    for (int m = 0; m <= n; ++m) {
      long expect = 0;
      for (int l = 0; l <= m; ++l)
        for (int k = 0; l + k <= m; ++k) expect += sphere[l] * words[k];
      CHECK(r.dims[m] == expect);
    }
  }
}

TEST_CASE("dims are nondecreasing and start at one") {
  for (const auto& b : computable_builtins()) {
    CAPTURE(b.name);
    Algebra alg(make_example(b.name, b.params));
    GrowthReport r = measure_growth(alg, opts(9));
    REQUIRE(!r.dims.empty());
    CHECK(r.dims[0] == 1);
    for (size_t i = 1; i < r.dims.size(); ++i) CHECK(r.dims[i] >= r.dims[i - 1]);
    CHECK(!r.truncated);
  }
}

TEST_CASE("pure group algebra of Z grows linearly") {
  Algebra alg(make_example("K", {{"v", "0"}}));
  GrowthReport r = measure_growth(alg, opts(12));
  for (int n = 0; n <= 12; ++n) CHECK(r.dims[n] == 2 * n + 1);
  CHECK(r.estimate.classification == "polynomial");
  CHECK(r.estimate.degree == std::optional<int>(1));
}

TEST_CASE("quantum plane with one generator has dims (n+1)^2") {
  Algebra alg(make_qplane(1));
  GrowthReport r = measure_growth(alg, opts(12));
  for (int n = 0; n <= 12; ++n) CHECK(r.dims[n] == (n + 1) * (n + 1));
  CHECK(r.estimate.degree == std::optional<int>(2));
}

TEST_CASE("estimated degree of the quantum planes is 1 + v") {
  for (int v = 1; v <= 3; ++v) {
    CAPTURE(v);
    Algebra alg(make_qplane(v));
    GrowthReport r = measure_growth(alg, opts(12));
    CHECK(r.estimate.classification == "polynomial");
    CHECK(r.estimate.degree == std::optional<int>(1 + v));
  }
}

TEST_CASE("finite examples stabilize at their dimension") {
  for (int s = 1; s <= 4; ++s) {
    CAPTURE(s);
    Algebra alg(make_exterior(s));
    GrowthReport r = measure_growth(alg, opts(12));
    CHECK(r.dims.back() == (1L << (s + 1)));
    CHECK(r.estimate.degree == std::optional<int>(0));
  }
  for (int p : {2, 3, 5}) {
    CAPTURE(p);
    Algebra alg(make_taft(p));
    GrowthReport r = measure_growth(alg, opts(12));
    CHECK(r.dims.back() == p * p);
    CHECK(r.estimate.degree == std::optional<int>(0));
  }
}

TEST_CASE("free case is flagged exponential") {
  Algebra alg(make_example("K", {}));
  GrowthReport r = measure_growth(alg, opts(12));
  CHECK(r.estimate.classification == "exponential");
  CHECK(r.estimate.method == "ratio");
  CHECK(r.estimate.base > 1.8);
  CHECK(ratio_flags_exponential(r.dims, r.options));
}

TEST_CASE("estimator on synthetic sequences") {
  GrowthOptions o;
  std::vector<long> linear, cubic, expo, flat;
  for (long n = 0; n <= 12; ++n) {
    linear.push_back(2 * n + 1);
    cubic.push_back(n * n * n + 1);
    expo.push_back(1L << n);
    flat.push_back(n < 3 ? n + 1 : 4);
  }
  CHECK(estimate_growth(cubic, o).degree == std::optional<int>(3));
  CHECK(estimate_growth(expo, o).classification == "exponential");
  CHECK(estimate_growth(flat, o).degree == std::optional<int>(0));
  CHECK(!ratio_flags_exponential(linear, o));
  // Ratios of a cubic still exceed 1 + delta at this scale; the differences settle it.
  CHECK(ratio_flags_exponential(cubic, o));
  CHECK(estimate_growth(cubic, o).method == "finite-differences");
  CHECK(estimate_growth({1}, o).classification == "inconclusive");
}

TEST_CASE("word ceiling aborts with a partial report") {
  Algebra alg(make_example("K", {}));
  GrowthOptions o = opts(12);
  o.max_words = 100;
  GrowthReport r = measure_growth(alg, o);
  CHECK(r.truncated);
  CHECK(r.dims.size() < 13);

  setenv("HOPFGROW_MAX_WORDS", "50", 1);
  CHECK(max_words_from_env() == 50);
  GrowthReport e = measure_growth(alg, opts(12));
  CHECK(e.truncated);
  setenv("HOPFGROW_MAX_WORDS", "many", 1);
  CHECK_THROWS_AS(max_words_from_env(), Error);
  unsetenv("HOPFGROW_MAX_WORDS");
  CHECK(max_words_from_env(7) == 7);
}

TEST_CASE("growth table has one row per degree") {
  Algebra alg(make_taft(2));
  GrowthReport r = measure_growth(alg, opts(3));
  CHECK(growth_table(r) == "n\tdim F_n\n0\t1\n1\t3\n2\t4\n3\t4\n");
}

TEST_CASE("PBW scan: quantum planes stay independent through degree 8") {
  for (int v = 1; v <= 3; ++v) {
    CAPTURE(v);
    Algebra alg(make_qplane(v));
    std::vector<AlgebraElement> S;
    for (int i = 0; i < v; ++i) S.push_back(alg.y(i));
    PbwScan s = pbw_dependence_scan(alg, S, 8);
    CHECK(s.independent);
    CHECK(!s.degree);
    CHECK(s.consistent);
  }
}

TEST_CASE("PBW scan: Taft dependence at y^p with the root conclusions") {
  for (int p : {2, 3, 5}) {
    CAPTURE(p);
    Algebra alg(make_taft(p));
    PbwScan s = pbw_dependence_scan(alg, {alg.y(0)}, 8);
    CHECK(!s.independent);
    CHECK(s.degree == std::optional<int>(p));
    CHECK(s.monomial == std::vector<int>{p});
    REQUIRE(s.conclusions.size() == 4);
    CHECK(s.conclusions[0].passed);
    CHECK(s.conclusions[1].passed);
    CHECK(s.consistent);
  }
}

TEST_CASE("PBW scan: a relation with a group-algebra right-hand side") {
  // y^2 = g^2 - 1 in the default L instance.
  Algebra alg(make_example("L", {}));
  PbwScan s = pbw_dependence_scan(alg, {alg.y(0)}, 4);
  CHECK(s.degree == std::optional<int>(2));
  CHECK(s.consistent);
}

TEST_CASE("PBW scan: exterior example and degenerate input") {
  Algebra alg(make_exterior(2));
  PbwScan s = pbw_dependence_scan(alg, {alg.y(0), alg.y(1)}, 4);
  CHECK(s.degree == std::optional<int>(2));
  CHECK(s.monomial == std::vector<int>{0, 2});
  CHECK(s.consistent);

  PbwScan e = pbw_dependence_scan(alg, {}, 5);
  CHECK(e.independent);
}

TEST_CASE("PBW scan rejects elements that are not skew primitive") {
  Algebra alg(make_qplane(2));
  CHECK_THROWS_AS(pbw_dependence_scan(alg, {alg.multiply(alg.y(0), alg.y(1))}, 3), Error);
}

TEST_CASE("pbw_set keeps the generators of the quantum planes") {
  for (int v = 1; v <= 3; ++v) {
    Algebra alg(make_qplane(v));
    InvariantOptions io;
    io.degree = 3;
    io.group_bound = 3;
    auto S = pbw_set(alg, compute_invariants(alg, io));
    CHECK(static_cast<int>(S.size()) == v);
  }
}
