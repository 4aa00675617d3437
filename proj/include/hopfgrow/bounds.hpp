#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgrow/invariants.hpp"

namespace hopfgrow {

struct Hypothesis {
  std::string name;
  bool passed = true;
  std::string witness;
};

// Lower bound on GK-dimension. `value` is set only when every hypothesis passes.
struct BoundReport {
  std::string theorem;  // independent-primitives | weights | weight-commutators | quotient | y-star
  std::vector<Hypothesis> hypotheses;
  std::optional<int> value;
  int gk_c0 = 0;  // free rank of the group
  std::vector<std::pair<std::string, int>> inputs;
  std::vector<std::string> notes;
  bool all_pass() const;
};

// lambda with y h - lambda h y in C0, if one exists.
std::optional<Scalar> commutation_scalar(const Algebra& alg, const AlgebraElement& y, const GroupElem& h);

// The first bound with D = C0: rank(G) + #S when S passes the three hypotheses.
BoundReport bound_first(const Algebra& alg, const std::vector<AlgebraElement>& S, int d);

// Largest prefix-greedy subset of the report's level-one witnesses that keeps
// the hypotheses of bound_first satisfied.
std::vector<AlgebraElement> greedy_first_set(const Algebra& alg, const InvariantReport& rep);

struct SecondBounds {
  BoundReport base;     // rank + #(W \ W_sqrt)
  BoundReport refined;  // rank + #(Omega \ Omega_sqrt)
};
SecondBounds bound_second(const Algebra& alg, const InvariantReport& rep);

struct ThirdBounds {
  BoundReport quotient;  // rank + dim Z/(C0 + Y_sqrt)
  BoundReport y_star;    // rank + dim Y_*/(Y_* cap C0)
};
ThirdBounds bound_third(const Algebra& alg, const InvariantReport& rep);

struct PairEvidence {
  std::string first, second;  // witnesses as text
  std::string x;              // common cyclic support
  int d1 = 0, d2 = 0;
  std::string q1, q2;
  std::string outcome;  // case id, "relation", "exhausted", or a skip reason
  std::vector<std::pair<int, int>> solutions;  // (M1, M2) solving the product relation
};

struct GrowthVerdict {
  std::string classification = "inconclusive";  // exponential | polynomial | inconclusive
  std::optional<int> degree;
  std::string detector;     // pair-case | rank-of-commutators | none
  std::string case_id;      // b1..b4 for pair cases
  std::vector<PairEvidence> pairs;
  std::vector<std::string> notes;
};

struct DetectorOptions {
  int m_max = 12;
  int exponent_bound = 12;  // |d_i| searched when matching weights to powers of x
};

GrowthVerdict detect_exponential(const Algebra& alg, const InvariantReport& rep, DetectorOptions opts = {});

}  // namespace hopfgrow
