#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgrow/algebra.hpp"
#include "hopfgrow/coalgebra.hpp"
#include "hopfgrow/linalg.hpp"

namespace hopfgrow {

struct InvariantOptions {
  int degree = 6;
  int group_bound = 6;
  int power_bound = 0;  // 0 picks max(12, lcm(2, N))
  int level_bound = 6;
  size_t power_term_limit = 2000;  // powers larger than this are not expanded further
  size_t power_coproduct_limit = 1 << 17;  // cap on terms times 2^degree when testing a power
  bool parallel = true;
};

int default_power_bound(const Presentation& p);

// One weight-commutator pair (mu, gamma) with the data of its generalized
// eigenspace of T_{mu^-1} inside P_mu.
struct WeightCommutator {
  GroupElem weight;
  Scalar gamma;
  Order order;                          // multiplicative order of gamma
  std::optional<int> level;             // minimal level; empty when above the level bound
  int dim = 0;                          // dimension of the generalized eigenspace modulo C0
  std::vector<AlgebraElement> witnesses;  // level-one skew primitives, independent modulo C0
  std::vector<AlgebraElement> span;       // basis of the generalized eigenspace
  bool root_sqrt = false;     // gamma a nontrivial root of unity of order <= power bound
  bool direct_sqrt = false;   // some witness has a skew primitive (or zero) power
  int direct_power = 0;       // the exponent that passed
  bool power_truncated = false;
  // A truncated direct check defers to the root of unity criterion.
  bool sqrt() const { return direct_sqrt || (power_truncated && root_sqrt); }
};

// Joint eigencharacter of all T_{h^-1} on P_mu, h running over group generators.
struct GeneralizedClass {
  GroupElem weight;
  std::vector<Scalar> character;  // lambda(h_j) per generator
  Scalar gamma;                   // lambda(mu)
  int dim = 0;                    // modulo C0
  std::optional<int> level;
  std::vector<AlgebraElement> span;
};

struct WeightData {
  GroupElem weight;
  std::vector<AlgebraElement> basis;  // saturated echelon basis of P_mu
  bool includes_group_part = false;
  int dim_mod_c0 = 0;
  std::vector<WeightCommutator> classes;
  std::vector<GeneralizedClass> characters;
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct InvariantReport {
  InvariantOptions options;  // with the power bound resolved
  std::vector<WeightData> weights;  // only weights of P_mu not inside C0
  std::vector<GroupElem> W, W_sqrt, W_times;
  std::vector<Scalar> Gamma, Gamma_sqrt;
  std::vector<std::pair<GroupElem, Scalar>> Omega, Omega_sqrt;
  int dim_Z = 0;  // modulo C0
  int dim_Y_sqrt = 0;
  int dim_Y_star = 0;
  int quotient_dim = 0;  // dim Z/(C0 + Y_sqrt)
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool all_checks_pass() const;
  const WeightCommutator* find_class(const GroupElem& g, const Scalar& c) const;
};

// Drops the terms of y-degree zero, i.e. the image modulo C0.
AlgebraElement modulo_c0(const AlgebraElement& x);
// Rank of a family modulo C0.
int rank_modulo_c0(const std::vector<AlgebraElement>& xs);

// Matrix of a -> g^-1 a g on V in its stored basis. V is first saturated
// under conjugation by g; the basis is updated in place when that adds vectors.
Matrix conjugation_matrix(const Algebra& alg, const GroupElem& g, SkewPrimitiveSpace& V);

struct LevelResult {
  std::optional<WeightCommutator> commutator;  // set when y has a single commutator
  // Summands of y, one per eigenvalue, each with a finite-level commutator.
  std::vector<std::pair<Scalar, AlgebraElement>> decomposition;
};

// Commutator and minimal level of a skew primitive y outside C0.
LevelResult commutator_level(const Algebra& alg, const AlgebraElement& y, int n_max,
                             const InvariantOptions& opts = {});

struct GeneralizedResult {
  std::optional<GeneralizedClass> character;
  std::vector<std::pair<std::vector<Scalar>, AlgebraElement>> decomposition;
};

GeneralizedResult generalized_commutator(const Algebra& alg, const AlgebraElement& y, int n_max,
                                         const InvariantOptions& opts = {});

InvariantReport compute_invariants(const Algebra& alg, InvariantOptions opts = {});

}  // namespace hopfgrow
