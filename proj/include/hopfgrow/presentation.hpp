#pragma once

#include <string>
#include <vector>

#include "hopfgrow/element.hpp"
#include "hopfgrow/group.hpp"
#include "hopfgrow/scalar.hpp"

namespace hopfgrow {

// Generator y with Delta(y) = y (x) 1 + mu (x) y and
// y g = lambda(g) g y + tau(g) g (mu - 1) for group generators g.
struct SkewGenerator {
  std::string name;
  GroupElem weight;
  std::vector<Scalar> character;  // lambda on each group generator
  std::vector<Scalar> tau;        // tau on each group generator (zero unless lambda is trivial)
};

// lhs -> rhs, with every term of rhs strictly smaller than lhs.
struct Relation {
  YWord lhs;
  AlgebraElement rhs;
};

struct Presentation {
  std::string name;
  int cyclotomic_order = 1;
  std::vector<std::string> transcendentals;
  Group group;
  std::vector<SkewGenerator> gens;
  std::vector<Relation> relations;

  int num_y() const { return static_cast<int>(gens.size()); }

  // Throws a usage error describing the first problem found.
  void validate() const;

  Scalar lambda(int i, const GroupElem& g) const;
  Scalar tau(int i, const GroupElem& g) const;
  // lambda_ij = lambda_i(mu_j)
  Scalar lambda_ij(int i, int j) const { return lambda(i, gens[j].weight); }
  bool has_tau() const;
  // Every relation right-hand side is either zero or of the same y-degree as its lhs.
  bool homogeneous() const;
  GroupElem weight_of(const YWord& w) const;

  std::string yword_string(const YWord& w) const;
  std::string word_string(const NormalWord& w) const;
  std::string element_string(const AlgebraElement& x) const;
  std::string tensor_string(const TensorElement& x) const;
  std::string scalar_string(const Scalar& s) const { return s.to_string(transcendentals); }
};

}  // namespace hopfgrow
