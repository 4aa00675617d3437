#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgrow/algebra.hpp"

namespace hopfgrow {

TensorElement tensor_multiply(const Algebra& alg, const TensorElement& a, const TensorElement& b);
// Multiplication map applied to a tensor.
AlgebraElement tensor_contract(const Algebra& alg, const TensorElement& t);

TensorElement delta(const Algebra& alg, const AlgebraElement& x);
// Coproduct of an irreducible y-word, cached per algebra.
const TensorElement& delta_word(const Algebra& alg, const YWord& w);
Scalar counit(const Algebra& alg, const AlgebraElement& x);
AlgebraElement antipode(const Algebra& alg, const AlgebraElement& x);

// Closed form sum_s binom(n,s)_lambda mu^s y^(n-s) (x) y^s. It is exact when
// y_i commutes with mu_i up to the scalar; otherwise only the leading part is
// produced and `partial` is set.
struct PowerFormula {
  TensorElement value;
  bool partial = false;
};
PowerFormula delta_power_formula(const Algebra& alg, int i, int n);

struct SkewPrimitiveSpace {
  GroupElem weight;
  std::vector<AlgebraElement> basis;  // echelon form, increasing leading word
  bool includes_group_part = false;   // whether g - 1 lies in the span
  int degree_bound = 0;
  int group_bound = 0;
};

// Exact basis of {z : Delta(z) = z (x) 1 + g (x) z} inside the span of normal
// words of y-degree <= d and group length <= group_bound.
SkewPrimitiveSpace find_skew_primitives(const Algebra& alg, const GroupElem& g, int d, int group_bound);

// The weight g with Delta(z) = z (x) 1 + g (x) z, if any. Zero has no weight.
std::optional<GroupElem> is_skew_primitive(const Algebra& alg, const AlgebraElement& z);

// Relations whose two sides have different coproducts; empty for a Hopf ideal.
std::vector<std::string> coproduct_defects(const Algebra& alg);
void require_hopf_ideal(const Algebra& alg);

}  // namespace hopfgrow
