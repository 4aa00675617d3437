#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfgrow/element.hpp"
#include "hopfgrow/presentation.hpp"

namespace hopfgrow {

// One letter of an unnormalized word: a group generator power or a y power.
struct Letter {
  bool is_group = false;
  int index = 0;
  int power = 1;
};

struct RawTerm {
  Scalar coeff;
  std::vector<Letter> letters;
};
using RawElement = std::vector<RawTerm>;

struct Overlap {
  std::string kind;  // "overlap", "inclusion" or "group"
  std::string word;
  AlgebraElement route1;
  AlgebraElement route2;
};

struct ConfluenceReport {
  bool confluent = true;
  size_t checked = 0;
  std::vector<Overlap> failures;
};

// Term of w * h = sum c * h' * w' after moving the group element left.
struct ConjTerm {
  Scalar c;
  GroupElem h;
  YWord w;
};

// The algebra of a presentation together with its rewriting machinery.
// All caches are guarded, so one instance may be shared across threads.
class Algebra {
 public:
  explicit Algebra(Presentation p);

  const Presentation& pres() const { return p_; }
  const Group& group() const { return p_.group; }
  int num_y() const { return p_.num_y(); }

  AlgebraElement one() const;
  AlgebraElement group_element(const GroupElem& g) const;
  AlgebraElement y(int i) const;
  AlgebraElement word(const GroupElem& g, const YWord& w) const;

  AlgebraElement normalize(const RawElement& x) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement pow(const AlgebraElement& a, int n) const;
  // out += c * a * b
  void mul_into(AlgebraElement& out, const Scalar& c, const NormalWord& a, const NormalWord& b) const;
  // out += c * left * NF(w)
  void nf_into(AlgebraElement& out, const Scalar& c, const GroupElem& left, const YWord& w) const;

  std::vector<ConjTerm> pass_group_left(const YWord& w, const GroupElem& h) const;
  // Conjugation g^-1 x g.
  AlgebraElement conjugate(const AlgebraElement& x, const GroupElem& g) const;

  // lambda_i(h) for every i, cached.
  const std::vector<Scalar>& lambdas(const GroupElem& h) const;

  bool is_irreducible(const YWord& w) const;
  // Irreducible y-words of degree <= d, in increasing word order.
  std::vector<YWord> irreducible_words(int d) const;

  ConfluenceReport check_confluence(int degree_bound = -1) const;
  const ConfluenceReport& confluence() const;
  // Throws a hypothesis error naming the first failing overlap.
  void require_confluent() const;

  // Storage for coproducts of y-words, filled by the coalgebra layer.
  struct DeltaCache {
    std::shared_mutex mu;
    std::unordered_map<YWord, TensorElement> map;
  };
  DeltaCache& delta_cache() const { return *delta_cache_; }

  std::string str(const AlgebraElement& x) const { return p_.element_string(x); }
  std::string str(const TensorElement& x) const { return p_.tensor_string(x); }

 private:
  std::pair<size_t, int> find_leftmost(const YWord& w) const;
  const AlgebraElement& reduced(const YWord& w) const;
  void apply_rule_into(AlgebraElement& out, const Scalar& c, const GroupElem& left, const YWord& w, size_t pos,
                       int rule) const;

  Presentation p_;
  bool has_tau_ = false;

  mutable std::shared_mutex memo_mu_;
  mutable std::unordered_map<YWord, AlgebraElement> memo_;
  mutable std::shared_mutex lambda_mu_;
  mutable std::unordered_map<GroupElem, std::vector<Scalar>, GroupElemHash> lambda_cache_;
  mutable std::once_flag confluence_once_;
  mutable ConfluenceReport confluence_;
  std::unique_ptr<DeltaCache> delta_cache_ = std::make_unique<DeltaCache>();
};

}  // namespace hopfgrow
