#pragma once

#include <map>
#include <string>
#include <utility>

#include "hopfgrow/group.hpp"
#include "hopfgrow/scalar.hpp"

namespace hopfgrow {

// A word in the skew-primitive generators; char k stands for y_{k+1}.
using YWord = std::string;

inline constexpr int kMaxGenerators = 32;

// Degree first, then the multidegree order (smaller entry at the first
// differing position is smaller), then lexicographic.
bool yword_less(const YWord& a, const YWord& b);

// Normal word g * w with all group letters collected on the left.
struct NormalWord {
  GroupElem g;
  YWord w;
  friend bool operator==(const NormalWord&, const NormalWord&) = default;
};

struct WordOrder {
  bool operator()(const NormalWord& a, const NormalWord& b) const;
};

struct NormalWordHash {
  size_t operator()(const NormalWord& x) const noexcept {
    return GroupElemHash{}(x.g) * 31 + std::hash<std::string>{}(x.w);
  }
};

// Finite linear combination of normal words.
class AlgebraElement {
 public:
  using Map = std::map<NormalWord, Scalar, WordOrder>;

  AlgebraElement() = default;
  static AlgebraElement term(NormalWord w, Scalar c = Scalar(1));

  void add(const NormalWord& w, const Scalar& c);
  void add(const AlgebraElement& x, const Scalar& c);
  AlgebraElement& operator+=(const AlgebraElement& x);
  AlgebraElement& operator-=(const AlgebraElement& x);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement scaled(const Scalar& c) const;
  // Left multiplication by a group element only touches the group parts.
  AlgebraElement left_group(const GroupElem& h, const Group& grp) const;

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const Map& terms() const { return t_; }
  const NormalWord& lead() const { return t_.rbegin()->first; }
  const Scalar& lead_coeff() const { return t_.rbegin()->second; }
  Scalar coeff(const NormalWord& w) const;
  int y_degree() const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  Map t_;
};

struct TensorKey {
  NormalWord a, b;
  friend bool operator==(const TensorKey&, const TensorKey&) = default;
};

struct TensorOrder {
  bool operator()(const TensorKey& x, const TensorKey& y) const;
};

struct TensorKeyHash {
  size_t operator()(const TensorKey& k) const noexcept {
    return NormalWordHash{}(k.a) * 1000003u ^ NormalWordHash{}(k.b);
  }
};

class TensorElement {
 public:
  using Map = std::map<TensorKey, Scalar, TensorOrder>;

  void add(const TensorKey& k, const Scalar& c);
  void add(const TensorElement& x, const Scalar& c);
  // Adds c * (x tensor y).
  void add_product(const AlgebraElement& x, const AlgebraElement& y, const Scalar& c);
  TensorElement& operator+=(const TensorElement& x) { add(x, Scalar(1)); return *this; }
  TensorElement& operator-=(const TensorElement& x) { add(x, Scalar(-1)); return *this; }

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const Map& terms() const { return t_; }
  friend bool operator==(const TensorElement& a, const TensorElement& b);

 private:
  Map t_;
};

}  // namespace hopfgrow
