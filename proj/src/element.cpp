#include "hopfgrow/element.hpp"

#include <algorithm>
#include <array>

#include "hopfgrow/error.hpp"

namespace hopfgrow {

bool yword_less(const YWord& a, const YWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  std::array<int, kMaxGenerators> ca{}, cb{};
  for (char c : a) ++ca[static_cast<unsigned char>(c)];
  for (char c : b) ++cb[static_cast<unsigned char>(c)];
  for (int i = 0; i < kMaxGenerators; ++i)
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  return a < b;
}

bool WordOrder::operator()(const NormalWord& a, const NormalWord& b) const {
  if (a.w != b.w) return yword_less(a.w, b.w);
  return std::lexicographical_compare(a.g.begin(), a.g.end(), b.g.begin(), b.g.end());
}

bool TensorOrder::operator()(const TensorKey& x, const TensorKey& y) const {
  WordOrder o;
  if (o(x.a, y.a)) return true;
  if (o(y.a, x.a)) return false;
  return o(x.b, y.b);
}

AlgebraElement AlgebraElement::term(NormalWord w, Scalar c) {
  AlgebraElement e;
  if (!c.is_zero()) e.t_.emplace(std::move(w), std::move(c));
  return e;
}

void AlgebraElement::add(const NormalWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void AlgebraElement::add(const AlgebraElement& x, const Scalar& c) {
  if (c.is_zero()) return;
  bool unit = c.is_one();
  for (const auto& [w, v] : x.t_) add(w, unit ? v : v * c);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& x) {
  add(x, Scalar(1));
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& x) {
  add(x, Scalar(-1));
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, v] : t_) r.t_.emplace_hint(r.t_.end(), w, v * c);
  return r;
}

AlgebraElement AlgebraElement::left_group(const GroupElem& h, const Group& grp) const {
  AlgebraElement r;
  for (const auto& [w, v] : t_) r.add(NormalWord{grp.mul(h, w.g), w.w}, v);
  return r;
}

Scalar AlgebraElement::coeff(const NormalWord& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Scalar(0) : it->second;
}

int AlgebraElement::y_degree() const {
  int d = -1;
  for (const auto& [w, v] : t_) d = std::max(d, static_cast<int>(w.w.size()));
  return d;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.t_.size() != b.t_.size()) return false;
  auto i = a.t_.begin();
  auto j = b.t_.begin();
  for (; i != a.t_.end(); ++i, ++j)
    if (!(i->first == j->first) || !(i->second == j->second)) return false;
  return true;
}

void TensorElement::add(const TensorKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void TensorElement::add(const TensorElement& x, const Scalar& c) {
  if (c.is_zero()) return;
  bool unit = c.is_one();
  for (const auto& [k, v] : x.t_) add(k, unit ? v : v * c);
}

void TensorElement::add_product(const AlgebraElement& x, const AlgebraElement& y, const Scalar& c) {
  for (const auto& [a, u] : x.terms())
    for (const auto& [b, v] : y.terms()) add(TensorKey{a, b}, u * v * c);
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.t_.size() != b.t_.size()) return false;
  auto i = a.t_.begin();
  auto j = b.t_.begin();
  for (; i != a.t_.end(); ++i, ++j)
    if (!(i->first == j->first) || !(i->second == j->second)) return false;
  return true;
}

}  // namespace hopfgrow
