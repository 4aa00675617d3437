#include "hopfgrow/presentation.hpp"

#include <set>

#include "hopfgrow/error.hpp"

namespace hopfgrow {

namespace {

std::string coef_prefix(const Scalar& c, const std::vector<std::string>& names, bool& negative) {
  negative = false;
  if (c.is_one()) return "";
  if (c == Scalar(-1)) {
    negative = true;
    return "";
  }
  std::string s = c.to_string(names);
  bool compound = s.find_first_of("+/") != std::string::npos || s.find(" - ") != std::string::npos;
  if (!compound && s[0] == '-') {
    negative = true;
    s = s.substr(1);
  }
  return (compound ? "(" + s + ")" : s) + "*";
}

}  // namespace

void Presentation::validate() const {
  const int r = group.num_generators();
  if (cyclotomic_order < 1) fail(ErrorKind::Usage, "cyclotomic order must be positive");
  if (static_cast<int>(transcendentals.size()) > kMaxVars)
    fail(ErrorKind::Usage, "at most " + std::to_string(kMaxVars) + " transcendentals are supported");
  if (num_y() > kMaxGenerators)
    fail(ErrorKind::Usage, "at most " + std::to_string(kMaxGenerators) + " skew-primitive generators are supported");
  std::set<std::string> names(group.names().begin(), group.names().end());
  names.insert(transcendentals.begin(), transcendentals.end());
  names.insert("zeta");
  if (names.size() != group.names().size() + transcendentals.size() + 1)
    fail(ErrorKind::Usage, "duplicate group or transcendental name");
  for (const auto& y : gens) {
    if (y.name.empty() || !names.insert(y.name).second)
      fail(ErrorKind::Usage, "generator name '" + y.name + "' is empty or duplicated");
    if (static_cast<int>(y.weight.size()) != r || static_cast<int>(y.character.size()) != r ||
        static_cast<int>(y.tau.size()) != r)
      fail(ErrorKind::Usage, "generator '" + y.name + "': weight, character and tau need one entry per group generator");
    if (!(group.canonical(y.weight) == y.weight))
      fail(ErrorKind::Usage, "generator '" + y.name + "': weight is not reduced modulo the torsion orders");
    bool trivial = true;
    for (int j = 0; j < r; ++j) {
      if (y.character[j].is_zero()) fail(ErrorKind::Usage, "generator '" + y.name + "': character value is zero");
      if (!y.character[j].is_one()) trivial = false;
      if (group.is_torsion_coord(j)) {
        if (!y.character[j].pow(group.modulus(j)).is_one())
          fail(ErrorKind::Usage, "generator '" + y.name + "': character does not respect the order of " +
                                     group.names()[j]);
        if (!y.tau[j].is_zero())
          fail(ErrorKind::Usage, "generator '" + y.name + "': tau must vanish on torsion generators");
      }
    }
    for (int j = 0; j < r; ++j)
      if (!trivial && !y.tau[j].is_zero())
        fail(ErrorKind::Usage, "generator '" + y.name + "': tau may be nonzero only when the character is trivial");
  }
  std::set<YWord> lhs_seen;
  for (const auto& rel : relations) {
    if (rel.lhs.empty()) fail(ErrorKind::Usage, "relation with empty left-hand side");
    for (char c : rel.lhs)
      if (static_cast<int>(c) >= num_y()) fail(ErrorKind::Usage, "relation uses an unknown generator");
    if (!lhs_seen.insert(rel.lhs).second)
      fail(ErrorKind::Usage, "two relations share the left-hand side " + yword_string(rel.lhs));
    for (const auto& [w, c] : rel.rhs.terms()) {
      if (static_cast<int>(w.g.size()) != r) fail(ErrorKind::Usage, "relation term has the wrong group rank");
      if (!yword_less(w.w, rel.lhs))
        fail(ErrorKind::Usage, "relation " + yword_string(rel.lhs) + " -> ... is not decreasing: term " +
                                   word_string(w) + " is not smaller than the left-hand side");
    }
  }
}

Scalar Presentation::lambda(int i, const GroupElem& g) const {
  Scalar r(1);
  for (int j = 0; j < group.num_generators(); ++j)
    if (g[j] != 0) r *= gens[i].character[j].pow(g[j]);
  return r;
}

Scalar Presentation::tau(int i, const GroupElem& g) const {
  Scalar r(0);
  for (int j = 0; j < group.free_rank(); ++j)
    if (g[j] != 0 && !gens[i].tau[j].is_zero()) r += gens[i].tau[j] * Scalar(g[j]);
  return r;
}

bool Presentation::has_tau() const {
  for (const auto& y : gens)
    for (const auto& t : y.tau)
      if (!t.is_zero()) return true;
  return false;
}

bool Presentation::homogeneous() const {
  for (const auto& rel : relations)
    for (const auto& [w, c] : rel.rhs.terms())
      if (w.w.size() != rel.lhs.size()) return false;
  return true;
}

GroupElem Presentation::weight_of(const YWord& w) const {
  GroupElem g = group.identity();
  for (char c : w) g = group.mul(g, gens[static_cast<int>(c)].weight);
  return g;
}

std::string Presentation::yword_string(const YWord& w) const {
  std::string s;
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += " ";
    s += gens[static_cast<int>(w[i])].name;
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string Presentation::word_string(const NormalWord& w) const {
  std::string g = group.is_identity(w.g) ? "" : group.to_string(w.g);
  std::string y = yword_string(w.w);
  if (g.empty() && y.empty()) return "1";
  if (g.empty()) return y;
  if (y.empty()) return g;
  return g + " " + y;
}

std::string Presentation::element_string(const AlgebraElement& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    bool neg;
    std::string c = coef_prefix(it->second, transcendentals, neg);
    std::string w = word_string(it->first);
    std::string body;
    if (w == "1" && !c.empty()) body = c.substr(0, c.size() - 1);
    else body = c + w;
    if (first) s += (neg ? "-" : "") + body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

std::string Presentation::tensor_string(const TensorElement& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    bool neg;
    std::string c = coef_prefix(it->second, transcendentals, neg);
    std::string body = c + "(" + word_string(it->first.a) + " (x) " + word_string(it->first.b) + ")";
    if (first) s += (neg ? "-" : "") + body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

}  // namespace hopfgrow
