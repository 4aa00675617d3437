#include "hopfgrow/algebra.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "hopfgrow/error.hpp"

namespace hopfgrow {

Algebra::Algebra(Presentation p) : p_(std::move(p)) {
  p_.validate();
  has_tau_ = p_.has_tau();
}

AlgebraElement Algebra::one() const { return AlgebraElement::term(NormalWord{group().identity(), ""}); }

AlgebraElement Algebra::group_element(const GroupElem& g) const {
  return AlgebraElement::term(NormalWord{group().canonical(g), ""});
}

AlgebraElement Algebra::y(int i) const {
  if (i < 0 || i >= num_y()) fail(ErrorKind::Usage, "no such generator");
  return word(group().identity(), YWord(1, static_cast<char>(i)));
}

AlgebraElement Algebra::word(const GroupElem& g, const YWord& w) const {
  AlgebraElement out;
  nf_into(out, Scalar(1), group().canonical(g), w);
  return out;
}

AlgebraElement Algebra::normalize(const RawElement& x) const {
  AlgebraElement total;
  for (const auto& t : x) {
    AlgebraElement cur = AlgebraElement::term(NormalWord{group().identity(), ""}, t.coeff);
    for (const auto& l : t.letters) {
      AlgebraElement f;
      if (l.is_group) {
        f = group_element(group().generator(l.index, l.power));
      } else {
        if (l.power < 0) fail(ErrorKind::Usage, "negative powers of skew-primitive generators are not defined");
        f = word(group().identity(), YWord(l.power, static_cast<char>(l.index)));
      }
      cur = multiply(cur, f);
    }
    total += cur;
  }
  return total;
}

const std::vector<Scalar>& Algebra::lambdas(const GroupElem& h) const {
  {
    std::shared_lock lock(lambda_mu_);
    if (auto it = lambda_cache_.find(h); it != lambda_cache_.end()) return it->second;
  }
  std::vector<Scalar> v;
  v.reserve(num_y());
  for (int i = 0; i < num_y(); ++i) v.push_back(p_.lambda(i, h));
  std::unique_lock lock(lambda_mu_);
  return lambda_cache_.try_emplace(h, std::move(v)).first->second;
}

std::vector<ConjTerm> Algebra::pass_group_left(const YWord& w, const GroupElem& h) const {
  if (w.empty() || group().is_identity(h)) return {ConjTerm{Scalar(1), h, w}};
  if (!has_tau_) {
    const auto& lam = lambdas(h);
    std::array<int, kMaxGenerators> count{};
    for (char c : w) ++count[static_cast<unsigned char>(c)];
    Scalar coeff(1);
    for (int i = 0; i < num_y(); ++i)
      if (count[i]) coeff *= count[i] == 1 ? lam[i] : lam[i].pow(count[i]);
    return {ConjTerm{coeff, h, w}};
  }
  // y h = lambda(h) h y + tau(h) h mu - tau(h) h, applied right to left.
  std::vector<ConjTerm> states{ConjTerm{Scalar(1), h, ""}};
  for (size_t k = w.size(); k-- > 0;) {
    int i = static_cast<unsigned char>(w[k]);
    std::map<std::pair<std::vector<int32_t>, YWord>, ConjTerm> next;
    auto push = [&](ConjTerm t) {
      if (t.c.is_zero()) return;
      auto key = std::make_pair(std::vector<int32_t>(t.h.begin(), t.h.end()), t.w);
      auto [it, ins] = next.try_emplace(key, t);
      if (!ins) it->second.c += t.c;
    };
    for (const auto& st : states) {
      push(ConjTerm{st.c * lambdas(st.h)[i], st.h, YWord(1, static_cast<char>(i)) + st.w});
      Scalar t = p_.tau(i, st.h);
      if (!t.is_zero()) {
        push(ConjTerm{st.c * t, group().mul(st.h, p_.gens[i].weight), st.w});
        push(ConjTerm{-(st.c * t), st.h, st.w});
      }
    }
    states.clear();
    for (auto& [key, t] : next)
      if (!t.c.is_zero()) states.push_back(std::move(t));
  }
  return states;
}

std::pair<size_t, int> Algebra::find_leftmost(const YWord& w) const {
  size_t best = YWord::npos;
  int rule = -1;
  for (int r = 0; r < static_cast<int>(p_.relations.size()); ++r) {
    size_t pos = w.find(p_.relations[r].lhs);
    if (pos < best) {
      best = pos;
      rule = r;
    }
  }
  return {best, rule};
}

bool Algebra::is_irreducible(const YWord& w) const { return find_leftmost(w).second < 0; }

void Algebra::apply_rule_into(AlgebraElement& out, const Scalar& c, const GroupElem& left, const YWord& w,
                              size_t pos, int rule) const {
  const Relation& rel = p_.relations[rule];
  YWord prefix = w.substr(0, pos);
  YWord suffix = w.substr(pos + rel.lhs.size());
  for (const auto& [rw, rc] : rel.rhs.terms())
    for (const auto& ct : pass_group_left(prefix, rw.g))
      nf_into(out, c * rc * ct.c, group().mul(left, ct.h), ct.w + rw.w + suffix);
}

const AlgebraElement& Algebra::reduced(const YWord& w) const {
  {
    std::shared_lock lock(memo_mu_);
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  }
  auto [pos, rule] = find_leftmost(w);
  AlgebraElement res;
  if (rule < 0) res.add(NormalWord{group().identity(), w}, Scalar(1));
  else apply_rule_into(res, Scalar(1), group().identity(), w, pos, rule);
  std::unique_lock lock(memo_mu_);
  return memo_.try_emplace(w, std::move(res)).first->second;
}

void Algebra::nf_into(AlgebraElement& out, const Scalar& c, const GroupElem& left, const YWord& w) const {
  if (c.is_zero()) return;
  if (p_.relations.empty() || is_irreducible(w)) {
    out.add(NormalWord{left, w}, c);
    return;
  }
  const AlgebraElement& nf = reduced(w);
  for (const auto& [nw, v] : nf.terms()) out.add(NormalWord{group().mul(left, nw.g), nw.w}, c * v);
}

void Algebra::mul_into(AlgebraElement& out, const Scalar& c, const NormalWord& a, const NormalWord& b) const {
  for (const auto& ct : pass_group_left(a.w, b.g))
    nf_into(out, c * ct.c, group().mul(a.g, ct.h), ct.w + b.w);
}

AlgebraElement Algebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement out;
  for (const auto& [x, u] : a.terms())
    for (const auto& [y, v] : b.terms()) mul_into(out, u * v, x, y);
  return out;
}

AlgebraElement Algebra::pow(const AlgebraElement& a, int n) const {
  if (n < 0) fail(ErrorKind::Usage, "negative power");
  AlgebraElement r = one();
  for (int k = 0; k < n; ++k) r = multiply(r, a);
  return r;
}

AlgebraElement Algebra::conjugate(const AlgebraElement& x, const GroupElem& g) const {
  AlgebraElement out;
  GroupElem gi = group().inv(g);
  for (const auto& [w, c] : x.terms())
    for (const auto& ct : pass_group_left(w.w, g))
      nf_into(out, c * ct.c, group().mul(group().mul(gi, w.g), ct.h), ct.w);
  return out;
}

std::vector<YWord> Algebra::irreducible_words(int d) const {
  std::vector<YWord> out{""};
  std::vector<YWord> layer{""};
  for (int k = 1; k <= d; ++k) {
    std::vector<YWord> next;
    for (const auto& w : layer)
      for (int i = 0; i < num_y(); ++i) {
        YWord u = w + static_cast<char>(i);
        bool ok = true;
        for (const auto& rel : p_.relations)
          if (u.size() >= rel.lhs.size() && u.compare(u.size() - rel.lhs.size(), rel.lhs.size(), rel.lhs) == 0) {
            ok = false;
            break;
          }
        if (ok) next.push_back(std::move(u));
      }
    std::sort(next.begin(), next.end(), yword_less);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

ConfluenceReport Algebra::check_confluence(int degree_bound) const {
  ConfluenceReport rep;
  const auto& rels = p_.relations;
  auto within = [&](size_t len) { return degree_bound < 0 || static_cast<int>(len) <= degree_bound; };
  auto compare = [&](const std::string& kind, const std::string& word, AlgebraElement r1, AlgebraElement r2) {
    ++rep.checked;
    if (!(r1 == r2)) {
      rep.confluent = false;
      rep.failures.push_back(Overlap{kind, word, std::move(r1), std::move(r2)});
    }
  };
  const GroupElem id = group().identity();
  for (int r = 0; r < static_cast<int>(rels.size()); ++r) {
    const YWord& a = rels[r].lhs;
    for (int s = 0; s < static_cast<int>(rels.size()); ++s) {
      const YWord& b = rels[s].lhs;
      // suffix of a equal to a proper prefix of b
      for (size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
        if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
        YWord u = a + b.substr(k);
        if (!within(u.size())) continue;
        AlgebraElement r1, r2;
        apply_rule_into(r1, Scalar(1), id, u, 0, r);
        apply_rule_into(r2, Scalar(1), id, u, a.size() - k, s);
        compare("overlap", p_.yword_string(u), std::move(r1), std::move(r2));
      }
      if (r != s && b.size() <= a.size() && within(a.size())) {
        for (size_t pos = a.find(b); pos != YWord::npos; pos = a.find(b, pos + 1)) {
          AlgebraElement r1, r2;
          apply_rule_into(r1, Scalar(1), id, a, 0, r);
          apply_rule_into(r2, Scalar(1), id, a, pos, s);
          compare("inclusion", p_.yword_string(a), std::move(r1), std::move(r2));
        }
      }
    }
    if (!within(a.size())) continue;
    // lhs * g_j: reduce first, or move g_j left first.
    for (int j = 0; j < group().num_generators(); ++j) {
      GroupElem g = group().generator(j);
      NormalWord gw{g, ""};
      AlgebraElement r1, r2;
      for (const auto& [w, c] : rels[r].rhs.terms()) mul_into(r1, c, w, gw);
      for (const auto& ct : pass_group_left(a, g)) nf_into(r2, ct.c, ct.h, ct.w);
      compare("group", p_.yword_string(a) + " " + group().names()[j], std::move(r1), std::move(r2));
    }
  }
  return rep;
}

const ConfluenceReport& Algebra::confluence() const {
  std::call_once(confluence_once_, [this] { confluence_ = check_confluence(-1); });
  return confluence_;
}

void Algebra::require_confluent() const {
  const auto& rep = confluence();
  if (rep.confluent) return;
  const Overlap& o = rep.failures.front();
  fail(ErrorKind::Hypothesis, "presentation is not confluent: the " + o.kind + " ambiguity at '" + o.word +
                                  "' resolves to " + str(o.route1) + " and to " + str(o.route2));
}

}  // namespace hopfgrow
