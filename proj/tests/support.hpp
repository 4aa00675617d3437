#pragma once

// Helpers shared by the unit tests: seeded random elements and a rewriting
// oracle that applies moves in random order instead of leftmost-first.

#include <map>
#include <random>
#include <vector>

#include "hopfgrow/algebra.hpp"
#include "hopfgrow/catalog.hpp"

namespace testing_support {

using namespace hopfgrow;

struct Builtin {
  std::string name;
  Params params;
};

inline std::vector<Builtin> computable_builtins() {
  return {
      {"K", {}},
      {"K", {{"v", "1"}, {"lambda", "1"}, {"tau", "2"}}},
      {"L", {}},
      {"L", {{"v", "2"}, {"p", "3"}, {"N", "3"}, {"lambda1", "zeta"}, {"beta", "0"}}},
      {"taft", {{"p", "2"}}},
      {"taft", {{"p", "3"}}},
      {"taft", {{"p", "5"}}},
      {"qplane", {{"v", "1"}}},
      {"qplane", {{"v", "2"}}},
      {"qplane", {{"v", "3"}}},
      {"ex3_13", {{"s", "2"}}},
      {"ex3_13", {{"s", "3"}}},
  };
}

inline RawElement random_raw(const Presentation& p, std::mt19937& rng, int max_letters, int max_terms = 3) {
  RawElement out;
  std::uniform_int_distribution<int> nterms(1, max_terms), nletters(0, max_letters), coef(-3, 3);
  const int ng = p.group.num_generators();
  const int ny = p.num_y();
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    int c = coef(rng);
    RawTerm rt{Scalar(c == 0 ? 1 : c), {}};
    int len = nletters(rng);
    for (int k = 0; k < len; ++k) {
      bool group = ny == 0 || (ng > 0 && rng() % 3 == 0);
      if (group)
        rt.letters.push_back(Letter{true, static_cast<int>(rng() % ng), rng() % 2 ? 1 : -1});
      else
        rt.letters.push_back(Letter{false, static_cast<int>(rng() % ny), 1});
    }
    out.push_back(rt);
  }
  return out;
}

// Word over unit letters: group letters carry a sign, y letters have sign 0.
struct OLetter {
  bool group;
  int index;
  int sign;
  friend bool operator<(const OLetter& a, const OLetter& b) {
    return std::tie(a.group, a.index, a.sign) < std::tie(b.group, b.index, b.sign);
  }
  friend bool operator==(const OLetter& a, const OLetter& b) = default;
};
using OWord = std::vector<OLetter>;

// Normal form by random-order rewriting. Every move is either passing a group
// letter left over a y letter or applying a relation somewhere in a run of
// y letters. Group letters are only multiplied out once they sit on the left.
inline AlgebraElement random_order_normal_form(const Algebra& alg, const RawElement& x, std::mt19937& rng) {
  const Presentation& p = alg.pres();
  const Group& grp = p.group;
  std::map<OWord, Scalar> cur;
  auto add = [](std::map<OWord, Scalar>& m, const OWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  };
  for (const auto& t : x) {
    OWord w;
    for (const auto& l : t.letters)
      for (int k = 0; k < std::abs(l.power); ++k) w.push_back(OLetter{l.is_group, l.index, l.is_group ? (l.power > 0 ? 1 : -1) : 0});
    add(cur, w, t.coeff);
  }
  AlgebraElement result;
  while (!cur.empty()) {
    auto it = cur.begin();
    std::advance(it, rng() % cur.size());
    OWord w = it->first;
    Scalar c = it->second;
    cur.erase(it);
    struct Move {
      size_t pos;
      int rule;  // -1 for a group pass
    };
    std::vector<Move> moves;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (!w[i].group && w[i + 1].group) moves.push_back({i, -1});
    for (int r = 0; r < static_cast<int>(p.relations.size()); ++r) {
      const YWord& lhs = p.relations[r].lhs;
      for (size_t i = 0; i + lhs.size() <= w.size(); ++i) {
        bool ok = true;
        for (size_t k = 0; k < lhs.size() && ok; ++k)
          ok = !w[i + k].group && w[i + k].index == static_cast<unsigned char>(lhs[k]);
        if (ok) moves.push_back({i, r});
      }
    }
    if (moves.empty()) {
      GroupElem g = grp.identity();
      YWord yw;
      for (const auto& l : w) {
        if (l.group) g = grp.mul(g, grp.generator(l.index, l.sign));
        else yw.push_back(static_cast<char>(l.index));
      }
      result.add(NormalWord{g, yw}, c);
      continue;
    }
    Move m = moves[rng() % moves.size()];
    if (m.rule < 0) {
      // y h = lambda(h) h y + tau(h) h (mu - 1) for h a generator or its inverse.
      const int i = w[m.pos].index;
      const OLetter h = w[m.pos + 1];
      Scalar lam = p.gens[i].character[h.index];
      Scalar tau = p.gens[i].tau[h.index];
      if (h.sign < 0) {
        tau = -(tau / lam);
        lam = lam.inverse();
      }
      OWord swapped = w;
      std::swap(swapped[m.pos], swapped[m.pos + 1]);
      add(cur, swapped, c * lam);
      if (!tau.is_zero()) {
        OWord head(w.begin(), w.begin() + m.pos);
        OWord tail(w.begin() + m.pos + 2, w.end());
        OWord with_mu = head;
        with_mu.push_back(h);
        for (int j = 0; j < grp.num_generators(); ++j) {
          int e = p.gens[i].weight[j];
          for (int k = 0; k < std::abs(e); ++k) with_mu.push_back(OLetter{true, j, e > 0 ? 1 : -1});
        }
        with_mu.insert(with_mu.end(), tail.begin(), tail.end());
        OWord without = head;
        without.push_back(h);
        without.insert(without.end(), tail.begin(), tail.end());
        add(cur, with_mu, c * tau);
        add(cur, without, -(c * tau));
      }
    } else {
      const Relation& rel = p.relations[m.rule];
      OWord head(w.begin(), w.begin() + m.pos);
      OWord tail(w.begin() + m.pos + rel.lhs.size(), w.end());
      for (const auto& [nw, rc] : rel.rhs.terms()) {
        OWord nwv = head;
        for (int j = 0; j < grp.num_generators(); ++j) {
          int e = nw.g[j];
          for (int k = 0; k < std::abs(e); ++k) nwv.push_back(OLetter{true, j, e > 0 ? 1 : -1});
        }
        for (char ch : nw.w) nwv.push_back(OLetter{false, static_cast<unsigned char>(ch), 0});
        nwv.insert(nwv.end(), tail.begin(), tail.end());
        add(cur, nwv, c * rc);
      }
    }
  }
  return result;
}

inline AlgebraElement random_element(const Algebra& alg, std::mt19937& rng, int max_letters, int max_terms = 3) {
  return alg.normalize(random_raw(alg.pres(), rng, max_letters, max_terms));
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace testing_support
