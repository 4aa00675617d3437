#include "hopfgrow/coalgebra.hpp"

#include <algorithm>
#include <unordered_map>

#include "hopfgrow/error.hpp"
#include "hopfgrow/linalg.hpp"

namespace hopfgrow {

namespace {

// t * (y_i (x) 1 + mu_i (x) y_i)
TensorElement times_delta_letter(const Algebra& alg, const TensorElement& t, int i) {
  const GroupElem id = alg.group().identity();
  const NormalWord yi{id, YWord(1, static_cast<char>(i))};
  const NormalWord mu{alg.pres().gens[i].weight, ""};
  TensorElement out;
  for (const auto& [k, c] : t.terms()) {
    AlgebraElement ay, amu, by;
    alg.mul_into(ay, Scalar(1), k.a, yi);
    alg.mul_into(amu, Scalar(1), k.a, mu);
    alg.mul_into(by, Scalar(1), k.b, yi);
    out.add_product(ay, AlgebraElement::term(k.b), c);
    out.add_product(amu, by, c);
  }
  return out;
}

TensorElement unit_tensor(const Algebra& alg) {
  TensorElement t;
  const NormalWord one{alg.group().identity(), ""};
  t.add(TensorKey{one, one}, Scalar(1));
  return t;
}

}  // namespace

TensorElement tensor_multiply(const Algebra& alg, const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [x, u] : a.terms())
    for (const auto& [y, v] : b.terms()) {
      AlgebraElement l, r;
      alg.mul_into(l, Scalar(1), x.a, y.a);
      alg.mul_into(r, Scalar(1), x.b, y.b);
      out.add_product(l, r, u * v);
    }
  return out;
}

AlgebraElement tensor_contract(const Algebra& alg, const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms()) alg.mul_into(out, c, k.a, k.b);
  return out;
}

const TensorElement& delta_word(const Algebra& alg, const YWord& w) {
  auto& cache = alg.delta_cache();
  {
    std::shared_lock lock(cache.mu);
    if (auto it = cache.map.find(w); it != cache.map.end()) return it->second;
  }
  TensorElement val = w.empty() ? unit_tensor(alg)
                                : times_delta_letter(alg, delta_word(alg, w.substr(0, w.size() - 1)),
                                                     static_cast<unsigned char>(w.back()));
  std::unique_lock lock(cache.mu);
  return cache.map.try_emplace(w, std::move(val)).first->second;
}

TensorElement delta(const Algebra& alg, const AlgebraElement& x) {
  TensorElement out;
  const Group& grp = alg.group();
  for (const auto& [w, c] : x.terms()) {
    const TensorElement& dw = delta_word(alg, w.w);
    if (grp.is_identity(w.g)) {
      out.add(dw, c);
      continue;
    }
    for (const auto& [k, v] : dw.terms())
      out.add(TensorKey{NormalWord{grp.mul(w.g, k.a.g), k.a.w}, NormalWord{grp.mul(w.g, k.b.g), k.b.w}}, c * v);
  }
  return out;
}

Scalar counit(const Algebra&, const AlgebraElement& x) {
  Scalar s(0);
  for (const auto& [w, c] : x.terms())
    if (w.w.empty()) s += c;
  return s;
}

AlgebraElement antipode(const Algebra& alg, const AlgebraElement& x) {
  const Group& grp = alg.group();
  std::vector<AlgebraElement> s_y;
  for (int i = 0; i < alg.num_y(); ++i)
    s_y.push_back(alg.multiply(alg.group_element(grp.inv(alg.pres().gens[i].weight)), alg.y(i)).scaled(Scalar(-1)));
  AlgebraElement out;
  for (const auto& [w, c] : x.terms()) {
    AlgebraElement r = alg.group_element(grp.inv(w.g));
    for (char ch : w.w) r = alg.multiply(s_y[static_cast<unsigned char>(ch)], r);
    out.add(r, c);
  }
  return out;
}

PowerFormula delta_power_formula(const Algebra& alg, int i, int n) {
  if (i < 0 || i >= alg.num_y() || n < 0) fail(ErrorKind::Usage, "bad generator index or power");
  const auto& pres = alg.pres();
  const GroupElem& mu = pres.gens[i].weight;
  Scalar lam = pres.lambda(i, mu);
  PowerFormula f;
  f.partial = !pres.tau(i, mu).is_zero();
  const char yc = static_cast<char>(i);
  for (int s = 0; s <= n; ++s) {
    Scalar b = quantum_binomial(n, s, lam);
    if (b.is_zero()) continue;
    f.value.add_product(alg.word(alg.group().pow(mu, s), YWord(n - s, yc)),
                        alg.word(alg.group().identity(), YWord(s, yc)), b);
  }
  return f;
}

SkewPrimitiveSpace find_skew_primitives(const Algebra& alg, const GroupElem& g_in, int d, int group_bound) {
  alg.require_confluent();
  if (d < 0 || group_bound < 0) fail(ErrorKind::Usage, "degree and group bounds must be nonnegative");
  const Group& grp = alg.group();
  const auto& pres = alg.pres();
  const GroupElem g = grp.canonical(g_in);
  const GroupElem id = grp.identity();
  const bool homogeneous = pres.homogeneous();
  const bool weight_filter = homogeneous && !pres.has_tau();

  // For homogeneous relations the right tensor factors never pick up pure
  // group terms, which forces every non-group column to have trivial group
  // part. Without tau, the term mu_w (x) w is met by w alone, so only words
  // of weight g survive.
  std::vector<NormalWord> cols;
  std::vector<GroupElem> ball = grp.ball(group_bound);
  for (const auto& h : ball) cols.push_back(NormalWord{h, ""});
  // g - 1 must be representable even when g lies outside the ball.
  if (std::find(ball.begin(), ball.end(), g) == ball.end()) cols.push_back(NormalWord{g, ""});
  for (const auto& w : alg.irreducible_words(d)) {
    if (w.empty()) continue;
    if (homogeneous) {
      if (!weight_filter || pres.weight_of(w) == g) cols.push_back(NormalWord{id, w});
    } else {
      for (const auto& h : ball) cols.push_back(NormalWord{h, w});
    }
  }

  std::unordered_map<TensorKey, size_t, TensorKeyHash> row_of;
  auto row = [&](const TensorKey& k) { return row_of.try_emplace(k, row_of.size()).first->second; };
  std::vector<SparseVec> columns;
  columns.reserve(cols.size());
  const NormalWord one{id, ""};
  const NormalWord gword{g, ""};
  for (const auto& col : cols) {
    TensorElement t = delta(alg, AlgebraElement::term(col));
    t.add(TensorKey{col, one}, Scalar(-1));
    t.add(TensorKey{gword, col}, Scalar(-1));
    SparseVec sv;
    for (const auto& [k, c] : t.terms()) sv.emplace_back(row(k), c);
    columns.push_back(std::move(sv));
  }
  SpanBasis span;
  for (const auto& v : sparse_kernel(columns, row_of.size())) {
    AlgebraElement z;
    for (const auto& [ci, c] : v) z.add(cols[ci], c);
    span.add(z);
  }
  SkewPrimitiveSpace out;
  out.weight = g;
  out.degree_bound = d;
  out.group_bound = group_bound;
  out.basis = span.echelon();
  if (!grp.is_identity(g)) {
    AlgebraElement gm1 = alg.group_element(g);
    gm1.add(one, Scalar(-1));
    out.includes_group_part = span.contains(gm1);
  }
  return out;
}

std::optional<GroupElem> is_skew_primitive(const Algebra& alg, const AlgebraElement& z) {
  if (z.is_zero()) return std::nullopt;
  const NormalWord one{alg.group().identity(), ""};
  TensorElement rest = delta(alg, z);
  for (const auto& [w, c] : z.terms()) rest.add(TensorKey{w, one}, -c);
  const NormalWord& lead = z.lead();
  std::vector<GroupElem> candidates;
  for (const auto& [k, c] : rest.terms())
    if (k.b == lead && k.a.w.empty()) candidates.push_back(k.a.g);
  for (const auto& g : candidates) {
    TensorElement expect;
    for (const auto& [w, c] : z.terms()) expect.add(TensorKey{NormalWord{g, ""}, w}, c);
    if (rest == expect) return g;
  }
  return std::nullopt;
}

std::vector<std::string> coproduct_defects(const Algebra& alg) {
  std::vector<std::string> out;
  for (const auto& rel : alg.pres().relations) {
    TensorElement lhs = unit_tensor(alg);
    for (char c : rel.lhs) lhs = times_delta_letter(alg, lhs, static_cast<unsigned char>(c));
    AlgebraElement rhs_nf;
    for (const auto& [w, c] : rel.rhs.terms()) alg.nf_into(rhs_nf, c, w.g, w.w);
    TensorElement rhs = delta(alg, rhs_nf);
    if (!(lhs == rhs)) out.push_back(alg.pres().yword_string(rel.lhs));
  }
  return out;
}

void require_hopf_ideal(const Algebra& alg) {
  auto bad = coproduct_defects(alg);
  if (!bad.empty())
    fail(ErrorKind::Hypothesis, "the relation with left-hand side '" + bad.front() +
                                    "' is not compatible with the coproduct, so the relations do not span a Hopf ideal");
}

}  // namespace hopfgrow
