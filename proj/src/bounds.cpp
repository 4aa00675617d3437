#include "hopfgrow/bounds.hpp"

#include <algorithm>
#include <tuple>

#include "hopfgrow/error.hpp"

namespace hopfgrow {

namespace {

std::string str(const Algebra& alg, const Scalar& s) { return alg.pres().scalar_string(s); }

bool one_or_nonroot(const Scalar& s) {
  Order o = multiplicative_order(s);
  return !o.finite() || o.value == 1;
}

Hypothesis abelian(const std::string& what) {
  return Hypothesis{what + " generates an abelian group", true, "the group of group-likes is abelian"};
}

bool torsion_free_span(const Group& grp, const std::vector<GroupElem>& ws) {
  const int r = grp.free_rank();
  std::vector<std::vector<long>> rows;
  for (const auto& w : ws) rows.emplace_back(w.begin(), w.begin() + r);
  for (const auto& rel : integer_relations(rows))
    for (int j = r; j < grp.num_generators(); ++j) {
      long s = 0;
      for (size_t i = 0; i < ws.size(); ++i) s += rel[i] * ws[i][j];
      if (s % grp.modulus(j) != 0) return false;
    }
  return true;
}

int free_span_rank(const Group& grp, const std::vector<GroupElem>& ws) {
  std::vector<std::vector<long>> rows;
  for (const auto& w : ws) rows.emplace_back(w.begin(), w.begin() + grp.free_rank());
  return rows.empty() || grp.free_rank() == 0 ? 0 : integer_rank(rows);
}

struct Witness {
  AlgebraElement z;
  GroupElem weight;
};

// x in the ball with x^d1 = mu1 and x^d2 = mu2.
std::optional<std::tuple<GroupElem, int, int>> common_support(const Group& grp, const GroupElem& m1,
                                                             const GroupElem& m2, int bound, int ebound) {
  // A support with d1 > 0 reads more naturally, so it wins over its inverse.
  std::optional<std::tuple<GroupElem, int, int>> fallback;
  for (const auto& x : grp.ball(bound)) {
    if (grp.is_identity(x)) continue;
    std::optional<int> d1, d2;
    for (int d = -ebound; d <= ebound && (!d1 || !d2); ++d) {
      GroupElem p = grp.pow(x, d);
      if (!d1 && p == m1) d1 = d;
      if (!d2 && p == m2) d2 = d;
    }
    if (!d1 || !d2) continue;
    if (*d1 > 0) return std::make_tuple(x, *d1, *d2);
    if (!fallback) fallback = std::make_tuple(x, *d1, *d2);
  }
  return fallback;
}

}  // namespace

std::optional<Scalar> commutation_scalar(const Algebra& alg, const AlgebraElement& y, const GroupElem& h) {
  AlgebraElement hh = alg.group_element(h);
  AlgebraElement a = modulo_c0(alg.multiply(y, hh));
  AlgebraElement b = modulo_c0(alg.multiply(hh, y));
  if (b.is_zero()) return a.is_zero() ? std::optional<Scalar>(Scalar(1)) : std::nullopt;
  if (a.is_zero() || !(a.lead() == b.lead())) return std::nullopt;
  Scalar lam = a.lead_coeff() / b.lead_coeff();
  if (!modulo_c0(a - b.scaled(lam)).is_zero()) return std::nullopt;
  return lam;
}

bool BoundReport::all_pass() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.passed; });
}

BoundReport bound_first(const Algebra& alg, const std::vector<AlgebraElement>& S, int d) {
  alg.require_confluent();
  BoundReport r;
  r.theorem = "independent-primitives";
  r.gk_c0 = alg.group().free_rank();
  r.notes.push_back("D is the coradical C0; independence is tested in normal forms of y-degree <= " +
                    std::to_string(d));

  std::vector<GroupElem> mu;
  Hypothesis prim{"elements of S are skew primitive", true, ""};
  for (const auto& y : S) {
    auto w = is_skew_primitive(alg, y);
    if (!w) {
      prim.passed = false;
      prim.witness = alg.str(y);
      break;
    }
    mu.push_back(*w);
  }
  r.hypotheses.push_back(prim);
  if (!prim.passed) return r;

  Hypothesis indep{"S is linearly independent modulo C0", rank_modulo_c0(S) == static_cast<int>(S.size()), ""};
  if (!indep.passed) indep.witness = "rank " + std::to_string(rank_modulo_c0(S)) + " < " + std::to_string(S.size());
  for (const auto& y : S)
    if (y.y_degree() > d) {
      indep.passed = false;
      indep.witness = "element above the degree bound";
    }
  r.hypotheses.push_back(indep);

  Hypothesis comm{"y_i mu(y_j) = lambda_ij mu(y_j) y_i modulo C0", true, ""};
  Hypothesis diag{"each lambda_ii is 1 or not a root of unity", true, ""};
  for (size_t i = 0; i < S.size() && comm.passed; ++i)
    for (size_t j = 0; j < S.size(); ++j) {
      auto lam = commutation_scalar(alg, S[i], mu[j]);
      if (!lam) {
        comm.passed = false;
        comm.witness = "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
        break;
      }
      if (i == j && !one_or_nonroot(*lam) && diag.passed) {
        diag.passed = false;
        diag.witness = "lambda_" + std::to_string(i + 1) + std::to_string(i + 1) + " = " + str(alg, *lam);
      }
    }
  if (!comm.passed) diag.witness = "not evaluated";
  r.hypotheses.push_back(comm);
  r.hypotheses.push_back(diag);
  r.inputs = {{"#S", static_cast<int>(S.size())}, {"rank", r.gk_c0}};
  if (r.all_pass()) r.value = r.gk_c0 + static_cast<int>(S.size());
  return r;
}

std::vector<AlgebraElement> greedy_first_set(const Algebra& alg, const InvariantReport& rep) {
  std::vector<AlgebraElement> S;
  for (const auto& wd : rep.weights)
    for (const auto& cls : wd.classes)
      for (const auto& z : cls.witnesses) {
        S.push_back(z);
        if (!bound_first(alg, S, rep.options.degree).all_pass()) S.pop_back();
      }
  return S;
}

SecondBounds bound_second(const Algebra& alg, const InvariantReport& rep) {
  const int rank = alg.group().free_rank();
  const int w_minus = static_cast<int>(rep.W.size() - rep.W_sqrt.size());
  const int o_minus = static_cast<int>(rep.Omega.size() - rep.Omega_sqrt.size());
  SecondBounds out;
  out.base.theorem = "weights";
  out.base.gk_c0 = rank;
  out.base.hypotheses.push_back(abelian("W minus W_sqrt"));
  out.base.inputs = {{"#W", static_cast<int>(rep.W.size())},
                     {"#W_sqrt", static_cast<int>(rep.W_sqrt.size())},
                     {"#(W minus W_sqrt)", w_minus},
                     {"rank", rank}};
  out.base.value = rank + w_minus;

  out.refined.theorem = "weight-commutators";
  out.refined.gk_c0 = rank;
  out.refined.hypotheses.push_back(abelian("W minus W_sqrt"));
  out.refined.hypotheses.push_back(Hypothesis{"refinement is at least the weight bound", o_minus >= w_minus,
                                              std::to_string(o_minus) + " vs " + std::to_string(w_minus)});
  out.refined.inputs = {{"#Omega", static_cast<int>(rep.Omega.size())},
                        {"#Omega_sqrt", static_cast<int>(rep.Omega_sqrt.size())},
                        {"#(Omega minus Omega_sqrt)", o_minus},
                        {"rank", rank}};
  if (out.refined.all_pass()) out.refined.value = rank + o_minus;
  return out;
}

ThirdBounds bound_third(const Algebra& alg, const InvariantReport& rep) {
  const int rank = alg.group().free_rank();
  const int w_minus = static_cast<int>(rep.W.size() - rep.W_sqrt.size());
  const bool agree = rep.quotient_dim == rep.dim_Y_star;
  Hypothesis iso{"dim Z/(C0+Y_sqrt) equals dim Y_*/(Y_* cap C0)", agree,
                 std::to_string(rep.quotient_dim) + " vs " + std::to_string(rep.dim_Y_star)};
  ThirdBounds out;
  out.quotient.theorem = "quotient";
  out.quotient.gk_c0 = rank;
  out.quotient.hypotheses = {abelian("W_times"), iso,
                             Hypothesis{"at least the weight bound", rep.quotient_dim >= w_minus,
                                        std::to_string(rep.quotient_dim) + " vs " + std::to_string(w_minus)}};
  out.quotient.inputs = {{"dim Z/(C0+Y_sqrt)", rep.quotient_dim}, {"dim Y_sqrt", rep.dim_Y_sqrt}, {"rank", rank}};
  if (out.quotient.all_pass()) out.quotient.value = rank + rep.quotient_dim;

  out.y_star.theorem = "y-star";
  out.y_star.gk_c0 = rank;
  out.y_star.hypotheses = {abelian("W_times"), iso};
  out.y_star.inputs = {{"dim Y_*/(Y_* cap C0)", rep.dim_Y_star}, {"rank", rank}};
  if (out.y_star.all_pass()) out.y_star.value = rank + rep.dim_Y_star;
  return out;
}

GrowthVerdict detect_exponential(const Algebra& alg, const InvariantReport& rep, DetectorOptions opts) {
  const Group& grp = alg.group();
  GrowthVerdict v;
  v.detector = "none";

  std::vector<Witness> ws;
  for (const auto& wd : rep.weights)
    for (const auto& cls : wd.classes)
      for (const auto& z : cls.witnesses) ws.push_back({z, wd.weight});

  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = i + 1; j < ws.size(); ++j) {
      PairEvidence e;
      e.first = alg.str(ws[i].z);
      e.second = alg.str(ws[j].z);
      auto sup = common_support(grp, ws[i].weight, ws[j].weight, rep.options.group_bound, opts.exponent_bound);
      if (!sup) {
        e.outcome = "skipped: no common cyclic support";
        v.pairs.push_back(e);
        continue;
      }
      auto [x, d1, d2] = *sup;
      e.x = grp.to_string(x);
      e.d1 = d1;
      e.d2 = d2;
      auto eigen = [&](const AlgebraElement& z) -> std::optional<Scalar> {
        AlgebraElement c = alg.conjugate(z, x);
        Scalar q = c.lead_coeff() / z.lead_coeff();
        if (!(c == z.scaled(q))) return std::nullopt;
        return q;
      };
      auto q1 = eigen(ws[i].z), q2 = eigen(ws[j].z);
      if (!q1 || !q2) {
        e.outcome = "skipped: witness is not an exact eigenvector of conjugation by x";
        v.pairs.push_back(e);
        continue;
      }
      e.q1 = str(alg, *q1);
      e.q2 = str(alg, *q2);
      auto u1 = as_unit_monomial(*q1), u2 = as_unit_monomial(*q2);
      if (!u1 || !u2) {
        e.outcome = "skipped: scalars are not unit monomials";
        v.pairs.push_back(e);
        continue;
      }
      const Order o1 = multiplicative_order(*q1), o2 = multiplicative_order(*q2);
      const bool pos = d1 * d2 > 0;
      auto b2 = [&](const UnitMonomial& a, int da, const Order& ob) { return a.pow(da).is_one() && !ob.finite(); };
      auto b3 = [&](const UnitMonomial& a, int da, const Order& oa, const Order& ob) {
        return !a.pow(da).is_one() && oa.finite() && !ob.finite();
      };
      std::string hit;
      if (pos && *u1 == *u2 && !o1.finite()) hit = "b1";
      else if (pos && (b2(*u1, d1, o2) || b2(*u2, d2, o1))) hit = "b2";
      else if (pos && (b3(*u1, d1, o1, o2) || b3(*u2, d2, o2, o1))) hit = "b3";
      else if (d1 * d2 != 0 && subgroup_rank(std::vector<UnitMonomial>{*u1, *u2}) == 2) hit = "b4";
      if (!hit.empty()) {
        e.outcome = hit;
        if (v.case_id.empty()) {
          v.classification = "exponential";
          v.detector = "pair-case";
          v.case_id = hit;
        }
        v.pairs.push_back(e);
        continue;
      }
      if (grp.order(x) != 0) {
        e.outcome = "skipped: x has finite order";
        v.pairs.push_back(e);
        continue;
      }
      for (int s = 2; s <= opts.m_max; ++s)
        for (int m1 = 0; m1 <= s; ++m1) {
          const long m2 = s - m1;
          const long e1 = static_cast<long>(d1) * m1 * (m1 - 1) + static_cast<long>(d2) * m1 * m2;
          const long e2 = static_cast<long>(d2) * m2 * (m2 - 1) + static_cast<long>(d1) * m1 * m2;
          if ((u1->pow(e1) * u2->pow(e2)).is_one()) e.solutions.emplace_back(m1, static_cast<int>(m2));
        }
      e.outcome = e.solutions.empty() ? "exhausted" : "relation";
      v.pairs.push_back(e);
    }

  // Commutator rank against weight rank.
  if (!rep.W.empty()) {
    const bool tf = torsion_free_span(grp, rep.W);
    const int rw = free_span_rank(grp, rep.W);
    try {
      const int rg = subgroup_rank(rep.Gamma);
      const std::string detail = "rank <Gamma> = " + std::to_string(rg) + ", rank <W> = " + std::to_string(rw) +
                                 (tf ? ", <W> torsion-free" : ", <W> has torsion");
      if (tf && rw == 1 && rg > rw) {
        if (v.classification != "exponential") {
          v.classification = "exponential";
          v.detector = "rank-of-commutators";
        }
        v.notes.push_back("commutator rank exceeds weight rank: " + detail);
      } else {
        v.notes.push_back("commutator rank test does not apply: " + detail);
      }
    } catch (const Error&) {
      v.notes.push_back("commutator rank test skipped: some commutator is not a unit monomial");
    }
  }
  if (v.classification != "exponential")
    v.notes.push_back("no detector fired; the product relation is necessary for non-freeness, not sufficient");
  return v;
}

}  // namespace hopfgrow
