#include "hopfgrow/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace hopfgrow {

namespace {

std::string order_string(const Order& o) {
  switch (o.kind) {
    case Order::Kind::Finite: return std::to_string(o.value);
    case Order::Kind::Infinite: return "infinite";
    case Order::Kind::NotUnitMonomial: return "not a unit monomial";
  }
  return "";
}

json opt_int(const std::optional<int>& x) { return x ? json(*x) : json(nullptr); }

std::string pair_string(const Presentation& p, const GroupElem& g, const Scalar& c) {
  return "(" + p.group.to_string(g) + ", " + p.scalar_string(c) + ")";
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string opt_string(const std::optional<int>& x) { return x ? std::to_string(*x) : "-"; }

}  // namespace

bool Pipeline::consistent() const {
  return std::all_of(consistency.begin(), consistency.end(), [](const Check& c) { return c.passed; });
}

Pipeline run_pipeline(const Algebra& alg, const PipelineOptions& opts) {
  alg.require_confluent();
  Pipeline r;
  r.options = opts;
  r.invariants = compute_invariants(alg, opts.invariants);
  r.options.invariants = r.invariants.options;
  const InvariantReport& rep = r.invariants;
  r.first = bound_first(alg, greedy_first_set(alg, rep), rep.options.degree);
  r.second = bound_second(alg, rep);
  r.third = bound_third(alg, rep);
  r.verdict = detect_exponential(alg, rep, opts.detector);
  r.pbw_generators = pbw_set(alg, rep);
  r.pbw = pbw_dependence_scan(alg, r.pbw_generators, opts.pbw_degree);
  if (opts.measure) r.growth = measure_growth(alg, opts.growth);

  std::vector<std::string> failed;
  for (const auto& c : rep.checks)
    if (!c.passed) failed.push_back(c.name);
  r.consistency.push_back({"invariant report checks", failed.empty(), failed.empty() ? "" : join(failed, "; ")});

  if (r.second.base.value && r.third.quotient.value)
    r.consistency.push_back({"quotient bound is at least the weight bound",
                             *r.third.quotient.value >= *r.second.base.value,
                             std::to_string(*r.third.quotient.value) + " vs " + std::to_string(*r.second.base.value)});
  r.consistency.push_back({"PBW dependence agrees with the root conclusions", r.pbw.consistent, r.pbw.relation});

  if (r.growth && !r.growth->truncated) {
    const GrowthReport& g = *r.growth;
    if (r.verdict.classification == "exponential") {
      r.consistency.push_back({"detector verdict is confirmed by the ratio test", ratio_flags_exponential(g.dims, g.options),
                               "case " + r.verdict.case_id});
      r.consistency.push_back({"detector verdict does not contradict the estimate",
                               g.estimate.classification != "polynomial", g.estimate.classification});
    }
    if (g.estimate.classification == "polynomial") {
      const int deg = *g.estimate.degree;
      std::vector<std::string> over;
      for (const BoundReport* b : {&r.first, &r.second.base, &r.second.refined, &r.third.quotient, &r.third.y_star})
        if (b->value && *b->value > deg) over.push_back(b->theorem + " = " + std::to_string(*b->value));
      r.consistency.push_back({"every emitted bound is at most the measured degree", over.empty(),
                               over.empty() ? "degree " + std::to_string(deg) : join(over) + " > " + std::to_string(deg)});
    }
  }
  return r;
}

json scalar_json(const Presentation& p, const Scalar& s) {
  return json{{"text", p.scalar_string(s)}, {"value", scalar_to_json(s, p.cyclotomic_order)}};
}

json invariants_to_json(const Presentation& p, const InvariantReport& r) {
  auto groups = [&](const std::vector<GroupElem>& gs) {
    json a = json::array();
    for (const auto& g : gs) a.push_back(group_to_json(p, g));
    return a;
  };
  auto scalars = [&](const std::vector<Scalar>& ss) {
    json a = json::array();
    for (const auto& s : ss) a.push_back(scalar_json(p, s));
    return a;
  };
  auto pairs = [&](const std::vector<std::pair<GroupElem, Scalar>>& ps) {
    json a = json::array();
    for (const auto& [g, c] : ps)
      a.push_back(json{{"text", pair_string(p, g, c)}, {"weight", group_to_json(p, g)}, {"gamma", scalar_json(p, c)}});
    return a;
  };
  auto elements = [&](const std::vector<AlgebraElement>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(element_to_json(p, x));
    return a;
  };

  json weights = json::array();
  for (const auto& wd : r.weights) {
    json classes = json::array();
    for (const auto& c : wd.classes)
      classes.push_back(json{{"gamma", scalar_json(p, c.gamma)},
                             {"order", order_string(c.order)},
                             {"level", opt_int(c.level)},
                             {"dim", c.dim},
                             {"witnesses", elements(c.witnesses)},
                             {"sqrt", c.sqrt()},
                             {"root_sqrt", c.root_sqrt},
                             {"direct_sqrt", c.direct_sqrt},
                             {"direct_power", c.direct_power},
                             {"power_truncated", c.power_truncated}});
    json chars = json::array();
    for (const auto& c : wd.characters)
      chars.push_back(json{{"character", scalars(c.character)},
                           {"gamma", scalar_json(p, c.gamma)},
                           {"dim", c.dim},
                           {"level", opt_int(c.level)}});
    weights.push_back(json{{"weight", group_to_json(p, wd.weight)},
                           {"dim_mod_c0", wd.dim_mod_c0},
                           {"includes_group_part", wd.includes_group_part},
                           {"classes", classes},
                           {"characters", chars}});
  }
  json notes = r.notes;
  return json{{"bounds",
               {{"degree", r.options.degree},
                {"group_bound", r.options.group_bound},
                {"power_bound", r.options.power_bound},
                {"level_bound", r.options.level_bound}}},
              {"weights", weights},
              {"W", groups(r.W)},
              {"W_sqrt", groups(r.W_sqrt)},
              {"W_times", groups(r.W_times)},
              {"Gamma", scalars(r.Gamma)},
              {"Gamma_sqrt", scalars(r.Gamma_sqrt)},
              {"Omega", pairs(r.Omega)},
              {"Omega_sqrt", pairs(r.Omega_sqrt)},
              {"dim_Z", r.dim_Z},
              {"dim_Y_sqrt", r.dim_Y_sqrt},
              {"dim_Y_star", r.dim_Y_star},
              {"quotient_dim", r.quotient_dim},
              {"checks", checks_to_json(r.checks)},
              {"notes", notes}};
}

json checks_to_json(const std::vector<Check>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}

json bound_to_json(const BoundReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses) hyps.push_back(json{{"name", h.name}, {"passed", h.passed}, {"witness", h.witness}});
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  json notes = r.notes;
  return json{{"theorem", r.theorem}, {"value", opt_int(r.value)}, {"gk_c0", r.gk_c0},
              {"hypotheses", hyps},   {"inputs", inputs},          {"notes", notes}};
}

json verdict_to_json(const GrowthVerdict& v) {
  json pairs = json::array();
  for (const auto& e : v.pairs) {
    json sols = json::array();
    for (const auto& [a, b] : e.solutions) sols.push_back(json::array({a, b}));
    pairs.push_back(json{{"first", e.first}, {"second", e.second}, {"x", e.x}, {"d1", e.d1}, {"d2", e.d2},
                         {"q1", e.q1}, {"q2", e.q2}, {"outcome", e.outcome}, {"solutions", sols}});
  }
  json notes = v.notes;
  return json{{"classification", v.classification},
              {"degree", opt_int(v.degree)},
              {"detector", v.detector},
              {"case", v.case_id.empty() ? json(nullptr) : json(v.case_id)},
              {"pairs", pairs},
              {"notes", notes}};
}

json growth_to_json(const GrowthReport& r) {
  const GrowthEstimate& e = r.estimate;
  json dims = r.dims;
  return json{{"generating_set", r.generating_set},
              {"dims", dims},
              {"truncated", r.truncated},
              {"estimate",
               {{"classification", e.classification},
                {"degree", opt_int(e.degree)},
                {"method", e.method},
                {"base", e.base},
                {"slope", e.slope},
                {"fit_residual", e.fit_residual},
                {"window", json::array({e.window_begin, e.window_end})}}},
              {"parameters",
               {{"n_max", r.options.n_max},
                {"max_words", r.options.max_words},
                {"delta", r.options.delta},
                {"window", r.options.window},
                {"residual", r.options.residual}}}};
}

json pbw_to_json(const Presentation& p, const std::vector<AlgebraElement>& S, const PbwScan& s) {
  json gens = json::array();
  for (const auto& z : S) gens.push_back(element_to_json(p, z));
  json concl = json::array();
  for (const auto& h : s.conclusions) concl.push_back(json{{"name", h.name}, {"passed", h.passed}, {"witness", h.witness}});
  json mono = s.monomial;
  return json{{"generators", gens},     {"degree_bound", s.degree_bound}, {"independent", s.independent},
              {"degree", opt_int(s.degree)}, {"monomial", mono},          {"relation", s.relation},
              {"conclusions", concl},   {"consistent", s.consistent}};
}

json pipeline_to_json(const Presentation& p, const Pipeline& r) {
  json out{{"invariants", invariants_to_json(p, r.invariants)},
           {"bounds",
            json::array({bound_to_json(r.first), bound_to_json(r.second.base), bound_to_json(r.second.refined),
                         bound_to_json(r.third.quotient), bound_to_json(r.third.y_star)})},
           {"detector", verdict_to_json(r.verdict)},
           {"pbw", pbw_to_json(p, r.pbw_generators, r.pbw)}};
  out["growth"] = r.growth ? growth_to_json(*r.growth) : json(nullptr);
  out["consistency"] = checks_to_json(r.consistency);
  return out;
}

json summary(const Algebra& alg, const Pipeline& r) {
  const Presentation& p = alg.pres();
  const InvariantReport& rep = r.invariants;
  auto pairs = [&](const std::vector<std::pair<GroupElem, Scalar>>& ps) {
    json a = json::array();
    for (const auto& [g, c] : ps) a.push_back(pair_string(p, g, c));
    return a;
  };
  json s;
  s["confluent"] = alg.confluence().confluent;
  s["Omega"] = pairs(rep.Omega);
  s["Omega_sqrt"] = pairs(rep.Omega_sqrt);
  s["W_minus_W_sqrt"] = static_cast<int>(rep.W.size() - rep.W_sqrt.size());
  s["dim_Y_sqrt"] = rep.dim_Y_sqrt;
  s["quotient_dim"] = rep.quotient_dim;
  s["bound_first"] = opt_int(r.first.value);
  s["bound_second"] = opt_int(r.second.base.value);
  s["bound_refined"] = opt_int(r.second.refined.value);
  s["bound_third"] = opt_int(r.third.quotient.value);
  s["detector"] = r.verdict.classification;
  s["detector_case"] = r.verdict.case_id.empty() ? json(nullptr) : json(r.verdict.case_id);
  s["pbw_dependence_degree"] = opt_int(r.pbw.degree);
  if (r.growth) {
    const GrowthEstimate& e = r.growth->estimate;
    s["growth_class"] = e.classification;
    s["growth_degree"] = opt_int(e.degree);
    s["total_dim"] = e.degree == std::optional<int>(0) ? json(r.growth->dims.back()) : json(nullptr);
  }
  s["consistent"] = r.consistent();
  return s;
}

std::vector<Mismatch> compare_expected(const json& expected, const json& sum) {
  std::vector<Mismatch> out;
  for (auto it = expected.begin(); it != expected.end(); ++it) {
    const json actual = sum.contains(it.key()) ? sum.at(it.key()) : json("<not computed>");
    if (actual != it.value()) out.push_back({it.key(), it.value(), actual});
  }
  return out;
}

std::string invariants_text(const Presentation& p, const InvariantReport& r) {
  std::ostringstream os;
  auto groups = [&](const std::vector<GroupElem>& gs) {
    std::vector<std::string> xs;
    for (const auto& g : gs) xs.push_back(p.group.to_string(g));
    return "{" + join(xs) + "}";
  };
  auto pairs = [&](const std::vector<std::pair<GroupElem, Scalar>>& ps) {
    std::vector<std::string> xs;
    for (const auto& [g, c] : ps) xs.push_back(pair_string(p, g, c));
    return "{" + join(xs) + "}";
  };
  auto scalars = [&](const std::vector<Scalar>& ss) {
    std::vector<std::string> xs;
    for (const auto& s : ss) xs.push_back(p.scalar_string(s));
    return "{" + join(xs) + "}";
  };
  os << "truncation: degree " << r.options.degree << ", group length " << r.options.group_bound << ", power "
     << r.options.power_bound << ", level " << r.options.level_bound << "\n";
  os << std::left << std::setw(14) << "weight" << std::setw(16) << "gamma" << std::setw(12) << "order" << std::setw(7)
     << "level" << std::setw(5) << "dim" << std::setw(7) << "sqrt" << "witnesses\n";
  for (const auto& wd : r.weights)
    for (const auto& c : wd.classes) {
      std::vector<std::string> ws;
      for (const auto& z : c.witnesses) ws.push_back(p.element_string(z));
      os << std::setw(14) << p.group.to_string(wd.weight) << std::setw(16) << p.scalar_string(c.gamma) << std::setw(12)
         << order_string(c.order) << std::setw(7) << opt_string(c.level) << std::setw(5) << c.dim << std::setw(7)
         << (c.sqrt() ? "yes" : "no") << join(ws, "; ") << "\n";
    }
  os << "W = " << groups(r.W) << "\nW_sqrt = " << groups(r.W_sqrt) << "\nW_times = " << groups(r.W_times) << "\n";
  os << "Gamma = " << scalars(r.Gamma) << "\nGamma_sqrt = " << scalars(r.Gamma_sqrt) << "\n";
  os << "Omega = " << pairs(r.Omega) << "\nOmega_sqrt = " << pairs(r.Omega_sqrt) << "\n";
  os << "dim Z/C0 = " << r.dim_Z << ", dim Y_sqrt = " << r.dim_Y_sqrt << ", dim Y_* = " << r.dim_Y_star
     << ", dim Z/(C0+Y_sqrt) = " << r.quotient_dim << "\n";
  for (const auto& c : r.checks)
    os << (c.passed ? "  ok    " : "  FAIL  ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string bound_text(const BoundReport& r) {
  std::ostringstream os;
  os << r.theorem << ": " << (r.value ? std::to_string(*r.value) : "no bound") << "\n";
  for (const auto& h : r.hypotheses)
    os << (h.passed ? "  ok    " : "  FAIL  ") << h.name << (h.witness.empty() ? "" : " [" + h.witness + "]") << "\n";
  std::vector<std::string> in;
  for (const auto& [k, v] : r.inputs) in.push_back(k + " = " + std::to_string(v));
  if (!in.empty()) os << "  inputs: " << join(in) << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string verdict_text(const GrowthVerdict& v) {
  std::ostringstream os;
  os << "detector: " << v.classification;
  if (v.detector != "none") os << " by " << v.detector << (v.case_id.empty() ? "" : " (" + v.case_id + ")");
  os << "\n";
  for (const auto& e : v.pairs) {
    os << "  pair " << e.first << " | " << e.second << ": ";
    if (!e.x.empty()) os << "x = " << e.x << ", d = (" << e.d1 << ", " << e.d2 << ")";
    if (!e.q1.empty()) os << ", q = (" << e.q1 << ", " << e.q2 << ")";
    os << " -> " << e.outcome;
    if (!e.solutions.empty()) {
      std::vector<std::string> ss;
      for (const auto& [a, b] : e.solutions) ss.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
      os << " " << join(ss, " ");
    }
    os << "\n";
  }
  for (const auto& n : v.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string growth_text(const GrowthReport& r) {
  std::ostringstream os;
  os << "generating set: " << r.generating_set << "\n" << growth_table(r);
  if (r.truncated) os << "truncated at " << r.options.max_words << " words\n";
  const GrowthEstimate& e = r.estimate;
  os << "estimate: " << e.classification;
  if (e.degree) os << " of degree " << *e.degree;
  if (e.classification == "exponential") os << ", base ~ " << std::setprecision(4) << e.base;
  os << " (" << e.method << ", window " << e.window_begin << ".." << e.window_end << ", log-log slope "
     << std::setprecision(4) << e.slope << ")\n";
  return os.str();
}

std::string pbw_text(const Presentation& p, const PbwScan& s) {
  (void)p;
  std::ostringstream os;
  if (s.independent) {
    os << "PBW monomials independent over C0 through degree " << s.degree_bound << "\n";
    return os.str();
  }
  os << "PBW dependence at degree " << *s.degree << ": " << s.relation << "\n";
  for (const auto& h : s.conclusions)
    os << (h.passed ? "  ok    " : "  FAIL  ") << h.name << (h.witness.empty() ? "" : " [" + h.witness + "]") << "\n";
  return os.str();
}

std::string pipeline_text(const Algebra& alg, const Pipeline& r) {
  const Presentation& p = alg.pres();
  std::ostringstream os;
  os << "== invariants\n" << invariants_text(p, r.invariants);
  os << "== bounds\n";
  for (const BoundReport* b : {&r.first, &r.second.base, &r.second.refined, &r.third.quotient, &r.third.y_star})
    os << bound_text(*b);
  os << "== exponential growth\n" << verdict_text(r.verdict);
  os << "== PBW scan over {";
  std::vector<std::string> gs;
  for (const auto& z : r.pbw_generators) gs.push_back(alg.str(z));
  os << join(gs) << "}\n" << pbw_text(p, r.pbw);
  if (r.growth) os << "== growth\n" << growth_text(*r.growth);
  os << "== consistency\n";
  for (const auto& c : r.consistency)
    os << (c.passed ? "  ok    " : "  FAIL  ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  return os.str();
}

}  // namespace hopfgrow
