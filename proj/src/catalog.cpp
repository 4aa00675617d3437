#include "hopfgrow/catalog.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "hopfgrow/error.hpp"

namespace hopfgrow {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t") - a + 1);
}

class ParamReader {
 public:
  ParamReader(std::string example, const Params& p, std::set<std::string> allowed)
      : example_(std::move(example)), p_(p) {
    for (const auto& [k, v] : p_)
      if (!allowed.count(k)) fail(ErrorKind::Usage, "example '" + example_ + "' has no parameter '" + k + "'");
  }

  bool has(const std::string& k) const { return p_.count(k) > 0; }
  std::string str(const std::string& k, const std::string& dflt) const {
    auto it = p_.find(k);
    return it == p_.end() ? dflt : it->second;
  }
  int integer(const std::string& k, int dflt, int lo, int hi) const {
    auto it = p_.find(k);
    if (it == p_.end()) return dflt;
    int v = 0;
    try {
      size_t used = 0;
      v = std::stoi(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(it->second);
    } catch (const std::exception&) {
      fail(ErrorKind::Usage, "parameter " + k + "='" + it->second + "' is not an integer");
    }
    if (v < lo || v > hi)
      fail(ErrorKind::Usage, "parameter " + k + "=" + std::to_string(v) + " is outside [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
    return v;
  }

 private:
  std::string example_;
  const Params& p_;
};

// One entry per generator, each with one value per group coordinate. Entries
// are separated by ';'. With a single group coordinate ',' also separates entries.
std::vector<std::vector<std::string>> per_generator(const std::string& s, int v, int coords, const std::string& what) {
  std::vector<std::string> entries;
  if (!trim(s).empty()) entries = split(s, ';');
  if (entries.size() == 1 && v > 1 && coords == 1) entries = split(s, ',');
  if (static_cast<int>(entries.size()) != v)
    fail(ErrorKind::Usage, what + " needs " + std::to_string(v) + " entries, got " + std::to_string(entries.size()));
  std::vector<std::vector<std::string>> out;
  for (const auto& e : entries) {
    std::vector<std::string> cs = split(e, ',');
    if (static_cast<int>(cs.size()) != coords)
      fail(ErrorKind::Usage, what + " entry '" + e + "' needs " + std::to_string(coords) + " values");
    for (auto& c : cs) c = trim(c);
    out.push_back(cs);
  }
  return out;
}

int max_q_index(const std::string& s) {
  static const std::regex re("\\bq([1-8])\\b");
  int m = 0;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it)
    m = std::max(m, std::stoi((*it)[1]));
  return m;
}

std::vector<std::string> q_names(int k) {
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i) out.push_back("q" + std::to_string(i));
  return out;
}

Group make_group(int rank, const std::vector<int>& torsion) {
  if (rank + torsion.size() == 1) return Group(rank, torsion, {rank == 1 ? "g" : "x"});
  return Group(rank, torsion);
}

// Shared by K and L: the free algebra on skew primitives over a f.g. abelian group.
Presentation build_k(const std::string& example, const Params& params, const std::set<std::string>& extra) {
  std::set<std::string> allowed{"v", "rank", "torsion", "N", "mu", "lambda", "tau"};
  allowed.insert(extra.begin(), extra.end());
  ParamReader r(example, params, allowed);
  const int v = r.integer("v", example == "L" ? 1 : 2, 0, 8);
  const int rank = r.integer("rank", 1, 0, 4);
  std::vector<int> torsion;
  if (r.has("torsion") && !trim(r.str("torsion", "")).empty())
    for (const auto& t : split(r.str("torsion", ""), ',')) {
      try {
        torsion.push_back(std::stoi(t));
      } catch (const std::exception&) {
        fail(ErrorKind::Usage, "torsion entry '" + t + "' is not an integer");
      }
    }
  Group grp = make_group(rank, torsion);
  const int coords = grp.num_generators();
  if (coords == 0 && v > 0) fail(ErrorKind::Usage, "the group needs at least one generator");

  // Defaults: every y has weight the first generator and an independent
  // transcendental character on free coordinates, trivial on torsion ones.
  auto joined = [&](auto f) {
    std::string s;
    for (int i = 0; i < v; ++i) {
      if (i) s += ";";
      for (int j = 0; j < coords; ++j) s += (j ? "," : "") + f(i, j);
    }
    return s;
  };
  std::string mu_s = r.str("mu", joined([](int, int j) { return std::string(j == 0 ? "1" : "0"); }));
  std::string lam_s =
      r.str("lambda", joined([&](int i, int j) { return grp.is_torsion_coord(j) ? std::string("1") : "q" + std::to_string(i + 1); }));
  std::string tau_s = r.str("tau", joined([](int, int) { return std::string("0"); }));
  if (example == "L") {
    auto override_first = [&](std::string& s, const std::string& key) {
      if (!r.has(key)) return;
      auto entries = split(s, ';');
      if (entries.size() == 1 && v > 1 && coords == 1) entries = split(s, ',');
      entries[0] = r.str(key, "");
      s.clear();
      for (size_t i = 0; i < entries.size(); ++i) s += (i ? ";" : "") + entries[i];
    };
    if (!r.has("lambda1") && !r.has("lambda") && v > 0) {
      auto entries = per_generator(lam_s, v, coords, "lambda");
      entries[0].assign(coords, "1");
      entries[0][0] = "-1";
      lam_s.clear();
      for (int i = 0; i < v; ++i) {
        if (i) lam_s += ";";
        for (int j = 0; j < coords; ++j) lam_s += (j ? "," : "") + entries[i][j];
      }
    }
    override_first(mu_s, "mu1");
    override_first(lam_s, "lambda1");
  }

  Presentation p;
  p.name = example;
  p.cyclotomic_order = r.integer("N", 1, 1, 1000);
  p.transcendentals = q_names(std::max(max_q_index(lam_s), max_q_index(tau_s)));
  p.group = grp;
  ParseContext ctx;
  ctx.cyclotomic_order = p.cyclotomic_order;
  ctx.transcendentals = p.transcendentals;
  ctx.group_names = grp.names();
  auto mus = per_generator(mu_s, v, coords, "mu");
  auto lams = per_generator(lam_s, v, coords, "lambda");
  auto taus = per_generator(tau_s, v, coords, "tau");
  for (int i = 0; i < v; ++i) {
    SkewGenerator y;
    y.name = "y" + std::to_string(i + 1);
    y.weight = grp.identity();
    for (int j = 0; j < coords; ++j) {
      try {
        y.weight[j] = std::stoi(mus[i][j]);
      } catch (const std::exception&) {
        fail(ErrorKind::Usage, "weight entry '" + mus[i][j] + "' is not an integer");
      }
      y.character.push_back(parse_scalar(lams[i][j], ctx));
      y.tau.push_back(parse_scalar(taus[i][j], ctx));
    }
    y.weight = grp.canonical(y.weight);
    p.gens.push_back(std::move(y));
  }
  return p;
}

Presentation make_k(const Params& params) {
  Presentation p = build_k("K", params, {});
  p.validate();
  return p;
}

Presentation make_l(const Params& params) {
  ParamReader r("L", params, {"v", "rank", "torsion", "N", "mu", "lambda", "tau", "p", "beta", "mu1", "lambda1"});
  if (r.integer("v", 1, 1, 8) < 1) fail(ErrorKind::Usage, "L needs at least one generator");
  Presentation p = build_k("L", params, {"p", "beta", "mu1", "lambda1"});
  const int pp = r.integer("p", 2, 2, 64);
  ParseContext ctx = ParseContext::of(p);
  Scalar beta = parse_scalar(r.str("beta", "1"), ctx);
  const GroupElem& mu = p.gens[0].weight;
  Order o = multiplicative_order(p.lambda(0, mu));
  if (!(o.finite() && o.value == pp))
    fail(ErrorKind::Usage, "L needs lambda_1(mu_1) to be a primitive " + std::to_string(pp) +
                               "-th root of unity so that y1^" + std::to_string(pp) + " is skew primitive");
  Relation rel;
  rel.lhs = YWord(pp, 0);
  if (!beta.is_zero()) {
    rel.rhs.add(NormalWord{p.group.pow(mu, pp), ""}, beta);
    rel.rhs.add(NormalWord{p.group.identity(), ""}, -beta);
  }
  p.relations.push_back(std::move(rel));
  p.validate();
  return p;
}

}  // namespace

Params parse_params(const std::vector<std::string>& kv) {
  Params out;
  for (const auto& s : kv) {
    size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0) fail(ErrorKind::Usage, "parameter '" + s + "' is not of the form key=value");
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

Presentation make_taft(int p, bool quotient) {
  if (p < 2) fail(ErrorKind::Usage, "taft needs p >= 2");
  Presentation pr;
  pr.name = "taft";
  pr.cyclotomic_order = p;
  pr.group = Group(0, {p}, {"g"});
  SkewGenerator y;
  y.name = "y";
  y.weight = pr.group.generator(0);
  y.character = {Scalar(CycloRational::root_of_unity(p, 1))};
  y.tau = {Scalar(0)};
  pr.gens.push_back(std::move(y));
  if (quotient) pr.relations.push_back(Relation{YWord(p, 0), AlgebraElement()});
  pr.validate();
  return pr;
}

Presentation make_qplane(int v) {
  if (v < 1 || v > 3) fail(ErrorKind::Usage, "qplane supports v = 1, 2, 3");
  Presentation pr;
  pr.name = "qplane";
  pr.transcendentals = {"q"};
  pr.group = Group(1, {}, {"g"});
  const Scalar q = Scalar::var(0);
  auto gen = [&](const std::string& name, int weight, const Scalar& lam) {
    SkewGenerator y;
    y.name = name;
    y.weight = pr.group.generator(0, weight);
    y.character = {lam};
    y.tau = {Scalar(0)};
    pr.gens.push_back(std::move(y));
  };
  // Compatibility with the coproduct forces lambda_1(mu_2) lambda_2(mu_1) = 1
  // for the commutation y2 y1 = lambda_2(mu_1) y1 y2, so the second character
  // is inverse to the first and a third direction must be primitive.
  gen("y1", 1, q);
  if (v >= 2) {
    gen("y2", 1, q.inverse());
    AlgebraElement rhs;
    rhs.add(NormalWord{pr.group.identity(), YWord{0, 1}}, q.inverse());
    pr.relations.push_back(Relation{YWord{1, 0}, rhs});
  }
  if (v >= 3) {
    gen("y3", 0, Scalar(1));
    for (char i : {0, 1}) {
      AlgebraElement rhs;
      rhs.add(NormalWord{pr.group.identity(), YWord{i, 2}}, Scalar(1));
      pr.relations.push_back(Relation{YWord{2, i}, rhs});
    }
  }
  pr.validate();
  return pr;
}

Presentation make_exterior(int s) {
  if (s < 1 || s > kMaxGenerators) fail(ErrorKind::Usage, "ex3_13 needs 1 <= s <= " + std::to_string(kMaxGenerators));
  Presentation pr;
  pr.name = "ex3_13";
  pr.cyclotomic_order = 2;
  pr.group = Group(0, {2}, {"x"});
  for (int i = 0; i < s; ++i) {
    SkewGenerator y;
    y.name = "y" + std::to_string(i + 1);
    y.weight = pr.group.generator(0);
    y.character = {Scalar(-1)};
    y.tau = {Scalar(0)};
    pr.gens.push_back(std::move(y));
  }
  for (int i = 0; i < s; ++i) {
    pr.relations.push_back(Relation{YWord(2, static_cast<char>(i)), AlgebraElement()});
    for (int j = i + 1; j < s; ++j) {
      AlgebraElement rhs;
      rhs.add(NormalWord{pr.group.identity(), YWord{static_cast<char>(i), static_cast<char>(j)}}, Scalar(-1));
      pr.relations.push_back(Relation{YWord{static_cast<char>(j), static_cast<char>(i)}, rhs});
    }
  }
  pr.validate();
  return pr;
}

std::vector<ExampleInfo> list_examples() {
  return {
      {"K",
       "free algebra on skew primitives y_i over a f.g. abelian group, y_i g = lambda_i(g) g y_i + tau_i(g) g (mu_i - 1)",
       {"v=2: number of skew primitives", "rank=1: free rank of the group", "torsion=: comma list of torsion orders",
        "N=1: cyclotomic order", "mu=1;1: weights, ';' between generators and ',' between group coordinates",
        "lambda=q1;q2: character values", "tau=0;0: additive character values"}},
      {"L",
       "K with the extra relation y1^p = beta (mu1^p - 1)",
       {"v=1", "p=2", "beta=1", "mu1=1: weight of y1", "lambda1=-1: character of y1",
        "rank, torsion, N, mu, lambda, tau: as for K"}},
      {"taft", "Taft algebra over Z/p: y g = zeta_p g y, y^p = 0", {"p=2", "quotient=1: 0 drops y^p = 0"}},
      {"qplane", "quantum plane over Z with generic q (a primitive third generator for v = 3)", {"v=2: 1, 2 or 3"}},
      {"ex3_13",
       "exterior-type algebra over Z/2 = <x>: y_i^2 = 0, y_i y_j + y_j y_i = 0, x y_i + y_i x = 0",
       {"s=2: number of skew primitives"}},
      {"ex2_7_stub",
       "metadata only; expected W = W_sqrt = {x^(m_i)} for the Hopf domain B(1,1,p_1,...,p_s,q)",
       {},
       false},
  };
}

Presentation make_example(const std::string& name, const Params& params) {
  if (name == "K") return make_k(params);
  if (name == "L") return make_l(params);
  if (name == "taft") {
    ParamReader r(name, params, {"p", "quotient"});
    return make_taft(r.integer("p", 2, 2, 64), r.integer("quotient", 1, 0, 1) == 1);
  }
  if (name == "qplane") {
    ParamReader r(name, params, {"v"});
    return make_qplane(r.integer("v", 2, 1, 3));
  }
  if (name == "ex3_13") {
    ParamReader r(name, params, {"s"});
    return make_exterior(r.integer("s", 2, 1, kMaxGenerators));
  }
  if (name == "ex2_7_stub")
    fail(ErrorKind::Usage,
         "ex2_7_stub carries expected invariants only; its defining relations are those of the "
         "GK-dimension two Hopf domain B(1,1,p_1,...,p_s,q) from the published classification of such "
         "domains, and must be supplied as a presentation file");
  fail(ErrorKind::Usage, "unknown example '" + name + "' (see list-examples)");
}

json expected_values(const std::string& name, const Params& params) {
  json e = json::object();
  if (name == "ex3_13") {
    ParamReader r(name, params, {"s"});
    int s = r.integer("s", 2, 1, kMaxGenerators);
    e["confluent"] = true;
    e["Omega"] = json::array({"(x, -1)"});
    e["Omega_sqrt"] = json::array({"(x, -1)"});
    e["W_minus_W_sqrt"] = 0;
    e["dim_Y_sqrt"] = s;
    e["quotient_dim"] = 0;
    e["bound_first"] = 0;
    e["bound_second"] = 0;
    e["bound_refined"] = 0;
    e["bound_third"] = 0;
    e["growth_class"] = "polynomial";
    e["growth_degree"] = 0;
    e["total_dim"] = 1L << (s + 1);
  } else if (name == "taft") {
    ParamReader r(name, params, {"p", "quotient"});
    int p = r.integer("p", 2, 2, 64);
    if (r.integer("quotient", 1, 0, 1) == 0) return e;
    e["confluent"] = true;
    e["W_minus_W_sqrt"] = 0;
    e["quotient_dim"] = 0;
    e["bound_second"] = 0;
    e["bound_third"] = 0;
    e["pbw_dependence_degree"] = p;
    e["growth_class"] = "polynomial";
    e["growth_degree"] = 0;
    e["total_dim"] = p * p;
  } else if (name == "qplane") {
    ParamReader r(name, params, {"v"});
    int v = r.integer("v", 2, 1, 3);
    e["confluent"] = true;
    e["bound_first"] = 1 + v;
    e["bound_third"] = 1 + v;
    e["pbw_dependence_degree"] = nullptr;
    e["growth_class"] = "polynomial";
    e["growth_degree"] = 1 + v;
  } else if (name == "K") {
    if (params.empty()) {
      e["confluent"] = true;
      e["detector"] = "exponential";
      e["detector_case"] = "b4";
      e["growth_class"] = "exponential";
    }
  } else if (name == "L") {
    Presentation p = make_example(name, params);
    ParamReader r(name, params, {"v", "rank", "torsion", "N", "mu", "lambda", "tau", "p", "beta", "mu1", "lambda1"});
    int pp = r.integer("p", 2, 2, 64);
    bool beta_zero = parse_scalar(r.str("beta", "1"), ParseContext::of(p)).is_zero();
    bool roots = true;
    for (const auto& c : p.gens[0].character) roots = roots && c.pow(pp).is_one();
    e["confluent"] = beta_zero || roots;
  } else if (name == "ex2_7_stub") {
    e["W_equals_W_sqrt"] = true;
    e["W"] = "{x^(m_i)}";
    e["W_sqrt"] = "{x^(m_i)}";
  } else {
    make_example(name, params);
  }
  return e;
}

}  // namespace hopfgrow
