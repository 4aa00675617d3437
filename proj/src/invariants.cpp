#include "hopfgrow/invariants.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

#include "hopfgrow/error.hpp"

namespace hopfgrow {

namespace {

constexpr size_t kSaturationLimit = 64;

Matrix minus_scalar(Matrix m, const Scalar& c) {
  for (size_t i = 0; i < m.size(); ++i) m[i][i] -= c;
  return m;
}

Matrix mat_pow(const Matrix& m, int e) {
  Matrix r = identity_matrix(m.size());
  for (int k = 0; k < e; ++k) r = mat_mul(r, m);
  return r;
}

Vec apply(const Matrix& m, const Vec& v) {
  Vec out(m.size(), Scalar(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
  return out;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

AlgebraElement combine(const std::vector<AlgebraElement>& basis, const Vec& v) {
  AlgebraElement out;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.add(basis[i], v[i]);
  return out;
}

AlgebraElement monic(const AlgebraElement& x) { return x.is_zero() ? x : x.scaled(x.lead_coeff().inverse()); }

AlgebraElement g_minus_one(const Algebra& alg, const GroupElem& g) {
  AlgebraElement x = alg.group_element(g);
  x.add(NormalWord{alg.group().identity(), ""}, Scalar(-1));
  return x;
}

std::vector<GroupElem> generators(const Group& grp) {
  std::vector<GroupElem> out;
  for (int j = 0; j < grp.num_generators(); ++j) out.push_back(grp.generator(j));
  return out;
}

Scalar character_at(const Group& grp, const std::vector<Scalar>& chi, const GroupElem& g) {
  Scalar out(1);
  for (int j = 0; j < grp.num_generators(); ++j) {
    if (g[j] > 0) out *= chi[j].pow(g[j]);
    if (g[j] < 0) out *= chi[j].inverse().pow(-g[j]);
  }
  return out;
}

// Adds conjugates by each h in `by` until the span is stable. Every added
// vector must again be skew primitive of weight g.
std::vector<AlgebraElement> saturate(const Algebra& alg, const GroupElem& g, std::vector<AlgebraElement> basis,
                                     const std::vector<GroupElem>& by) {
  SpanBasis span;
  std::vector<AlgebraElement> queue;
  for (auto& b : basis)
    if (span.add(b)) queue.push_back(b);
  size_t added = 0;
  for (size_t k = 0; k < queue.size(); ++k) {
    for (const auto& h : by) {
      AlgebraElement c = alg.conjugate(queue[k], h);
      if (span.contains(c)) continue;
      auto w = is_skew_primitive(alg, c);
      if (!w || *w != g)
        fail(ErrorKind::Consistency, "a conjugate of a skew primitive of weight " + alg.group().to_string(g) +
                                         " is not skew primitive of the same weight");
      if (++added > kSaturationLimit)
        fail(ErrorKind::Resource, "saturation under conjugation did not close; reached dimension " +
                                      std::to_string(span.dim()));
      span.add(c);
      queue.push_back(std::move(c));
    }
  }
  return span.echelon();
}

// Matrix of a -> h^-1 a h in the given basis; columns are images.
Matrix matrix_of(const Algebra& alg, const SpanBasis& span, const GroupElem& h) {
  const auto& basis = span.basis();
  const size_t n = basis.size();
  Matrix m(n, Vec(n, Scalar(0)));
  for (size_t c = 0; c < n; ++c) {
    auto coords = span.coordinates(alg.conjugate(basis[c], h));
    if (!coords) fail(ErrorKind::Consistency, "space is not closed under conjugation");
    for (size_t r = 0; r < n; ++r) m[r][c] = (*coords)[r];
  }
  return m;
}

void require_triangular(const Matrix& m) {
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < r; ++c)
      if (!m[r][c].is_zero())
        fail(ErrorKind::Hypothesis,
             "eigenvalues not computable in scalar domain: conjugation matrix is not triangular on the echelon basis");
}

// Tests whether v lies on the line through e0 (or is zero when there is no e0).
bool on_line(const Vec& v, const std::optional<Vec>& e0) {
  if (!e0) return is_zero_vec(v);
  size_t k = 0;
  while ((*e0)[k].is_zero()) ++k;
  Scalar t = v[k] / (*e0)[k];
  for (size_t i = 0; i < v.size(); ++i)
    if (!(v[i] - t * (*e0)[i]).is_zero()) return false;
  return true;
}

// Smallest n with every product of n operators from `ops` sending `start`
// onto the line of e0.
std::optional<int> uniform_level(const std::vector<Matrix>& ops, std::vector<Vec> start, const std::optional<Vec>& e0,
                                 int bound) {
  for (int n = 0; n <= bound; ++n) {
    std::vector<Vec> live;
    for (auto& v : start)
      if (!on_line(v, e0)) live.push_back(std::move(v));
    if (live.empty()) return n;
    std::vector<Vec> next;
    Matrix rows;
    for (const auto& op : ops)
      for (const auto& v : live) {
        Vec w = apply(op, v);
        rows.push_back(w);
        if (matrix_rank(rows, w.size()) < rows.size()) {
          rows.pop_back();
          continue;
        }
        next.push_back(std::move(w));
      }
    start = std::move(next);
  }
  return std::nullopt;
}

struct Decomposed {
  SpanBasis span;
  std::vector<Matrix> gen_mats;  // T_{h_j^-1}
  Matrix weight_mat;             // T_{g^-1}
  std::optional<Vec> e0;
};

Decomposed setup(const Algebra& alg, const GroupElem& g, const std::vector<AlgebraElement>& basis, bool with_group) {
  Decomposed d{SpanBasis(basis), {}, {}, std::nullopt};
  for (const auto& h : generators(alg.group())) {
    d.gen_mats.push_back(matrix_of(alg, d.span, h));
    require_triangular(d.gen_mats.back());
  }
  d.weight_mat = matrix_of(alg, d.span, g);
  require_triangular(d.weight_mat);
  if (with_group) d.e0 = d.span.coordinates(g_minus_one(alg, g));
  return d;
}

void power_test(const Algebra& alg, WeightCommutator& cls, int n_pow, size_t limit, size_t coproduct_limit) {
  for (const auto& z : cls.witnesses) {
    AlgebraElement p = z;
    for (int n = 2; n <= n_pow; ++n) {
      p = alg.multiply(p, z);
      const int deg = std::min(p.y_degree(), 40);
      if (p.size() > limit || (p.size() << deg) > coproduct_limit) {
        cls.power_truncated = true;
        break;
      }
      if (p.is_zero() || is_skew_primitive(alg, p)) {
        cls.direct_sqrt = true;
        cls.direct_power = n;
        return;
      }
    }
  }
}

WeightData analyze_weight(const Algebra& alg, const GroupElem& g, std::vector<AlgebraElement> basis, bool with_group,
                          const InvariantOptions& opts, bool run_power_tests) {
  const Group& grp = alg.group();
  WeightData wd;
  wd.weight = g;
  wd.includes_group_part = with_group;
  wd.basis = saturate(alg, g, std::move(basis), generators(grp));
  wd.dim_mod_c0 = rank_modulo_c0(wd.basis);
  if (wd.dim_mod_c0 == 0) return wd;
  Decomposed d = setup(alg, g, wd.basis, with_group);
  const size_t n = wd.basis.size();
  const Matrix& T = d.weight_mat;

  std::vector<Scalar> eig;
  for (size_t i = 0; i < n; ++i)
    if (std::find(eig.begin(), eig.end(), T[i][i]) == eig.end()) eig.push_back(T[i][i]);
  for (const auto& c : eig) {
    int mult = 0;
    for (size_t i = 0; i < n; ++i) mult += T[i][i] == c;
    Matrix N = minus_scalar(T, c);
    std::vector<Vec> gen = kernel_basis(mat_pow(N, mult), n);
    if (static_cast<int>(gen.size()) != mult)
      fail(ErrorKind::Consistency, "generalized eigenspace dimension differs from the multiplicity");
    WeightCommutator cls;
    cls.weight = g;
    cls.gamma = c;
    cls.order = multiplicative_order(c);
    for (const auto& v : gen) cls.span.push_back(combine(wd.basis, v));
    cls.dim = rank_modulo_c0(cls.span);
    if (cls.dim == 0) continue;
    cls.level = uniform_level({N}, gen, d.e0, opts.level_bound);

    std::vector<Vec> lvl1;
    if (d.e0 && c.is_one()) {
      Matrix aug = N;
      for (size_t r = 0; r < n; ++r) aug[r].push_back((*d.e0)[r]);
      for (auto& v : kernel_basis(aug, n + 1)) {
        v.pop_back();
        lvl1.push_back(std::move(v));
      }
    } else {
      lvl1 = kernel_basis(N, n);
    }
    SpanBasis mod;
    for (const auto& v : lvl1) {
      AlgebraElement z = combine(wd.basis, v);
      if (mod.add(modulo_c0(z))) cls.witnesses.push_back(monic(z));
    }
    cls.root_sqrt = cls.order.nontrivial_root() && cls.order.value <= opts.power_bound;
    if (run_power_tests) power_test(alg, cls, opts.power_bound, opts.power_term_limit, opts.power_coproduct_limit);
    wd.classes.push_back(std::move(cls));
  }

  // Joint characters over all generators.
  std::vector<std::vector<Scalar>> chars;
  for (size_t i = 0; i < n; ++i) {
    std::vector<Scalar> chi;
    for (const auto& m : d.gen_mats) chi.push_back(m[i][i]);
    if (std::find(chars.begin(), chars.end(), chi) == chars.end()) chars.push_back(chi);
  }
  for (const auto& chi : chars) {
    int mult = 0;
    for (size_t i = 0; i < n; ++i) {
      bool same = true;
      for (size_t j = 0; j < d.gen_mats.size(); ++j) same = same && d.gen_mats[j][i][i] == chi[j];
      mult += same;
    }
    Matrix stacked;
    std::vector<Matrix> ops;
    for (size_t j = 0; j < d.gen_mats.size(); ++j) {
      ops.push_back(minus_scalar(d.gen_mats[j], chi[j]));
      for (auto& row : mat_pow(ops.back(), mult)) stacked.push_back(std::move(row));
    }
    std::vector<Vec> gen = stacked.empty() ? kernel_basis(Matrix(1, Vec(n, Scalar(0))), n) : kernel_basis(stacked, n);
    if (static_cast<int>(gen.size()) != mult)
      fail(ErrorKind::Consistency, "joint generalized eigenspace dimension differs from the multiplicity");
    GeneralizedClass gc;
    gc.weight = g;
    gc.character = chi;
    gc.gamma = character_at(grp, chi, g);
    for (const auto& v : gen) gc.span.push_back(combine(wd.basis, v));
    gc.dim = rank_modulo_c0(gc.span);
    if (gc.dim == 0) continue;
    gc.level = uniform_level(ops, gen, d.e0, opts.level_bound);
    wd.characters.push_back(std::move(gc));
  }
  return wd;
}

std::string scalar_key(const Algebra& alg, const Scalar& s) { return alg.pres().scalar_string(s); }

void sort_scalars(const Algebra& alg, std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end(), [&](const Scalar& a, const Scalar& b) { return scalar_key(alg, a) < scalar_key(alg, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check(InvariantReport& r, std::string name, bool ok, std::string detail = "") {
  r.checks.push_back(Check{std::move(name), ok, std::move(detail)});
}

template <class T, class Eq>
bool subset(const std::vector<T>& a, const std::vector<T>& b, Eq eq) {
  return std::all_of(a.begin(), a.end(), [&](const T& x) {
    return std::any_of(b.begin(), b.end(), [&](const T& y) { return eq(x, y); });
  });
}

// Diagnostic: positive N, M with g1^N g2^M = 1.
std::optional<std::pair<int, int>> power_relation(const Scalar& a, const Scalar& b, int limit) {
  auto ua = as_unit_monomial(a), ub = as_unit_monomial(b);
  if (!ua || !ub) return std::nullopt;
  for (int s = 2; s <= limit; ++s)
    for (int N = 1; N < s; ++N)
      if ((ua->pow(N) * ub->pow(s - N)).is_one()) return std::make_pair(N, s - N);
  return std::nullopt;
}

}  // namespace

int default_power_bound(const Presentation& p) {
  return std::max(12, std::lcm(2, std::max(1, p.cyclotomic_order)));
}

AlgebraElement modulo_c0(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [w, c] : x.terms())
    if (!w.w.empty()) out.add(w, c);
  return out;
}

int rank_modulo_c0(const std::vector<AlgebraElement>& xs) {
  SpanBasis s;
  for (const auto& x : xs) s.add(modulo_c0(x));
  return static_cast<int>(s.dim());
}

bool InvariantReport::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const WeightCommutator* InvariantReport::find_class(const GroupElem& g, const Scalar& c) const {
  for (const auto& wd : weights)
    if (wd.weight == g)
      for (const auto& cls : wd.classes)
        if (cls.gamma == c) return &cls;
  return nullptr;
}

Matrix conjugation_matrix(const Algebra& alg, const GroupElem& g, SkewPrimitiveSpace& V) {
  V.basis = saturate(alg, V.weight, V.basis, {g});
  return matrix_of(alg, SpanBasis(V.basis), g);
}

namespace {

struct Prepared {
  GroupElem g;
  WeightData wd;
};

Prepared prepare(const Algebra& alg, const AlgebraElement& y, const InvariantOptions& opts) {
  alg.require_confluent();
  if (modulo_c0(y).is_zero()) fail(ErrorKind::Usage, "element lies in C0");
  auto w = is_skew_primitive(alg, y);
  if (!w) fail(ErrorKind::Usage, "element is not skew primitive");
  const Group& grp = alg.group();
  int gb = opts.group_bound;
  for (const auto& [t, c] : y.terms()) gb = std::max(gb, grp.length(t.g));
  SkewPrimitiveSpace sp = find_skew_primitives(alg, *w, std::max(opts.degree, y.y_degree()), gb);
  if (!SpanBasis(sp.basis).contains(y))
    fail(ErrorKind::Consistency, "skew primitive not found by the solver within its own bounds");
  return Prepared{*w, analyze_weight(alg, *w, sp.basis, sp.includes_group_part, opts, false)};
}

// Coordinates of y in the union of the given spans (plus g - 1), split per span.
std::vector<AlgebraElement> split(const Algebra& alg, const GroupElem& g, const AlgebraElement& y,
                                  const std::vector<std::vector<AlgebraElement>>& spans) {
  SpanBasis all;
  std::vector<size_t> owner;
  for (size_t k = 0; k < spans.size(); ++k)
    for (const auto& v : spans[k])
      if (all.add(v)) owner.push_back(k);
  if (!alg.group().is_identity(g) && all.add(g_minus_one(alg, g))) owner.push_back(spans.size());
  auto coords = all.coordinates(y);
  if (!coords) fail(ErrorKind::Consistency, "element is not in the sum of its eigenspaces");
  std::vector<AlgebraElement> parts(spans.size());
  for (size_t i = 0; i < coords->size(); ++i)
    if (owner[i] < spans.size() && !(*coords)[i].is_zero()) parts[owner[i]].add(all.basis()[i], (*coords)[i]);
  return parts;
}

}  // namespace

LevelResult commutator_level(const Algebra& alg, const AlgebraElement& y, int n_max, const InvariantOptions& opts) {
  Prepared pr = prepare(alg, y, opts);
  std::vector<std::vector<AlgebraElement>> spans;
  for (const auto& cls : pr.wd.classes) spans.push_back(cls.span);
  auto parts = split(alg, pr.g, y, spans);
  LevelResult out;
  for (size_t k = 0; k < parts.size(); ++k)
    if (!modulo_c0(parts[k]).is_zero()) out.decomposition.emplace_back(pr.wd.classes[k].gamma, parts[k]);
  if (out.decomposition.size() != 1) return out;
  const Scalar c = out.decomposition[0].first;
  AlgebraElement cur = y;
  for (int n = 1; n <= n_max; ++n) {
    cur = alg.conjugate(cur, pr.g) - cur.scaled(c);
    if (modulo_c0(cur).is_zero()) {
      WeightCommutator wc;
      wc.weight = pr.g;
      wc.gamma = c;
      wc.order = multiplicative_order(c);
      wc.level = n;
      wc.dim = 1;
      wc.witnesses = {y};
      wc.span = {y};
      out.commutator = wc;
      return out;
    }
  }
  return out;
}

GeneralizedResult generalized_commutator(const Algebra& alg, const AlgebraElement& y, int n_max,
                                         const InvariantOptions& opts) {
  Prepared pr = prepare(alg, y, opts);
  const Group& grp = alg.group();
  std::vector<std::vector<AlgebraElement>> spans;
  for (const auto& gc : pr.wd.characters) spans.push_back(gc.span);
  auto parts = split(alg, pr.g, y, spans);
  GeneralizedResult out;
  for (size_t k = 0; k < parts.size(); ++k)
    if (!modulo_c0(parts[k]).is_zero()) out.decomposition.emplace_back(pr.wd.characters[k].character, parts[k]);
  if (out.decomposition.size() != 1) return out;
  const auto& chi = out.decomposition[0].first;
  const auto gens = generators(grp);
  std::vector<AlgebraElement> live{y};
  for (int n = 1; n <= n_max; ++n) {
    SpanBasis next;
    std::vector<AlgebraElement> imgs;
    for (const auto& v : live)
      for (size_t j = 0; j < gens.size(); ++j) {
        AlgebraElement w = alg.conjugate(v, gens[j]) - v.scaled(chi[j]);
        if (!modulo_c0(w).is_zero() && next.add(w)) imgs.push_back(std::move(w));
      }
    if (imgs.empty()) {
      GeneralizedClass gc;
      gc.weight = pr.g;
      gc.character = chi;
      gc.gamma = character_at(grp, chi, pr.g);
      gc.dim = 1;
      gc.level = n;
      gc.span = {y};
      out.character = gc;
      return out;
    }
    live = std::move(imgs);
  }
  return out;
}

InvariantReport compute_invariants(const Algebra& alg, InvariantOptions opts) {
  alg.require_confluent();
  require_hopf_ideal(alg);
  if (opts.degree < 0 || opts.group_bound < 0 || opts.level_bound < 1 || opts.power_bound < 0)
    fail(ErrorKind::Usage, "invariant bounds must be nonnegative");
  if (opts.power_bound == 0) opts.power_bound = default_power_bound(alg.pres());
  const Group& grp = alg.group();
  InvariantReport rep;
  rep.options = opts;

  // Candidate weights: weights of irreducible words. The top-degree part of a
  // skew primitive of weight g has weight g, so nothing else can occur.
  std::vector<GroupElem> cands;
  for (const auto& w : alg.irreducible_words(opts.degree))
    if (!w.empty()) cands.push_back(grp.canonical(alg.pres().weight_of(w)));
  std::sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) { return grp.less(a, b); });
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  auto job = [&alg, opts](GroupElem g) {
    SkewPrimitiveSpace sp = find_skew_primitives(alg, g, opts.degree, opts.group_bound);
    return analyze_weight(alg, g, sp.basis, sp.includes_group_part, opts, true);
  };
  std::vector<std::future<WeightData>> futs;
  for (const auto& g : cands)
    futs.push_back(std::async(opts.parallel ? std::launch::async : std::launch::deferred, job, g));
  for (auto& f : futs) {
    WeightData wd = f.get();
    if (wd.dim_mod_c0 > 0) rep.weights.push_back(std::move(wd));
  }

  std::vector<AlgebraElement> z_all, y_sqrt, y_star, lvl1_all;
  size_t lvl1_count = 0;
  bool agree = true, infinite_ok = true, dims_ok = true;
  std::ostringstream agree_detail, infinite_detail, dims_detail;
  for (const auto& wd : rep.weights) {
    rep.W.push_back(wd.weight);
    z_all.insert(z_all.end(), wd.basis.begin(), wd.basis.end());
    bool in_sqrt = false, in_times = false;
    int class_dims = 0, char_dims = 0;
    std::vector<Scalar> nonroots;
    for (const auto& cls : wd.classes) {
      class_dims += cls.dim;
      rep.Omega.emplace_back(wd.weight, cls.gamma);
      rep.Gamma.push_back(cls.gamma);
      if (cls.sqrt()) {
        in_sqrt = true;
        rep.Omega_sqrt.emplace_back(wd.weight, cls.gamma);
        rep.Gamma_sqrt.push_back(cls.gamma);
        y_sqrt.insert(y_sqrt.end(), cls.span.begin(), cls.span.end());
      } else {
        y_star.insert(y_star.end(), cls.span.begin(), cls.span.end());
      }
      const bool one_or_nonroot = !cls.order.finite() || cls.order.value == 1;
      if (one_or_nonroot) in_times = true;
      if (!cls.order.finite()) nonroots.push_back(cls.gamma);
      if (cls.direct_sqrt != cls.root_sqrt && !(cls.power_truncated && !cls.direct_sqrt)) {
        agree = false;
        agree_detail << "(" << grp.to_string(wd.weight) << ", " << scalar_key(alg, cls.gamma) << ") ";
      }
      if (cls.power_truncated && !cls.direct_sqrt)
        rep.notes.push_back("power test truncated by the term or coproduct limit for (" +
                            grp.to_string(wd.weight) + ", " + scalar_key(alg, cls.gamma) + ")");
      if (!cls.order.finite() && grp.order(wd.weight) != 0) {
        infinite_ok = false;
        infinite_detail << grp.to_string(wd.weight) << " ";
      }
      lvl1_all.insert(lvl1_all.end(), cls.witnesses.begin(), cls.witnesses.end());
      lvl1_count += cls.witnesses.size();
    }
    for (const auto& gc : wd.characters) char_dims += gc.dim;
    if (class_dims != wd.dim_mod_c0 || char_dims != wd.dim_mod_c0) {
      dims_ok = false;
      dims_detail << grp.to_string(wd.weight) << " ";
    }
    if (in_sqrt) rep.W_sqrt.push_back(wd.weight);
    if (in_times) rep.W_times.push_back(wd.weight);
    for (size_t a = 0; a < nonroots.size(); ++a)
      for (size_t b = a + 1; b < nonroots.size(); ++b) {
        const int lim = 2 * opts.degree * opts.degree;
        auto rel = power_relation(nonroots[a], nonroots[b], lim);
        std::string pair = "(" + scalar_key(alg, nonroots[a]) + ", " + scalar_key(alg, nonroots[b]) + ") at " +
                           grp.to_string(wd.weight);
        if (rel)
          rep.notes.push_back("non-root commutators " + pair + " satisfy g1^" + std::to_string(rel->first) + " g2^" +
                              std::to_string(rel->second) + " = 1");
        else
          rep.notes.push_back("non-root commutators " + pair + " have no relation g1^N g2^M = 1 with N + M <= " +
                              std::to_string(lim) + ": free subalgebra expected");
      }
  }
  sort_scalars(alg, rep.Gamma);
  sort_scalars(alg, rep.Gamma_sqrt);

  rep.dim_Z = rank_modulo_c0(z_all);
  rep.dim_Y_sqrt = rank_modulo_c0(y_sqrt);
  rep.dim_Y_star = rank_modulo_c0(y_star);
  rep.quotient_dim = rep.dim_Z - rep.dim_Y_sqrt;

  auto geq = [](const GroupElem& a, const GroupElem& b) { return a == b; };
  auto peq = [](const auto& a, const auto& b) { return a.first == b.first && a.second == b.second; };
  std::vector<GroupElem> w_minus;
  for (const auto& g : rep.W)
    if (std::find(rep.W_sqrt.begin(), rep.W_sqrt.end(), g) == rep.W_sqrt.end()) w_minus.push_back(g);
  check(rep, "W_sqrt is contained in W", subset(rep.W_sqrt, rep.W, geq));
  check(rep, "Gamma_sqrt is contained in Gamma", subset(rep.Gamma_sqrt, rep.Gamma, std::equal_to<Scalar>()));
  check(rep, "Omega_sqrt is contained in Omega", subset(rep.Omega_sqrt, rep.Omega, peq));
  check(rep, "W minus W_sqrt is contained in W_times", subset(w_minus, rep.W_times, geq));
  check(rep, "dim Z/(C0+Y_sqrt) >= #(W minus W_sqrt)", rep.quotient_dim >= static_cast<int>(w_minus.size()),
        std::to_string(rep.quotient_dim) + " vs " + std::to_string(w_minus.size()));
  check(rep, "dim Z/(C0+Y_sqrt) equals dim Y_*/(Y_* cap C0)", rep.quotient_dim == rep.dim_Y_star,
        std::to_string(rep.quotient_dim) + " vs " + std::to_string(rep.dim_Y_star));
  check(rep, "power test agrees with the root of unity criterion", agree, agree_detail.str());
  check(rep, "non-root commutators have weights of infinite order", infinite_ok, infinite_detail.str());
  check(rep, "level-one witnesses of distinct weight commutators are independent modulo C0",
        rank_modulo_c0(lvl1_all) == static_cast<int>(lvl1_count));
  check(rep, "eigenspace dimensions add up per weight", dims_ok, dims_detail.str());
  rep.notes.push_back("sets are relative to degree <= " + std::to_string(opts.degree) + ", group length <= " +
                      std::to_string(opts.group_bound) + ", powers <= " + std::to_string(opts.power_bound) +
                      ", levels <= " + std::to_string(opts.level_bound) +
                      "; group-likes are taken from the presented group only");
  return rep;
}

}  // namespace hopfgrow
