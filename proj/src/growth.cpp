#include "hopfgrow/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <unordered_map>

#include "hopfgrow/error.hpp"
#include "hopfgrow/linalg.hpp"

namespace hopfgrow {

namespace {

// Echelon form on leading words without change-of-basis bookkeeping, so the
// memory stays linear in the dimension.
class LeadSpan {
 public:
  bool add(AlgebraElement x) {
    x = reduce(std::move(x));
    if (x.is_zero()) return false;
    Scalar inv = x.lead_coeff().inverse();
    NormalWord lead = x.lead();
    rows_.emplace(std::move(lead), x.scaled(inv));
    return true;
  }
  bool contains(AlgebraElement x) const { return reduce(std::move(x)).is_zero(); }
  size_t dim() const { return rows_.size(); }

 private:
  AlgebraElement reduce(AlgebraElement x) const {
    while (!x.is_zero()) {
      auto it = rows_.find(x.lead());
      if (it == rows_.end()) break;
      x.add(it->second, -x.lead_coeff());
    }
    return x;
  }
  std::unordered_map<NormalWord, AlgebraElement, NormalWordHash> rows_;
};

}  // namespace

size_t max_words_from_env(size_t fallback) {
  const char* v = std::getenv("HOPFGROW_MAX_WORDS");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) fail(ErrorKind::Usage, std::string("HOPFGROW_MAX_WORDS must be a positive integer, got '") + v + "'");
  return static_cast<size_t>(n);
}

GrowthReport measure_growth(const Algebra& alg, GrowthOptions opts) {
  alg.require_confluent();
  if (opts.n_max < 1) fail(ErrorKind::Usage, "n_max must be positive");
  if (opts.max_words == 0) opts.max_words = max_words_from_env();
  const Group& grp = alg.group();
  GrowthReport rep;
  rep.options = opts;

  std::vector<AlgebraElement> gens;
  std::ostringstream desc;
  desc << "1";
  for (int j = 0; j < grp.num_generators(); ++j) {
    gens.push_back(alg.group_element(grp.generator(j)));
    gens.push_back(alg.group_element(grp.generator(j, -1)));
    desc << ", " << grp.names()[j] << ", " << grp.names()[j] << "^-1";
  }
  for (int i = 0; i < alg.num_y(); ++i) {
    gens.push_back(alg.y(i));
    desc << ", " << alg.pres().gens[i].name;
  }
  rep.generating_set = desc.str();

  // F_n = F_{n-1} + (new part of F_{n-1}) V, since F_{n-2} V = F_{n-1}.
  LeadSpan span;
  span.add(alg.one());
  std::vector<AlgebraElement> frontier{alg.one()};
  rep.dims.push_back(1);
  for (int n = 1; n <= opts.n_max; ++n) {
    std::vector<AlgebraElement> next;
    for (const auto& f : frontier)
      for (const auto& v : gens) {
        AlgebraElement p = alg.multiply(f, v);
        if (span.add(p)) next.push_back(std::move(p));
        if (span.dim() > opts.max_words) {
          rep.truncated = true;
          rep.estimate = estimate_growth(rep.dims, opts);
          return rep;
        }
      }
    rep.dims.push_back(static_cast<long>(span.dim()));
    frontier = std::move(next);
  }
  rep.estimate = estimate_growth(rep.dims, opts);
  return rep;
}

bool ratio_flags_exponential(const std::vector<long>& dims, const GrowthOptions& opts) {
  const int last = static_cast<int>(dims.size()) - 1;
  const int w = std::max(opts.window, 4);
  if (last - w < 0) return false;
  for (int n = last - w; n < last; ++n)
    if (static_cast<double>(dims[n + 1]) < (1.0 + opts.delta) * static_cast<double>(dims[n])) return false;
  return true;
}

GrowthEstimate estimate_growth(const std::vector<long>& dims, const GrowthOptions& opts) {
  GrowthEstimate e;
  e.method = "none";
  const int len = static_cast<int>(dims.size());
  const int w = std::max(opts.window, 4);
  if (len < 2) return e;
  const int last = len - 1;

  // Log-log slope over [last/2, last], kept as a diagnostic in every case.
  e.window_begin = std::max(1, last / 2);
  e.window_end = last;
  {
    std::vector<double> xs, ys;
    for (int n = e.window_begin; n <= last; ++n) {
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(std::log(static_cast<double>(dims[n])));
    }
    const double m = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double den = m * sxx - sx * sx;
    if (xs.size() >= 2 && den > 0) {
      e.slope = (m * sxy - sx * sy) / den;
      const double icpt = (sy - e.slope * sx) / m;
      double ss = 0;
      for (size_t i = 0; i < xs.size(); ++i) ss += std::pow(ys[i] - (icpt + e.slope * xs[i]), 2);
      e.fit_residual = std::sqrt(ss / m);
    }
  }

  // An exact integer sequence that is eventually polynomial shows it in its
  // differences: the (k+1)-th differences vanish on the tail.
  std::vector<long> diff = dims;
  for (int k = 0; static_cast<int>(diff.size()) - 1 >= w; ++k) {
    std::vector<long> next;
    for (size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
    bool tail_zero = std::all_of(next.end() - w, next.end(), [](long x) { return x == 0; });
    if (tail_zero && diff.back() != 0) {
      e.classification = "polynomial";
      e.degree = k;
      e.method = "finite-differences";
      e.window_begin = last - w - k;
      e.window_end = last;
      return e;
    }
    diff = std::move(next);
  }

  if (ratio_flags_exponential(dims, opts)) {
    e.classification = "exponential";
    e.method = "ratio";
    e.base = std::pow(static_cast<double>(dims[last]) / static_cast<double>(dims[last - w]), 1.0 / w);
    e.window_begin = last - w;
    e.window_end = last;
    return e;
  }

  if (e.fit_residual < opts.residual && e.slope > -0.5) {
    e.classification = "polynomial";
    e.degree = static_cast<int>(std::lround(e.slope));
    e.method = "log-log";
  }
  return e;
}

std::string growth_table(const GrowthReport& r) {
  std::ostringstream os;
  os << "n\tdim F_n\n";
  for (size_t n = 0; n < r.dims.size(); ++n) os << n << "\t" << r.dims[n] << "\n";
  return os.str();
}

namespace {

// Order on exponent vectors: total degree, then the first differing entry.
bool pbw_less(const std::vector<int>& a, const std::vector<int>& b) {
  int sa = 0, sb = 0;
  for (int x : a) sa += x;
  for (int x : b) sb += x;
  if (sa != sb) return sa < sb;
  return a < b;
}

void exponent_vectors(int v, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == v) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int x : cur) used += x;
  for (int e = 0; e + used <= d; ++e) {
    cur.push_back(e);
    exponent_vectors(v, d, cur, out);
    cur.pop_back();
  }
}

bool is_pure_power(const std::vector<int>& a, int& index, int& power) {
  int nz = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) {
      ++nz;
      index = static_cast<int>(i);
      power = a[i];
    }
  return nz == 1;
}

bool primitive_root(const Scalar& s, int p) {
  Order o = multiplicative_order(s);
  return o.kind == Order::Kind::Finite && o.value == p && p > 1;
}

}  // namespace

PbwScan pbw_dependence_scan(const Algebra& alg, const std::vector<AlgebraElement>& S, int d, int ball) {
  alg.require_confluent();
  const Group& grp = alg.group();
  PbwScan out;
  out.degree_bound = d;
  const int v = static_cast<int>(S.size());
  std::vector<std::vector<int>> monos;
  std::vector<int> cur;
  exponent_vectors(v, d, cur, monos);
  std::sort(monos.begin(), monos.end(), pbw_less);

  std::vector<GroupElem> mu;
  std::vector<Scalar> lam;
  for (const auto& y : S) {
    auto w = is_skew_primitive(alg, y);
    if (!w) fail(ErrorKind::Hypothesis, "scan set contains a non skew primitive element");
    mu.push_back(*w);
    auto l = commutation_scalar(alg, y, *w);
    if (!l) fail(ErrorKind::Hypothesis, "scan set element does not commute with its weight up to C0");
    lam.push_back(*l);
  }
  const std::vector<GroupElem> translates = grp.ball(ball);
  auto monomial = [&](const std::vector<int>& a) {
    AlgebraElement m = alg.one();
    for (int i = 0; i < v; ++i)
      if (a[i] > 0) m = alg.multiply(m, alg.pow(S[i], a[i]));
    return m;
  };

  LeadSpan span;
  std::vector<std::pair<size_t, GroupElem>> label;  // (monomial index, translate) per spanning vector
  std::vector<AlgebraElement> spanning;
  for (size_t k = 0; k < monos.size(); ++k) {
    AlgebraElement F = monomial(monos[k]);
    if (span.contains(F)) {
      const auto coords = SpanBasis(spanning).coordinates(F);
      if (!coords) fail(ErrorKind::Consistency, "PBW relation lost when solving for coefficients");
      out.independent = false;
      out.monomial = monos[k];
      int deg = 0;
      for (int x : monos[k]) deg += x;
      out.degree = deg;
      // F = sum_G d_G G with d_G in the group algebra.
      std::map<size_t, AlgebraElement> dG;
      for (size_t i = 0; i < coords->size(); ++i)
        if (!(*coords)[i].is_zero()) dG[label[i].first].add(NormalWord{label[i].second, ""}, (*coords)[i]);
      auto mono_str = [&](const std::vector<int>& a) {
        std::string s;
        for (int i = 0; i < v; ++i)
          if (a[i] > 0) s += (s.empty() ? "" : " ") + std::string("z") + std::to_string(i + 1) +
                             (a[i] > 1 ? "^" + std::to_string(a[i]) : "");
        return s.empty() ? std::string("1") : s;
      };
      std::ostringstream rel;
      rel << mono_str(monos[k]) << " = ";
      if (dG.empty()) rel << "0";
      bool first = true;
      for (const auto& [gi, c] : dG) {
        rel << (first ? "" : " + ") << "(" << alg.str(c) << ") " << mono_str(monos[gi]);
        first = false;
      }
      out.relation = rel.str();

      int z = -1, pz = 0;
      const bool pure = is_pure_power(monos[k], z, pz);
      Hypothesis c1{"(i) lambda_z is a primitive p_z-th root of unity, p_z > 1", pure && primitive_root(lam[z], pz),
                    pure ? "z = " + std::to_string(z + 1) + ", p_z = " + std::to_string(pz) : "not a pure power"};
      Hypothesis c2{"(ii) y_z^p_z + sum a_i y_i + sum b_j y_j^p_j lies in C0 with scalar a_i, b_j", pure, ""};
      Hypothesis c3{"(iii) g_i = g_z^p_z whenever a_i != 0", pure, ""};
      Hypothesis c4{"(iv) g_j^p_j = g_z^p_z and lambda_j is a primitive p_j-th root whenever b_j != 0", pure, ""};
      if (pure) {
        const GroupElem gz = grp.pow(mu[z], pz);
        for (const auto& [gi, c] : dG) {
          const auto& a = monos[gi];
          int idx = -1, p = 0;
          int deg_g = 0;
          for (int x : a) deg_g += x;
          if (deg_g == 0) continue;  // the C0 part
          const bool scalar_coeff = c.size() == 1 && grp.is_identity(c.lead().g);
          if (!scalar_coeff || !is_pure_power(a, idx, p)) {
            c2.passed = false;
            c2.witness = "term " + mono_str(a) + " with coefficient " + alg.str(c);
            continue;
          }
          if (p == 1) {
            if (grp.canonical(mu[idx]) != grp.canonical(gz)) {
              c3.passed = false;
              c3.witness = "i = " + std::to_string(idx + 1);
            }
          } else if (idx == z) {
            c2.passed = false;
            c2.witness = "lower power of y_z";
          } else if (grp.canonical(grp.pow(mu[idx], p)) != grp.canonical(gz) || !primitive_root(lam[idx], p)) {
            c4.passed = false;
            c4.witness = "j = " + std::to_string(idx + 1);
          }
        }
      }
      out.conclusions = {c1, c2, c3, c4};
      out.consistent = c1.passed && c2.passed && c3.passed && c4.passed;
      return out;
    }
    for (const auto& h : translates) {
      AlgebraElement t = F.left_group(h, grp);
      if (span.add(t)) {
        label.emplace_back(k, h);
        spanning.push_back(std::move(t));
      }
    }
  }
  return out;
}

std::vector<AlgebraElement> pbw_set(const Algebra& alg, const InvariantReport& rep) {
  std::vector<AlgebraElement> S;
  for (const auto& wd : rep.weights)
    for (const auto& wc : wd.classes)
      for (const auto& z : wc.witnesses) {
        S.push_back(z);
        BoundReport r = bound_first(alg, S, rep.options.degree);
        bool ok = true;
        for (const auto& h : r.hypotheses)
          if (h.name.rfind("each lambda_ii", 0) != 0) ok = ok && h.passed;
        if (!ok) S.pop_back();
      }
  return S;
}

}  // namespace hopfgrow
