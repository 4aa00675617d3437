#include "hopfgrow/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>

#include "hopfgrow/error.hpp"

namespace hopfgrow {

namespace {

// Fraction-free forward elimination; returns pivot columns in row order.
std::vector<size_t> bareiss(Matrix& m, size_t ncols) {
  std::vector<size_t> piv;
  size_t r = 0;
  Scalar prev(1);
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Scalar pv = m[r][c];
    for (size_t i = r + 1; i < m.size(); ++i) {
      const Scalar f = m[i][c];
      for (size_t j = c + 1; j < ncols; ++j) {
        Scalar v = pv * m[i][j];
        if (!f.is_zero() && !m[r][j].is_zero()) v -= f * m[r][j];
        m[i][j] = prev.is_one() ? v : v / prev;
      }
      m[i][c] = Scalar(0);
    }
    prev = pv;
    piv.push_back(c);
    ++r;
  }
  return piv;
}


// ---------------------------------------------------------------- modular images
//
// Used only to choose which rows of a tall system to eliminate exactly. The
// exact kernel is always verified against every row afterwards.

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % q == 0) return n == q;
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s && comp; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f)
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  if (n > 1) out.push_back(n);
  return out;
}

class ModEval {
 public:
  ModEval(u64 conductor_lcm, std::mt19937_64& rng) : L_(conductor_lcm) {
    std::uniform_int_distribution<u64> pick(u64(1) << 40, u64(1) << 50);
    do p_ = (pick(rng) / L_) * L_ + 1;
    while (!is_prime(p_));
    const auto fac = prime_factors(L_);
    for (;;) {
      u64 w = powmod(2 + pick(rng) % (p_ - 3), (p_ - 1) / L_, p_);
      bool primitive = true;
      for (u64 f : fac) primitive = primitive && powmod(w, L_ / f, p_) != 1;
      if (primitive) {
        zeta_ = w;
        break;
      }
    }
    for (int i = 0; i < kMaxVars; ++i) vars_[i] = 2 + pick(rng) % (p_ - 3);
  }
  u64 prime() const { return p_; }

  std::optional<u64> rational(const Rational& q) const {
    u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
    if (d == 0) return std::nullopt;
    u64 n = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
    return mulmod(n, powmod(d, p_ - 2, p_), p_);
  }

  std::optional<u64> cyclo(const CycloRational& c) const {
    const u64 z = powmod(zeta_, L_ / static_cast<u64>(c.conductor()), p_);
    u64 acc = 0, zp = 1;
    for (const auto& q : c.coeffs()) {
      auto v = rational(q);
      if (!v) return std::nullopt;
      acc = (acc + mulmod(*v, zp, p_)) % p_;
      zp = mulmod(zp, z, p_);
    }
    return acc;
  }

  std::optional<u64> poly(const LaurentPoly& f) const {
    u64 acc = 0;
    for (const auto& t : f.terms()) {
      auto c = cyclo(t.c);
      if (!c) return std::nullopt;
      u64 m = *c;
      for (int i = 0; i < kMaxVars; ++i) {
        if (t.e[i] == 0) continue;
        u64 base = t.e[i] > 0 ? vars_[i] : powmod(vars_[i], p_ - 2, p_);
        m = mulmod(m, powmod(base, static_cast<u64>(std::abs(t.e[i])), p_), p_);
      }
      acc = (acc + m) % p_;
    }
    return acc;
  }

  std::optional<u64> scalar(const Scalar& s) const {
    auto n = poly(s.num()), d = poly(s.den());
    if (!n || !d || *d == 0) return std::nullopt;
    return mulmod(*n, powmod(*d, p_ - 2, p_), p_);
  }

 private:
  u64 L_, p_ = 0, zeta_ = 1;
  std::array<u64, kMaxVars> vars_{};
};

long conductor_lcm(const Matrix& m) {
  long L = 1;
  for (const auto& row : m)
    for (const auto& s : row)
      for (const LaurentPoly* f : {&s.num(), &s.den()})
        for (const auto& t : f->terms()) L = std::lcm(L, static_cast<long>(t.c.conductor()));
  return L;
}

// Indices of rows independent at a random specialization, or nothing if the
// specialization hit a pole.
std::optional<std::vector<size_t>> independent_rows_mod(const Matrix& m, size_t ncols, std::mt19937_64& rng) {
  ModEval ev(static_cast<u64>(conductor_lcm(m)), rng);
  const u64 p = ev.prime();
  std::vector<std::vector<u64>> basis;
  std::vector<size_t> pivots, chosen;
  for (size_t r = 0; r < m.size() && chosen.size() < ncols; ++r) {
    std::vector<u64> v(ncols);
    for (size_t j = 0; j < ncols; ++j) {
      if (m[r][j].is_zero()) continue;
      auto x = ev.scalar(m[r][j]);
      if (!x) return std::nullopt;
      v[j] = *x;
    }
    for (size_t b = 0; b < basis.size(); ++b) {
      const u64 f = v[pivots[b]];
      if (f == 0) continue;
      for (size_t j = 0; j < ncols; ++j)
        if (basis[b][j]) v[j] = (v[j] + p - mulmod(f, basis[b][j], p)) % p;
    }
    size_t piv = 0;
    while (piv < ncols && v[piv] == 0) ++piv;
    if (piv == ncols) continue;
    const u64 inv = powmod(v[piv], p - 2, p);
    for (auto& x : v) x = mulmod(x, inv, p);
    basis.push_back(std::move(v));
    pivots.push_back(piv);
    chosen.push_back(r);
  }
  return chosen;
}

bool row_kills(const Vec& row, const Vec& x) {
  Scalar s(0);
  for (size_t j = 0; j < x.size(); ++j)
    if (!row[j].is_zero() && !x[j].is_zero()) s += row[j] * x[j];
  return s.is_zero();
}

}  // namespace

std::vector<Vec> kernel_basis_tall(const Matrix& m, size_t ncols) {
  if (m.size() <= ncols) return kernel_basis(m, ncols);
  std::mt19937_64 rng(0x5eed);
  std::optional<std::vector<size_t>> rows;
  for (int attempt = 0; attempt < 8 && !rows; ++attempt) rows = independent_rows_mod(m, ncols, rng);
  if (!rows) return kernel_basis(m, ncols);
  // Full rank at a specialization means full rank exactly.
  if (rows->size() == ncols) return {};
  std::vector<bool> used(m.size(), false);
  for (size_t r : *rows) used[r] = true;
  for (;;) {
    Matrix sub;
    for (size_t r = 0; r < m.size(); ++r)
      if (used[r]) sub.push_back(m[r]);
    std::vector<Vec> ker = kernel_basis(std::move(sub), ncols);
    bool clean = true;
    for (size_t r = 0; r < m.size() && clean; ++r) {
      if (used[r]) continue;
      for (const auto& x : ker)
        if (!row_kills(m[r], x)) {
          used[r] = true;
          clean = false;
          break;
        }
    }
    if (clean) return ker;
  }
}

namespace {

}  // namespace

std::vector<Vec> kernel_basis(Matrix m, size_t ncols) {
  std::vector<size_t> piv = bareiss(m, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    Vec x(ncols, Scalar(0));
    x[f] = Scalar(1);
    for (size_t k = piv.size(); k-- > 0;) {
      size_t c = piv[k];
      Scalar s(0);
      for (size_t j = c + 1; j < ncols; ++j)
        if (!m[k][j].is_zero() && !x[j].is_zero()) s += m[k][j] * x[j];
      x[c] = s.is_zero() ? Scalar(0) : -s / m[k][c];
    }
    out.push_back(std::move(x));
  }
  return out;
}

size_t matrix_rank(Matrix m, size_t ncols) { return bareiss(m, ncols).size(); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Matrix c(n, Vec(p, Scalar(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < p; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Matrix identity_matrix(size_t n) {
  Matrix m(n, Vec(n, Scalar(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& columns, size_t nrows) {
  const size_t ncols = columns.size();
  std::vector<std::vector<size_t>> row_cols(nrows);
  for (size_t c = 0; c < ncols; ++c)
    for (const auto& [r, v] : columns[c])
      if (!v.is_zero()) row_cols[r].push_back(c);
  std::vector<bool> alive(ncols, true);
  std::vector<size_t> live(nrows);
  std::vector<size_t> queue;
  for (size_t r = 0; r < nrows; ++r) {
    live[r] = row_cols[r].size();
    if (live[r] == 1) queue.push_back(r);
  }
  // A row with one live column forces that coordinate to vanish.
  while (!queue.empty()) {
    size_t r = queue.back();
    queue.pop_back();
    if (live[r] != 1) continue;
    size_t col = ncols;
    for (size_t c : row_cols[r])
      if (alive[c]) col = c;
    if (col == ncols) continue;
    alive[col] = false;
    for (const auto& [rr, v] : columns[col]) {
      if (v.is_zero()) continue;
      if (--live[rr] == 1) queue.push_back(rr);
    }
  }
  // Connected blocks of live columns through shared rows.
  std::vector<size_t> parent(ncols);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (size_t r = 0; r < nrows; ++r) {
    size_t first = ncols;
    for (size_t c : row_cols[r]) {
      if (!alive[c]) continue;
      if (first == ncols) first = c;
      else parent[find(c)] = find(first);
    }
  }
  std::map<size_t, std::vector<size_t>> blocks;
  for (size_t c = 0; c < ncols; ++c)
    if (alive[c]) blocks[find(c)].push_back(c);
  std::vector<std::pair<size_t, SparseVec>> found;
  for (auto& [root, cols] : blocks) {
    std::map<size_t, size_t> row_index;
    for (size_t c : cols)
      for (const auto& [r, v] : columns[c])
        if (!v.is_zero()) row_index.try_emplace(r, row_index.size());
    Matrix m(row_index.size(), Vec(cols.size(), Scalar(0)));
    for (size_t k = 0; k < cols.size(); ++k)
      for (const auto& [r, v] : columns[cols[k]])
        if (!v.is_zero()) m[row_index[r]][k] += v;
    for (auto& x : kernel_basis_tall(m, cols.size())) {
      SparseVec sv;
      for (size_t k = 0; k < cols.size(); ++k)
        if (!x[k].is_zero()) sv.emplace_back(cols[k], x[k]);
      found.emplace_back(cols.front(), std::move(sv));
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SparseVec> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

int integer_rank(const std::vector<std::vector<long>>& rows) {
  Matrix m;
  size_t n = 0;
  for (const auto& r : rows) {
    n = std::max(n, r.size());
    Vec v;
    for (long x : r) v.emplace_back(x);
    m.push_back(std::move(v));
  }
  for (auto& r : m) r.resize(n, Scalar(0));
  return static_cast<int>(matrix_rank(std::move(m), n));
}

std::vector<std::vector<long>> integer_relations(const std::vector<std::vector<long>>& rows) {
  // Unimodular row reduction of [rows | I]; rows whose left part vanishes
  // carry a basis of the relation lattice.
  const size_t n = rows.size();
  size_t r = 0;
  for (const auto& x : rows) r = std::max(r, x.size());
  std::vector<std::vector<long>> a(n, std::vector<long>(r + n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) a[i][j] = rows[i][j];
    a[i][r + i] = 1;
  }
  size_t top = 0;
  for (size_t c = 0; c < r && top < n; ++c) {
    for (;;) {
      size_t best = n;
      for (size_t i = top; i < n; ++i)
        if (a[i][c] != 0 && (best == n || std::labs(a[i][c]) < std::labs(a[best][c]))) best = i;
      if (best == n) break;
      std::swap(a[top], a[best]);
      bool done = true;
      for (size_t i = top + 1; i < n; ++i) {
        if (a[i][c] == 0) continue;
        long q = a[i][c] / a[top][c];
        for (size_t j = 0; j < r + n; ++j) a[i][j] -= q * a[top][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) {
        ++top;
        break;
      }
    }
  }
  std::vector<std::vector<long>> rel;
  for (size_t i = top; i < n; ++i) rel.emplace_back(a[i].begin() + static_cast<long>(r), a[i].end());
  return rel;
}

// ---------------------------------------------------------------- SpanBasis

SpanBasis::SpanBasis(const std::vector<AlgebraElement>& vs) {
  for (const auto& v : vs) add(v);
}

AlgebraElement SpanBasis::reduce(AlgebraElement x, Vec& acc) const {
  acc.assign(basis_.size(), Scalar(0));
  while (!x.is_zero()) {
    auto it = rows_.find(x.lead());
    if (it == rows_.end()) break;
    Scalar c = x.lead_coeff();
    x.add(it->second.v, -c);
    for (size_t j = 0; j < it->second.combo.size(); ++j)
      if (!it->second.combo[j].is_zero()) acc[j] += c * it->second.combo[j];
  }
  return x;
}

bool SpanBasis::add(const AlgebraElement& x) {
  Vec acc;
  AlgebraElement r = reduce(x, acc);
  if (r.is_zero()) return false;
  Scalar inv = r.lead_coeff().inverse();
  Vec combo(basis_.size() + 1, Scalar(0));
  for (size_t j = 0; j < acc.size(); ++j)
    if (!acc[j].is_zero()) combo[j] = -acc[j] * inv;
  combo[basis_.size()] = inv;
  NormalWord lead = r.lead();
  rows_.emplace(std::move(lead), Row{r.scaled(inv), std::move(combo)});
  basis_.push_back(x);
  return true;
}

bool SpanBasis::contains(const AlgebraElement& x) const {
  Vec acc;
  return reduce(x, acc).is_zero();
}

std::optional<Vec> SpanBasis::coordinates(const AlgebraElement& x) const {
  Vec acc;
  if (!reduce(x, acc).is_zero()) return std::nullopt;
  return acc;
}

std::vector<AlgebraElement> SpanBasis::echelon() const {
  // Fully reduce each row against the others, then sort by leading word.
  std::vector<AlgebraElement> out;
  for (const auto& [lead, row] : rows_) {
    AlgebraElement v = row.v;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [w, c] : v.terms()) {
        if (w == lead) continue;
        auto it = rows_.find(w);
        if (it == rows_.end()) continue;
        v.add(it->second.v, -c);
        changed = true;
        break;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hopfgrow
