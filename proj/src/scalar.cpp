#include "hopfgrow/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hopfgrow/error.hpp"

namespace hopfgrow {

namespace {

struct CycloData {
  int n = 1;
  int phi = 1;
  // powers[k] = x^k mod Phi_n on the power basis, for k < max(n, 2 phi - 1).
  std::vector<std::vector<Rational>> powers;
};

std::vector<long> poly_div_exact(std::vector<long> a, const std::vector<long>& b) {
  // b monic, integer coefficients, both low-to-high.
  const long nb = static_cast<long>(b.size());
  std::vector<long> q(a.size() - b.size() + 1, 0);
  for (long i = static_cast<long>(a.size()) - 1; i >= nb - 1; --i) {
    long c = a[i];
    long shift = i - (nb - 1);
    q[shift] = c;
    for (long j = 0; j < nb; ++j) a[shift + j] -= c * b[j];
  }
  return q;
}

std::vector<long> cyclotomic_poly(int n) {
  static std::map<int, std::vector<long>> cache;  // guarded by the caller's lock
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_poly(d));
  cache[n] = p;
  return p;
}

const CycloData& cyclo_data(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return *it->second;
  auto d = std::make_unique<CycloData>();
  d->n = n;
  std::vector<long> phi_poly = cyclotomic_poly(n);
  d->phi = static_cast<int>(phi_poly.size()) - 1;
  int count = std::max(n, 2 * d->phi - 1);
  std::vector<Rational> cur(d->phi, 0);
  cur[0] = 1;
  for (int k = 0; k < count; ++k) {
    d->powers.push_back(cur);
    // multiply by x and reduce using x^phi = -sum phi_i x^i
    Rational top = cur[d->phi - 1];
    for (int i = d->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < d->phi; ++i) cur[i] -= top * phi_poly[i];
  }
  auto* raw = d.get();
  cache[n] = std::move(d);
  return *raw;
}

long gcd_long(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

int euler_phi(int n) { return cyclo_data(n).phi; }

// ---------------------------------------------------------------- Root

Root Root::make(long num, long den) {
  if (den <= 0) fail(ErrorKind::Usage, "root of unity needs a positive order");
  num %= den;
  if (num < 0) num += den;
  long g = gcd_long(num, den);
  if (num == 0) return Root{0, 1};
  return Root{num / g, den / g};
}

Root Root::operator*(const Root& o) const {
  long l = lcm_long(den, o.den);
  return make(num * (l / den) + o.num * (l / o.den), l);
}

Root Root::inverse() const { return make(-num, den); }

Root Root::pow(long e) const { return make((num * (e % den)) % den, den); }

// ---------------------------------------------------------------- CycloRational

CycloRational CycloRational::root_of_unity(long n, long a) {
  if (n <= 0) fail(ErrorKind::Usage, "root of unity needs a positive order");
  a %= n;
  if (a < 0) a += n;
  const CycloData& d = cyclo_data(static_cast<int>(n));
  CycloRational r;
  r.n_ = static_cast<int>(n);
  r.c_ = d.powers[a];
  r.demote();
  return r;
}

CycloRational CycloRational::from_coeffs(int n, std::vector<Rational> coeffs) {
  const CycloData& d = cyclo_data(n);
  CycloRational r;
  r.n_ = n;
  r.c_.assign(d.phi, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const auto& p = d.powers[i % n];
    for (int j = 0; j < d.phi; ++j)
      if (p[j] != 0) r.c_[j] += coeffs[i] * p[j];
  }
  r.demote();
  return r;
}

void CycloRational::demote() {
  if (n_ == 1) return;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return;
  c_.resize(1);
  n_ = 1;
}

bool CycloRational::is_zero() const {
  return n_ == 1 && c_[0] == 0;
}

bool CycloRational::is_one() const { return n_ == 1 && c_[0] == 1; }

CycloRational CycloRational::promoted(int n) const {
  if (n == n_) return *this;
  if (n % n_ != 0) fail(ErrorKind::Consistency, "invalid cyclotomic promotion");
  const CycloData& d = cyclo_data(n);
  CycloRational r;
  r.n_ = n;
  r.c_.assign(d.phi, 0);
  int step = n / n_;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& p = d.powers[(i * step) % n];
    for (int j = 0; j < d.phi; ++j)
      if (p[j] != 0) r.c_[j] += c_[i] * p[j];
  }
  return r;
}

CycloRational CycloRational::operator-() const {
  CycloRational r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloRational& CycloRational::operator+=(const CycloRational& o) {
  if (n_ == o.n_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    int l = static_cast<int>(lcm_long(n_, o.n_));
    CycloRational a = promoted(l);
    CycloRational b = o.promoted(l);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    *this = std::move(a);
  }
  demote();
  return *this;
}

CycloRational& CycloRational::operator-=(const CycloRational& o) { return *this += -o; }

CycloRational& CycloRational::operator*=(const CycloRational& o) {
  if (o.n_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    if (o.c_[0] == 0) { n_ = 1; c_.assign(1, 0); }
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    if (s == 0) { n_ = 1; c_.assign(1, 0); }
    return *this;
  }
  int l = static_cast<int>(lcm_long(n_, o.n_));
  CycloRational a = promoted(l);
  CycloRational b = o.promoted(l);
  const CycloData& d = cyclo_data(l);
  std::vector<Rational> prod(2 * d.phi - 1, 0);
  for (int i = 0; i < d.phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < d.phi; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + d.phi);
  for (int k = d.phi; k < 2 * d.phi - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& p = d.powers[k];
    for (int j = 0; j < d.phi; ++j)
      if (p[j] != 0) out[j] += prod[k] * p[j];
  }
  n_ = l;
  c_ = std::move(out);
  demote();
  return *this;
}

bool operator==(const CycloRational& a, const CycloRational& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  if (a.n_ == 1 || b.n_ == 1) return false;  // both are demoted, so one is irrational
  int l = static_cast<int>(lcm_long(a.n_, b.n_));
  return a.promoted(l).c_ == b.promoted(l).c_;
}

CycloRational CycloRational::inverse() const {
  if (is_zero()) fail(ErrorKind::Usage, "division by zero");
  if (n_ == 1) return CycloRational(Rational(1) / c_[0]);
  const CycloData& d = cyclo_data(n_);
  int m = d.phi;
  // Column j of the system is this * zeta^j; solve for the preimage of 1.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, 0));
  for (int j = 0; j < m; ++j) {
    CycloRational col = *this * CycloRational::root_of_unity(n_, j).promoted(n_);
    CycloRational colp = col.promoted(n_);
    for (int i = 0; i < m; ++i) a[i][j] = colp.c_[i];
  }
  a[0][m] = 1;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    std::swap(a[col], a[piv]);
    Rational inv = 1 / a[col][col];
    for (int j = col; j <= m; ++j) a[col][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (int j = col; j <= m; ++j) a[i][j] -= f * a[col][j];
    }
  }
  CycloRational r;
  r.n_ = n_;
  r.c_.resize(m);
  for (int i = 0; i < m; ++i) r.c_[i] = a[i][m];
  r.demote();
  return r;
}

CycloRational CycloRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloRational result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::optional<Root> CycloRational::as_root() const {
  if (n_ == 1) {
    if (c_[0] == 1) return Root{0, 1};
    if (c_[0] == -1) return Root{1, 2};
    return std::nullopt;
  }
  const CycloData& d = cyclo_data(n_);
  for (int b = 0; b < n_; ++b) {
    const auto& p = d.powers[b];
    bool pos = true, neg = true;
    for (int j = 0; j < d.phi && (pos || neg); ++j) {
      if (c_[j] != p[j]) pos = false;
      if (c_[j] != -p[j]) neg = false;
    }
    if (pos) return Root::make(b, n_);
    if (neg) return Root::make(2 * b + n_, 2L * n_);
  }
  return std::nullopt;
}

std::string CycloRational::to_string() const {
  if (n_ == 1) return c_[0].get_str();
  if (auto r = as_root()) {
    std::string s = "zeta" + std::to_string(r->den);
    if (r->num != 1) s += "^" + std::to_string(r->num);
    return s;
  }
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "zeta" << n_;
    if (i > 1) os << "^" << i;
  }
  return "(" + os.str() + ")";
}

// ---------------------------------------------------------------- LaurentPoly

namespace {

Exps add_exps(const Exps& a, const Exps& b) {
  Exps r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

Exps sub_exps(const Exps& a, const Exps& b) {
  Exps r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] - b[i];
  return r;
}

bool exps_zero(const Exps& e) {
  return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

}  // namespace

LaurentPoly::LaurentPoly(const CycloRational& c) {
  if (!c.is_zero()) t_.push_back(Term{Exps{}, c});
}

LaurentPoly LaurentPoly::monomial(const CycloRational& c, const Exps& e) {
  LaurentPoly p;
  if (!c.is_zero()) p.t_.push_back(Term{e, c});
  return p;
}

bool LaurentPoly::is_one() const { return t_.size() == 1 && exps_zero(t_[0].e) && t_[0].c.is_one(); }

int LaurentPoly::max_var() const {
  int m = -1;
  for (const auto& t : t_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.e[i] != 0) m = std::max(m, i);
  return m;
}

void LaurentPoly::canonicalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    if (!out.empty() && out.back().e == t.e) out.back().c += t.c;
    else out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c.is_zero(); }), out.end());
  t_ = std::move(out);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.t_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && t_[i].e < o.t_[j].e)) {
      out.push_back(std::move(t_[i++]));
    } else if (i == t_.size() || o.t_[j].e < t_[i].e) {
      out.push_back(o.t_[j++]);
    } else {
      CycloRational c = t_[i].c + o.t_[j].c;
      if (!c.is_zero()) out.push_back(Term{t_[i].e, std::move(c)});
      ++i;
      ++j;
    }
  }
  t_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.t_.empty() || b.t_.empty()) return r;
  r.t_.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) r.t_.push_back({add_exps(x.e, y.e), x.c * y.c});
  if (r.t_.size() > 1) r.canonicalize();
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].e != b.t_[i].e || !(a.t_[i].c == b.t_[i].c)) return false;
  return true;
}

LaurentPoly LaurentPoly::scaled(const CycloRational& c, const Exps& shift) const {
  LaurentPoly r;
  if (c.is_zero()) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({add_exps(t.e, shift), t.c * c});
  return r;  // order preserved: shifting is monotone for lex order
}

Exps LaurentPoly::min_exps() const {
  Exps m{};
  if (t_.empty()) return m;
  m = t_[0].e;
  for (const auto& t : t_)
    for (int i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.e[i]);
  return m;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) fail(ErrorKind::Usage, "division by zero");
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) {
    Exps neg;
    for (int i = 0; i < kMaxVars; ++i) neg[i] = -b.t_[0].e[i];
    return a.scaled(b.t_[0].c.inverse(), neg);
  }
  Exps ma = a.min_exps(), mb = b.min_exps();
  Exps zero{};
  LaurentPoly r = a.scaled(CycloRational(1), sub_exps(zero, ma));
  LaurentPoly bb = b.scaled(CycloRational(1), sub_exps(zero, mb));
  const Term& lb = bb.t_.back();
  CycloRational lb_inv = lb.c.inverse();
  LaurentPoly q;
  size_t guard = 0;
  while (!r.is_zero()) {
    const Term& lr = r.t_.back();
    Exps diff = sub_exps(lr.e, lb.e);
    for (int i = 0; i < kMaxVars; ++i)
      if (diff[i] < 0) return std::nullopt;
    CycloRational c = lr.c * lb_inv;
    q.t_.push_back({diff, c});
    r -= bb.scaled(c, diff);
    if (++guard > 20000) return std::nullopt;
  }
  q.canonicalize();
  return q.scaled(CycloRational(1), sub_exps(ma, mb));
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  for (size_t k = 0; k < t_.size(); ++k) {
    const Term& t = t_[t_.size() - 1 - k];  // leading term first
    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < static_cast<int>(names.size()) ? names[i] : "q" + std::to_string(i + 1);
      if (t.e[i] != 1) mono += "^" + std::to_string(t.e[i]);
    }
    std::string coef = t.c.to_string();
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef = coef.substr(1);
    std::string body;
    if (mono.empty()) body = coef;
    else if (coef == "1") body = mono;
    else body = coef + "*" + mono;
    if (k == 0) os << (negative ? "-" : "") << body;
    else os << (negative ? " - " : " + ") << body;
  }
  return os.str();
}

// ---------------------------------------------------------------- Scalar

namespace {

// Univariate division with remainder in variable v; both operands are polynomials.
std::pair<LaurentPoly, LaurentPoly> divmod_uni(LaurentPoly a, const LaurentPoly& b, int v) {
  LaurentPoly q;
  const auto& lb = b.terms().back();
  CycloRational inv = lb.c.inverse();
  while (!a.is_zero() && a.terms().back().e[v] >= lb.e[v]) {
    const auto& la = a.terms().back();
    Exps d{};
    d[v] = la.e[v] - lb.e[v];
    CycloRational c = la.c * inv;
    q += LaurentPoly::monomial(c, d);
    a -= b.scaled(c, d);
  }
  return {q, a};
}

LaurentPoly make_monic(const LaurentPoly& p) {
  return p.scaled(p.terms().back().c.inverse(), Exps{});
}

bool single_variable(const LaurentPoly& a, const LaurentPoly& b, int& var) {
  var = -1;
  for (const auto* p : {&a, &b})
    for (const auto& t : p->terms())
      for (int i = 0; i < kMaxVars; ++i) {
        if (t.e[i] == 0) continue;
        if (var >= 0 && var != i) return false;
        var = i;
      }
  return var >= 0;
}

}  // namespace

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::Usage, "division by zero");
  normalize();
}

Scalar Scalar::var(int i, int power) {
  if (i < 0 || i >= kMaxVars) fail(ErrorKind::Usage, "too many transcendentals");
  Exps e{};
  e[i] = power;
  Scalar s;
  s.num_ = LaurentPoly::monomial(CycloRational(1), e);
  return s;
}

Scalar Scalar::from_unit(const UnitMonomial& u) {
  Scalar s;
  s.num_ = LaurentPoly::monomial(CycloRational::from_root(u.root), u.exps);
  return s;
}

bool Scalar::is_one() const { return den_.is_one() && num_.is_one(); }

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(CycloRational(1));
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    num_ = *LaurentPoly::divide_exact(num_, den_);
    den_ = LaurentPoly(CycloRational(1));
    return;
  }
  Exps zero{};
  Exps m = den_.min_exps();
  Exps neg;
  for (int i = 0; i < kMaxVars; ++i) neg[i] = zero[i] - m[i];
  CycloRational lc_inv = den_.terms().back().c.inverse();
  den_ = den_.scaled(lc_inv, neg);
  num_ = num_.scaled(lc_inv, neg);
  if (auto q = LaurentPoly::divide_exact(num_, den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly(CycloRational(1));
    return;
  }
  int v;
  if (single_variable(num_, den_, v)) {
    Exps mn = num_.min_exps();
    Exps negn;
    for (int i = 0; i < kMaxVars; ++i) negn[i] = -mn[i];
    LaurentPoly a = num_.scaled(CycloRational(1), negn);
    LaurentPoly b = den_;
    while (!b.is_zero()) {
      auto [q, r] = divmod_uni(a, b, v);
      a = std::move(b);
      b = std::move(r);
    }
    LaurentPoly g = make_monic(a);
    if (!g.is_one()) {
      num_ = *LaurentPoly::divide_exact(num_, g);
      den_ = *LaurentPoly::divide_exact(den_, g);
      if (den_.is_monomial()) normalize();
    }
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ = num_ * o.num_;
  if (!o.den_.is_one()) {
    den_ = den_ * o.den_;
    normalize();
  } else if (num_.is_zero()) {
    den_ = LaurentPoly(CycloRational(1));
  } else if (!den_.is_one()) {
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::Usage, "division by zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.den_.is_one() && b.den_.is_one()) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string Scalar::to_string(const std::vector<std::string>& names) const {
  std::string n = num_.to_string(names);
  if (den_.is_one()) return n;
  auto wrap = [](const std::string& s, const LaurentPoly& p) {
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(n, num_) + "/" + wrap(den_.to_string(names), den_);
}

// ---------------------------------------------------------------- unit monomials

UnitMonomial UnitMonomial::operator*(const UnitMonomial& o) const {
  return UnitMonomial{root * o.root, add_exps(exps, o.exps)};
}

UnitMonomial UnitMonomial::inverse() const {
  Exps z{};
  return UnitMonomial{root.inverse(), sub_exps(z, exps)};
}

UnitMonomial UnitMonomial::pow(long e) const {
  UnitMonomial r{root.pow(e), exps};
  for (auto& x : r.exps) x = static_cast<int32_t>(x * e);
  return r;
}

bool UnitMonomial::is_one() const { return root.is_one() && exps_zero(exps); }
bool UnitMonomial::is_root_of_unity() const { return exps_zero(exps); }

std::optional<UnitMonomial> as_unit_monomial(const Scalar& s) {
  if (!s.den().is_one() || !s.num().is_monomial()) return std::nullopt;
  const auto& t = s.num().terms()[0];
  auto r = t.c.as_root();
  if (!r) return std::nullopt;
  return UnitMonomial{*r, t.e};
}

Order multiplicative_order(const Scalar& x) {
  if (x.is_zero()) fail(ErrorKind::Usage, "multiplicative order of zero is undefined");
  auto u = as_unit_monomial(x);
  if (!u) return Order{Order::Kind::NotUnitMonomial, 0};
  if (!u->is_root_of_unity()) return Order{Order::Kind::Infinite, 0};
  return Order{Order::Kind::Finite, u->root.order()};
}

Scalar quantum_binomial(long n, long s, const Scalar& lambda) {
  if (n < 0 || s < 0 || s > n) return Scalar(0);
  // row[j] holds (m choose j)_lambda for the current m.
  std::vector<Scalar> row(s + 1, Scalar(0));
  row[0] = Scalar(1);
  std::vector<Scalar> lp(s + 1, Scalar(1));
  for (long j = 1; j <= s; ++j) lp[j] = lp[j - 1] * lambda;
  for (long m = 1; m <= n; ++m)
    for (long j = std::min(m, s); j >= 1; --j) row[j] = row[j - 1] + lp[j] * row[j];
  return row[s];
}

int subgroup_rank(const std::vector<UnitMonomial>& xs) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& x : xs) rows.emplace_back(x.exps.begin(), x.exps.end());
  int rank = 0;
  for (int col = 0; col < kMaxVars && rank < static_cast<int>(rows.size()); ++col) {
    int piv = rank;
    while (piv < static_cast<int>(rows.size()) && rows[piv][col] == 0) ++piv;
    if (piv == static_cast<int>(rows.size())) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (int j = col; j < kMaxVars; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

int subgroup_rank(const std::vector<Scalar>& xs) {
  std::vector<UnitMonomial> us;
  for (const auto& x : xs) {
    auto u = as_unit_monomial(x);
    if (!u) fail(ErrorKind::Usage, "subgroup rank needs unit monomials; got " + x.to_string());
    us.push_back(*u);
  }
  return subgroup_rank(us);
}

}  // namespace hopfgrow
