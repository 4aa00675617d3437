#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfgrow {

using Rational = mpq_class;

// Exact root of unity exp(2 pi i * num/den), stored reduced with 0 <= num < den.
struct Root {
  long num = 0;
  long den = 1;

  static Root make(long num, long den);
  Root operator*(const Root& o) const;
  Root inverse() const;
  Root pow(long e) const;
  long order() const { return den; }
  bool is_one() const { return num == 0; }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

// Element of Q(zeta_N), stored on the power basis 1, zeta, ..., zeta^(phi(N)-1).
// Values with different N are promoted to the lcm when combined; rational values
// are always kept at N = 1.
class CycloRational {
 public:
  CycloRational() : n_(1), c_(1) {}
  CycloRational(long v) : n_(1), c_(1, Rational(v)) {}  // NOLINT
  CycloRational(const Rational& v) : n_(1), c_(1, v) {}  // NOLINT

  static CycloRational root_of_unity(long n, long a);
  static CycloRational from_root(const Root& r) { return root_of_unity(r.den, r.num); }
  static CycloRational from_coeffs(int n, std::vector<Rational> coeffs);

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return n_ == 1; }
  const Rational& rational_part() const { return c_[0]; }

  CycloRational promoted(int n) const;
  CycloRational inverse() const;
  CycloRational pow(long e) const;
  std::optional<Root> as_root() const;

  CycloRational operator-() const;
  CycloRational& operator+=(const CycloRational& o);
  CycloRational& operator-=(const CycloRational& o);
  CycloRational& operator*=(const CycloRational& o);
  friend CycloRational operator+(CycloRational a, const CycloRational& b) { return a += b; }
  friend CycloRational operator-(CycloRational a, const CycloRational& b) { return a -= b; }
  friend CycloRational operator*(CycloRational a, const CycloRational& b) { return a *= b; }
  friend CycloRational operator/(const CycloRational& a, const CycloRational& b) { return a * b.inverse(); }
  friend bool operator==(const CycloRational& a, const CycloRational& b);

  std::string to_string() const;

 private:
  void demote();
  int n_;
  std::vector<Rational> c_;
};

int euler_phi(int n);
long lcm_long(long a, long b);

inline constexpr int kMaxVars = 8;
using Exps = std::array<int32_t, kMaxVars>;

// Laurent polynomial in the transcendentals q_1..q_k with cyclotomic coefficients.
class LaurentPoly {
 public:
  struct Term {
    Exps e;
    CycloRational c;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(const CycloRational& c);
  static LaurentPoly monomial(const CycloRational& c, const Exps& e);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }
  bool is_one() const;
  int max_var() const;  // index of the highest variable in use, or -1

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const CycloRational& c, const Exps& shift) const;
  Exps min_exps() const;
  // Exact quotient a / b when b divides a in the Laurent ring.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void canonicalize();
  std::vector<Term> t_;
};

struct UnitMonomial;

// Element of Q(zeta)(q_1..q_k): a reduced fraction of Laurent polynomials.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : num_(CycloRational(v)), den_(CycloRational(1)) {}  // NOLINT
  Scalar(const Rational& v) : num_(CycloRational(v)), den_(CycloRational(1)) {}  // NOLINT
  Scalar(const CycloRational& v) : num_(v), den_(CycloRational(1)) {}  // NOLINT
  Scalar(LaurentPoly num, LaurentPoly den);

  static Scalar var(int i, int power = 1);
  static Scalar root(const Root& r) { return Scalar(CycloRational::from_root(r)); }
  static Scalar from_unit(const UnitMonomial& u);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_one(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(long e) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_{CycloRational(1)};
};

// A scalar of the form root * q^exps; these form the group the invariants live in.
struct UnitMonomial {
  Root root;
  Exps exps{};

  UnitMonomial operator*(const UnitMonomial& o) const;
  UnitMonomial inverse() const;
  UnitMonomial pow(long e) const;
  bool is_one() const;
  bool is_root_of_unity() const;
  friend bool operator==(const UnitMonomial&, const UnitMonomial&) = default;
  friend auto operator<=>(const UnitMonomial&, const UnitMonomial&) = default;
};

std::optional<UnitMonomial> as_unit_monomial(const Scalar& s);

struct Order {
  enum class Kind { Finite, Infinite, NotUnitMonomial };
  Kind kind = Kind::Finite;
  long value = 0;  // meaningful for Finite

  bool finite() const { return kind == Kind::Finite; }
  bool nontrivial_root() const { return finite() && value > 1; }
};

// Throws a usage error for zero.
Order multiplicative_order(const Scalar& x);

// Gaussian binomial (n choose s)_lambda via the q-Pascal recurrence.
Scalar quantum_binomial(long n, long s, const Scalar& lambda);

// Rank of the subgroup of k^x generated by unit monomials; throws on anything else.
int subgroup_rank(const std::vector<Scalar>& xs);
int subgroup_rank(const std::vector<UnitMonomial>& xs);

}  // namespace hopfgrow
