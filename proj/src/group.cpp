#include "hopfgrow/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "hopfgrow/error.hpp"

namespace hopfgrow {

Group::Group(int free_rank, std::vector<int> torsion, std::vector<std::string> names)
    : free_rank_(free_rank), torsion_(std::move(torsion)), names_(std::move(names)) {
  if (free_rank_ < 0) fail(ErrorKind::Usage, "negative free rank");
  for (int m : torsion_)
    if (m < 2) fail(ErrorKind::Usage, "torsion orders must be at least 2");
  if (names_.empty())
    for (int j = 0; j < num_generators(); ++j) names_.push_back("g" + std::to_string(j + 1));
  if (static_cast<int>(names_.size()) != num_generators())
    fail(ErrorKind::Usage, "group generator names do not match the rank");
}

GroupElem Group::generator(int j, int power) const {
  GroupElem g = identity();
  g[j] = power;
  return canonical(std::move(g));
}

GroupElem Group::canonical(GroupElem a) const {
  for (int j = free_rank_; j < num_generators(); ++j) {
    int m = modulus(j);
    a[j] %= m;
    if (a[j] < 0) a[j] += m;
  }
  return a;
}

GroupElem Group::mul(const GroupElem& a, const GroupElem& b) const {
  GroupElem r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
  return canonical(std::move(r));
}

GroupElem Group::inv(const GroupElem& a) const {
  GroupElem r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[j] = -a[j];
  return canonical(std::move(r));
}

GroupElem Group::pow(const GroupElem& a, long e) const {
  GroupElem r(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    long v = a[j] * e;
    if (is_torsion_coord(static_cast<int>(j))) v %= modulus(static_cast<int>(j));
    r[j] = static_cast<int32_t>(v);
  }
  return canonical(std::move(r));
}

bool Group::is_identity(const GroupElem& a) const {
  return std::all_of(a.begin(), a.end(), [](int32_t x) { return x == 0; });
}

int Group::length(const GroupElem& a) const {
  int len = 0;
  for (int j = 0; j < num_generators(); ++j) {
    if (is_torsion_coord(j)) len += std::min<int>(a[j], modulus(j) - a[j]);
    else len += std::abs(a[j]);
  }
  return len;
}

long Group::order(const GroupElem& a) const {
  for (int j = 0; j < free_rank_; ++j)
    if (a[j] != 0) return 0;
  long o = 1;
  for (int j = free_rank_; j < num_generators(); ++j) {
    long m = modulus(j);
    long g = std::gcd<long>(a[j], m);
    o = std::lcm(o, m / g);
  }
  return o;
}

std::vector<GroupElem> Group::ball(int b) const {
  std::vector<GroupElem> out;
  GroupElem cur = identity();
  // Enumerate coordinate boxes and keep those within the length bound.
  std::function<void(int, int)> rec = [&](int j, int used) {
    if (j == num_generators()) {
      out.push_back(cur);
      return;
    }
    if (is_torsion_coord(j)) {
      int m = modulus(j);
      for (int e = 0; e < m; ++e) {
        int l = std::min(e, m - e);
        if (used + l > b) continue;
        cur[j] = e;
        rec(j + 1, used + l);
      }
    } else {
      for (int e = -(b - used); e <= b - used; ++e) {
        cur[j] = e;
        rec(j + 1, used + std::abs(e));
      }
    }
    cur[j] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), [this](const GroupElem& x, const GroupElem& y) { return less(x, y); });
  return out;
}

bool Group::less(const GroupElem& a, const GroupElem& b) const {
  int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string Group::to_string(const GroupElem& a) const {
  std::string s;
  for (int j = 0; j < num_generators(); ++j) {
    if (a[j] == 0) continue;
    if (!s.empty()) s += " ";
    s += names_[j];
    if (a[j] != 1) s += "^" + std::to_string(a[j]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace hopfgrow
