#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hopfgrow {

// Element of Z^r x Z/m_1 x ... x Z/m_t: free coordinates first, torsion
// coordinates kept in [0, m_j).
using GroupElem = boost::container::small_vector<int32_t, 4>;

struct GroupElemHash {
  size_t operator()(const GroupElem& g) const noexcept {
    size_t h = 0x9e3779b97f4a7c15ULL;
    for (int32_t x : g) h = (h ^ static_cast<size_t>(static_cast<uint32_t>(x))) * 0x100000001b3ULL;
    return h;
  }
};

class Group {
 public:
  Group() = default;
  Group(int free_rank, std::vector<int> torsion, std::vector<std::string> names = {});

  int free_rank() const { return free_rank_; }
  const std::vector<int>& torsion() const { return torsion_; }
  int num_generators() const { return free_rank_ + static_cast<int>(torsion_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  bool is_torsion_coord(int j) const { return j >= free_rank_; }
  int modulus(int j) const { return torsion_[j - free_rank_]; }

  GroupElem identity() const { return GroupElem(num_generators(), 0); }
  GroupElem generator(int j, int power = 1) const;
  GroupElem mul(const GroupElem& a, const GroupElem& b) const;
  GroupElem inv(const GroupElem& a) const;
  GroupElem pow(const GroupElem& a, long e) const;
  GroupElem canonical(GroupElem a) const;
  bool is_identity(const GroupElem& a) const;

  // Sum of |e| over free coordinates plus min(e, m - e) over torsion ones.
  int length(const GroupElem& a) const;
  // 0 means infinite order.
  long order(const GroupElem& a) const;
  // All elements of length at most b, in a deterministic order.
  std::vector<GroupElem> ball(int b) const;
  // Deterministic total order: length first, then coordinates.
  bool less(const GroupElem& a, const GroupElem& b) const;

  std::string to_string(const GroupElem& a) const;

 private:
  int free_rank_ = 0;
  std::vector<int> torsion_;
  std::vector<std::string> names_;
};

}  // namespace hopfgrow
