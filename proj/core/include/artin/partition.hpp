#pragma once

#include <string>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

// Weakly decreasing positive integers.
class Partition {
 public:
  Partition() = default;  // the empty partition of 0
  explicit Partition(std::vector<int> parts);

  // Sorts descending and drops zeros; negative entries are rejected.
  static Partition from_unsorted(std::vector<int> values);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  int count() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i]; }
  int largest() const { return parts_.empty() ? 0 : parts_[0]; }

  Partition conjugate() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

  std::string str() const;  // "4,2,2,1"; "0" for the empty partition

 private:
  std::vector<int> parts_;
};

enum class Dominance { LT, GT, EQ, INCOMPARABLE };

// Dominance order by prefix sums; defined within one total only.
// Throws SizeMismatchError when the sizes differ.
Dominance dominance_compare(const Partition& p, const Partition& q);

const char* dominance_name(Dominance d);

// Partition of block sizes from the rank sequence [rank M, rank M^2, ...]
// of a nilpotent operator on a dim-dimensional space; the sequence must
// reach 0. Parts >= k number r_{k-1} - r_k with r_0 = dim.
Partition jordan_type_from_ranks(int dim, const std::vector<int>& ranks);

}  // namespace artin
