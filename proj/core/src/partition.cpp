#include "artin/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace artin {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InputError("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> values) {
  for (int v : values)
    if (v < 0) throw InputError("negative partition part");
  std::sort(values.begin(), values.end(), std::greater<int>());
  while (!values.empty() && values.back() == 0) values.pop_back();
  return Partition(std::move(values));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int i = 1; i <= largest(); ++i) {
    int count = 0;
    for (int p : parts_)
      if (p >= i) ++count;
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

Dominance dominance_compare(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw SizeMismatchError("dominance is defined within one total: " +
                            std::to_string(p.size()) + " vs " + std::to_string(q.size()));
  const size_t n = std::max(p.parts().size(), q.parts().size());
  bool le = true, ge = true;
  long sp = 0, sq = 0;
  for (size_t i = 0; i < n; ++i) {
    sp += i < p.parts().size() ? p.parts()[i] : 0;
    sq += i < q.parts().size() ? q.parts()[i] : 0;
    if (sp > sq) le = false;
    if (sp < sq) ge = false;
  }
  if (le && ge) return Dominance::EQ;
  if (le) return Dominance::LT;
  if (ge) return Dominance::GT;
  return Dominance::INCOMPARABLE;
}

const char* dominance_name(Dominance d) {
  switch (d) {
    case Dominance::LT: return "LT";
    case Dominance::GT: return "GT";
    case Dominance::EQ: return "EQ";
    default: return "INCOMPARABLE";
  }
}

Partition jordan_type_from_ranks(int dim, const std::vector<int>& ranks) {
  if (dim < 0) throw InputError("negative dimension");
  std::vector<int> r;
  r.push_back(dim);
  for (int x : ranks) r.push_back(x);
  if (r.back() != 0) throw InvalidRankSequenceError("rank sequence does not reach 0");
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i] >= r[i - 1] && !(r[i] == 0 && r[i - 1] == 0))
      throw InvalidRankSequenceError("rank sequence not strictly decreasing");
  // #parts >= k is d_k = r_{k-1} - r_k; these must weakly decrease.
  std::vector<int> at_least;
  for (size_t k = 1; k < r.size(); ++k) at_least.push_back(r[k - 1] - r[k]);
  for (size_t i = 1; i < at_least.size(); ++i)
    if (at_least[i] > at_least[i - 1])
      throw InvalidRankSequenceError("rank differences not weakly decreasing");
  std::vector<int> parts;
  for (size_t k = at_least.size(); k-- > 0;) {
    const int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    for (int c = 0; c < exactly; ++c) parts.push_back(static_cast<int>(k) + 1);
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

}  // namespace artin
