#include "artin/variables.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace artin {

VariableTable::VariableTable(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size())
    throw InputError("variable table: names/weights length mismatch");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("empty variable name");
    if (!seen.insert(n).second) throw InputError("duplicate variable name: " + n);
  }
  for (int w : weights_)
    if (w < 1) throw InputError("variable weights must be >= 1");
}

VariableTable VariableTable::standard(std::vector<std::string> names) {
  std::vector<int> w(names.size(), 1);
  return VariableTable(std::move(names), std::move(w));
}

int VariableTable::max_weight() const {
  return weights_.empty() ? 1 : *std::max_element(weights_.begin(), weights_.end());
}

bool VariableTable::is_standard() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::optional<int> VariableTable::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::string VariableTable::dual_name(int i) const {
  std::string s = names_[i];
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::optional<int> VariableTable::index_of_dual(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (dual_name(i) == name) return i;
  return std::nullopt;
}

VariableTable VariableTable::disjoint_union(const VariableTable& a, const VariableTable& b) {
  std::vector<std::string> names = a.names_;
  std::vector<int> weights = a.weights_;
  for (int i = 0; i < b.size(); ++i) {
    if (a.index_of(b.name(i)))
      throw InputError("variable name clash in union: " + b.name(i));
    names.push_back(b.name(i));
    weights.push_back(b.weight(i));
  }
  return VariableTable(std::move(names), std::move(weights));
}

VariableTable VariableTable::with_appended(const std::string& name, int weight) const {
  if (index_of(name)) throw InputError("variable already present: " + name);
  std::vector<std::string> names = names_;
  std::vector<int> weights = weights_;
  names.push_back(name);
  weights.push_back(weight);
  return VariableTable(std::move(names), std::move(weights));
}

}  // namespace artin
