#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

// An ordered list of named variables with positive integer weights.
// The declared order is fixed and determines the monomial order.
class VariableTable {
 public:
  VariableTable() = default;
  VariableTable(std::vector<std::string> names, std::vector<int> weights);

  static VariableTable standard(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  int weight(int i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  int max_weight() const;
  bool is_standard() const;  // all weights 1

  std::optional<int> index_of(const std::string& name) const;
  // Divided-power (dual) variable names are the upper-cased ring names.
  std::string dual_name(int i) const;
  std::optional<int> index_of_dual(const std::string& name) const;

  bool operator==(const VariableTable& o) const = default;

  // Throws on name clashes; weights are inherited.
  static VariableTable disjoint_union(const VariableTable& a, const VariableTable& b);
  VariableTable with_appended(const std::string& name, int weight) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

}  // namespace artin
