#pragma once

#include <optional>
#include <vector>

#include "artin/variables.hpp"

namespace artin {

// Exponent vector with cached weighted degree. The same representation
// carries ring monomials x^a and divided-power monomials X^[a].
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<int> exponents, const VariableTable& table);

  static Monomial unit(const VariableTable& table);
  static Monomial variable(int index, const VariableTable& table);

  const std::vector<int>& exponents() const { return exps_; }
  int exponent(int i) const { return exps_[i]; }
  int degree() const { return wdeg_; }  // weighted
  int total_exponent() const;
  bool is_unit() const { return wdeg_ == 0; }
  int num_vars() const { return static_cast<int>(exps_.size()); }

  Monomial times(const Monomial& o) const;
  // Componentwise division; nullopt unless o divides this.
  std::optional<Monomial> divided_by(const Monomial& o) const;
  bool divisible_by(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  Monomial(std::vector<int> exps, int wdeg) : exps_(std::move(exps)), wdeg_(wdeg) {}

  std::vector<int> exps_;
  int wdeg_ = 0;
};

// Canonical order: weighted degree first, ties by graded reverse
// lexicographic in the declared variable order. Ascending comparator,
// suitable for std::map; enumerations list monomials descending.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

bool grevlex_less(const Monomial& a, const Monomial& b);  // same degree assumed

// All monomials of weighted degree exactly d, canonically ordered descending.
std::vector<Monomial> monomials_of_degree(const VariableTable& table, int d);

}  // namespace artin
