#pragma once

#include <map>
#include <optional>
#include <vector>

#include "artin/field.hpp"
#include "artin/monomial.hpp"

namespace artin {

using TermMap = std::map<Monomial, Scalar, MonomialLess>;

// Element of the weighted-graded polynomial ring R = k[x_1,...,x_n].
// No zero coefficients are stored.
class Polynomial {
 public:
  Polynomial(VariableTable table, FieldDescriptor field)
      : table_(std::move(table)), field_(field) {}

  static Polynomial zero(const VariableTable& t, const FieldDescriptor& f) {
    return Polynomial(t, f);
  }
  static Polynomial constant(const VariableTable& t, const Scalar& c);
  static Polynomial variable(const VariableTable& t, const FieldDescriptor& f, int index);
  static Polynomial monomial_term(const VariableTable& t, Monomial m, Scalar c);

  const VariableTable& table() const { return table_; }
  const FieldDescriptor& field() const { return field_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // weighted; -1 for the zero polynomial
  std::optional<int> homogeneous_degree() const;
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& c) const;
  Polynomial pow(int k) const;
  Polynomial homogeneous_component(int d) const;
  std::vector<int> support_degrees() const;  // ascending, distinct

  // Image under x_i -> images[i]; the result lives over `target`.
  Polynomial substituted(const VariableTable& target,
                         const std::vector<Polynomial>& images) const;

  std::string str() const;  // canonical descending term order, e.g. "x^3+y^3"

  bool operator==(const Polynomial& o) const;

 private:
  void check_compatible(const Polynomial& o) const;

  VariableTable table_;
  FieldDescriptor field_;
  TermMap terms_;
};

// Element of the divided-power dualizing module D = k_DP[X_1,...,X_n].
// Exponent vectors denote X_1^[a_1]...X_n^[a_n].
class DividedPolynomial {
 public:
  DividedPolynomial(VariableTable table, FieldDescriptor field)
      : table_(std::move(table)), field_(field) {}

  static DividedPolynomial zero(const VariableTable& t, const FieldDescriptor& f) {
    return DividedPolynomial(t, f);
  }
  static DividedPolynomial monomial_term(const VariableTable& t, Monomial m, Scalar c);

  const VariableTable& table() const { return table_; }
  const FieldDescriptor& field() const { return field_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  std::optional<int> homogeneous_degree() const;
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  DividedPolynomial operator+(const DividedPolynomial& o) const;
  DividedPolynomial operator-(const DividedPolynomial& o) const;
  DividedPolynomial scaled(const Scalar& c) const;

  // Lift into a larger table; `embedding[i]` is the index of variable i
  // of this table inside `target`.
  DividedPolynomial embedded(const VariableTable& target,
                             const std::vector<int>& embedding) const;

  std::string str() const;  // e.g. "X^[2]*U*V+X*Y*V^[2]"

  bool operator==(const DividedPolynomial& o) const;

 private:
  void check_compatible(const DividedPolynomial& o) const;

  VariableTable table_;
  FieldDescriptor field_;
  TermMap terms_;
};

// Contraction action of R on D, extended bilinearly from
// x^a o X^[b] = X^[b-a] when b >= a componentwise, else 0. No binomial
// factors: contraction, not differentiation.
DividedPolynomial contract(const Polynomial& f, const DividedPolynomial& F);

// Divided-power product: per variable, X^[a] * X^[b] = C(a+b, a) X^[a+b],
// coefficients reduced in the field.
DividedPolynomial dp_multiply(const DividedPolynomial& F, const DividedPolynomial& G);

DividedPolynomial dp_power(const DividedPolynomial& F, int k);

}  // namespace artin
