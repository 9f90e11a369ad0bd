#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "artin/matrix.hpp"
#include "artin/polynomial.hpp"

namespace artin {

struct DualPresentation {
  DividedPolynomial generator;
};

struct IdealPresentation {
  std::vector<Polynomial> generators;
};

struct AlgebraSpec {
  FieldDescriptor field;
  VariableTable table;
  std::variant<IdealPresentation, DualPresentation> presentation;
  std::string label;
  int degree_cap = 64;  // ideal route: Artinian detection cap

  bool is_dual() const { return std::holds_alternative<DualPresentation>(presentation); }
  const DividedPolynomial& dual_generator() const {
    return std::get<DualPresentation>(presentation).generator;
  }
  const std::vector<Polynomial>& ideal_generators() const {
    return std::get<IdealPresentation>(presentation).generators;
  }
};

// Element of a graded algebra, as coordinates over the concatenated
// standard-monomial basis. Operations live on GradedAlgebra.
struct Element {
  std::vector<Scalar> coeffs;
  std::optional<int> homogeneous_degree;  // set iff nonzero and homogeneous

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }
};

// Per-degree bases of one graded piece.
struct DegreeData {
  std::vector<Monomial> monomials;     // canonical descending order
  ExactMatrix ideal_rows;              // RREF basis of I_d over `monomials`
  std::vector<int> ideal_pivots;       // pivot column per ideal row
  std::vector<int> standard_columns;   // non-pivot columns, ascending
  int block_start = 0;                 // first global basis index of this degree
};

// A weighted-graded Artinian quotient, built either from a Macaulay dual
// generator (I_d = kernel of the catalecticant R_d -> D_{j-d}) or from
// homogeneous ideal generators (degree-by-degree closure). Immutable after
// build; all queries are pure.
class GradedAlgebra {
 public:
  static GradedAlgebra build(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  const FieldDescriptor& field() const { return spec_.field; }
  const VariableTable& table() const { return spec_.table; }
  const std::string& label() const { return spec_.label; }

  int socle_degree() const { return socle_degree_; }
  int dimension() const { return dimension_; }
  const std::vector<int>& hilbert() const { return hilbert_; }
  // m-adic Hilbert function, m = (positive-degree part); computed by
  // iterating spans of variable multiples until zero.
  std::vector<int> local_hilbert() const;

  const DegreeData& degree_data(int d) const;
  int hilbert_at(int d) const {
    return d >= 0 && d <= socle_degree_ ? hilbert_[d] : 0;
  }
  // Global index range [start, end) of the degree-d block.
  std::pair<int, int> block_range(int d) const;

  const Monomial& basis_monomial(int global_index) const;
  int basis_degree(int global_index) const;
  std::optional<int> basis_index(const Monomial& m) const;

  Element zero_element() const;
  Element one_element() const;
  Element basis_element(int global_index) const;
  Element element_from_coeffs(std::vector<Scalar> coeffs) const;
  // Image of f in A over standard monomials; components beyond the socle
  // degree vanish.
  Element normal_form(const Polynomial& f) const;
  Polynomial element_to_polynomial(const Element& e) const;
  Element multiply(const Element& a, const Element& b) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Scalar& c) const;
  Element power(const Element& a, int k) const;

  // Matrix of b -> e*b over the concatenated basis; requires zero constant
  // term so the operator is nilpotent.
  ExactMatrix mult_operator(const Element& e) const;

  // Echelonized basis of I_d as polynomials; for d beyond the socle degree
  // this spans all of R_d.
  std::vector<Polynomial> ideal_degree_basis(int d) const;
  // (degree, count) of minimal generators: count_d = dim I_d - dim(sum_i x_i I_{d-w_i}).
  std::vector<std::pair<int, int>> minimal_generator_degrees() const;
  std::vector<Polynomial> minimal_generators() const;
  // A generating set of the defining ideal: the given generators for ideal
  // presentations, extracted minimal generators for dual ones.
  std::vector<Polynomial> generating_set() const;

  // Coordinates of the degree-d homogeneous polynomial over
  // monomials_of_degree(d), reduced modulo I_d (pivot coordinates vanish).
  std::vector<Scalar> reduce_in_degree(const Polynomial& f_d, int d) const;

 private:
  explicit GradedAlgebra(AlgebraSpec spec) : spec_(std::move(spec)) {}
  void build_dual_route();
  void build_ideal_route();
  void finalize_degree(int d, const RowSpace& ideal);
  void index_basis();

  AlgebraSpec spec_;
  int socle_degree_ = 0;
  int dimension_ = 0;
  std::vector<int> hilbert_;
  std::vector<DegreeData> degrees_;
  std::vector<std::pair<int, int>> basis_location_;  // global index -> (degree, column)
};

}  // namespace artin
