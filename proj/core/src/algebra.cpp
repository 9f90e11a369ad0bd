#include "artin/algebra.hpp"

#include <algorithm>
#include <map>

namespace artin {

namespace {

// Column lookup for a fixed degree: exponent vector -> position in the
// canonical descending monomial list.
std::map<std::vector<int>, int> column_map(const std::vector<Monomial>& mons) {
  std::map<std::vector<int>, int> m;
  for (size_t i = 0; i < mons.size(); ++i) m.emplace(mons[i].exponents(), static_cast<int>(i));
  return m;
}

std::vector<Scalar> poly_coords(const Polynomial& f, const std::vector<Monomial>& mons,
                                const std::map<std::vector<int>, int>& columns,
                                const FieldDescriptor& field) {
  std::vector<Scalar> v(mons.size(), Scalar::zero(field));
  for (const auto& [m, c] : f.terms()) {
    auto it = columns.find(m.exponents());
    if (it == columns.end()) throw InputError("monomial outside the expected degree");
    v[it->second] = c;
  }
  return v;
}

}  // namespace

GradedAlgebra GradedAlgebra::build(AlgebraSpec spec) {
  GradedAlgebra a(std::move(spec));
  if (a.spec_.is_dual()) {
    const DividedPolynomial& f = a.spec_.dual_generator();
    if (!(f.table() == a.spec_.table) || !(f.field() == a.spec_.field))
      throw InputError("dual generator table/field mismatch");
    if (f.is_zero()) throw ZeroDualGeneratorError();
    if (!f.homogeneous_degree())
      throw InputError("dual generator must be homogeneous in the weighted grading");
    a.build_dual_route();
  } else {
    for (const auto& g : a.spec_.ideal_generators()) {
      if (!(g.table() == a.spec_.table) || !(g.field() == a.spec_.field))
        throw InputError("ideal generator table/field mismatch");
      if (!g.is_zero() && !g.homogeneous_degree())
        throw InputError("ideal generators must be homogeneous");
    }
    a.build_ideal_route();
  }
  a.index_basis();
  return a;
}

void GradedAlgebra::finalize_degree(int d, const RowSpace& ideal) {
  DegreeData data;
  data.monomials = monomials_of_degree(spec_.table, d);
  data.ideal_rows = ideal.to_matrix();
  data.ideal_pivots = ideal.pivots();
  std::vector<bool> is_pivot(data.monomials.size(), false);
  for (int p : ideal.pivots()) is_pivot[p] = true;
  for (size_t c = 0; c < data.monomials.size(); ++c)
    if (!is_pivot[c]) data.standard_columns.push_back(static_cast<int>(c));
  if (static_cast<int>(degrees_.size()) != d) throw MathError("Internal", "degree order broken");
  degrees_.push_back(std::move(data));
}

void GradedAlgebra::build_dual_route() {
  const DividedPolynomial& F = spec_.dual_generator();
  const int j = *F.homogeneous_degree();
  socle_degree_ = j;
  hilbert_.assign(j + 1, 0);
  for (int d = 0; d <= j; ++d) {
    const std::vector<Monomial> mons = monomials_of_degree(spec_.table, d);
    const std::vector<Monomial> duals = monomials_of_degree(spec_.table, j - d);
    const auto dual_cols = column_map(duals);
    // Catalecticant R_d -> D_{j-d}, m -> m o F; I_d is its kernel.
    ExactMatrix cat(static_cast<int>(duals.size()), static_cast<int>(mons.size()), spec_.field);
    for (size_t c = 0; c < mons.size(); ++c) {
      const Polynomial m = Polynomial::monomial_term(spec_.table, mons[c], Scalar::one(spec_.field));
      const DividedPolynomial img = contract(m, F);
      for (const auto& [dm, dc] : img.terms())
        cat.at(dual_cols.at(dm.exponents()), static_cast<int>(c)) = dc;
    }
    const ExactMatrix ker = kernel_basis(cat);
    RowSpace ideal(static_cast<int>(mons.size()), spec_.field);
    for (int r = 0; r < ker.rows(); ++r) ideal.insert(ker.row(r));
    finalize_degree(d, ideal);
    hilbert_[d] = static_cast<int>(mons.size()) - ideal.dim();
  }
}

void GradedAlgebra::build_ideal_route() {
  const int window = spec_.table.max_weight();
  const int cap = spec_.degree_cap;
  std::vector<std::vector<Polynomial>> ideal_polys;  // per degree
  std::vector<int> h;
  int zero_run = 0;
  int last_nonzero = 0;
  for (int d = 0;; ++d) {
    if (d > cap)
      throw NotArtinianError("quotient not Artinian within degree cap " + std::to_string(cap));
    const std::vector<Monomial> mons = monomials_of_degree(spec_.table, d);
    const auto cols = column_map(mons);
    RowSpace ideal(static_cast<int>(mons.size()), spec_.field);
    // Closure: sum_i x_i * I_{d - w_i}, then generators of degree d.
    for (int i = 0; i < spec_.table.size(); ++i) {
      const int src = d - spec_.table.weight(i);
      if (src < 0 || src >= static_cast<int>(ideal_polys.size())) continue;
      const Monomial xi = Monomial::variable(i, spec_.table);
      for (const Polynomial& p : ideal_polys[src])
        ideal.insert(poly_coords(p.times_monomial(xi, Scalar::one(spec_.field)), mons, cols,
                                 spec_.field));
    }
    for (const Polynomial& g : spec_.ideal_generators()) {
      if (g.is_zero()) continue;
      if (*g.homogeneous_degree() == d) ideal.insert(poly_coords(g, mons, cols, spec_.field));
    }
    std::vector<Polynomial> polys;
    for (const auto& row : ideal.rows()) {
      Polynomial p(spec_.table, spec_.field);
      for (size_t c = 0; c < row.size(); ++c) p.add_term(mons[c], row[c]);
      polys.push_back(std::move(p));
    }
    ideal_polys.push_back(std::move(polys));
    const int hd = static_cast<int>(mons.size()) - ideal.dim();
    finalize_degree(d, ideal);
    h.push_back(hd);
    if (hd == 0) {
      // Once the quotient vanishes in max-weight consecutive degrees, every
      // later monomial factors through the window.
      if (++zero_run >= window) break;
    } else {
      zero_run = 0;
      last_nonzero = d;
    }
  }
  socle_degree_ = last_nonzero;
  hilbert_.assign(h.begin(), h.begin() + last_nonzero + 1);
  degrees_.resize(last_nonzero + 1);
}

void GradedAlgebra::index_basis() {
  dimension_ = 0;
  for (int d = 0; d <= socle_degree_; ++d) {
    degrees_[d].block_start = dimension_;
    for (int c : degrees_[d].standard_columns) {
      basis_location_.emplace_back(d, c);
      ++dimension_;
    }
  }
  if (hilbert_.empty() || hilbert_[0] != 1)
    throw MathError("Internal", "graded algebra must have h_0 = 1");
}

const DegreeData& GradedAlgebra::degree_data(int d) const {
  if (d < 0 || d > socle_degree_) throw InputError("degree out of range");
  return degrees_[d];
}

std::pair<int, int> GradedAlgebra::block_range(int d) const {
  if (d < 0 || d > socle_degree_) return {dimension_, dimension_};
  const int start = degrees_[d].block_start;
  return {start, start + hilbert_[d]};
}

const Monomial& GradedAlgebra::basis_monomial(int g) const {
  const auto& [d, c] = basis_location_.at(g);
  return degrees_[d].monomials[c];
}

int GradedAlgebra::basis_degree(int g) const { return basis_location_.at(g).first; }

std::optional<int> GradedAlgebra::basis_index(const Monomial& m) const {
  const int d = m.degree();
  if (d > socle_degree_) return std::nullopt;
  const DegreeData& data = degrees_[d];
  for (size_t k = 0; k < data.standard_columns.size(); ++k)
    if (data.monomials[data.standard_columns[k]] == m)
      return data.block_start + static_cast<int>(k);
  return std::nullopt;
}

Element GradedAlgebra::zero_element() const {
  return Element{std::vector<Scalar>(dimension_, Scalar::zero(spec_.field)), std::nullopt};
}

Element GradedAlgebra::one_element() const {
  Element e = zero_element();
  e.coeffs[0] = Scalar::one(spec_.field);
  e.homogeneous_degree = 0;
  return e;
}

Element GradedAlgebra::basis_element(int g) const {
  Element e = zero_element();
  e.coeffs[g] = Scalar::one(spec_.field);
  e.homogeneous_degree = basis_degree(g);
  return e;
}

Element GradedAlgebra::element_from_coeffs(std::vector<Scalar> coeffs) const {
  if (static_cast<int>(coeffs.size()) != dimension_)
    throw InputError("coefficient vector length mismatch");
  Element e{std::move(coeffs), std::nullopt};
  std::optional<int> deg;
  bool homogeneous = true;
  for (int g = 0; g < dimension_; ++g) {
    if (e.coeffs[g].is_zero()) continue;
    if (!deg)
      deg = basis_degree(g);
    else if (*deg != basis_degree(g))
      homogeneous = false;
  }
  if (deg && homogeneous) e.homogeneous_degree = deg;
  return e;
}

std::vector<Scalar> GradedAlgebra::reduce_in_degree(const Polynomial& f_d, int d) const {
  const DegreeData& data = degrees_[d];
  const auto cols = column_map(data.monomials);
  std::vector<Scalar> v = poly_coords(f_d, data.monomials, cols, spec_.field);
  for (int r = 0; r < data.ideal_rows.rows(); ++r) {
    const Scalar c = v[data.ideal_pivots[r]];
    if (c.is_zero()) continue;
    for (int k = data.ideal_pivots[r]; k < data.ideal_rows.cols(); ++k)
      v[k] -= c * data.ideal_rows.at(r, k);
  }
  return v;
}

Element GradedAlgebra::normal_form(const Polynomial& f) const {
  if (!(f.table() == spec_.table) || !(f.field() == spec_.field))
    throw InputError("polynomial not over this algebra's ring");
  std::vector<Scalar> coeffs(dimension_, Scalar::zero(spec_.field));
  for (int d : f.support_degrees()) {
    if (d > socle_degree_) continue;
    const std::vector<Scalar> v = reduce_in_degree(f.homogeneous_component(d), d);
    const DegreeData& data = degrees_[d];
    for (size_t k = 0; k < data.standard_columns.size(); ++k)
      coeffs[data.block_start + static_cast<int>(k)] = v[data.standard_columns[k]];
  }
  return element_from_coeffs(std::move(coeffs));
}

Polynomial GradedAlgebra::element_to_polynomial(const Element& e) const {
  Polynomial p(spec_.table, spec_.field);
  for (int g = 0; g < dimension_; ++g)
    if (!e.coeffs[g].is_zero()) p.add_term(basis_monomial(g), e.coeffs[g]);
  return p;
}

Element GradedAlgebra::multiply(const Element& a, const Element& b) const {
  return normal_form(element_to_polynomial(a) * element_to_polynomial(b));
}

Element GradedAlgebra::add(const Element& a, const Element& b) const {
  std::vector<Scalar> c(a.coeffs);
  for (int g = 0; g < dimension_; ++g) c[g] += b.coeffs[g];
  return element_from_coeffs(std::move(c));
}

Element GradedAlgebra::scale(const Element& a, const Scalar& c) const {
  std::vector<Scalar> v(a.coeffs);
  for (auto& x : v) x *= c;
  return element_from_coeffs(std::move(v));
}

Element GradedAlgebra::power(const Element& a, int k) const {
  Element acc = one_element();
  for (int i = 0; i < k; ++i) acc = multiply(acc, a);
  return acc;
}

ExactMatrix GradedAlgebra::mult_operator(const Element& e) const {
  if (!e.coeffs[0].is_zero())
    throw NonNilpotentError("element has nonzero constant term " + e.coeffs[0].str());
  const Polynomial ep = element_to_polynomial(e);
  ExactMatrix m(dimension_, dimension_, spec_.field);
  for (int g = 0; g < dimension_; ++g) {
    const Element col = normal_form(ep.times_monomial(basis_monomial(g), Scalar::one(spec_.field)));
    for (int r = 0; r < dimension_; ++r) m.at(r, g) = col.coeffs[r];
  }
  return m;
}

std::vector<Polynomial> GradedAlgebra::ideal_degree_basis(int d) const {
  if (d < 0) throw InputError("negative degree");
  std::vector<Polynomial> out;
  if (d <= socle_degree_) {
    const DegreeData& data = degrees_[d];
    for (int r = 0; r < data.ideal_rows.rows(); ++r) {
      Polynomial p(spec_.table, spec_.field);
      for (int c = 0; c < data.ideal_rows.cols(); ++c)
        p.add_term(data.monomials[c], data.ideal_rows.at(r, c));
      out.push_back(std::move(p));
    }
  } else {
    // Beyond the socle degree the ideal is all of R_d.
    for (const Monomial& m : monomials_of_degree(spec_.table, d))
      out.push_back(Polynomial::monomial_term(spec_.table, m, Scalar::one(spec_.field)));
  }
  return out;
}

std::vector<std::pair<int, int>> GradedAlgebra::minimal_generator_degrees() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& g : minimal_generators()) {
    const int d = *g.homogeneous_degree();
    if (!out.empty() && out.back().first == d)
      ++out.back().second;
    else
      out.emplace_back(d, 1);
  }
  return out;
}

std::vector<Polynomial> GradedAlgebra::minimal_generators() const {
  std::vector<Polynomial> gens;
  const int top = socle_degree_ + spec_.table.max_weight();
  for (int d = 1; d <= top; ++d) {
    const std::vector<Monomial> mons = monomials_of_degree(spec_.table, d);
    if (mons.empty()) continue;
    const auto cols = column_map(mons);
    RowSpace old(static_cast<int>(mons.size()), spec_.field);
    for (int i = 0; i < spec_.table.size(); ++i) {
      const int src = d - spec_.table.weight(i);
      if (src < 0) continue;
      const Monomial xi = Monomial::variable(i, spec_.table);
      for (const Polynomial& p : ideal_degree_basis(src))
        old.insert(poly_coords(p.times_monomial(xi, Scalar::one(spec_.field)), mons, cols,
                               spec_.field));
    }
    for (const Polynomial& p : ideal_degree_basis(d)) {
      const auto inserted = old.insert(poly_coords(p, mons, cols, spec_.field));
      if (!inserted) continue;
      Polynomial g(spec_.table, spec_.field);
      for (size_t c = 0; c < inserted->size(); ++c) g.add_term(mons[c], (*inserted)[c]);
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

std::vector<Polynomial> GradedAlgebra::generating_set() const {
  if (!spec_.is_dual()) {
    std::vector<Polynomial> gens;
    for (const auto& g : spec_.ideal_generators())
      if (!g.is_zero()) gens.push_back(g);
    return gens;
  }
  return minimal_generators();
}

std::vector<int> GradedAlgebra::local_hilbert() const {
  std::vector<int> dims{dimension_};
  // m^1 = span of the positive-degree standard basis.
  std::vector<Element> current;
  for (int g = 0; g < dimension_; ++g)
    if (basis_degree(g) >= 1) current.push_back(basis_element(g));
  dims.push_back(static_cast<int>(current.size()));
  while (!current.empty()) {
    RowSpace next(dimension_, spec_.field);
    std::vector<Element> basis;
    for (int i = 0; i < spec_.table.size(); ++i) {
      const Polynomial xi = Polynomial::variable(spec_.table, spec_.field, i);
      for (const Element& b : current) {
        const Element prod = normal_form(xi * element_to_polynomial(b));
        if (auto row = next.insert(prod.coeffs)) basis.push_back(element_from_coeffs(*row));
      }
    }
    dims.push_back(next.dim());
    current = std::move(basis);
    if (dims.back() == 0) break;
  }
  std::vector<int> h;
  for (size_t i = 0; i + 1 < dims.size(); ++i) h.push_back(dims[i] - dims[i + 1]);
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

}  // namespace artin
