#include "artin/deformation.hpp"

namespace artin {

namespace {

std::vector<Scalar> block_coords(const GradedAlgebra& a, const Element& e, int d) {
  const auto [start, end] = a.block_range(d);
  return std::vector<Scalar>(e.coeffs.begin() + start, e.coeffs.begin() + end);
}

Element element_from_block(const GradedAlgebra& a, const std::vector<Scalar>& block, int d) {
  std::vector<Scalar> coeffs(a.dimension(), Scalar::zero(a.field()));
  const auto [start, end] = a.block_range(d);
  for (int i = start; i < end; ++i) coeffs[i] = block[i - start];
  return a.element_from_coeffs(std::move(coeffs));
}

// Canonical preimage under pi of a homogeneous element of B: solve on the
// degree piece with free coordinates zero.
Element canonical_preimage(const ExtensionTriple& t, const Element& b_elem) {
  if (b_elem.is_zero()) return t.C.zero_element();
  const int d = *b_elem.homogeneous_degree;
  const ExactMatrix pi_d = map_degree_matrix(t.pi, t.C, t.B, d);
  const auto x = solve(pi_d, block_coords(t.B, b_elem, d));
  if (!x)
    throw MathError("Internal", "no preimage under a surjective projection (degree " +
                                    std::to_string(d) + ")");
  return element_from_block(t.C, *x, d);
}

}  // namespace

int SectionData::index_of(int chain, int power, int a_index) const {
  int offset = 0;
  for (int j = 0; j < chain; ++j) offset += chains[j].length;
  return (offset + power) * a_dimension + a_index;
}

SectionData build_section(const ExtensionTriple& t, const Element& ell_B) {
  const ExtensionReport rep = verify_free_extension(t);
  if (!rep.verdict)
    throw NotFreeExtensionError("build_section requires a verified free extension: " +
                                rep.failure_detail);
  SectionData s;
  s.ell_B = ell_B;
  s.chains = jordan_chain_basis(t.B, ell_B);
  s.lambda = canonical_preimage(t, ell_B);
  for (const JordanChain& ch : s.chains) s.v.push_back(canonical_preimage(t, ch.generator));

  // Column order: chain j outermost, then power i, then the A monomial.
  s.a_dimension = t.A.dimension();
  const int dim_c = t.C.dimension();
  std::vector<std::vector<Scalar>> columns;
  const Polynomial lambda_poly = t.C.element_to_polynomial(s.lambda);
  std::vector<Polynomial> iota_mono;
  for (int a = 0; a < t.A.dimension(); ++a) {
    const Polynomial mono =
        Polynomial::monomial_term(t.A.table(), t.A.basis_monomial(a), Scalar::one(t.A.field()));
    iota_mono.push_back(t.iota.apply(mono));
  }
  for (size_t j = 0; j < s.chains.size(); ++j) {
    Element w = s.v[j];  // Lambda^i v_j
    for (int i = 0; i < s.chains[j].length; ++i) {
      if (i > 0) w = t.C.normal_form(lambda_poly * t.C.element_to_polynomial(w));
      const Polynomial w_poly = t.C.element_to_polynomial(w);
      for (int a = 0; a < t.A.dimension(); ++a) {
        const Element col = t.C.normal_form(iota_mono[a] * w_poly);
        columns.push_back(col.coeffs);
        s.labels.push_back({static_cast<int>(j), i, a});
      }
    }
  }
  if (static_cast<int>(columns.size()) != dim_c)
    throw NotFreeExtensionError("A-module basis has wrong cardinality");
  s.basis_map = ExactMatrix(dim_c, dim_c, t.C.field());
  for (int c = 0; c < dim_c; ++c)
    for (int r = 0; r < dim_c; ++r) s.basis_map.at(r, c) = columns[c][r];
  auto inv = inverse(s.basis_map);
  if (!inv)
    throw NotFreeExtensionError(
        "the elements iota(a) Lambda^i v_j do not form a basis of C");
  s.basis_map_inv = std::move(*inv);
  return s;
}

DeformationFamily build_family(const ExtensionTriple& t, const Element& ell_A,
                               const Element& ell_B) {
  DeformationFamily f{t, build_section(t, ell_B), ell_A};
  f.ell_A_zero = ell_A.is_zero();
  if (!f.ell_A_zero && !(ell_A.homogeneous_degree && *ell_A.homogeneous_degree == 1))
    throw NotLinearError("ell_A must be homogeneous of degree 1 (or zero)");

  const GradedAlgebra& A = f.triple.A;
  const GradedAlgebra& C = f.triple.C;
  const SectionData& s = f.section;
  const int dim_c = C.dimension();

  const Element iota_ell_A =
      C.normal_form(f.triple.iota.apply(A.element_to_polynomial(ell_A)));
  const ExactMatrix m_ell_a_c = C.mult_operator(iota_ell_A);
  f.mult_iota_ell_A = s.basis_map_inv.multiply(m_ell_a_c).multiply(s.basis_map);

  for (const auto& label : s.labels)
    f.chain_degree.push_back(label.power +
                             s.chains[label.chain].generator.homogeneous_degree.value_or(0));

  // Basis coordinates of the chain tops Lambda^{q_j} v_j, which lie in
  // iota(m_A) C; their expansion carries the t-powers of Psi_t.
  const Polynomial lambda_poly = C.element_to_polynomial(s.lambda);
  std::vector<std::vector<Scalar>> top_coords;
  for (size_t j = 0; j < s.chains.size(); ++j) {
    Element w = s.v[j];
    for (int i = 0; i < s.chains[j].length; ++i)
      w = C.normal_form(lambda_poly * C.element_to_polynomial(w));
    top_coords.push_back(s.basis_map_inv.apply(w.coeffs));
  }

  for (int p = 0; p <= A.socle_degree(); ++p)
    f.psi_powers.emplace_back(dim_c, dim_c, C.field());
  for (size_t col = 0; col < s.labels.size(); ++col) {
    const auto& lb = s.labels[col];
    if (lb.power + 1 < s.chains[lb.chain].length) {
      // Psi_t passes iota(a) Lambda^i v_j to iota(a) Lambda^{i+1} v_j.
      f.psi_powers[0].at(s.index_of(lb.chain, lb.power + 1, lb.a_index),
                         static_cast<int>(col)) = Scalar::one(C.field());
      continue;
    }
    // Top of the chain: a * psi_t(Lambda^{q_j} v_j). Every coordinate of
    // the top lies over a positive-degree A monomial, so p >= 1.
    const std::vector<Scalar>& zeta = top_coords[lb.chain];
    const Monomial& a_mono = A.basis_monomial(lb.a_index);
    for (size_t k = 0; k < zeta.size(); ++k) {
      if (zeta[k].is_zero()) continue;
      const auto& term = s.labels[k];
      const int p = A.basis_degree(term.a_index);
      if (p == 0)
        throw MathError("Internal", "chain top not inside iota(m_A) C");
      const Element prod = A.normal_form(Polynomial::monomial_term(
          A.table(), a_mono.times(A.basis_monomial(term.a_index)), Scalar::one(A.field())));
      for (int m = 0; m < A.dimension(); ++m)
        if (!prod.coeffs[m].is_zero())
          f.psi_powers[p].at(s.index_of(term.chain, term.power, m), static_cast<int>(col)) +=
              zeta[k] * prod.coeffs[m];
    }
  }

  // Multiplication by ell_A (x) 1 + 1 (x) ell_B on A (x) B over the basis
  // {a (x) ell_B^i z_j}: an A-expansion plus the chain shift.
  f.tensor_mult = ExactMatrix(dim_c, dim_c, C.field());
  const Polynomial ell_a_poly = A.element_to_polynomial(ell_A);
  for (size_t col = 0; col < s.labels.size(); ++col) {
    const auto& lb = s.labels[col];
    const Element prod = A.normal_form(
        ell_a_poly.times_monomial(A.basis_monomial(lb.a_index), Scalar::one(A.field())));
    for (int a = 0; a < A.dimension(); ++a)
      if (!prod.coeffs[a].is_zero())
        f.tensor_mult.at(s.index_of(lb.chain, lb.power, a), static_cast<int>(col)) =
            prod.coeffs[a];
    if (lb.power + 1 < s.chains[lb.chain].length)
      f.tensor_mult.at(s.index_of(lb.chain, lb.power + 1, lb.a_index), static_cast<int>(col)) +=
          Scalar::one(C.field());
  }
  return f;
}

ExactMatrix DeformationFamily::L_at(const Scalar& t) const {
  ExactMatrix l = mult_iota_ell_A;
  for (size_t p = 0; p < psi_powers.size(); ++p) {
    const Scalar tp = t.pow(static_cast<long>(p));
    if (!tp.is_zero()) l = l + psi_powers[p].scaled(tp);
  }
  return l;
}

ExactMatrix DeformationFamily::chi_at(const Scalar& t) const {
  ExactMatrix chi(static_cast<int>(chain_degree.size()), static_cast<int>(chain_degree.size()),
                  triple.C.field());
  for (size_t i = 0; i < chain_degree.size(); ++i)
    chi.at(static_cast<int>(i), static_cast<int>(i)) = t.pow(chain_degree[i]);
  return chi;
}

Element DeformationFamily::ell_t(const Scalar& t) const {
  const GradedAlgebra& C = triple.C;
  const Element iota_ell_A = C.normal_form(triple.iota.apply(triple.A.element_to_polynomial(ell_A)));
  return C.add(iota_ell_A, C.scale(section.lambda, t));
}

ExactMatrix DeformationFamily::to_c_coords(const ExactMatrix& m_basis) const {
  return section.basis_map.multiply(m_basis).multiply(section.basis_map_inv);
}

namespace {

DiagramResult compare_columns(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  for (int c = 0; c < lhs.cols(); ++c)
    for (int r = 0; r < lhs.rows(); ++r)
      if (lhs.at(r, c) != rhs.at(r, c)) return {false, c};
  return {true, -1};
}

}  // namespace

DiagramResult verify_diagram_zero(const DeformationFamily& f) {
  const Scalar zero = Scalar::zero(f.triple.C.field());
  const ExactMatrix lhs = f.section.basis_map.multiply(f.tensor_mult);
  const ExactMatrix rhs = f.to_c_coords(f.L_at(zero)).multiply(f.section.basis_map);
  return compare_columns(lhs, rhs);
}

DiagramResult verify_diagram_t(const DeformationFamily& f, const Scalar& t) {
  if (t.is_zero()) throw ZeroParameterError("diagram (2) requires t != 0");
  // chi_t conjugates L_t into multiplication by ell_t: chi_t L_t = (x ell_t) chi_t.
  const ExactMatrix chi_c = f.to_c_coords(f.chi_at(t));
  const ExactMatrix lhs = chi_c.multiply(f.to_c_coords(f.L_at(t)));
  const ExactMatrix rhs = f.triple.C.mult_operator(f.ell_t(t)).multiply(chi_c);
  return compare_columns(lhs, rhs);
}

SemicontinuityReport semicontinuity_experiment(const DeformationFamily& f,
                                               const std::vector<Scalar>& ts) {
  SemicontinuityReport rep;
  rep.p_L0 = jordan_type_of_matrix(f.L_at(Scalar::zero(f.triple.C.field())));
  rep.all_dominate = true;
  rep.conjugation_ok = true;
  for (const Scalar& t : ts) {
    if (t.is_zero()) throw ZeroParameterError("semicontinuity experiment needs nonzero t");
    const Partition p_lt = jordan_type_of_matrix(f.L_at(t));
    const Partition direct = jordan_type(f.triple.C, f.ell_t(t)).partition;
    if (p_lt != direct) {
      rep.conjugation_ok = false;
      throw FalsificationError("Jordan type of L_t differs from x(ell_t) at t = " + t.str() +
                               ": (" + p_lt.str() + ") vs (" + direct.str() + ")");
    }
    const Dominance d = dominance_compare(p_lt, rep.p_L0);
    if (d != Dominance::GT && d != Dominance::EQ) rep.all_dominate = false;
    rep.p_Lt.push_back({t.str(), p_lt, d});
  }
  return rep;
}

}  // namespace artin
