#include "artin/extension.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace artin {

namespace {

// Lift a polynomial along an index embedding of its variables.
Polynomial lift(const Polynomial& f, const VariableTable& target, int offset) {
  std::vector<Polynomial> images;
  for (int i = 0; i < f.table().size(); ++i)
    images.push_back(Polynomial::variable(target, f.field(), offset + i));
  return f.substituted(target, images);
}

std::vector<Scalar> block_coords(const GradedAlgebra& a, const Element& e, int d) {
  const auto [start, end] = a.block_range(d);
  return std::vector<Scalar>(e.coeffs.begin() + start, e.coeffs.begin() + end);
}

}  // namespace

Polynomial RingMapSpec::apply(const Polynomial& f) const {
  if (!(f.table() == source)) throw InputError("ring map applied to foreign polynomial");
  return f.substituted(target, images);
}

GradedAlgebra tensor_algebra(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field())) throw InputError("tensor factors over different fields");
  const VariableTable table = VariableTable::disjoint_union(a.table(), b.table());
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.generating_set()) gens.push_back(lift(g, table, 0));
  for (const Polynomial& g : b.generating_set()) gens.push_back(lift(g, table, a.table().size()));
  AlgebraSpec spec;
  spec.field = a.field();
  spec.table = table;
  spec.presentation = IdealPresentation{std::move(gens)};
  spec.label = (a.label().empty() ? "A" : a.label()) + " (x) " + (b.label().empty() ? "B" : b.label());
  spec.degree_cap = a.spec().degree_cap + b.spec().degree_cap;
  return GradedAlgebra::build(std::move(spec));
}

ExtensionTriple canonical_tensor_triple(const GradedAlgebra& a, const GradedAlgebra& b) {
  GradedAlgebra c = tensor_algebra(a, b);
  RingMapSpec iota;
  iota.source = a.table();
  iota.target = c.table();
  for (int i = 0; i < a.table().size(); ++i)
    iota.images.push_back(Polynomial::variable(c.table(), a.field(), i));
  RingMapSpec pi;
  pi.source = c.table();
  pi.target = b.table();
  for (int i = 0; i < a.table().size(); ++i)
    pi.images.push_back(Polynomial::zero(b.table(), a.field()));
  for (int i = 0; i < b.table().size(); ++i)
    pi.images.push_back(Polynomial::variable(b.table(), a.field(), i));
  return ExtensionTriple{a, b, std::move(c), std::move(iota), std::move(pi)};
}

Partition cg_tensor(const Partition& p, const Partition& q, long characteristic) {
  if (characteristic != 0 && !p.parts().empty() && !q.parts().empty() &&
      characteristic < p.largest() + q.largest() - 1)
    throw CharTooSmallError("Clebsch-Gordan needs characteristic 0 or >= " +
                            std::to_string(p.largest() + q.largest() - 1) + ", got " +
                            std::to_string(characteristic));
  std::vector<int> parts;
  for (int a : p.parts())
    for (int b : q.parts())
      for (int s = a + b - 1; s >= std::abs(a - b) + 1; s -= 2) parts.push_back(s);
  return Partition::from_unsorted(std::move(parts));
}

namespace {

// The ring map is graded-well-defined when every image is zero or
// homogeneous of the source variable's weight.
bool degrees_compatible(const RingMapSpec& map) {
  if (static_cast<int>(map.images.size()) != map.source.size()) return false;
  for (int i = 0; i < map.source.size(); ++i) {
    const Polynomial& img = map.images[i];
    if (img.is_zero()) continue;
    const auto d = img.homogeneous_degree();
    if (!d || *d != map.source.weight(i)) return false;
  }
  return true;
}

bool maps_generators_to_zero(const RingMapSpec& map, const GradedAlgebra& source_alg,
                             const GradedAlgebra& target_alg, std::string* detail) {
  for (const Polynomial& g : source_alg.generating_set()) {
    const Element img = target_alg.normal_form(map.apply(g));
    if (!img.is_zero()) {
      *detail = "generator " + g.str() + " maps to nonzero " +
                target_alg.element_to_polynomial(img).str();
      return false;
    }
  }
  return true;
}

}  // namespace

ExactMatrix map_degree_matrix(const RingMapSpec& map, const GradedAlgebra& source_alg,
                              const GradedAlgebra& target_alg, int d) {
  const auto [cs, ce] = source_alg.block_range(d);
  const auto [bs, be] = target_alg.block_range(d);
  ExactMatrix m(be - bs, ce - cs, source_alg.field());
  for (int g = cs; g < ce; ++g) {
    const Polynomial mono = Polynomial::monomial_term(
        source_alg.table(), source_alg.basis_monomial(g), Scalar::one(source_alg.field()));
    const Element img = target_alg.normal_form(map.apply(mono));
    for (int r = bs; r < be; ++r) m.at(r - bs, g - cs) = img.coeffs[r];
  }
  return m;
}

ExtensionReport verify_free_extension(const ExtensionTriple& t) {
  ExtensionReport rep;
  if (!(t.A.field() == t.C.field()) || !(t.B.field() == t.C.field()))
    throw InputError("extension triple mixes fields");
  if (!(t.iota.source == t.A.table()) || !(t.iota.target == t.C.table()) ||
      !(t.pi.source == t.C.table()) || !(t.pi.target == t.B.table()))
    throw InputError("ring map tables do not match the triple");

  std::string detail;
  rep.iota_well_defined = degrees_compatible(t.iota) &&
                          maps_generators_to_zero(t.iota, t.A, t.C, &detail);
  if (!rep.iota_well_defined && rep.failure_detail.empty())
    rep.failure_detail = "iota: " + (detail.empty() ? std::string("image degrees") : detail);
  detail.clear();
  rep.pi_well_defined = degrees_compatible(t.pi) &&
                        maps_generators_to_zero(t.pi, t.C, t.B, &detail);
  if (!rep.pi_well_defined && rep.failure_detail.empty())
    rep.failure_detail = "pi: " + (detail.empty() ? std::string("image degrees") : detail);
  if (!rep.iota_well_defined || !rep.pi_well_defined) return rep;

  rep.dim_product = t.C.dimension() == t.A.dimension() * t.B.dimension();
  if (!rep.dim_product)
    rep.failure_detail = "dim C = " + std::to_string(t.C.dimension()) + " != " +
                         std::to_string(t.A.dimension()) + " * " + std::to_string(t.B.dimension());

  rep.pi_surjective = true;
  for (int d = 0; d <= t.B.socle_degree() && rep.pi_surjective; ++d) {
    if (rank_of(map_degree_matrix(t.pi, t.C, t.B, d)) != t.B.hilbert_at(d)) {
      rep.pi_surjective = false;
      rep.failure_detail = "pi misses part of degree " + std::to_string(d);
    }
  }

  // Degree-wise subspace equality ker(pi_d) = (iota(m_A) C)_d.
  rep.kernel_condition = true;
  for (int d = 0; d <= t.C.socle_degree() && rep.kernel_condition; ++d) {
    const int hd = t.C.hilbert_at(d);
    const ExactMatrix ker = kernel_basis(map_degree_matrix(t.pi, t.C, t.B, d));
    RowSpace ideal_part(hd, t.C.field());
    for (int i = 0; i < t.A.table().size(); ++i) {
      const Polynomial& u = t.iota.images[i];
      if (u.is_zero()) continue;
      const int du = *u.homogeneous_degree();
      if (du > d) continue;
      const auto [gs, ge] = t.C.block_range(d - du);
      for (int g = gs; g < ge; ++g) {
        const Element prod = t.C.normal_form(
            u.times_monomial(t.C.basis_monomial(g), Scalar::one(t.C.field())));
        ideal_part.insert(block_coords(t.C, prod, d));
      }
    }
    bool equal = ideal_part.dim() == ker.rows();
    for (int r = 0; r < ker.rows() && equal; ++r) equal = ideal_part.contains(ker.row(r));
    if (!equal) {
      rep.kernel_condition = false;
      rep.failure_detail = "ker(pi) != iota(m_A)C in degree " + std::to_string(d);
    }
  }

  rep.verdict = rep.iota_well_defined && rep.pi_well_defined && rep.pi_surjective &&
                rep.kernel_condition && rep.dim_product;
  return rep;
}

ExtensionTriple build_dual_extension(const AlgebraSpec& b_spec, int m,
                                     const DividedPolynomial& g) {
  if (!b_spec.is_dual())
    throw InputError("build_dual_extension needs a dual-generator presentation of B");
  if (m < 1) throw InputError("m must be >= 1");
  GradedAlgebra b = GradedAlgebra::build(b_spec);
  const int jb = b.socle_degree();
  if (!g.is_zero()) {
    if (!(g.table() == b.table()) || !(g.field() == b.field()))
      throw InputError("G must live in the dualizing module of B's ring");
    const auto dg = g.homogeneous_degree();
    if (!dg || *dg != jb + m)
      throw MathError("DegreeMismatch", "G must be homogeneous of degree " +
                                            std::to_string(jb + m) + " (or zero)");
    // (I_B)^2 o G = 0, checked on per-degree ideal bases in all bidegrees.
    for (int d1 = 1; d1 <= jb + m - 1; ++d1) {
      const std::vector<Polynomial> left = b.ideal_degree_basis(d1);
      if (left.empty()) continue;
      for (int d2 = d1; d1 + d2 <= jb + m; ++d2) {
        const std::vector<Polynomial> right = d2 == d1 ? left : b.ideal_degree_basis(d2);
        for (size_t i = 0; i < left.size(); ++i)
          for (size_t k = d2 == d1 ? i : 0; k < right.size(); ++k)
            if (!contract(left[i] * right[k], g).is_zero())
              throw ConditionFailsError(left[i].str(), right[k].str(),
                                        "(I_B)^2 o G != 0: witness (" + left[i].str() + ", " +
                                            right[k].str() + ")");
      }
    }
  }

  const VariableTable s_table = b.table().with_appended("t", 1);
  const int t_index = b.table().size();
  std::vector<int> embed(b.table().size());
  for (int i = 0; i < b.table().size(); ++i) embed[i] = i;
  std::vector<int> t_exps(s_table.size(), 0);
  t_exps[t_index] = m;
  const DividedPolynomial t_power = DividedPolynomial::monomial_term(
      s_table, Monomial(t_exps, s_table), Scalar::one(b.field()));
  // F = T^[m] * F_B + G; the supports are disjoint in T, so the product is
  // coefficient-free.
  DividedPolynomial f = dp_multiply(t_power, b_spec.dual_generator().embedded(s_table, embed));
  if (!g.is_zero()) f = f + g.embedded(s_table, embed);

  AlgebraSpec c_spec;
  c_spec.field = b.field();
  c_spec.table = s_table;
  c_spec.presentation = DualPresentation{std::move(f)};
  c_spec.label = (b.label().empty() ? "B" : b.label()) + " deformed over k[t]/(t^" +
                 std::to_string(m + 1) + ")";
  GradedAlgebra c = GradedAlgebra::build(std::move(c_spec));

  const VariableTable a_table({"t"}, {1});
  std::vector<int> a_exps{m};
  AlgebraSpec a_spec;
  a_spec.field = b.field();
  a_spec.table = a_table;
  a_spec.presentation = DualPresentation{DividedPolynomial::monomial_term(
      a_table, Monomial(a_exps, a_table), Scalar::one(b.field()))};
  a_spec.label = "k[t]/(t^" + std::to_string(m + 1) + ")";
  GradedAlgebra a = GradedAlgebra::build(std::move(a_spec));

  RingMapSpec iota;
  iota.source = a_table;
  iota.target = s_table;
  iota.images.push_back(Polynomial::variable(s_table, b.field(), t_index));
  RingMapSpec pi;
  pi.source = s_table;
  pi.target = b.table();
  for (int i = 0; i < b.table().size(); ++i)
    pi.images.push_back(Polynomial::variable(b.table(), b.field(), i));
  pi.images.push_back(Polynomial::zero(b.table(), b.field()));

  return ExtensionTriple{std::move(a), std::move(b), std::move(c), std::move(iota), std::move(pi)};
}

std::vector<DividedPolynomial> valid_g_space(const GradedAlgebra& b, int m) {
  if (m < 1) throw InputError("m must be >= 1");
  const int deg = b.socle_degree() + m;
  const std::vector<Monomial> duals = monomials_of_degree(b.table(), deg);
  std::map<std::vector<int>, int> dual_col;
  for (size_t i = 0; i < duals.size(); ++i) dual_col.emplace(duals[i].exponents(), static_cast<int>(i));

  // Stack one row per (product, output monomial): the condition
  // (f g) o G = 0 is linear in the coordinates of G.
  std::vector<std::vector<Scalar>> rows;
  for (int d1 = 1; d1 <= deg - 1; ++d1) {
    const std::vector<Polynomial> left = b.ideal_degree_basis(d1);
    if (left.empty()) continue;
    for (int d2 = d1; d1 + d2 <= deg; ++d2) {
      const std::vector<Polynomial> right = d2 == d1 ? left : b.ideal_degree_basis(d2);
      const std::vector<Monomial> outputs = monomials_of_degree(b.table(), deg - d1 - d2);
      for (size_t i = 0; i < left.size(); ++i)
        for (size_t k = d2 == d1 ? i : 0; k < right.size(); ++k) {
          const Polynomial prod = left[i] * right[k];
          for (const Monomial& out : outputs) {
            std::vector<Scalar> row(duals.size(), Scalar::zero(b.field()));
            bool nonzero = false;
            for (const auto& [pm, pc] : prod.terms()) {
              auto it = dual_col.find(out.times(pm).exponents());
              if (it != dual_col.end()) {
                row[it->second] += pc;
                nonzero = true;
              }
            }
            if (nonzero) rows.push_back(std::move(row));
          }
        }
    }
  }

  const ExactMatrix system =
      ExactMatrix::from_rows(rows, static_cast<int>(duals.size()), b.field());
  const ExactMatrix kernel = kernel_basis(system);
  std::vector<DividedPolynomial> basis;
  for (int r = 0; r < kernel.rows(); ++r) {
    DividedPolynomial g(b.table(), b.field());
    for (int c = 0; c < kernel.cols(); ++c) g.add_term(duals[c], kernel.at(r, c));
    basis.push_back(std::move(g));
  }
  return basis;
}

TheoremCheckResult theorem_check(const ExtensionTriple& t, int samples, std::uint64_t seed) {
  const ExtensionReport rep = verify_free_extension(t);
  if (!rep.verdict)
    throw NotFreeExtensionError("theorem_check requires a verified free extension: " +
                                rep.failure_detail);
  const GradedAlgebra tensor = tensor_algebra(t.A, t.B);
  TheoremCheckResult res;
  res.p_tensor = generic_jordan_type(tensor, SampleMode::LinearForms, samples, seed).partition;
  res.p_c = generic_jordan_type(t.C, SampleMode::LinearForms, samples, seed).partition;
  switch (dominance_compare(res.p_c, res.p_tensor)) {
    case Dominance::GT:
      res.verdict = TheoremVerdict::GT;
      break;
    case Dominance::EQ:
      res.verdict = TheoremVerdict::EQ;
      break;
    case Dominance::INCOMPARABLE:
      res.verdict = TheoremVerdict::GE_unresolved;
      break;
    case Dominance::LT:
      throw FalsificationError("P_C < P_{A(x)B} observed: P_C = (" + res.p_c.str() +
                               "), P_tensor = (" + res.p_tensor.str() + ")");
  }
  return res;
}

const char* theorem_verdict_name(TheoremVerdict v) {
  switch (v) {
    case TheoremVerdict::GT: return "GT";
    case TheoremVerdict::EQ: return "EQ";
    default: return "GE_unresolved";
  }
}

}  // namespace artin
