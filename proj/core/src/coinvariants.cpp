#include "artin/coinvariants.hpp"

#include <numeric>

namespace artin {

namespace {

VariableTable x_table(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VariableTable::standard(std::move(names));
}

void check_rn(int r, int n) {
  if (r < 1 || n < 0) throw InputError("need r >= 1 and n >= 0");
}

}  // namespace

Polynomial elementary_r_symmetric(int r, int n, int i, const FieldDescriptor& f) {
  check_rn(r, n);
  if (i < 1 || i > n) throw InputError("need 1 <= i <= n");
  const VariableTable table = x_table(n);
  Polynomial e(table, f);
  std::vector<int> subset(i);
  // Iterate i-subsets of {0..n-1} in lexicographic order.
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    std::vector<int> exps(n, 0);
    for (int k : subset) exps[k] = r;
    e.add_term(Monomial(std::move(exps), table), Scalar::one(f));
    int pos = i - 1;
    while (pos >= 0 && subset[pos] == n - i + pos) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int k = pos + 1; k < i; ++k) subset[k] = subset[k - 1] + 1;
  }
  return e;
}

AlgebraSpec coinv_gr1n(int r, int n, const FieldDescriptor& f) {
  check_rn(r, n);
  std::vector<Polynomial> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(elementary_r_symmetric(r, n, i, f));
  AlgebraSpec spec;
  spec.field = f;
  spec.table = x_table(n);
  spec.presentation = IdealPresentation{std::move(gens)};
  spec.label = "G(" + std::to_string(r) + ",1," + std::to_string(n) + ") coinvariants";
  // Complete intersection of degrees r, 2r, ..., nr; socle degree known.
  spec.degree_cap = std::max(64, r * n * (n + 1) / 2 - n + 4);
  return spec;
}

AlgebraSpec coinv_gr1n_relative(int r, int n, const FieldDescriptor& f) {
  check_rn(r, n);
  if (n < 1) throw InputError("relative coinvariants need n >= 1");
  const VariableTable table = VariableTable::standard({"x" + std::to_string(n)});
  std::vector<int> exps{n * r};
  Polynomial gen = Polynomial::monomial_term(table, Monomial(std::move(exps), table),
                                             Scalar::one(f));
  AlgebraSpec spec;
  spec.field = f;
  spec.table = table;
  spec.presentation = IdealPresentation{{std::move(gen)}};
  spec.label = "relative coinvariants of G(" + std::to_string(r) + ",1," + std::to_string(n - 1) +
               ") in G(" + std::to_string(r) + ",1," + std::to_string(n) + ")";
  spec.degree_cap = std::max(64, n * r + 4);
  return spec;
}

ExtensionTriple gr1n_chain_triple(int r, int n, const FieldDescriptor& f) {
  check_rn(r, n);
  if (n < 1) throw InputError("chain triple needs n >= 1");
  GradedAlgebra a = GradedAlgebra::build(coinv_gr1n_relative(r, n, f));
  GradedAlgebra b = GradedAlgebra::build(coinv_gr1n(r, n - 1, f));
  GradedAlgebra c = GradedAlgebra::build(coinv_gr1n(r, n, f));
  RingMapSpec iota;
  iota.source = a.table();
  iota.target = c.table();
  iota.images.push_back(Polynomial::variable(c.table(), f, n - 1));
  RingMapSpec pi;
  pi.source = c.table();
  pi.target = b.table();
  for (int i = 0; i + 1 < n; ++i) pi.images.push_back(Polynomial::variable(b.table(), f, i));
  pi.images.push_back(Polynomial::zero(b.table(), f));
  return ExtensionTriple{std::move(a), std::move(b), std::move(c), std::move(iota), std::move(pi)};
}

ExtensionTriple g333_triple(const FieldDescriptor& f) {
  if (f.characteristic != 0 && (f.characteristic == 2 || f.characteristic == 3))
    throw InputError("G(3,3,3) presentations need characteristic 0 or coprime to 6");

  const VariableTable at({"b", "c"}, {2, 1});
  Polynomial b3(at, f), bc(at, f);
  b3.add_term(Monomial({3, 0}, at), Scalar::one(f));
  b3.add_term(Monomial({0, 6}, at), -Scalar::one(f));
  bc.add_term(Monomial({1, 1}, at), Scalar::one(f));
  AlgebraSpec a_spec;
  a_spec.field = f;
  a_spec.table = at;
  a_spec.presentation = IdealPresentation{{b3, bc}};
  a_spec.label = "relative coinvariants of G(3,3,2) in G(3,3,3)";

  const VariableTable bt = VariableTable::standard({"x", "y"});
  Polynomial x3y3(bt, f), xy(bt, f);
  x3y3.add_term(Monomial({3, 0}, bt), Scalar::one(f));
  x3y3.add_term(Monomial({0, 3}, bt), Scalar::one(f));
  xy.add_term(Monomial({1, 1}, bt), Scalar::one(f));
  AlgebraSpec b_spec;
  b_spec.field = f;
  b_spec.table = bt;
  b_spec.presentation = IdealPresentation{{x3y3, xy}};
  b_spec.label = "G(3,3,2) coinvariants";

  const VariableTable ct = VariableTable::standard({"x", "y", "z"});
  Polynomial p1(ct, f), p2(ct, f), p3(ct, f);
  p1.add_term(Monomial({3, 0, 0}, ct), Scalar::one(f));
  p1.add_term(Monomial({0, 3, 0}, ct), Scalar::one(f));
  p1.add_term(Monomial({0, 0, 3}, ct), Scalar::one(f));
  p2.add_term(Monomial({3, 3, 0}, ct), Scalar::one(f));
  p2.add_term(Monomial({3, 0, 3}, ct), Scalar::one(f));
  p2.add_term(Monomial({0, 3, 3}, ct), Scalar::one(f));
  p3.add_term(Monomial({1, 1, 1}, ct), Scalar::one(f));
  AlgebraSpec c_spec;
  c_spec.field = f;
  c_spec.table = ct;
  c_spec.presentation = IdealPresentation{{p1, p2, p3}};
  c_spec.label = "G(3,3,3) coinvariants";

  GradedAlgebra a = GradedAlgebra::build(std::move(a_spec));
  GradedAlgebra b = GradedAlgebra::build(std::move(b_spec));
  GradedAlgebra c = GradedAlgebra::build(std::move(c_spec));

  RingMapSpec iota;
  iota.source = a.table();
  iota.target = c.table();
  Polynomial xy_c(ct, f);
  xy_c.add_term(Monomial({1, 1, 0}, ct), Scalar::one(f));
  iota.images.push_back(std::move(xy_c));                       // b -> xy
  iota.images.push_back(Polynomial::variable(ct, f, 2));        // c -> z

  RingMapSpec pi;
  pi.source = c.table();
  pi.target = b.table();
  pi.images.push_back(Polynomial::variable(bt, f, 0));  // x -> x
  pi.images.push_back(Polynomial::variable(bt, f, 1));  // y -> y
  pi.images.push_back(Polynomial::zero(bt, f));         // z -> 0

  return ExtensionTriple{std::move(a), std::move(b), std::move(c), std::move(iota), std::move(pi)};
}

}  // namespace artin
