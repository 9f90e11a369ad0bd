#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/io.hpp"

using namespace artin;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

GradedAlgebra dual_algebra(const std::string& f, const std::vector<std::string>& vars) {
  const VariableTable t = VariableTable::standard(vars);
  return GradedAlgebra::build(
      AlgebraSpec{Q, t, DualPresentation{parse_divided_polynomial(f, t, Q)}});
}

GradedAlgebra ideal_algebra(const std::vector<std::string>& gens,
                            const std::vector<std::string>& vars,
                            std::vector<int> weights = {}) {
  const VariableTable t = weights.empty() ? VariableTable::standard(vars)
                                          : VariableTable(vars, std::move(weights));
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, t, Q));
  return GradedAlgebra::build(AlgebraSpec{Q, t, IdealPresentation{std::move(ps)}});
}

GradedAlgebra perazzo_fiber() {
  return dual_algebra("X*U^[2]+Y*U*V+Z*V^[2]", {"x", "y", "z", "u", "v"});
}

}  // namespace

TEST_CASE("dual route: k[x]/(x^3) from X^[2]") {
  const auto a = dual_algebra("X^[2]", {"x"});
  CHECK(a.hilbert() == std::vector<int>{1, 1, 1});
  CHECK(a.socle_degree() == 2);
  CHECK(a.dimension() == 3);
}

TEST_CASE("dual route: Perazzo fiber has H = (1,5,5,1)") {
  const auto b = perazzo_fiber();
  CHECK(b.hilbert() == std::vector<int>{1, 5, 5, 1});
  CHECK(b.dimension() == 12);
}

TEST_CASE("ideal route: k[x,y]/(x^3+y^3, xy)") {
  const auto a = ideal_algebra({"x^3+y^3", "x*y"}, {"x", "y"});
  CHECK(a.dimension() == 6);
  CHECK(a.socle_degree() == 3);
  CHECK(a.hilbert() == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("hilbert function examples") {
  CHECK(dual_algebra("T", {"t"}).hilbert() == std::vector<int>{1, 1});
  const auto weighted = ideal_algebra({"b^3-c^6", "b*c"}, {"b", "c"}, {2, 1});
  CHECK(weighted.hilbert() == std::vector<int>{1, 1, 2, 1, 2, 1, 1});
}

TEST_CASE("local hilbert function") {
  // standard graded: local equals graded
  const auto a = ideal_algebra({"x^3+y^3", "x*y"}, {"x", "y"});
  CHECK(a.local_hilbert() == a.hilbert());
  // weighted: frozen from the basis {1,b,b^2,c,...,c^6}, b^3 = c^6, bc = 0
  const auto w = ideal_algebra({"b^3-c^6", "b*c"}, {"b", "c"}, {2, 1});
  CHECK(w.local_hilbert() == std::vector<int>{1, 2, 2, 1, 1, 1, 1});
  CHECK(dual_algebra("T", {"t"}).local_hilbert() == std::vector<int>{1, 1});
}

TEST_CASE("normal forms") {
  const auto a = ideal_algebra({"x^3+y^3", "x*y"}, {"x", "y"});
  const VariableTable& t = a.table();
  const Element nf = a.normal_form(parse_polynomial("x^3", t, Q));
  CHECK(a.element_to_polynomial(nf) == parse_polynomial("-y^3", t, Q));
  CHECK(a.normal_form(parse_polynomial("x*y", t, Q)).is_zero());
  const Element one = a.normal_form(parse_polynomial("1", t, Q));
  CHECK(a.element_to_polynomial(one) == parse_polynomial("1", t, Q));
  // linear and multiplicative modulo the ideal
  std::mt19937_64 eng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial f(t, Q), g(t, Q);
    for (int d = 0; d <= 3; ++d)
      for (const Monomial& m : monomials_of_degree(t, d)) {
        if (eng() % 3 == 0) f.add_term(m, Scalar::of_integer((long)(eng() % 5) - 2, Q));
        if (eng() % 3 == 0) g.add_term(m, Scalar::of_integer((long)(eng() % 5) - 2, Q));
      }
    const Element lhs = a.normal_form(f * g);
    const Element rhs = a.multiply(a.normal_form(f), a.normal_form(g));
    CHECK(lhs.coeffs == rhs.coeffs);
  }
}

TEST_CASE("mult_operator shapes and nilpotency") {
  const auto kx3 = dual_algebra("X^[2]", {"x"});
  const ExactMatrix shift = kx3.mult_operator(
      kx3.normal_form(parse_polynomial("x", kx3.table(), Q)));
  // 3x3 shift in the basis 1, x, x^2
  ExactMatrix expect(3, 3, Q);
  expect.at(1, 0) = Scalar::one(Q);
  expect.at(2, 1) = Scalar::one(Q);
  CHECK(shift == expect);

  const auto kt2 = dual_algebra("T", {"t"});
  const ExactMatrix mt = kt2.mult_operator(
      kt2.normal_form(parse_polynomial("t", kt2.table(), Q)));
  CHECK(rank_of(mt) == 1);
  CHECK(mt.multiply(mt).is_zero());

  const auto a = ideal_algebra({"x^3+y^3", "x*y"}, {"x", "y"});
  const ExactMatrix m = a.mult_operator(
      a.normal_form(parse_polynomial("x+2*y", a.table(), Q)));
  const ExactMatrix m3 = m.multiply(m).multiply(m);
  CHECK(!m3.is_zero());  // (x+2y)^3 = (1-8) x^3 != 0
  CHECK(m3.multiply(m).is_zero());

  CHECK_THROWS_AS(a.mult_operator(a.normal_form(parse_polynomial("1+x", a.table(), Q))),
                  NonNilpotentError);
}

TEST_CASE("ideal degree bases") {
  const auto b = perazzo_fiber();
  const auto basis2 = b.ideal_degree_basis(2);
  CHECK(basis2.size() == 10);  // 15 - 5
  // the classical generators of the apolar ideal lie in I_2
  const auto mons = monomials_of_degree(b.table(), 2);
  RowSpace span(static_cast<int>(mons.size()), Q);
  for (const auto& p : basis2) {
    std::vector<Scalar> v;
    for (const auto& m : mons) v.push_back(p.coefficient(m));
    span.insert(v);
  }
  for (const char* g :
       {"u*y-v*z", "u*x-v*y", "u*z", "v*x", "x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}) {
    std::vector<Scalar> v;
    const Polynomial p = parse_polynomial(g, b.table(), Q);
    for (const auto& m : mons) v.push_back(p.coefficient(m));
    CHECK(span.contains(v));
  }

  CHECK(b.ideal_degree_basis(0).empty());
  const auto kx3 = dual_algebra("X^[2]", {"x"});
  const auto d5 = kx3.ideal_degree_basis(5);
  REQUIRE(d5.size() == 1);
  CHECK(d5[0] == parse_polynomial("x^5", kx3.table(), Q));
}

TEST_CASE("minimal generator degrees") {
  const auto kx3 = dual_algebra("X^[2]", {"x"});
  CHECK(kx3.minimal_generator_degrees() == std::vector<std::pair<int, int>>{{3, 1}});

  // degree 2 count 10; Ann(F) also needs the pure (u,v) cubics
  const auto b = perazzo_fiber();
  const auto degs = b.minimal_generator_degrees();
  REQUIRE(!degs.empty());
  CHECK(degs[0] == std::pair<int, int>{2, 10});

  const auto a = ideal_algebra({"x^3+y^3", "x*y"}, {"x", "y"});
  CHECK(a.minimal_generator_degrees() ==
        std::vector<std::pair<int, int>>{{2, 1}, {3, 1}});
}

TEST_CASE("dual and ideal routes agree on the same algebra") {
  // rebuild the Perazzo fiber from its extracted minimal generators; the
  // per-degree ideal bases and everything downstream must coincide
  const auto via_dual = perazzo_fiber();
  const auto via_ideal = GradedAlgebra::build(AlgebraSpec{
      Q, via_dual.table(), IdealPresentation{via_dual.minimal_generators()}});
  CHECK(via_ideal.hilbert() == via_dual.hilbert());
  CHECK(via_ideal.dimension() == via_dual.dimension());
  for (int d = 0; d <= via_dual.socle_degree(); ++d) {
    CHECK(via_ideal.degree_data(d).standard_columns ==
          via_dual.degree_data(d).standard_columns);
    CHECK(via_ideal.degree_data(d).ideal_rows == via_dual.degree_data(d).ideal_rows);
  }
  const Polynomial probe =
      parse_polynomial("u^2+3*x*u-v^2+y^3", via_dual.table(), Q);
  CHECK(via_ideal.normal_form(probe).coeffs == via_dual.normal_form(probe).coeffs);
}

TEST_CASE("gorenstein symmetry and annihilator consistency for random dual generators") {
  std::mt19937_64 eng(41);
  const VariableTable t = VariableTable::standard({"x", "y", "z"});
  int built = 0;
  for (int trial = 0; built < 8 && trial < 40; ++trial) {
    const int deg = 2 + (int)(eng() % 3);
    DividedPolynomial f(t, Q);
    for (const Monomial& m : monomials_of_degree(t, deg))
      f.add_term(m, Scalar::of_integer((long)(eng() % 5), Q));
    if (f.is_zero()) continue;
    ++built;
    const auto a = GradedAlgebra::build(AlgebraSpec{Q, t, DualPresentation{f}});
    const int j = a.socle_degree();
    int total = 0;
    for (int d = 0; d <= j; ++d) {
      CHECK(a.hilbert_at(d) == a.hilbert_at(j - d));  // symmetric H
      total += a.hilbert_at(d);
      for (const Polynomial& p : a.ideal_degree_basis(d))
        CHECK(contract(p, f).is_zero());
    }
    CHECK(total == a.dimension());
  }
  CHECK(built == 8);
}

TEST_CASE("multiplication operators are nilpotent with the expected bound") {
  std::mt19937_64 eng(19);
  const auto b = dual_algebra("X^[2]*Y+Z^[3]", {"x", "y", "z"});
  const int j = b.socle_degree();
  for (int trial = 0; trial < 4; ++trial) {
    // homogeneous of degree >= 1: the (j+1)-th power vanishes
    const Element lin = sample_stratum_element(b, SampleMode::LinearForms, eng());
    ExactMatrix p = b.mult_operator(lin);
    for (int k = 1; k < j + 1; ++k) p = p.multiply(b.mult_operator(lin));
    CHECK(p.is_zero());
    // general element of m: the dimension-th power vanishes
    const Element any = sample_stratum_element(b, SampleMode::MaximalIdeal, eng());
    ExactMatrix q = b.mult_operator(any);
    for (int k = 1; k < b.dimension(); ++k) q = q.multiply(b.mult_operator(any));
    CHECK(q.is_zero());
  }
}

TEST_CASE("ideal route termination") {
  // non-Artinian: (xy) in k[x,y] never reaches zero
  const VariableTable t = VariableTable::standard({"x", "y"});
  AlgebraSpec bad{Q, t, IdealPresentation{{parse_polynomial("x*y", t, Q)}}};
  bad.degree_cap = 12;
  CHECK_THROWS_AS(GradedAlgebra::build(bad), NotArtinianError);

  // weighted termination window: beyond the socle everything vanishes
  const auto w = ideal_algebra({"b^3-c^6", "b*c"}, {"b", "c"}, {2, 1});
  for (int d = w.socle_degree() + 1; d <= w.socle_degree() + 3; ++d) {
    const auto full = monomials_of_degree(w.table(), d);
    CHECK(w.ideal_degree_basis(d).size() == full.size());
  }
}

TEST_CASE("zero and malformed dual generators") {
  const VariableTable t = VariableTable::standard({"x"});
  CHECK_THROWS_AS(
      GradedAlgebra::build(AlgebraSpec{Q, t, DualPresentation{DividedPolynomial::zero(t, Q)}}),
      ZeroDualGeneratorError);
  CHECK_THROWS_AS(
      GradedAlgebra::build(AlgebraSpec{
          Q, t, DualPresentation{parse_divided_polynomial("X+X^[2]", t, Q)}}),
      InputError);
  CHECK_THROWS_AS(
      GradedAlgebra::build(AlgebraSpec{
          Q, t, IdealPresentation{{parse_polynomial("x+x^2", t, Q)}}}),
      InputError);
}

TEST_CASE("empty variable table gives the ground field") {
  const VariableTable t({}, {});
  const auto k = GradedAlgebra::build(AlgebraSpec{Q, t, IdealPresentation{{}}});
  CHECK(k.dimension() == 1);
  CHECK(k.socle_degree() == 0);
  CHECK(k.hilbert() == std::vector<int>{1});
}

TEST_CASE("GF(p) algebras build") {
  const FieldDescriptor f7 = FieldDescriptor::prime_field(7);
  const VariableTable t = VariableTable::standard({"x", "y"});
  const auto a = GradedAlgebra::build(AlgebraSpec{
      f7, t, DualPresentation{parse_divided_polynomial("X^[2]+Y^[2]", t, f7)}});
  CHECK(a.hilbert() == std::vector<int>{1, 2, 1});
}
