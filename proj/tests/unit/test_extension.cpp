#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/io.hpp"

using namespace artin;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

AlgebraSpec dual_spec(const std::string& f, const std::vector<std::string>& vars) {
  const VariableTable t = VariableTable::standard(vars);
  return AlgebraSpec{Q, t, DualPresentation{parse_divided_polynomial(f, t, Q)}};
}

AlgebraSpec perazzo_spec() {
  return dual_spec("X*U^[2]+Y*U*V+Z*V^[2]", {"x", "y", "z", "u", "v"});
}

std::vector<Scalar> divided_coords(const DividedPolynomial& g,
                                   const std::vector<Monomial>& duals) {
  std::vector<Scalar> v;
  v.reserve(duals.size());
  for (const auto& m : duals) v.push_back(g.coefficient(m));
  return v;
}

}  // namespace

TEST_CASE("tensor algebra Hilbert functions convolve") {
  const auto a = GradedAlgebra::build(dual_spec("X", {"x"}));
  const auto b = GradedAlgebra::build(dual_spec("Y", {"y"}));
  CHECK(tensor_algebra(a, b).hilbert() == std::vector<int>{1, 2, 1});

  const auto kt2 = GradedAlgebra::build(dual_spec("T", {"t"}));
  const auto perazzo = GradedAlgebra::build(perazzo_spec());
  const auto big = tensor_algebra(kt2, perazzo);
  CHECK(big.hilbert() == std::vector<int>{1, 6, 10, 6, 1});

  // A (x) k = A
  const auto trivial = GradedAlgebra::build(
      AlgebraSpec{Q, VariableTable({}, {}), IdealPresentation{{}}});
  const auto same = tensor_algebra(perazzo, trivial);
  CHECK(same.hilbert() == perazzo.hilbert());

  // random pair: H(A (x) B) is the convolution of H(A) and H(B)
  const auto p = GradedAlgebra::build(dual_spec("X^[2]*Y", {"x", "y"}));
  const auto q = GradedAlgebra::build(dual_spec("W^[3]", {"w"}));
  const auto pq = tensor_algebra(p, q);
  std::vector<int> conv(p.socle_degree() + q.socle_degree() + 1, 0);
  for (int i = 0; i <= p.socle_degree(); ++i)
    for (int k = 0; k <= q.socle_degree(); ++k) conv[i + k] += p.hilbert()[i] * q.hilbert()[k];
  CHECK(pq.hilbert() == conv);
}

TEST_CASE("cg_tensor examples") {
  CHECK(cg_tensor(Partition({2}), Partition({2}), 0) == Partition({3, 1}));
  CHECK(cg_tensor(Partition({2}), Partition({4, 2, 2, 2, 1, 1}), 0) ==
        Partition({5, 3, 3, 3, 3, 2, 2, 1, 1, 1}));
  CHECK(cg_tensor(Partition({1}), Partition({4, 2}), 0) == Partition({4, 2}));
  CHECK_THROWS_AS(cg_tensor(Partition({5}), Partition({4}), 3), CharTooSmallError);
  CHECK(cg_tensor(Partition({2}), Partition({2}), 3) == Partition({3, 1}));  // 3 >= 2+2-1

  std::mt19937_64 eng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> ps{1 + (int)(eng() % 5), 1 + (int)(eng() % 3)};
    std::vector<int> qs{1 + (int)(eng() % 5)};
    const Partition p = Partition::from_unsorted(ps), q = Partition::from_unsorted(qs);
    CHECK(cg_tensor(p, q, 0).size() == p.size() * q.size());
  }
}

TEST_CASE("cg_tensor against multiplication on k[x,y]/(x^a, y^b)") {
  const VariableTable t = VariableTable::standard({"x", "y"});
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const auto alg = GradedAlgebra::build(AlgebraSpec{
          Q, t,
          IdealPresentation{{parse_polynomial("x^" + std::to_string(a), t, Q),
                             parse_polynomial("y^" + std::to_string(b), t, Q)}}});
      const Element ell = alg.normal_form(parse_polynomial("x+y", t, Q));
      CHECK(jordan_type(alg, ell).partition == cg_tensor(Partition({a}), Partition({b}), 0));
    }
}

TEST_CASE("verify_free_extension on canonical tensor triples") {
  const auto a = GradedAlgebra::build(dual_spec("T^[2]", {"t"}));
  const auto b = GradedAlgebra::build(dual_spec("X*Y", {"x", "y"}));
  const auto triple = canonical_tensor_triple(a, b);
  const auto rep = verify_free_extension(triple);
  CHECK(rep.verdict);
  CHECK(rep.iota_well_defined);
  CHECK(rep.pi_well_defined);
  CHECK(rep.pi_surjective);
  CHECK(rep.kernel_condition);
  CHECK(rep.dim_product);
}

TEST_CASE("build_dual_extension on the Perazzo family") {
  const auto b_spec = perazzo_spec();
  const DividedPolynomial g =
      parse_divided_polynomial("X^[2]*U*V+X*Y*V^[2]", b_spec.table, Q);
  const auto triple = build_dual_extension(b_spec, 1, g);
  CHECK(triple.C.hilbert() == std::vector<int>{1, 6, 10, 6, 1});
  CHECK(triple.A.hilbert() == std::vector<int>{1, 1});
  CHECK(verify_free_extension(triple).verdict);

  // G = 0: the undeformed tensor
  const auto plain = build_dual_extension(b_spec, 1, DividedPolynomial::zero(b_spec.table, Q));
  CHECK(verify_free_extension(plain).verdict);
  CHECK(theorem_check(plain, 7, 0).verdict == TheoremVerdict::EQ);
}

TEST_CASE("build_dual_extension rejects bad G") {
  const auto b_spec = perazzo_spec();
  // wrong degree
  CHECK_THROWS_AS(
      build_dual_extension(b_spec, 1, parse_divided_polynomial("X^[3]", b_spec.table, Q)),
      MathError);
  // (x^2)(x^2) o X^[4] = 1 != 0, so X^[4] violates the condition
  try {
    build_dual_extension(b_spec, 1, parse_divided_polynomial("X^[4]", b_spec.table, Q));
    CHECK(false);
  } catch (const ConditionFailsError& e) {
    const auto b = GradedAlgebra::build(b_spec);
    const Polynomial f = parse_polynomial(e.witness_f(), b_spec.table, Q);
    const Polynomial g2 = parse_polynomial(e.witness_g(), b_spec.table, Q);
    // witness oracle: both factors annihilate F_B but their product hits G
    CHECK(contract(f, b_spec.dual_generator()).is_zero());
    CHECK(contract(g2, b_spec.dual_generator()).is_zero());
    CHECK(!contract(f * g2, parse_divided_polynomial("X^[4]", b_spec.table, Q)).is_zero());
  }
}

TEST_CASE("valid_g_space") {
  const auto b_spec = perazzo_spec();
  const auto b = GradedAlgebra::build(b_spec);
  const auto basis = valid_g_space(b, 1);
  const auto duals = monomials_of_degree(b.table(), 4);
  RowSpace span(static_cast<int>(duals.size()), Q);
  for (const auto& g : basis) span.insert(divided_coords(g, duals));
  CHECK(span.dim() == static_cast<int>(basis.size()));
  // the known admissible deformation term lies in the space; G = 0 trivially does
  const DividedPolynomial paper_g =
      parse_divided_polynomial("X^[2]*U*V+X*Y*V^[2]", b.table(), Q);
  CHECK(span.contains(divided_coords(paper_g, duals)));
  // every basis element satisfies the contraction condition
  for (const auto& g : basis)
    for (int d1 = 1; d1 + 1 <= g.degree(); ++d1)
      for (int d2 = d1; d1 + d2 <= g.degree(); ++d2)
        for (const auto& f : b.ideal_degree_basis(d1))
          for (const auto& h : b.ideal_degree_basis(d2))
            CHECK(contract(f * h, g).is_zero());

  // one-variable case: B = k[x]/(x^2), m = 1, basis is exactly {X^[2]}
  const auto b1_spec = dual_spec("X", {"x"});
  const auto b1 = GradedAlgebra::build(b1_spec);
  const auto basis1 = valid_g_space(b1, 1);
  REQUIRE(basis1.size() == 1);
  CHECK(basis1[0] == parse_divided_polynomial("X^[2]", b1.table(), Q));
}

TEST_CASE("an inadmissible G breaks the extension structure") {
  const auto b_spec = perazzo_spec();
  const DividedPolynomial bad = parse_divided_polynomial("X^[4]", b_spec.table, Q);
  // assemble the triple by hand, bypassing the condition check
  const VariableTable s = b_spec.table.with_appended("t", 1);
  std::vector<int> embed{0, 1, 2, 3, 4};
  std::vector<int> texp(6, 0);
  texp[5] = 1;
  const DividedPolynomial f =
      dp_multiply(DividedPolynomial::monomial_term(s, Monomial(texp, s), Scalar::one(Q)),
                  b_spec.dual_generator().embedded(s, embed)) +
      bad.embedded(s, embed);
  const auto c = GradedAlgebra::build(AlgebraSpec{Q, s, DualPresentation{f}});
  const auto a = GradedAlgebra::build(dual_spec("T", {"t"}));
  const auto b = GradedAlgebra::build(b_spec);
  RingMapSpec iota{a.table(), s, {parse_polynomial("t", s, Q)}};
  RingMapSpec pi{s, b.table(), {}};
  for (int i = 0; i < 5; ++i) pi.images.push_back(Polynomial::variable(b.table(), Q, i));
  pi.images.push_back(Polynomial::zero(b.table(), Q));
  const auto rep = verify_free_extension(ExtensionTriple{a, b, c, iota, pi});
  CHECK(!rep.verdict);
  CHECK((!rep.kernel_condition || !rep.dim_product));
}

TEST_CASE("ill-formed pi is reported, not crashed") {
  const auto b_spec = perazzo_spec();
  const DividedPolynomial g =
      parse_divided_polynomial("X^[2]*U*V+X*Y*V^[2]", b_spec.table, Q);
  auto triple = build_dual_extension(b_spec, 1, g);
  // redefine pi(t) = x: t^2 would have to map to x^2 != 0 in B
  triple.pi.images.back() = Polynomial::variable(triple.B.table(), Q, 0);
  const auto rep = verify_free_extension(triple);
  CHECK(!rep.pi_well_defined);
  CHECK(!rep.verdict);
}

TEST_CASE("theorem_check on the Perazzo triple") {
  const auto b_spec = perazzo_spec();
  const DividedPolynomial g =
      parse_divided_polynomial("X^[2]*U*V+X*Y*V^[2]", b_spec.table, Q);
  const auto triple = build_dual_extension(b_spec, 1, g);
  const auto res = theorem_check(triple, 7, 0);
  CHECK(res.verdict == TheoremVerdict::GT);
  CHECK(res.p_c == Partition({5, 3, 3, 3, 3, 3, 1, 1, 1, 1}));
  CHECK(res.p_tensor == Partition({5, 3, 3, 3, 3, 2, 2, 1, 1, 1}));
  // P_C covers P_{A(x)B}: strict, one step apart in dominance
  CHECK(dominance_compare(res.p_c, res.p_tensor) == Dominance::GT);

  // C is strong Lefschetz: a generic linear form passes the per-piece
  // maximal-rank test even though the fiber B does not
  const Element ell_c = generic_jordan_type(triple.C, SampleMode::LinearForms, 7, 0).witness;
  CHECK(sl_rank_check(triple.C, ell_c).maximal);
}

TEST_CASE("theorem_check requires a verified triple") {
  const auto b_spec = perazzo_spec();
  auto triple = build_dual_extension(b_spec, 1, DividedPolynomial::zero(b_spec.table, Q));
  triple.pi.images.back() = Polynomial::variable(triple.B.table(), Q, 0);
  CHECK_THROWS_AS(theorem_check(triple, 3, 0), NotFreeExtensionError);
}

TEST_CASE("free extensions of strong Lefschetz algebras are strong Lefschetz") {
  // A = k[t]/(t^2) and B = k[x,y]/(x^3,y^3) both have symmetric Hilbert
  // functions and are SL over Q, so every free extension C must be SL.
  const auto b_spec = dual_spec("X^[2]*Y^[2]", {"x", "y"});
  const auto b = GradedAlgebra::build(b_spec);
  CHECK(b.hilbert() == std::vector<int>{1, 2, 3, 2, 1});
  CHECK(lefschetz_certify(b, CertifyMode::SL_graded, 7, 0).verdict);
  std::mt19937_64 eng(15);
  const auto space = valid_g_space(b, 1);
  for (int trial = 0; trial < 4; ++trial) {
    DividedPolynomial g(b.table(), Q);
    for (const auto& gb : space)
      g = g + gb.scaled(Scalar::of_integer((long)(eng() % 5) - 2, Q));
    const auto triple = build_dual_extension(b_spec, 1, g);
    CHECK(lefschetz_certify(triple.C, CertifyMode::SL_graded, 7, 0).verdict);
  }
}

TEST_CASE("random valid G never falsifies the dominance theorem") {
  std::mt19937_64 eng(77);
  const std::vector<std::string> names{"w", "x", "y", "z"};
  int done = 0;
  for (int trial = 0; done < 6 && trial < 60; ++trial) {
    const int nv = 2 + (int)(eng() % 3);
    const int deg = 2 + (int)(eng() % 2);
    const VariableTable t =
        VariableTable::standard(std::vector<std::string>(names.begin(), names.begin() + nv));
    DividedPolynomial fb(t, Q);
    for (const Monomial& m : monomials_of_degree(t, deg))
      fb.add_term(m, Scalar::of_integer((long)(eng() % 4), Q));
    if (fb.is_zero()) continue;
    const AlgebraSpec spec{Q, t, DualPresentation{fb}};
    const auto b = GradedAlgebra::build(spec);
    const int m = 1 + (int)(eng() % 2);
    DividedPolynomial g(t, Q);
    for (const auto& gb : valid_g_space(b, m))
      g = g + gb.scaled(Scalar::of_integer((long)(eng() % 7) - 3, Q));
    const auto triple = build_dual_extension(spec, m, g);
    const auto res = theorem_check(triple, 7, eng());
    CHECK((res.verdict == TheoremVerdict::GT || res.verdict == TheoremVerdict::EQ));
    ++done;
  }
  CHECK(done == 6);
}
