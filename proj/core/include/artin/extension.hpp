#pragma once

#include <cstdint>

#include "artin/jordan.hpp"

namespace artin {

// A graded ring map determined by one homogeneous image per source variable.
struct RingMapSpec {
  VariableTable source;
  VariableTable target;
  std::vector<Polynomial> images;  // over `target`, indexed by source variable

  Polynomial apply(const Polynomial& f) const;
};

struct ExtensionTriple {
  GradedAlgebra A, B, C;
  RingMapSpec iota;  // A -> C
  RingMapSpec pi;    // C -> B
};

struct ExtensionReport {
  bool iota_well_defined = false;
  bool pi_well_defined = false;
  bool pi_surjective = false;
  bool kernel_condition = false;  // ker pi = iota(m_A) C, per degree
  bool dim_product = false;       // dim C = dim A * dim B
  bool verdict = false;
  std::string criterion = "surjectivity + kernel + dimension product";
  std::string failure_detail;
};

// Matrix of the induced degree-d map source_d -> target_d.
ExactMatrix map_degree_matrix(const RingMapSpec& map, const GradedAlgebra& source_alg,
                              const GradedAlgebra& target_alg, int d);

// Tensor product algebra on the disjoint union of variables, presented by
// the generating sets of both factors.
GradedAlgebra tensor_algebra(const GradedAlgebra& a, const GradedAlgebra& b);

// (A, B, A tensor B) with the canonical inclusion and projection.
ExtensionTriple canonical_tensor_triple(const GradedAlgebra& a, const GradedAlgebra& b);

// Clebsch-Gordan tensor of Jordan types: multiset union over part pairs
// (a, b) of (a+b-1, a+b-3, ..., |a-b|+1). Valid in characteristic 0 or
// characteristic >= largest(a) + largest(b) - 1; otherwise CharTooSmall.
Partition cg_tensor(const Partition& p, const Partition& q, long characteristic);

ExtensionReport verify_free_extension(const ExtensionTriple& t);

// From a Gorenstein fiber B = R/Ann(F_B) and a deformation term G of degree
// j_B + m with (I_B)^2 o G = 0, builds C = R[t]/Ann(T^[m] F_B + G) together
// with A = k[t]/(t^{m+1}) and the canonical maps. Throws ConditionFails with
// a witness pair when the contraction condition fails.
ExtensionTriple build_dual_extension(const AlgebraSpec& b_spec, int m,
                                     const DividedPolynomial& g);

// Basis of {G homogeneous of degree j_B + m : (f g) o G = 0 for all
// f, g in I_B}; the condition is linear in G.
std::vector<DividedPolynomial> valid_g_space(const GradedAlgebra& b, int m);

enum class TheoremVerdict { GT, EQ, GE_unresolved };

struct TheoremCheckResult {
  TheoremVerdict verdict = TheoremVerdict::GE_unresolved;
  Partition p_c;       // sampled generic linear Jordan type of C
  Partition p_tensor;  // sampled generic linear Jordan type of A tensor B
};

// Samples the generic linear Jordan types of C and of A tensor B and
// compares them in dominance. A strict LT observation contradicts the
// free-extension dominance theorem and raises FalsificationError.
TheoremCheckResult theorem_check(const ExtensionTriple& t, int samples, std::uint64_t seed);

const char* theorem_verdict_name(TheoremVerdict v);

}  // namespace artin
