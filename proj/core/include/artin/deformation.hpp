#pragma once

#include "artin/extension.hpp"

namespace artin {

// A k-linear section s of pi built from a Jordan chain basis of B: lifts
// Lambda of ell_B and v_j of the chain generators z_j, with
// s(ell_B^i z_j) = Lambda^i v_j. The elements iota(a) Lambda^i v_j, a
// running over the monomial basis of A, form an A-module basis of C;
// basis_map certifies this by being invertible.
struct SectionData {
  Element ell_B;                   // in B, degree 1 (zero allowed)
  std::vector<JordanChain> chains; // of B with respect to ell_B
  Element lambda;                  // in C, canonical preimage of ell_B
  std::vector<Element> v;          // in C, canonical preimages of the z_j

  struct BasisLabel {
    int chain = 0;    // j
    int power = 0;    // i in [0, q_j)
    int a_index = 0;  // standard-monomial index into A
  };
  std::vector<BasisLabel> labels;  // column order of basis_map
  int a_dimension = 0;
  ExactMatrix basis_map;  // columns: C-coordinates of iota(a) Lambda^i v_j
  ExactMatrix basis_map_inv;

  int index_of(int chain, int power, int a_index) const;
};

SectionData build_section(const ExtensionTriple& t, const Element& ell_B);

// The one-parameter family L_t = iota(ell_A) + Psi_t in the A-module basis
// coordinates. Psi_t is the A-module map sending Lambda^i v_j to
// psi_t(Lambda^{i+1} v_j), where psi_t scales the basis coordinate at
// iota(a) Lambda^i v_j by t^{deg a}; below the chain tops this is the plain
// shift, and at the tops the expansion of Lambda^{q_j} v_j inside
// iota(m_A) C picks up the t-powers. chi_t is the A-module map scaling
// Lambda^i v_j by t^{deg(Lambda^i v_j)}, and ell_t = iota(ell_A) + t Lambda.
struct DeformationFamily {
  ExtensionTriple triple;
  SectionData section;
  Element ell_A;            // in A
  bool ell_A_zero = false;  // allowed, with a warning flag

  ExactMatrix mult_iota_ell_A;           // basis coordinates
  std::vector<ExactMatrix> psi_powers;   // Psi_t = sum_p t^p psi_powers[p]
  ExactMatrix tensor_mult;               // x(ell_A(x)1 + 1(x)ell_B), chain basis
  std::vector<int> chain_degree;         // deg(Lambda^i v_j) per basis column

  ExactMatrix L_at(const Scalar& t) const;    // basis coordinates
  ExactMatrix chi_at(const Scalar& t) const;  // diagonal, basis coordinates
  Element ell_t(const Scalar& t) const;       // element of C
  // Conjugation into standard-monomial coordinates of C.
  ExactMatrix to_c_coords(const ExactMatrix& m_basis) const;
};

DeformationFamily build_family(const ExtensionTriple& t, const Element& ell_A,
                               const Element& ell_B);

struct DiagramResult {
  bool ok = false;
  int witness_column = -1;  // first mismatching basis column when !ok
};

// Exact identity Phi_s (x ell) = L_0 Phi_s on A (x) B.
DiagramResult verify_diagram_zero(const DeformationFamily& f);

// Exact identity chi_t (x ell_t) = L_t chi_t on C for t != 0.
DiagramResult verify_diagram_t(const DeformationFamily& f, const Scalar& t);

struct SemicontinuityEntry {
  std::string t;
  Partition partition;       // Jordan type of L_t
  Dominance versus_L0;       // compared against the Jordan type of L_0
};

struct SemicontinuityReport {
  Partition p_L0;
  std::vector<SemicontinuityEntry> p_Lt;
  bool all_dominate = false;    // P_{L_t} >= P_{L_0} at every sampled t
  bool conjugation_ok = false;  // P_{L_t} == Jordan type of x ell_t on C
};

// Jordan types along the family. The conjugation identity
// P_{L_t} = P_{x ell_t} holds for every t != 0 and its failure raises
// FalsificationError. The dominance P_{L_t} >= P_{L_0} is guaranteed only
// on an open set of parameters: special t can drop below L_0 (for the
// G(2,1,2) chain triple with ell_A = x2, ell_B = x1, the fibers at
// t = +-1 have type (4,4) < (5,3)), so dominance per t is reported,
// never asserted.
SemicontinuityReport semicontinuity_experiment(const DeformationFamily& f,
                                               const std::vector<Scalar>& ts);

}  // namespace artin
