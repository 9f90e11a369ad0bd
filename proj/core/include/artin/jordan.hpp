#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin/algebra.hpp"
#include "artin/partition.hpp"

namespace artin {

struct JordanReport {
  Element element;
  std::vector<int> rank_sequence;  // ranks of operator powers, ending in 0
  Partition partition;
  Partition hf_conjugate;  // conjugate of the relevant (sorted) Hilbert function
  bool sljt = false;       // partition == hf_conjugate
  bool used_local_hilbert = false;
};

// Jordan type of the multiplication by e (zero constant term required).
// A linear form is measured against the graded Hilbert function, anything
// else against the m-adic one.
JordanReport jordan_type(const GradedAlgebra& a, const Element& e);

// Rank sequence of a nilpotent matrix, [rank M, rank M^2, ..., 0].
std::vector<int> nilpotent_rank_sequence(const ExactMatrix& m);
Partition jordan_type_of_matrix(const ExactMatrix& m);

enum class SampleMode { LinearForms, MaximalIdeal };

// Deterministic random element of the chosen stratum: nonzero coefficients
// on the degree-1 standard monomials (LinearForms) or on all positive-degree
// ones (MaximalIdeal). Q coefficients are uniform in [1, 10^4]; GF(p)
// coefficients uniform nonzero.
Element sample_stratum_element(const GradedAlgebra& a, SampleMode mode, std::uint64_t seed);

struct GenericJordanResult {
  Partition partition;
  Element witness;
  std::vector<Partition> observed;  // distinct types seen, discovery order
};

// Dominance-maximum Jordan type among `samples` seeded draws, with witness.
// The result is a certified lower bound for the generic type; sampling the
// closed bad locus is what the repeated draws guard against. Sample i uses
// seed + i, so runs are reproducible and parallelizable.
GenericJordanResult generic_jordan_type(const GradedAlgebra& a, SampleMode mode, int samples,
                                        std::uint64_t seed);

struct RankTableEntry {
  int i = 0;
  int k = 0;
  int rank = 0;
  int max_rank = 0;
};

struct SlRankCheckResult {
  bool maximal = false;
  std::vector<RankTableEntry> table;
};

// True iff every graded piece of every power, x ell^k : A_i -> A_{i+k},
// has rank min(h_i, h_{i+k}). Requires ell homogeneous of degree 1.
SlRankCheckResult sl_rank_check(const GradedAlgebra& a, const Element& ell);

enum class CertifyMode { SL_graded, SLJT_local };

struct LefschetzReport {
  CertifyMode mode = CertifyMode::SL_graded;
  std::vector<int> hilbert_used;  // graded or local H
  Partition target;               // conjugate of the sorted Hilbert function
  std::optional<Partition> sampled;
  std::optional<Element> witness;
  bool verdict = false;
  std::string obstruction;  // nonempty when the graded rank bound rules SL out
};

LefschetzReport lefschetz_certify(const GradedAlgebra& a, CertifyMode mode, int samples,
                                  std::uint64_t seed);

struct JordanChain {
  Element generator;  // homogeneous
  int length = 0;
};

// Homogeneous Jordan chains for multiplication by a degree-1 form:
// {ell^i z_j : 0 <= i < q_j} is a basis of A and the sorted lengths give
// the Jordan type. The zero form is allowed and yields length-1 chains
// over the standard basis.
std::vector<JordanChain> jordan_chain_basis(const GradedAlgebra& a, const Element& ell);

}  // namespace artin
