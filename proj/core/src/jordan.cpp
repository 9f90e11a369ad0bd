#include "artin/jordan.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace artin {

namespace {

// Matrix of x e restricted to A_d -> A_{d+w}, for homogeneous e of degree w.
ExactMatrix graded_piece(const GradedAlgebra& a, const Polynomial& ep, int d, int w) {
  const auto [s0, e0] = a.block_range(d);
  const auto [s1, e1] = a.block_range(d + w);
  ExactMatrix m(e1 - s1, e0 - s0, a.field());
  for (int g = s0; g < e0; ++g) {
    const Element col =
        a.normal_form(ep.times_monomial(a.basis_monomial(g), Scalar::one(a.field())));
    for (int r = s1; r < e1; ++r) m.at(r - s1, g - s0) = col.coeffs[r];
  }
  return m;
}

std::vector<ExactMatrix> all_pieces(const GradedAlgebra& a, const Polynomial& ep, int w) {
  std::vector<ExactMatrix> pieces;
  for (int d = 0; d <= a.socle_degree(); ++d) pieces.push_back(graded_piece(a, ep, d, w));
  return pieces;
}

// Rank sequence via per-degree pieces; exact and much cheaper than dense
// powers because the graded blocks are small.
std::vector<int> graded_rank_sequence(const GradedAlgebra& a, const Polynomial& ep, int w) {
  const int j = a.socle_degree();
  std::vector<ExactMatrix> pieces = all_pieces(a, ep, w);
  std::vector<ExactMatrix> cur = pieces;  // power-k piece starting at each degree
  std::vector<int> ranks;
  for (int k = 1;; ++k) {
    int rank = 0;
    for (int d = 0; d <= j; ++d) rank += rank_of(cur[d]);
    ranks.push_back(rank);
    if (rank == 0) break;
    for (int d = 0; d <= j; ++d) {
      const int mid = d + k * w;
      if (mid <= j)
        cur[d] = pieces[mid].multiply(cur[d]);
      else
        cur[d] = ExactMatrix(0, cur[d].cols(), a.field());
    }
  }
  return ranks;
}

std::string partitions_list(const std::vector<Partition>& ps) {
  std::ostringstream os;
  for (size_t i = 0; i < ps.size(); ++i) os << (i ? "; " : "") << "(" << ps[i].str() << ")";
  return os.str();
}

}  // namespace

std::vector<int> nilpotent_rank_sequence(const ExactMatrix& m) {
  std::vector<int> ranks;
  ExactMatrix power = m;
  for (int k = 1; k <= m.rows() + 1; ++k) {
    const int r = rank_of(power);
    ranks.push_back(r);
    if (r == 0) return ranks;
    power = power.multiply(m);
  }
  throw NonNilpotentError("matrix is not nilpotent");
}

Partition jordan_type_of_matrix(const ExactMatrix& m) {
  return jordan_type_from_ranks(m.rows(), nilpotent_rank_sequence(m));
}

JordanReport jordan_type(const GradedAlgebra& a, const Element& e) {
  if (!e.coeffs.empty() && !e.coeffs[0].is_zero())
    throw NonNilpotentError("element has a nonzero constant term");
  JordanReport rep;
  rep.element = e;
  const bool homogeneous = e.homogeneous_degree.has_value();
  if (homogeneous && *e.homogeneous_degree >= 1) {
    rep.rank_sequence =
        graded_rank_sequence(a, a.element_to_polynomial(e), *e.homogeneous_degree);
  } else {
    rep.rank_sequence = nilpotent_rank_sequence(a.mult_operator(e));
  }
  rep.partition = jordan_type_from_ranks(a.dimension(), rep.rank_sequence);
  const bool linear = homogeneous && *e.homogeneous_degree == 1;
  rep.used_local_hilbert = !linear;
  const std::vector<int> h = linear ? a.hilbert() : a.local_hilbert();
  rep.hf_conjugate = Partition::from_unsorted(h).conjugate();
  rep.sljt = rep.partition == rep.hf_conjugate;
  return rep;
}

Element sample_stratum_element(const GradedAlgebra& a, SampleMode mode, std::uint64_t seed) {
  std::vector<int> stratum;
  for (int g = 0; g < a.dimension(); ++g) {
    const int d = a.basis_degree(g);
    if (mode == SampleMode::LinearForms ? d == 1 : d >= 1) stratum.push_back(g);
  }
  if (stratum.empty()) {
    if (mode == SampleMode::LinearForms)
      throw EmptyStratumError("algebra has no degree-1 standard monomials");
    return a.zero_element();
  }
  std::mt19937_64 eng(seed);
  std::vector<Scalar> coeffs(a.dimension(), Scalar::zero(a.field()));
  for (int g : stratum) {
    long c;
    if (a.field().kind == FieldKind::Rationals)
      c = 1 + static_cast<long>(eng() % 10000);
    else
      c = 1 + static_cast<long>(eng() % static_cast<std::uint64_t>(a.field().characteristic - 1));
    coeffs[g] = Scalar::of_integer(c, a.field());
  }
  return a.element_from_coeffs(std::move(coeffs));
}

namespace {

struct Sampled {
  Partition partition;
  Element witness;
};

// Index of a sample dominating all others, or -1 when none exists.
int dominance_maximum(const std::vector<Sampled>& obs) {
  for (size_t i = 0; i < obs.size(); ++i) {
    bool top = true;
    for (size_t k = 0; k < obs.size() && top; ++k) {
      const Dominance d = dominance_compare(obs[k].partition, obs[i].partition);
      top = d == Dominance::LT || d == Dominance::EQ;
    }
    if (top) return static_cast<int>(i);
  }
  return -1;
}

std::vector<Partition> distinct_partitions(const std::vector<Sampled>& obs) {
  std::vector<Partition> out;
  for (const auto& s : obs)
    if (std::find(out.begin(), out.end(), s.partition) == out.end()) out.push_back(s.partition);
  return out;
}

}  // namespace

GenericJordanResult generic_jordan_type(const GradedAlgebra& a, SampleMode mode, int samples,
                                        std::uint64_t seed) {
  if (samples < 1) throw InputError("samples must be >= 1");
  std::vector<Sampled> obs;
  for (int i = 0; i < samples; ++i) {
    const Element e = sample_stratum_element(a, mode, seed + static_cast<std::uint64_t>(i));
    obs.push_back({jordan_type(a, e).partition, e});
  }
  const int best = dominance_maximum(obs);
  if (best < 0)
    throw IncomparableSamplesError("no dominance maximum among sampled types: " +
                                   partitions_list(distinct_partitions(obs)));
  return GenericJordanResult{obs[best].partition, obs[best].witness, distinct_partitions(obs)};
}

SlRankCheckResult sl_rank_check(const GradedAlgebra& a, const Element& ell) {
  if (!ell.homogeneous_degree || *ell.homogeneous_degree != 1)
    throw NotLinearError("sl_rank_check requires a homogeneous degree-1 element");
  const int j = a.socle_degree();
  const Polynomial lp = a.element_to_polynomial(ell);
  std::vector<ExactMatrix> pieces = all_pieces(a, lp, 1);
  std::vector<ExactMatrix> cur = pieces;
  SlRankCheckResult res;
  res.maximal = true;
  for (int k = 1; k <= j; ++k) {
    for (int i = 0; i + k <= j; ++i) {
      RankTableEntry entry;
      entry.i = i;
      entry.k = k;
      entry.rank = rank_of(cur[i]);
      entry.max_rank = std::min(a.hilbert_at(i), a.hilbert_at(i + k));
      if (entry.rank != entry.max_rank) res.maximal = false;
      res.table.push_back(entry);
    }
    for (int d = 0; d <= j; ++d) {
      const int mid = d + k;
      if (mid <= j)
        cur[d] = pieces[mid].multiply(cur[d]);
      else
        cur[d] = ExactMatrix(0, cur[d].cols(), a.field());
    }
  }
  return res;
}

LefschetzReport lefschetz_certify(const GradedAlgebra& a, CertifyMode mode, int samples,
                                  std::uint64_t seed) {
  LefschetzReport rep;
  rep.mode = mode;
  rep.hilbert_used = mode == CertifyMode::SL_graded ? a.hilbert() : a.local_hilbert();
  rep.target = Partition::from_unsorted(rep.hilbert_used).conjugate();
  if (a.dimension() == 1) {
    rep.sampled = Partition({1});
    rep.witness = a.zero_element();
    rep.verdict = rep.target == *rep.sampled;
    return rep;
  }
  if (mode == CertifyMode::SL_graded) {
    // Rank bound for linear forms: rank(ell^k) <= sum_i min(h_i, h_{i+k}),
    // while the target partition needs the sum of all but the k largest
    // sorted values. A shortfall rules out any SL element.
    const std::vector<int>& h = a.hilbert();
    const Partition sorted = Partition::from_unsorted(h);
    const int j = a.socle_degree();
    for (int k = 1; k <= j; ++k) {
      long needed = 0;
      for (int i = k; i < sorted.count(); ++i) needed += sorted.part(i);
      long avail = 0;
      for (int i = 0; i + k <= j; ++i) avail += std::min(a.hilbert_at(i), a.hilbert_at(i + k));
      if (needed > avail) {
        std::ostringstream os;
        os << "rank bound unreachable for linear forms at power " << k << ": needs " << needed
           << ", graded pieces allow " << avail
           << " (Hilbert function not unimodal after sorting)";
        rep.obstruction = os.str();
        rep.verdict = false;
        return rep;
      }
    }
  }
  const SampleMode sm =
      mode == CertifyMode::SL_graded ? SampleMode::LinearForms : SampleMode::MaximalIdeal;
  std::vector<Sampled> obs;
  for (int i = 0; i < samples; ++i) {
    const Element e = sample_stratum_element(a, sm, seed + static_cast<std::uint64_t>(i));
    obs.push_back({jordan_type(a, e).partition, e});
    if (obs.back().partition == rep.target) break;  // bound achieved, no sample can exceed it
  }
  const int best = dominance_maximum(obs);
  if (best < 0)
    throw IncomparableSamplesError("no dominance maximum among sampled types: " +
                                   partitions_list(distinct_partitions(obs)));
  rep.sampled = obs[best].partition;
  rep.witness = obs[best].witness;
  rep.verdict = *rep.sampled == rep.target;
  return rep;
}

std::vector<JordanChain> jordan_chain_basis(const GradedAlgebra& a, const Element& ell) {
  if (ell.is_zero()) {
    std::vector<JordanChain> chains;
    for (int g = 0; g < a.dimension(); ++g) chains.push_back({a.basis_element(g), 1});
    return chains;
  }
  if (!ell.homogeneous_degree || *ell.homogeneous_degree != 1)
    throw NotLinearError("jordan_chain_basis requires a homogeneous degree-1 element");
  const int j = a.socle_degree();
  const Polynomial lp = a.element_to_polynomial(ell);
  const std::vector<ExactMatrix> pieces = all_pieces(a, lp, 1);

  // powers[k][d] is the piece of x ell^k starting at degree d (k >= 1).
  std::vector<std::vector<ExactMatrix>> powers{{}, pieces};
  int s = 0;
  for (int k = 1;; ++k) {
    int rank = 0;
    for (int d = 0; d <= j; ++d) rank += rank_of(powers[k][d]);
    if (rank == 0) {
      s = k;
      break;
    }
    std::vector<ExactMatrix> next;
    for (int d = 0; d <= j; ++d) {
      const int mid = d + k;
      next.push_back(mid <= j ? pieces[mid].multiply(powers[k][d])
                              : ExactMatrix(0, powers[k][d].cols(), a.field()));
    }
    powers.push_back(std::move(next));
  }

  struct ChainRec {
    int start_degree = 0;
    int length = 0;
    std::vector<std::vector<Scalar>> vecs;  // block coordinates of ell^i * generator
  };
  std::vector<ChainRec> chains;

  // Work down the kernel flag: new length-k generators extend
  // ker(ell^{k-1}) plus the level-k vectors of longer chains.
  for (int k = s; k >= 1; --k) {
    for (int d = 0; d <= j; ++d) {
      const int hd = a.hilbert_at(d);
      if (hd == 0) continue;
      RowSpace space(hd, a.field());
      if (k >= 2) {
        const ExactMatrix lower = kernel_basis(powers[k - 1][d]);
        for (int r = 0; r < lower.rows(); ++r) space.insert(lower.row(r));
      }
      for (const ChainRec& c : chains) {
        if (c.length < k + 1) continue;
        const int level_index = c.length - k;
        if (c.start_degree + level_index == d) space.insert(c.vecs[level_index]);
      }
      const ExactMatrix candidates = kernel_basis(powers[k][d]);
      for (int r = 0; r < candidates.rows(); ++r) {
        const auto inserted = space.insert(candidates.row(r));
        if (!inserted) continue;
        ChainRec rec;
        rec.start_degree = d;
        rec.length = k;
        rec.vecs.push_back(*inserted);
        for (int i = 0; i + 1 < k; ++i) rec.vecs.push_back(pieces[d + i].apply(rec.vecs[i]));
        chains.push_back(std::move(rec));
      }
    }
  }

  int total = 0;
  for (const auto& c : chains) total += c.length;
  if (total != a.dimension())
    throw MathError("Internal", "Jordan chain extraction lost dimensions");

  std::stable_sort(chains.begin(), chains.end(),
                   [](const ChainRec& x, const ChainRec& y) { return x.length > y.length; });
  std::vector<JordanChain> out;
  for (const auto& c : chains) {
    std::vector<Scalar> coeffs(a.dimension(), Scalar::zero(a.field()));
    const auto [start, end] = a.block_range(c.start_degree);
    for (int i = start; i < end; ++i) coeffs[i] = c.vecs[0][i - start];
    out.push_back({a.element_from_coeffs(std::move(coeffs)), c.length});
  }
  return out;
}

}  // namespace artin
