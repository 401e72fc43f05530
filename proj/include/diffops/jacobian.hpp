#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diffops/groebner.hpp"
#include "diffops/multipoly.hpp"

namespace diffops {

// A = P_n / I for I = (f_1..f_m). The ideal is assumed prime; that is recorded, not checked.
class AffinePresentation {
 public:
  // Throws InputError if a generator is zero, lives in another ring, or I is the unit ideal.
  AffinePresentation(RingPtr ring, std::vector<MultiPoly> generators, bool assumed_prime = true,
                     const GbBudget& budget = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  bool assumed_prime() const { return assumed_prime_; }
  const GroebnerBasis& gb() const { return gb_; }
  const GbBudget& budget() const { return budget_; }
  std::size_t num_vars() const { return ring_->vars.size(); }

 private:
  RingPtr ring_;
  std::vector<MultiPoly> generators_;
  bool assumed_prime_;
  GbBudget budget_;
  GroebnerBasis gb_;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;
using IndexTuple = std::vector<std::size_t>;  // 0-based, strictly increasing

struct Minor {
  IndexTuple rows;
  IndexTuple cols;
  MultiPoly value;  // normal form mod I
};

struct JacobiData {
  PolyMatrix matrix;  // entries normal-formed mod I
  std::size_t rank = 0;
  std::vector<Minor> minors;  // every rank x rank minor, rows then cols lexicographic
  std::vector<IndexTuple> nonsingular_rows;
  std::vector<IndexTuple> nonsingular_cols;
  std::vector<MultiPoly> jacobian_ideal_gens;  // nonzero minors
  // n - dim(A). Equals `rank` whenever A is a domain over a perfect field.
  std::size_t codimension = 0;
  std::vector<std::string> warnings;
};

// All increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t k);

// Determinant by cofactor expansion, reducing every partial product mod `gb`.
MultiPoly determinant_mod(const PolyMatrix& m, const GroebnerBasis& gb);

PolyMatrix jacobi_matrix(const AffinePresentation& pres);
JacobiData rank_and_minors(const AffinePresentation& pres);
// Nonzero minors made monic, deduplicated and sorted; independent of generator order.
std::vector<MultiPoly> jacobian_ideal(const AffinePresentation& pres);

// 1 ∈ I + (c x c minors) with c the codimension of I; c = rank for prime I over Q or F_p.
bool is_regular(const AffinePresentation& pres);
bool is_regular(const AffinePresentation& pres, const JacobiData& data);
// The generators of I + (c x c minors) that is_regular tests for the unit ideal.
std::vector<MultiPoly> regularity_generators(const AffinePresentation& pres, const JacobiData& data);

// Δ(i,j) ≠ 0 iff i is a non-singular row tuple and j a non-singular column tuple.
bool check_minor_support(const JacobiData& data);

}  // namespace diffops
