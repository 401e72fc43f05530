#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffops/groebner.hpp"
#include "diffops/jacobian.hpp"
#include "diffops/ore.hpp"

namespace diffops {

// Cofinite additive submonoid S of N. A = span{x^s : s in S} ⊆ K[x].
class NumericalSemigroup {
 public:
  // Throws InputError unless the generators are positive with gcd 1.
  explicit NumericalSemigroup(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const { return gens_; }
  const std::vector<std::int64_t>& gaps() const { return gaps_; }
  std::int64_t frobenius() const { return static_cast<std::int64_t>(member_.size()) - 1; }
  std::int64_t conductor() const { return static_cast<std::int64_t>(member_.size()); }
  // Smallest nonzero element.
  std::int64_t multiplicity() const { return gens_.front(); }
  bool is_whole() const { return gaps_.empty(); }
  bool contains(std::int64_t n) const;
  // Elements of S in [0, bound].
  std::vector<std::int64_t> elements_upto(std::int64_t bound) const;
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.member_ == b.member_;
  }

 private:
  std::vector<std::int64_t> gens_;  // sorted, deduplicated
  std::vector<std::int64_t> gaps_;
  std::vector<bool> member_;  // membership of 0..frobenius
};

// Monomial ideal E = E_0 + S of A. E_0 = {0} is the unit ideal, E_0 = {} the zero ideal.
class SIdeal {
 public:
  SIdeal(const NumericalSemigroup& s, std::vector<std::int64_t> generators);

  // Minimal generators, ascending.
  const std::vector<std::int64_t>& generators() const { return gens_; }
  bool contains(std::int64_t e) const;
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.front() == 0; }
  std::string to_string() const;

  friend bool operator==(const SIdeal& a, const SIdeal& b) { return a.gens_ == b.gens_; }

 private:
  NumericalSemigroup s_;
  std::vector<std::int64_t> gens_;
};

// f_i: D(A) ∩ K[h]x^i = f_i(h) K[h] x^i. Roots are (S + i) \ S, ascending.
std::vector<std::int64_t> dop_piece_roots(const NumericalSemigroup& s, std::int64_t i);
UniPoly dop_piece(const NumericalSemigroup& s, std::int64_t i);
// f_i(h) x^i.
GradedOp dop_generator(const NumericalSemigroup& s, std::int64_t i);

bool dop_membership(const NumericalSemigroup& s, const GradedOp& u);

struct DerPiece {
  std::int64_t degree;
  GradedOp basis;  // x^i h = (h - i) x^i
};

// The nonzero graded components of Der_K(A) with degree in [lo, hi].
std::vector<DerPiece> der_pieces(const NumericalSemigroup& s, std::int64_t lo, std::int64_t hi);
bool der_piece_nonzero(const NumericalSemigroup& s, std::int64_t i);

// A nonzero element of D(A) outside the derivation ring (which has no negative-degree
// elements), or nullopt when S = N and the two rings coincide.
std::optional<GradedOp> delta_vs_dop(const NumericalSemigroup& s);

struct SemigroupPresentation {
  AffinePresentation presentation;
  std::vector<std::int64_t> degree_map;  // t-degree of each variable
};

// K[S] = K[u, v, ...]/I with the k-th variable mapped to t^{g_k}; I is the toric kernel.
SemigroupPresentation present_algebra(const NumericalSemigroup& s, const GbBudget& budget = {});

// Jacobian ideal of the presented algebra, read back as exponents of t.
SIdeal jacobian_ideal_monomial(const NumericalSemigroup& s, const GbBudget& budget = {});

enum class ComponentStatus { UnitProven, UpperBoundOnly };

struct ComponentResult {
  std::int64_t degree = 0;
  UniPoly gcd;  // monic gcd of the generators examined
  ComponentStatus status = ComponentStatus::UpperBoundOnly;
  std::int64_t shift_window = 0;  // B
  std::int64_t window_lo = 0;     // shift indices actually examined
  std::int64_t window_hi = 0;
  // Shift indices i whose generators G_i each lowered the running gcd.
  std::vector<std::int64_t> witnesses;
};

// Degree-t component of the two-sided ideal D(A) u D(A) for u = p(h) x^d in D(A):
// generated over K[h] by G_i = f_i(h) p(h - i) f_{t-i-d}(h - i - d) over all integers i.
// Examines i in [min(0, t-d) - B, max(0, t-d) + B], i.e. slack B around the one-sided
// products u w and w u.
ComponentResult ideal_component(const NumericalSemigroup& s, const GradedOp& u, std::int64_t t,
                                std::int64_t shift_bound);

// Same, for the ideal generated by several homogeneous members.
ComponentResult ideal_component(const NumericalSemigroup& s, const std::vector<GradedOp>& gens,
                                std::int64_t t, std::int64_t shift_bound);

struct MeetsWitness {
  std::int64_t t;
  ComponentResult certificate;
};

// Least t in [t_min, t_max] with x^t proven inside D(A) u D(A) ∩ A.
std::optional<MeetsWitness> meets_A(const NumericalSemigroup& s, const GradedOp& u,
                                    std::int64_t t_min, std::int64_t t_max,
                                    std::int64_t shift_bound);

struct StabilityWitness {
  std::int64_t op_degree;  // degree i of the acting operator
  std::int64_t exponent;   // e in E
  mpq_class value;         // image is value * x^{e+i}, with e+i outside E
};

struct StabilityVerdict {
  bool stable = true;
  std::optional<StabilityWitness> witness;
};

StabilityVerdict is_der_stable(const NumericalSemigroup& s, const SIdeal& e);
StabilityVerdict is_dop_stable(const NumericalSemigroup& s, const SIdeal& e);

enum class ClosureOutcome { EqualsE, StrictlyLarger, Inconclusive };

struct ClosureResult {
  ClosureOutcome outcome = ClosureOutcome::Inconclusive;
  std::optional<MeetsWitness> witness;  // some x^t with t outside E
  std::int64_t t_max = 0;
  std::int64_t shift_bound = 0;
};

// Compares D(A) E D(A) ∩ A with E over t in S \ E, t <= t_max.
ClosureResult closure_in_A(const NumericalSemigroup& s, const SIdeal& e, std::int64_t t_max,
                           std::int64_t shift_bound);

enum class SimplicityOutcome { SimpleProven, Inconclusive };

struct SimplicityCertificate {
  std::int64_t k;
  std::int64_t power;      // d = k * c_e; x^d ∈ a^k
  UniPoly left;            // f_{-d}(h), from w_{-d} x^d
  UniPoly right;           // f_{-d}(h - d), from x^d w_{-d}
  UniPoly gcd;
  bool roots_disjoint;     // roots of `left` avoid S, roots of `right` lie in S
  ComponentResult component;
};

struct SimplicityVerdict {
  SimplicityOutcome outcome = SimplicityOutcome::Inconclusive;
  SIdeal jacobian_ideal;
  std::vector<SimplicityCertificate> certificates;
  std::int64_t k_max = 0;
  std::int64_t shift_bound = 0;
};

std::int64_t default_shift_bound(const NumericalSemigroup& s, std::int64_t max_degree = 0);

SimplicityVerdict simplicity_verdict(const NumericalSemigroup& s, std::int64_t k_max,
                                     std::int64_t shift_bound, const GbBudget& budget = {});

}  // namespace diffops
