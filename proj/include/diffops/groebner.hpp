#pragma once

#include <cstddef>
#include <vector>

#include "diffops/multipoly.hpp"

namespace diffops {

// Limits for a Buchberger run. Exceeding either throws BudgetExceeded.
struct GbBudget {
  std::size_t max_pairs = 200000;
  std::size_t max_basis = 5000;
};

// Reduced Groebner basis: monic elements sorted ascending by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<MultiPoly> basis)
      : ring_(std::move(ring)), order_(std::move(order)), basis_(std::move(basis)) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<MultiPoly>& basis() const { return basis_; }
  bool is_unit() const;
  bool is_zero_ideal() const { return basis_.empty(); }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<MultiPoly> basis_;
};

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                             const MonomialOrder& order, const GbBudget& budget = {});

// Grevlex with the ring's variable order.
GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                             const GbBudget& budget = {});

// Remainder of multivariate division by the basis; zero iff f lies in the ideal.
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order);

bool is_unit_ideal(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                   const GbBudget& budget = {});

struct Elimination {
  RingPtr ring;                 // the remaining variables, in input order
  std::vector<MultiPoly> gens;  // reduced lex basis of the elimination ideal
};

// Generators of (gens) ∩ K[remaining variables], via lex with dropped variables first.
Elimination eliminate(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                      const std::vector<std::size_t>& drop, const GbBudget& budget = {});

// Krull dimension of K[x]/I read from the leading monomials of a Groebner basis of I:
// the size of a largest variable set no leading monomial is supported on.
std::size_t quotient_dimension(const GroebnerBasis& gb);

}  // namespace diffops
