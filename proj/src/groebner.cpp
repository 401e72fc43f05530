#include "diffops/groebner.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>
#include <utility>

#include "diffops/errors.hpp"

namespace diffops {

namespace {

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Terms sorted strictly descending under the active order.
using OrderedPoly = std::vector<Term>;

OrderedPoly to_ordered(const MultiPoly& f, const MonomialOrder& order) {
  OrderedPoly out;
  out.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return out;
}

MultiPoly from_ordered(const RingPtr& ring, const OrderedPoly& p) {
  MultiPoly f(ring);
  for (const auto& t : p) f.add_term(t.mono, t.coeff);
  return f;
}

// p - c * m * g
OrderedPoly sub_scaled(const OrderedPoly& p, const Scalar& c, const Monomial& m,
                       const OrderedPoly& g, const MonomialOrder& order) {
  OrderedPoly out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    if (i == p.size()) {
      out.push_back({std::move(gm), -(c * g[j].coeff)});
      ++j;
      continue;
    }
    const int cmp = order.compare(p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), -(c * g[j].coeff)});
      ++j;
    } else {
      Scalar v = p[i].coeff - c * g[j].coeff;
      if (!v.is_zero()) out.push_back({std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(OrderedPoly& p) {
  if (p.empty() || p.front().coeff.is_one()) return;
  const Scalar inv = p.front().coeff.inverse();
  for (auto& t : p) t.coeff *= inv;
}

// Full reduction of p by the monic polynomials in `basis`, skipping index `skip`.
OrderedPoly reduce(OrderedPoly p, const std::vector<OrderedPoly>& basis,
                   const MonomialOrder& order, std::size_t skip = static_cast<std::size_t>(-1)) {
  OrderedPoly rem;
  while (!p.empty()) {
    const Term& lead = p.front();
    const OrderedPoly* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k].front().mono.divides(lead.mono)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor == nullptr) {
      rem.push_back(lead);
      p.erase(p.begin());
      continue;
    }
    const Scalar c = lead.coeff / divisor->front().coeff;
    const Monomial m = lead.mono / divisor->front().mono;
    p = sub_scaled(p, c, m, *divisor, order);
  }
  return rem;
}

OrderedPoly spoly(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  const Monomial l = lcm(f.front().mono, g.front().mono);
  const Monomial mf = l / f.front().mono;
  const Monomial mg = l / g.front().mono;
  // (l/lm f)/lc f * f - (l/lm g)/lc g * g
  OrderedPoly a;
  const Scalar cf = f.front().coeff.inverse();
  for (const auto& t : f) a.push_back({t.mono * mf, t.coeff * cf});
  return sub_scaled(a, g.front().coeff.inverse(), mg, g, order);
}

void validate(const RingPtr& ring, const std::vector<MultiPoly>& gens,
              const MonomialOrder& order) {
  if (order.priority().size() != ring->vars.size()) {
    throw InputError("monomial order size does not match the number of variables");
  }
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) {
      throw InputError("generator lives in a different ring (variables or characteristic)");
    }
  }
}

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const GbBudget& budget) : order_(order), budget_(budget) {}

  void add(OrderedPoly p) {
    p = reduce(std::move(p), basis_, order_);
    if (p.empty()) return;
    make_monic(p);
    if (basis_.size() >= budget_.max_basis) {
      throw BudgetExceeded("Groebner basis exceeded " + std::to_string(budget_.max_basis) +
                           " elements");
    }
    const std::size_t idx = basis_.size();
    basis_.push_back(std::move(p));
    for (std::size_t k = 0; k < idx; ++k) pending_.insert({k, idx});
  }

  void run() {
    while (!pending_.empty()) {
      if (++pairs_done_ > budget_.max_pairs) {
        throw BudgetExceeded("Groebner computation exceeded " +
                             std::to_string(budget_.max_pairs) + " S-pairs");
      }
      const auto [i, j] = select();
      pending_.erase({i, j});
      const Monomial& li = basis_[i].front().mono;
      const Monomial& lj = basis_[j].front().mono;
      if (coprime(li, lj)) continue;
      if (chain_criterion(i, j)) continue;
      add(spoly(basis_[i], basis_[j], order_));
    }
  }

  std::vector<OrderedPoly> reduced() const {
    // Minimalize: keep elements whose leading monomial no other element's divides.
    std::vector<OrderedPoly> min;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Monomial& lk = basis_[k].front().mono;
      bool redundant = false;
      for (std::size_t l = 0; l < basis_.size() && !redundant; ++l) {
        if (l == k) continue;
        const Monomial& ll = basis_[l].front().mono;
        if (ll.divides(lk) && (ll != lk || l < k)) redundant = true;
      }
      if (!redundant) min.push_back(basis_[k]);
    }
    // Interreduce tails.
    for (std::size_t k = 0; k < min.size(); ++k) {
      OrderedPoly tail(min[k].begin() + 1, min[k].end());
      OrderedPoly rest = reduce(std::move(tail), min, order_, k);
      OrderedPoly fresh{min[k].front()};
      fresh.insert(fresh.end(), rest.begin(), rest.end());
      min[k] = std::move(fresh);
    }
    std::sort(min.begin(), min.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
      return order_.compare(a.front().mono, b.front().mono) < 0;
    });
    return min;
  }

 private:
  // Normal strategy: least lcm degree, then least lcm in the order, then indices.
  std::pair<std::size_t, std::size_t> select() const {
    auto best = pending_.begin();
    Monomial best_lcm = pair_lcm(*best);
    for (auto it = std::next(best); it != pending_.end(); ++it) {
      Monomial l = pair_lcm(*it);
      const auto dl = l.degree();
      const auto db = best_lcm.degree();
      if (dl < db || (dl == db && order_.compare(l, best_lcm) < 0)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    return *best;
  }

  Monomial pair_lcm(const std::pair<std::size_t, std::size_t>& p) const {
    return lcm(basis_[p.first].front().mono, basis_[p.second].front().mono);
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return pending_.count({std::min(a, b), std::max(a, b)}) > 0;
  }

  bool chain_criterion(std::size_t i, std::size_t j) const {
    const Monomial l = pair_lcm({i, j});
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == i || k == j) continue;
      if (!basis_[k].front().mono.divides(l)) continue;
      if (!is_pending(i, k) && !is_pending(j, k)) return true;
    }
    return false;
  }

  const MonomialOrder& order_;
  const GbBudget& budget_;
  std::vector<OrderedPoly> basis_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  std::size_t pairs_done_ = 0;
};

}  // namespace

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_.front().is_constant() && !basis_.front().is_zero();
}

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                             const MonomialOrder& order, const GbBudget& budget) {
  validate(ring, gens, order);
  Buchberger engine(order, budget);
  for (const auto& g : gens) {
    if (!g.is_zero()) engine.add(to_ordered(g, order));
  }
  engine.run();
  std::vector<MultiPoly> basis;
  for (const auto& p : engine.reduced()) basis.push_back(from_ordered(ring, p));
  return {ring, order, std::move(basis)};
}

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                             const GbBudget& budget) {
  return groebner_basis(ring, gens, MonomialOrder::grevlex(ring->vars.size()), budget);
}

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb) {
  if (!same_ring(f.ring(), gb.ring())) {
    throw InputError("polynomial and basis live in different rings");
  }
  std::vector<OrderedPoly> basis;
  basis.reserve(gb.basis().size());
  for (const auto& g : gb.basis()) basis.push_back(to_ordered(g, gb.order()));
  return from_ordered(gb.ring(), reduce(to_ordered(f, gb.order()), basis, gb.order()));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw InputError("S-polynomial of a zero polynomial");
  return from_ordered(f.ring(), spoly(to_ordered(f, order), to_ordered(g, order), order));
}

bool is_unit_ideal(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                   const GbBudget& budget) {
  return groebner_basis(ring, gens, budget).is_unit();
}

Elimination eliminate(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                      const std::vector<std::size_t>& drop, const GbBudget& budget) {
  const std::size_t n = ring->vars.size();
  std::vector<bool> dropped(n, false);
  for (std::size_t d : drop) {
    if (d >= n) throw InputError("eliminated variable index out of range");
    dropped[d] = true;
  }
  const auto n_drop = static_cast<std::size_t>(std::count(dropped.begin(), dropped.end(), true));
  if (n_drop == n) throw InputError("cannot eliminate every variable");

  std::vector<std::size_t> priority;
  std::vector<std::string> kept_names;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < n; ++k) {
    if (dropped[k]) priority.push_back(k);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!dropped[k]) {
      priority.push_back(k);
      kept.push_back(k);
      kept_names.push_back(ring->vars[k]);
    }
  }

  const GroebnerBasis gb =
      groebner_basis(ring, gens, MonomialOrder(OrderKind::lex, priority), budget);
  Elimination out{make_ring(kept_names, ring->characteristic), {}};
  for (const auto& g : gb.basis()) {
    const bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) {
      for (std::size_t k = 0; k < n; ++k) {
        if (dropped[k] && t.first.exps[k] != 0) return false;
      }
      return true;
    });
    if (!free) continue;
    MultiPoly h(out.ring);
    for (const auto& [m, c] : g.terms()) {
      Monomial r(kept.size());
      for (std::size_t k = 0; k < kept.size(); ++k) r.exps[k] = m.exps[kept[k]];
      h.add_term(r, c);
    }
    out.gens.push_back(std::move(h));
  }
  return out;
}

std::size_t quotient_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) throw InputError("dimension of the zero ring is undefined");
  const std::size_t n = gb.ring()->vars.size();
  if (n > 20) throw InputError("too many variables for dimension enumeration");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.basis()) {
    const Monomial& lm = g.leading_monomial(gb.order());
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (lm.exps[k] != 0) mask |= 1u << k;
    }
    supports.push_back(mask);
  }
  std::size_t best = 0;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [u](std::uint32_t s) { return (s & ~u) == 0; });
    if (independent) best = std::max<std::size_t>(best, std::popcount(u));
  }
  return best;
}

}  // namespace diffops
