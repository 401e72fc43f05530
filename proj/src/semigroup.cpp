#include "diffops/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "diffops/errors.hpp"

namespace diffops {

// ---------------------------------------------------------------- NumericalSemigroup

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators) {
  if (generators.empty()) throw InputError("a numerical semigroup needs at least one generator");
  std::int64_t g = 0;
  for (auto v : generators) {
    if (v <= 0) throw InputError("semigroup generators must be positive");
    if (v > 100000) throw InputError("semigroup generator too large");
    g = std::gcd(g, v);
  }
  if (g != 1) {
    throw InputError("generators have gcd " + std::to_string(g) +
                     ", so the gap set is infinite (not a numerical semigroup)");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  // Reachability until `smallest` consecutive members appear; everything after is in S.
  const std::int64_t smallest = generators.front();
  std::vector<bool> reach{true};
  std::int64_t run = 1;
  std::int64_t last_gap = -1;
  for (std::int64_t n = 1; run < smallest; ++n) {
    bool in = false;
    for (auto v : generators) {
      if (v <= n && reach[n - v]) {
        in = true;
        break;
      }
    }
    reach.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      last_gap = n;
    }
  }
  member_.assign(reach.begin(), reach.begin() + (last_gap + 1));
  for (std::int64_t n = 0; n <= last_gap; ++n) {
    if (!member_[n]) gaps_.push_back(n);
  }

  // Keep only minimal generators: g is redundant if g = a + b with a, b in S \ {0}.
  for (auto v : generators) {
    bool redundant = false;
    for (std::int64_t a = 1; a < v && !redundant; ++a) {
      redundant = contains(a) && contains(v - a);
    }
    if (!redundant) gens_.push_back(v);
  }
}

bool NumericalSemigroup::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (n >= conductor()) return true;
  return member_[n];
}

std::vector<std::int64_t> NumericalSemigroup::elements_upto(std::int64_t bound) const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= bound; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::string out = "<";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(gens_[k]);
  }
  return out + ">";
}

// ---------------------------------------------------------------- SIdeal

SIdeal::SIdeal(const NumericalSemigroup& s, std::vector<std::int64_t> generators) : s_(s) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (auto e : generators) {
    if (!s.contains(e)) {
      throw InputError("ideal generator " + std::to_string(e) + " is not in the semigroup");
    }
  }
  for (auto e : generators) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                       [&](std::int64_t g) { return s.contains(e - g); });
    if (!redundant) gens_.push_back(e);
  }
}

bool SIdeal::contains(std::int64_t e) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](std::int64_t g) { return s_.contains(e - g); });
}

std::string SIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::string out = "{";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(gens_[k]);
  }
  return out + "}+S";
}

// ---------------------------------------------------------------- D(A) pieces

std::vector<std::int64_t> dop_piece_roots(const NumericalSemigroup& s, std::int64_t i) {
  // s + i lies outside S only when s + i < 0 or s + i <= F.
  const std::int64_t top = std::max(s.frobenius() - i, -i - 1);
  std::vector<std::int64_t> roots;
  for (std::int64_t v = 0; v <= top; ++v) {
    if (s.contains(v) && !s.contains(v + i)) roots.push_back(v + i);
  }
  return roots;
}

UniPoly dop_piece(const NumericalSemigroup& s, std::int64_t i) {
  return UniPoly::from_roots(dop_piece_roots(s, i));
}

GradedOp dop_generator(const NumericalSemigroup& s, std::int64_t i) {
  return GradedOp::homogeneous(i, dop_piece(s, i));
}

bool dop_membership(const NumericalSemigroup& s, const GradedOp& u) {
  for (const auto& [i, p] : u.components()) {
    if (!divmod(p, dop_piece(s, i)).remainder.is_zero()) return false;
  }
  return true;
}

bool der_piece_nonzero(const NumericalSemigroup& s, std::int64_t i) {
  // i + (S \ {0}) ⊆ S; past c - i every shift lands beyond the conductor.
  const std::int64_t top = std::max<std::int64_t>(s.conductor() - i, 1);
  for (std::int64_t v = 1; v <= top; ++v) {
    if (s.contains(v) && !s.contains(v + i)) return false;
  }
  return true;
}

std::vector<DerPiece> der_pieces(const NumericalSemigroup& s, std::int64_t lo, std::int64_t hi) {
  std::vector<DerPiece> out;
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (!der_piece_nonzero(s, i)) continue;
    out.push_back({i, GradedOp::x_power(i) * GradedOp::h()});
  }
  return out;
}

std::optional<GradedOp> delta_vs_dop(const NumericalSemigroup& s) {
  if (s.is_whole()) return std::nullopt;
  return dop_generator(s, -1);
}

// ---------------------------------------------------------------- presentation

namespace {

std::vector<std::string> presentation_names(std::size_t n) {
  static const std::vector<std::string> letters{"u", "v", "w", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back(n <= letters.size() ? letters[k] : "x" + std::to_string(k + 1));
  }
  return names;
}

}  // namespace

SemigroupPresentation present_algebra(const NumericalSemigroup& s, const GbBudget& budget) {
  const auto& gens = s.generators();
  std::vector<std::string> names{"t"};
  for (const auto& v : presentation_names(gens.size())) names.push_back(v);
  const RingPtr big = make_ring(names, 0);

  std::vector<MultiPoly> graph;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Monomial tg(names.size());
    tg.exps[0] = static_cast<std::uint32_t>(gens[k]);
    graph.push_back(MultiPoly::term(big, tg, Scalar::from_int(1, 0)) -
                    MultiPoly::variable(big, k + 1));
  }
  Elimination elim = eliminate(big, graph, {0}, budget);
  return {AffinePresentation(elim.ring, elim.gens, true, budget), gens};
}

SIdeal jacobian_ideal_monomial(const NumericalSemigroup& s, const GbBudget& budget) {
  const SemigroupPresentation sp = present_algebra(s, budget);
  const JacobiData data = rank_and_minors(sp.presentation);
  std::vector<std::int64_t> exps;
  for (const auto& minor : data.jacobian_ideal_gens) {
    std::map<std::int64_t, Scalar> image;
    for (const auto& [m, c] : minor.terms()) {
      std::int64_t deg = 0;
      for (std::size_t k = 0; k < m.size(); ++k) deg += m.exps[k] * sp.degree_map[k];
      auto [it, inserted] = image.try_emplace(deg, c);
      if (!inserted) it->second += c;
    }
    std::erase_if(image, [](const auto& kv) { return kv.second.is_zero(); });
    if (image.size() != 1) {
      throw InputError("Jacobian minor " + minor.to_string() +
                       " is not a unit times a monomial in t");
    }
    exps.push_back(image.begin()->first);
  }
  return SIdeal(s, exps);
}

// ---------------------------------------------------------------- two-sided ideals

namespace {

struct Homogeneous {
  std::int64_t degree;
  UniPoly poly;
};

Homogeneous checked_member(const NumericalSemigroup& s, const GradedOp& u) {
  if (!u.is_homogeneous()) throw InputError("operator " + u.to_string() + " is not homogeneous");
  if (!dop_membership(s, u)) {
    throw InputError("operator " + u.to_string() + " is not in D(A) for S = " + s.to_string());
  }
  const auto& [d, p] = *u.components().begin();
  return {d, p};
}

}  // namespace

ComponentResult ideal_component(const NumericalSemigroup& s, const std::vector<GradedOp>& gens,
                                std::int64_t t, std::int64_t shift_bound) {
  if (shift_bound < 0) throw InputError("shift bound must be nonnegative");
  if (gens.empty()) throw InputError("ideal needs at least one generator");
  std::vector<Homogeneous> members;
  for (const auto& u : gens) members.push_back(checked_member(s, u));

  ComponentResult result;
  result.degree = t;
  result.shift_window = shift_bound;
  result.window_lo = std::numeric_limits<std::int64_t>::max();
  result.window_hi = std::numeric_limits<std::int64_t>::min();
  std::map<std::int64_t, UniPoly> pieces;
  auto piece = [&](std::int64_t i) -> const UniPoly& {
    auto it = pieces.find(i);
    if (it == pieces.end()) it = pieces.emplace(i, dop_piece(s, i)).first;
    return it->second;
  };

  UniPoly running;
  for (const auto& [d, p] : members) {
    const std::int64_t lo = std::min<std::int64_t>(0, t - d) - shift_bound;
    const std::int64_t hi = std::max<std::int64_t>(0, t - d) + shift_bound;
    result.window_lo = std::min(result.window_lo, lo);
    result.window_hi = std::max(result.window_hi, hi);
    for (std::int64_t i = lo; i <= hi && !running.is_one(); ++i) {
      const UniPoly g = piece(i) * p.shifted(i) * piece(t - i - d).shifted(i + d);
      UniPoly next = running.is_zero() ? g.monic() : gcd_monic(running, g);
      if (next != running) {
        result.witnesses.push_back(i);
        running = std::move(next);
      }
    }
  }
  result.gcd = running;
  result.status = running.is_one() ? ComponentStatus::UnitProven : ComponentStatus::UpperBoundOnly;
  return result;
}

ComponentResult ideal_component(const NumericalSemigroup& s, const GradedOp& u, std::int64_t t,
                                std::int64_t shift_bound) {
  return ideal_component(s, std::vector<GradedOp>{u}, t, shift_bound);
}

std::optional<MeetsWitness> meets_A(const NumericalSemigroup& s, const GradedOp& u,
                                    std::int64_t t_min, std::int64_t t_max,
                                    std::int64_t shift_bound) {
  if (u.is_zero()) throw InputError("the zero operator generates the zero ideal");
  checked_member(s, u);
  for (std::int64_t t = std::max<std::int64_t>(t_min, 0); t <= t_max; ++t) {
    if (!s.contains(t)) continue;
    ComponentResult r = ideal_component(s, u, t, shift_bound);
    if (r.status == ComponentStatus::UnitProven) return MeetsWitness{t, std::move(r)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- stability

namespace {

// Beyond this exponent every image of a nonzero piece stays inside E.
std::int64_t exponent_bound(const NumericalSemigroup& s, const SIdeal& e) {
  return e.generators().back() + s.conductor() + s.multiplicity();
}

}  // namespace

StabilityVerdict is_der_stable(const NumericalSemigroup& s, const SIdeal& e) {
  if (e.is_zero() || e.is_unit()) return {};
  const std::int64_t top = exponent_bound(s, e);
  for (std::int64_t x = 1; x <= top; ++x) {
    if (!e.contains(x)) continue;
    // Der pieces live in degrees [-multiplicity, conductor]; larger degrees are in S.
    for (std::int64_t i = -s.multiplicity(); i <= s.conductor(); ++i) {
      if (!der_piece_nonzero(s, i)) continue;
      // (x^i h)(x^e) = e x^{e+i}
      if (!e.contains(x + i)) {
        return {false, StabilityWitness{i, x, mpq_class(static_cast<long>(x))}};
      }
    }
  }
  return {};
}

StabilityVerdict is_dop_stable(const NumericalSemigroup& s, const SIdeal& e) {
  if (e.is_zero() || e.is_unit()) return {};
  const std::int64_t top = exponent_bound(s, e);
  for (std::int64_t x = 1; x <= top; ++x) {
    if (!e.contains(x)) continue;
    for (std::int64_t i = -x; i <= s.conductor(); ++i) {
      if (e.contains(x + i)) continue;
      const mpq_class value = dop_piece(s, i).evaluate(mpq_class(static_cast<long>(x + i)));
      if (value != 0) return {false, StabilityWitness{i, x, value}};
    }
  }
  return {};
}

ClosureResult closure_in_A(const NumericalSemigroup& s, const SIdeal& e, std::int64_t t_max,
                           std::int64_t shift_bound) {
  ClosureResult out;
  out.t_max = t_max;
  out.shift_bound = shift_bound;
  if (e.is_zero()) {
    out.outcome = ClosureOutcome::EqualsE;
    return out;
  }
  if (e.is_unit()) throw InputError("closure check needs a proper ideal");
  std::vector<GradedOp> gens;
  for (auto g : e.generators()) gens.push_back(GradedOp::x_power(g));
  for (std::int64_t t = 0; t <= t_max; ++t) {
    if (!s.contains(t) || e.contains(t)) continue;
    ComponentResult r = ideal_component(s, gens, t, shift_bound);
    if (r.status == ComponentStatus::UnitProven) {
      out.outcome = ClosureOutcome::StrictlyLarger;
      out.witness = MeetsWitness{t, std::move(r)};
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------- simplicity

std::int64_t default_shift_bound(const NumericalSemigroup& s, std::int64_t max_degree) {
  return 2 * (s.frobenius() + max_degree + 4);
}

SimplicityVerdict simplicity_verdict(const NumericalSemigroup& s, std::int64_t k_max,
                                     std::int64_t shift_bound, const GbBudget& budget) {
  if (k_max < 1) throw InputError("k_max must be at least 1");
  SimplicityVerdict v{SimplicityOutcome::Inconclusive, jacobian_ideal_monomial(s, budget), {},
                      k_max, shift_bound};
  const std::int64_t ce = v.jacobian_ideal.generators().front();
  bool all_ok = true;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const std::int64_t d = k * ce;
    SimplicityCertificate c;
    c.k = k;
    c.power = d;
    c.left = dop_piece(s, -d);
    c.right = c.left.shifted(d);
    c.gcd = gcd_monic(c.left, c.right);
    const auto roots = dop_piece_roots(s, -d);
    c.roots_disjoint = std::all_of(roots.begin(), roots.end(), [&](std::int64_t r) {
      return !s.contains(r) && s.contains(r + d);
    });
    c.component = ideal_component(s, GradedOp::x_power(d), 0, shift_bound);
    all_ok = all_ok && c.gcd.is_one() && c.roots_disjoint &&
             c.component.status == ComponentStatus::UnitProven;
    v.certificates.push_back(std::move(c));
  }
  if (all_ok) v.outcome = SimplicityOutcome::SimpleProven;
  return v;
}

}  // namespace diffops
