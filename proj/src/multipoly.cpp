#include "diffops/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "diffops/errors.hpp"

namespace diffops {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RingPtr make_ring(std::vector<std::string> vars, std::uint32_t characteristic) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw InputError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
  }
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw InputError("characteristic " + std::to_string(characteristic) + " is not prime");
  }
  return std::make_shared<const PolyRing>(PolyRing{std::move(vars), characteristic});
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] > other.exps[k]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r.exps[k] = a.exps[k] + b.exps[k];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r.exps[k] = a.exps[k] - b.exps[k];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r.exps[k] = std::max(a.exps[k], b.exps[k]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.exps[k] != 0 && b.exps[k] != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != k) throw InputError("variable priority is not a permutation");
  }
}

MonomialOrder MonomialOrder::grevlex(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return {OrderKind::grevlex, std::move(p)};
}

MonomialOrder MonomialOrder::lex(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return {OrderKind::lex, std::move(p)};
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == OrderKind::lex) {
    for (std::size_t v : priority_) {
      if (a.exps[v] != b.exps[v]) return a.exps[v] > b.exps[v] ? 1 : -1;
    }
    return 0;
  }
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    if (a.exps[*it] != b.exps[*it]) return a.exps[*it] < b.exps[*it] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InputError("polynomial without a ring");
}

MultiPoly MultiPoly::constant(RingPtr ring, const Scalar& c) {
  MultiPoly p(std::move(ring));
  p.add_term(Monomial(p.num_vars()), c);
  return p;
}

MultiPoly MultiPoly::constant(RingPtr ring, std::int64_t c) {
  const auto ch = ring->characteristic;
  return constant(std::move(ring), Scalar::from_int(c, ch));
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->vars.size()) throw InputError("variable index out of range");
  Monomial m(ring->vars.size());
  m.exps[index] = 1;
  const auto ch = ring->characteristic;
  return term(std::move(ring), std::move(m), Scalar::from_int(1, ch));
}

MultiPoly MultiPoly::term(RingPtr ring, Monomial m, const Scalar& c) {
  MultiPoly p(std::move(ring));
  if (m.size() != p.num_vars()) throw InputError("monomial length does not match ring");
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.characteristic() != characteristic()) {
    throw InputError("scalar characteristic does not match ring");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Monomial& MultiPoly::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw InputError("leading monomial of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (order.greater(it->first, best->first)) best = it;
  }
  return best->first;
}

const Scalar& MultiPoly::leading_coefficient(const MonomialOrder& order) const {
  return terms_.at(leading_monomial(order));
}

MultiPoly MultiPoly::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient(order).inverse());
}

void MultiPoly::check_ring(const MultiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) {
    throw InputError("polynomials live in different rings (variables or characteristic differ)");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  MultiPoly r(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly r(ring_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string MultiPoly::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](auto* x, auto* y) { return order.greater(x->first, y->first); });

  std::string out;
  bool first = true;
  for (const auto* t : sorted) {
    const Monomial& m = t->first;
    Scalar c = t->second;
    if (c.is_negative()) {
      out += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      out += " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m.exps[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars[k];
      if (m.exps[k] > 1) mono += "^" + std::to_string(m.exps[k]);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

std::string MultiPoly::to_string() const { return to_string(MonomialOrder::grevlex(num_vars())); }

MultiPoly poly_arith(const MultiPoly& f, const MultiPoly& g, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return f + g;
    case ArithKind::sub: return f - g;
    case ArithKind::mul: return f * g;
  }
  throw InputError("unknown arithmetic kind");
}

MultiPoly partial_derivative(const MultiPoly& f, std::size_t j) {
  if (j >= f.num_vars()) throw InputError("derivative variable index out of range");
  MultiPoly r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m.exps[j] == 0) continue;
    Monomial d = m;
    d.exps[j] -= 1;
    r.add_term(d, c * Scalar::from_int(m.exps[j], f.characteristic()));
  }
  return r;
}

}  // namespace diffops
