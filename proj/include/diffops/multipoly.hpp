#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "diffops/scalar.hpp"

namespace diffops {

// Ambient polynomial ring K[x_1..x_n]: variable names plus the characteristic of K.
struct PolyRing {
  std::vector<std::string> vars;
  std::uint32_t characteristic = 0;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

using RingPtr = std::shared_ptr<const PolyRing>;

// Validates names (identifiers, distinct) and that the characteristic is 0 or prime.
RingPtr make_ring(std::vector<std::string> vars, std::uint32_t characteristic = 0);

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exps(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

  std::size_t size() const { return exps.size(); }
  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class OrderKind { grevlex, lex };

// A term order. priority[0] is the most significant variable.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority);

  static MonomialOrder grevlex(std::size_t n);
  static MonomialOrder lex(std::size_t n);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }

  // Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> priority_;
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  explicit MultiPoly(RingPtr ring);

  static MultiPoly constant(RingPtr ring, const Scalar& c);
  static MultiPoly constant(RingPtr ring, std::int64_t c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly term(RingPtr ring, Monomial m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  std::size_t num_vars() const { return ring_->vars.size(); }
  std::uint32_t characteristic() const { return ring_->characteristic; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint64_t total_degree() const;

  // Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  // Leading monomial / coefficient under `order`; the polynomial must be nonzero.
  const Monomial& leading_monomial(const MonomialOrder& order) const;
  const Scalar& leading_coefficient(const MonomialOrder& order) const;
  MultiPoly monic(const MonomialOrder& order) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly scaled(const Scalar& c) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Canonical text: terms sorted descending under `order`, explicit `*` and `^`.
  std::string to_string(const MonomialOrder& order) const;
  std::string to_string() const;

 private:
  void check_ring(const MultiPoly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

enum class ArithKind { add, sub, mul };

MultiPoly poly_arith(const MultiPoly& f, const MultiPoly& g, ArithKind kind);

// Formal derivative with respect to variable `j`; coefficients reduce in the field.
MultiPoly partial_derivative(const MultiPoly& f, std::size_t j);

}  // namespace diffops
