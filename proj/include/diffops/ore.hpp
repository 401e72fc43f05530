#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace diffops {

// Dense univariate polynomial in h over Q; coefficient k multiplies h^k.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<mpq_class> coeffs);

  static UniPoly constant(const mpq_class& c);
  static UniPoly h();
  // Π (h - r) over the listed roots.
  static UniPoly from_roots(const std::vector<std::int64_t>& roots);

  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpq_class& leading() const { return c_.back(); }

  mpq_class evaluate(const mpq_class& at) const;
  // p(h - a).
  UniPoly shifted(std::int64_t a) const;
  UniPoly monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const mpq_class& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Descending powers of `var`, e.g. "h^2 + h - 2".
  std::string to_string(const std::string& var = "h") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd by the Euclidean algorithm; not both zero.
UniPoly gcd_monic(const UniPoly& p, const UniPoly& q);
// σ^a: h ↦ h - a.
UniPoly shift_poly(const UniPoly& p, std::int64_t a);

// Laurent polynomial in x with rational coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t n, const mpq_class& c = 1);

  const std::map<std::int64_t, mpq_class>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  mpq_class coefficient(std::int64_t n) const;
  void add_term(std::int64_t n, const mpq_class& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  std::string to_string() const;

 private:
  std::map<std::int64_t, mpq_class> t_;
};

// Σ p_i(h) x^i in K[h][x, x^-1; σ] with x p(h) = p(h-1) x and h = x∂.
class GradedOp {
 public:
  GradedOp() = default;
  static GradedOp homogeneous(std::int64_t degree, UniPoly p);
  static GradedOp x_power(std::int64_t degree);
  static GradedOp h();
  static GradedOp scalar(const mpq_class& c);

  const std::map<std::int64_t, UniPoly>& components() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_homogeneous() const { return c_.size() == 1; }
  // Component of the given x-degree (zero if absent).
  UniPoly component(std::int64_t degree) const;
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;

  GradedOp operator-() const;
  GradedOp& operator+=(const GradedOp& o);
  GradedOp& operator-=(const GradedOp& o);
  friend GradedOp operator+(GradedOp a, const GradedOp& b) { return a += b; }
  friend GradedOp operator-(GradedOp a, const GradedOp& b) { return a -= b; }
  friend GradedOp operator*(const GradedOp& a, const GradedOp& b);
  friend bool operator==(const GradedOp&, const GradedOp&) = default;

  // Components in increasing degree, e.g. "(h^2 + h - 2)*x^-2 + h".
  std::string to_string() const;

 private:
  void add_component(std::int64_t degree, const UniPoly& p);
  std::map<std::int64_t, UniPoly> c_;
};

GradedOp op_mul(const GradedOp& u, const GradedOp& v);
LaurentPoly op_apply(const GradedOp& u, const LaurentPoly& f);
GradedOp op_commutator(const GradedOp& u, const GradedOp& v);
// Order in the filtration: the largest h-degree of a component. Throws on zero.
int op_order(const GradedOp& u);

}  // namespace diffops
