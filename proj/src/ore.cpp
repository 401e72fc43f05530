#include "diffops/ore.hpp"

#include <algorithm>

#include "diffops/errors.hpp"

namespace diffops {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const mpq_class& c) { return UniPoly(std::vector<mpq_class>{c}); }

UniPoly UniPoly::h() { return UniPoly(std::vector<mpq_class>{0, 1}); }

UniPoly UniPoly::from_roots(const std::vector<std::int64_t>& roots) {
  UniPoly p = constant(1);
  for (std::int64_t r : roots) {
    p = p * UniPoly(std::vector<mpq_class>{mpq_class(static_cast<long>(-r)), 1});
  }
  return p;
}

mpq_class UniPoly::evaluate(const mpq_class& at) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::shifted(std::int64_t a) const {
  const UniPoly lin(std::vector<mpq_class>{mpq_class(static_cast<long>(-a)), 1});
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * mpq_class(1 / leading());
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const mpq_class& c) {
  for (auto& v : c_) v *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    mpq_class c = c_[k];
    if (c == 0) continue;
    if (sgn(c) < 0) {
      out += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      out += " + ";
    }
    first = false;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  std::vector<mpq_class> quo(std::max(0, a.degree() - db + 1), 0);
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    const mpq_class q = rem[k] / b.leading();
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd_monic(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw InputError("gcd of two zero polynomials");
  UniPoly a = p;
  UniPoly b = q;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly shift_poly(const UniPoly& p, std::int64_t a) { return p.shifted(a); }

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(std::int64_t n, const mpq_class& c) {
  LaurentPoly f;
  f.add_term(n, c);
  return f;
}

mpq_class LaurentPoly::coefficient(std::int64_t n) const {
  auto it = t_.find(n);
  return it == t_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(std::int64_t n, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [n, c] : o.t_) add_term(n, c);
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [n, c0] : t_) {
    mpq_class c = c0;
    if (sgn(c) < 0) {
      out += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      out += " + ";
    }
    first = false;
    const std::string mono = n == 0 ? "" : (n == 1 ? "x" : "x^" + std::to_string(n));
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------- GradedOp

GradedOp GradedOp::homogeneous(std::int64_t degree, UniPoly p) {
  GradedOp u;
  u.add_component(degree, p);
  return u;
}

GradedOp GradedOp::x_power(std::int64_t degree) { return homogeneous(degree, UniPoly::constant(1)); }

GradedOp GradedOp::h() { return homogeneous(0, UniPoly::h()); }

GradedOp GradedOp::scalar(const mpq_class& c) { return homogeneous(0, UniPoly::constant(c)); }

UniPoly GradedOp::component(std::int64_t degree) const {
  auto it = c_.find(degree);
  return it == c_.end() ? UniPoly() : it->second;
}

std::int64_t GradedOp::min_degree() const {
  if (c_.empty()) throw InputError("degree of the zero operator");
  return c_.begin()->first;
}

std::int64_t GradedOp::max_degree() const {
  if (c_.empty()) throw InputError("degree of the zero operator");
  return c_.rbegin()->first;
}

void GradedOp::add_component(std::int64_t degree, const UniPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(degree, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) c_.erase(it);
  }
}

GradedOp GradedOp::operator-() const {
  GradedOp r = *this;
  for (auto& [d, p] : r.c_) p = -p;
  return r;
}

GradedOp& GradedOp::operator+=(const GradedOp& o) {
  for (const auto& [d, p] : o.c_) add_component(d, p);
  return *this;
}

GradedOp& GradedOp::operator-=(const GradedOp& o) {
  for (const auto& [d, p] : o.c_) add_component(d, -p);
  return *this;
}

// (p x^i)(q x^j) = p(h) q(h - i) x^{i+j}
GradedOp operator*(const GradedOp& a, const GradedOp& b) {
  GradedOp r;
  for (const auto& [i, p] : a.c_) {
    for (const auto& [j, q] : b.c_) r.add_component(i + j, p * q.shifted(i));
  }
  return r;
}

std::string GradedOp::to_string() const {
  if (c_.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& [d, p] : c_) {
    if (d == 0) {
      parts.push_back(p.to_string());
      continue;
    }
    const std::string xp = d == 1 ? "x" : "x^" + std::to_string(d);
    const std::size_t nonzero = static_cast<std::size_t>(
        std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const mpq_class& c) { return c != 0; }));
    if (p.is_one()) {
      parts.push_back(xp);
    } else if (p == UniPoly::constant(-1)) {
      parts.push_back("-" + xp);
    } else if (nonzero == 1) {
      parts.push_back(p.to_string() + "*" + xp);
    } else {
      parts.push_back("(" + p.to_string() + ")*" + xp);
    }
  }
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k].front() == '-') {
      out += " - " + parts[k].substr(1);
    } else {
      out += " + " + parts[k];
    }
  }
  return out;
}

GradedOp op_mul(const GradedOp& u, const GradedOp& v) { return u * v; }

// (p x^i)(x^n) = p(n + i) x^{n+i}
LaurentPoly op_apply(const GradedOp& u, const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [i, p] : u.components()) {
    for (const auto& [n, c] : f.terms()) {
      out.add_term(n + i, c * p.evaluate(mpq_class(static_cast<long>(n + i))));
    }
  }
  return out;
}

GradedOp op_commutator(const GradedOp& u, const GradedOp& v) { return u * v - v * u; }

int op_order(const GradedOp& u) {
  if (u.is_zero()) throw InputError("order of the zero operator is undefined");
  int best = 0;
  for (const auto& [d, p] : u.components()) best = std::max(best, p.degree());
  return best;
}

}  // namespace diffops
