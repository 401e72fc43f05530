#include "diffops/scalar.hpp"

#include "diffops/errors.hpp"

namespace diffops {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Scalar Scalar::rational(mpq_class value) {
  Scalar s;
  value.canonicalize();
  s.q_ = std::move(value);
  return s;
}

Scalar Scalar::modular(std::int64_t value, std::uint32_t p) {
  if (p == 0 || p > (1u << 31) || !is_prime(p)) {
    throw InputError("characteristic " + std::to_string(p) + " is not a supported prime");
  }
  Scalar s;
  s.p_ = p;
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  s.r_ = static_cast<std::uint64_t>(r);
  return s;
}

Scalar Scalar::from_int(std::int64_t value, std::uint32_t characteristic) {
  if (characteristic == 0) return rational(mpq_class(static_cast<long>(value)));
  return modular(value, characteristic);
}

Scalar Scalar::from_mpz(const mpz_class& value, std::uint32_t characteristic) {
  if (characteristic == 0) return rational(mpq_class(value));
  Scalar s = modular(0, characteristic);
  s.r_ = reduce_mod(value, characteristic);
  return s;
}

Scalar Scalar::from_fraction(const mpz_class& num, const mpz_class& den,
                             std::uint32_t characteristic) {
  if (den == 0) throw InputError("zero denominator");
  if (characteristic == 0) return rational(mpq_class(num, den));
  Scalar d = from_mpz(den, characteristic);
  if (d.is_zero()) {
    throw InputError("denominator vanishes in characteristic " + std::to_string(characteristic));
  }
  return from_mpz(num, characteristic) / d;
}

bool Scalar::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

bool Scalar::is_negative() const { return p_ == 0 && sgn(q_) < 0; }

const mpq_class& Scalar::rational_value() const {
  if (p_ != 0) throw InputError("expected a rational scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (p_ == 0) throw InputError("expected a prime-field scalar");
  return r_;
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw InputError("scalar characteristics do not match");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = p_ - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ = (r_ + o.r_) % p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    r_ = (r_ + p_ - o.r_) % p_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ *= o.q_;
  } else {
    r_ = r_ * o.r_ % p_;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = pow_mod(r_, p_ - 2, p_);
  }
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

}  // namespace diffops
