#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace diffops {

bool is_prime(std::uint64_t n);

// An element of Q (characteristic 0) or of F_p (characteristic p, p prime).
// Rationals are kept in lowest terms by GMP. Mixing characteristics throws.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar rational(mpq_class value);
  static Scalar modular(std::int64_t value, std::uint32_t p);
  // The image of an integer (or of num/den) in the field of the given characteristic.
  static Scalar from_int(std::int64_t value, std::uint32_t characteristic);
  static Scalar from_mpz(const mpz_class& value, std::uint32_t characteristic);
  static Scalar from_fraction(const mpz_class& num, const mpz_class& den,
                              std::uint32_t characteristic);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_zero() const;
  bool is_one() const;
  // True for a rational < 0. Field elements mod p are printed as residues and never negative.
  bool is_negative() const;

  const mpq_class& rational_value() const;
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // `num` or `num/den`; residues print as integers in [0, p).
  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint32_t p_ = 0;
};

}  // namespace diffops
