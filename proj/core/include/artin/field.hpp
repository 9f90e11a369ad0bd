#pragma once

#include <gmpxx.h>

#include <string>

#include "artin/errors.hpp"

namespace artin {

enum class FieldKind { Rationals, PrimeField };

// The coefficient field of a computation: Q or GF(p) for a prime p.
struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  long characteristic = 0;  // 0 for Q, p for GF(p)

  static FieldDescriptor rationals() { return FieldDescriptor{}; }
  static FieldDescriptor prime_field(long p);

  bool operator==(const FieldDescriptor&) const = default;
  std::string str() const;
};

// An exact field element. Rationals are kept in lowest terms with positive
// denominator (mpq_class canonical form); GF(p) values are residues in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const FieldDescriptor& f) { return of_integer(0, f); }
  static Scalar one(const FieldDescriptor& f) { return of_integer(1, f); }
  static Scalar of_integer(long n, const FieldDescriptor& f);
  static Scalar of_rational(long num, long den);  // Q only
  static Scalar from_mpq(mpq_class v, const FieldDescriptor& f);

  FieldDescriptor field() const {
    return p_ == 0 ? FieldDescriptor::rationals() : FieldDescriptor::prime_field(p_);
  }
  long characteristic() const { return p_; }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long e) const;  // e >= 0, or e < 0 on invertible values

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Scalar(mpq_class v, long p) : v_(std::move(v)), p_(p) {}
  // Resolves the common characteristic of two operands. An exact rational
  // zero (the default-constructed Scalar) is accepted in any field.
  static long common_char(const Scalar& a, const Scalar& b);
  void reduce();  // GF(p) canonicalization

  mpq_class v_{0};
  long p_ = 0;
};

// Binomial coefficient C(n, k) as a field element. Over GF(p) this is
// computed by the Pascal recurrence mod p; factorials vanish mod p.
Scalar binomial_scalar(long n, long k, const FieldDescriptor& f);

bool is_prime(long p);

}  // namespace artin
