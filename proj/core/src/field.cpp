#include "artin/field.hpp"

#include <vector>

namespace artin {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(long p) {
  if (!is_prime(p))
    throw InputError("field characteristic must be prime, got " + std::to_string(p));
  return FieldDescriptor{FieldKind::PrimeField, p};
}

std::string FieldDescriptor::str() const {
  return kind == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(characteristic) + ")";
}

void Scalar::reduce() {
  if (p_ == 0) return;
  mpz_class num = v_.get_num();
  mpz_class den = v_.get_den();
  mpz_class p(p_);
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw MathError("FieldMismatch", "denominator not invertible mod " + std::to_string(p_));
    num *= inv;
  }
  mpz_class r = num % p;
  if (r < 0) r += p;
  v_ = mpq_class(r);
}

Scalar Scalar::of_integer(long n, const FieldDescriptor& f) {
  Scalar s(mpq_class(n), f.characteristic);
  s.reduce();
  return s;
}

Scalar Scalar::of_rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  mpq_class v(num, den);
  v.canonicalize();
  return Scalar(std::move(v), 0);
}

Scalar Scalar::from_mpq(mpq_class v, const FieldDescriptor& f) {
  v.canonicalize();
  Scalar s(std::move(v), f.characteristic);
  s.reduce();
  return s;
}

long Scalar::common_char(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_;
  if (a.p_ == 0 && a.is_zero()) return b.p_;
  if (b.p_ == 0 && b.is_zero()) return a.p_;
  throw MathError("FieldMismatch",
                  "scalars from different fields: " + a.field().str() + " vs " + b.field().str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r(v_ + o.v_, common_char(*this, o));
  r.reduce();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r(v_ - o.v_, common_char(*this, o));
  r.reduce();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r(v_ * o.v_, common_char(*this, o));
  r.reduce();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r(-v_, p_);
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("DivisionByZero", "inverse of zero");
  if (p_ == 0) return Scalar(1 / v_, 0);
  mpz_class inv, num = v_.get_num(), p(p_);
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  Scalar r(mpq_class(inv), p_);
  r.reduce();
  return r;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = Scalar::of_integer(1, field());
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_ && !(is_zero() && o.is_zero())) common_char(*this, o);
  return v_ == o.v_;
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar binomial_scalar(long n, long k, const FieldDescriptor& f) {
  if (k < 0 || k > n) return Scalar::zero(f);
  if (f.kind == FieldKind::Rationals) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar::from_mpq(mpq_class(b), f);
  }
  const long p = f.characteristic;
  // Pascal rows mod p; n stays small at this scale.
  std::vector<long> row(static_cast<size_t>(n) + 1, 0);
  row[0] = 1;
  for (long i = 1; i <= n; ++i)
    for (long j = i; j >= 1; --j) row[j] = (row[j] + row[j - 1]) % p;
  return Scalar::of_integer(row[k], f);
}

int cli_exit_code(const std::exception& e) {
  if (dynamic_cast<const FalsificationError*>(&e)) return 3;
  if (dynamic_cast<const MathError*>(&e)) return 2;
  return 1;  // parse/usage/input
}

}  // namespace artin
