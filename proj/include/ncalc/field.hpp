#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncalc {

// Thrown on malformed input (bad scalar strings, schema violations, ...).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a mathematical precondition is violated (dimension mismatch,
// division by zero, non-invertible element mod p, ...).
struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The working field: exact rationals Q, or integers mod a prime p.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(long p);

  // Parses "Q" or "Fp:<prime>".
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  long characteristic() const { return p_; }

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  explicit Field(long p) : p_(p) {}
  long p_;  // 0 = Q
};

// One exact field element. Rationals are kept canonical by GMP (reduced,
// positive denominator); prime-field values are integers in [0, p).
class Scalar {
public:
  Scalar() : field_(Field::rationals()) {}  // rational zero
  Scalar(long value, const Field& f);
  Scalar(const mpq_class& value, const Field& f);

  static Scalar zero(const Field& f) { return Scalar(0, f); }
  static Scalar one(const Field& f) { return Scalar(1, f); }

  // Accepts decimal integers and "p/q" fraction strings; never floats.
  static Scalar parse(const std::string& text, const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

  // "n" or "n/d"; prime-field values print their canonical representative.
  std::string str() const;

private:
  void reduce_mod_p();
  static void require_same_field(const Scalar& a, const Scalar& b);

  mpq_class value_;
  Field field_;
};

}  // namespace ncalc
