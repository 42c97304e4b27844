#include "ncalc/field.hpp"

#include <cctype>

namespace ncalc {

namespace {

bool is_probable_prime(long p) {
  if (p < 2) return false;
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

}  // namespace

Field Field::prime(long p) {
  if (!is_probable_prime(p)) {
    throw input_error("field modulus " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty()) throw input_error("empty prime in field descriptor '" + text + "'");
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw input_error("bad field descriptor '" + text + "'");
      }
    }
    return prime(std::stol(digits));
  }
  throw input_error("unknown field descriptor '" + text + "' (expected \"Q\" or \"Fp:<prime>\")");
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(long value, const Field& f) : value_(value), field_(f) { reduce_mod_p(); }

Scalar::Scalar(const mpq_class& value, const Field& f) : value_(value), field_(f) {
  value_.canonicalize();
  reduce_mod_p();
}

void Scalar::reduce_mod_p() {
  if (field_.is_rational()) return;
  const mpz_class p(field_.characteristic());
  mpz_class num = value_.get_num();
  mpz_class den = value_.get_den();
  if (den != 1) {
    mpz_class den_mod = den % p;
    if (den_mod < 0) den_mod += p;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den_mod.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw math_error("denominator not invertible mod " + std::to_string(field_.characteristic()));
    }
    num *= inv;
  }
  num %= p;
  if (num < 0) num += p;
  value_ = mpq_class(num);
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) throw math_error("mixed-field scalar arithmetic");
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  if (text.empty()) throw input_error("empty scalar");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw input_error("bad scalar '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw input_error("bad scalar '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw input_error("bad scalar '" + text + "' (integers and \"p/q\" strings only)");
      }
    }
  };
  if (slash == std::string::npos) {
    check_int(text);
    return Scalar(mpq_class(mpz_class(text)), f);
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpz_class d(den);
  if (d == 0) throw input_error("zero denominator in scalar '" + text + "'");
  return Scalar(mpq_class(mpz_class(num), d), f);
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.value_ = -r.value_;
  r.reduce_mod_p();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(*this, rhs);
  value_ += rhs.value_;
  reduce_mod_p();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(*this, rhs);
  value_ -= rhs.value_;
  reduce_mod_p();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(*this, rhs);
  value_ *= rhs.value_;
  reduce_mod_p();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(*this, rhs);
  if (rhs.is_zero()) throw math_error("division by zero");
  if (field_.is_rational()) {
    value_ /= rhs.value_;
  } else {
    *this *= rhs.inverse();
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw math_error("inverse of zero");
  if (field_.is_rational()) {
    return Scalar(mpq_class(1) / value_, field_);
  }
  const mpz_class p(field_.characteristic());
  mpz_class inv;
  mpz_class num = value_.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Scalar(mpq_class(inv), field_);
}

std::string Scalar::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_str();
}

}  // namespace ncalc
