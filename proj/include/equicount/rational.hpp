#pragma once

#include <gmpxx.h>

#include <string>

namespace equicount {

using Int = mpz_class;  // arbitrary-precision integer

// GMP's C++ layer has no long long overloads; route through a decimal
// string (exact for the full range).
Int int_from_ll(long long v);

// Exact rational number. Thin value wrapper over GMP's mpq_class kept in
// canonical form: gcd(num, den) = 1, den > 0.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(int n) : q_(n) {}   // NOLINT
  Rational(long long n) : q_(int_from_ll(n)) {}  // NOLINT
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  Int numerator() const { return q_.get_num(); }
  Int denominator() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  // "n" or "n/d"; exact decimal-free form, round-trips through parse_rational.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;
};

// Parses "-3", "7/2", "+1/4". Throws BadInput on malformed text.
Rational parse_rational(const std::string& s);

}  // namespace equicount
