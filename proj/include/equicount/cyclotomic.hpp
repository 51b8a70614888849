#pragma once

#include <complex>
#include <string>
#include <vector>

#include "equicount/rational.hpp"

namespace equicount {

// Element of the cyclotomic field Q(zeta_n), stored in the power basis
// 1, zeta, ..., zeta^(phi(n)-1) of Q[x]/Phi_n(x). The representation is
// canonical for a fixed conductor; arithmetic between different conductors
// reconciles to the lcm via zeta_n -> zeta_lcm^(lcm/n). The conductor is
// never shrunk implicitly: minimal-conductor reduction happens only in
// reduce_conductor (and equality/is_rational are conductor-independent).
//
// There is deliberately no division: all consumers live in the subring
// generated by roots of unity over Q, and inverses are never needed.
class Cyclo {
 public:
  Cyclo() : conductor_(1), coeffs_(1, Rational(0)) {}
  Cyclo(const Rational& r) : conductor_(1), coeffs_(1, r) {}  // NOLINT
  Cyclo(int n) : Cyclo(Rational(n)) {}                        // NOLINT
  Cyclo(long n) : Cyclo(Rational(n)) {}                       // NOLINT

  // coeffs in the power basis, any length; reduced mod Phi_n.
  Cyclo(int conductor, std::vector<Rational> coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // The value as a Rational if all non-constant coordinates vanish.
  bool is_rational(Rational* out = nullptr) const;

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  friend Cyclo operator*(const Rational& c, const Cyclo& a);
  Cyclo scaled(const Rational& c) const { return c * *this; }

  // Exact equality as field elements (compares at the common conductor).
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Complex conjugation, the Galois element zeta -> zeta^(-1).
  Cyclo conj() const;
  // Galois action zeta_n -> zeta_n^k; requires gcd(k, n) = 1.
  Cyclo galois(long k) const;
  // Re-expresses the value in Q(zeta_m) for n | m (injective ring hom).
  Cyclo embedded(int m) const;
  // The same value at its minimal conductor.
  Cyclo reduce_conductor() const;

  Cyclo pow(long e) const;  // e >= 0

  std::complex<double> to_complex() const;  // display only, inexact

  // Canonical text form, e.g. "1/2*z3^1 + 1/2*z3^2 - 3"; see parse_cyclo.
  std::string str() const;

 private:
  int conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)
};

// zeta_n^k at conductor n.
Cyclo root_of_unity(int n, long k);

// Phi_n as a monic integer-coefficient polynomial, ascending degree.
// Computed by exact division of x^n - 1 by all lower Phi_d; cached.
std::vector<Int> cyclotomic_polynomial(int n);

int euler_phi(int n);

// Grammar (whitespace-tolerant):
//   expr := ['-'] term (('+'|'-') term)*
//   term := rational ('*' zeta)? | zeta
//   zeta := 'z' uint ('^' uint)?        (bare zeta means exponent 1)
//   rational := uint ('/' uint)?
// Accepts exactly what Cyclo::str() emits; terms of mixed conductor are
// reconciled to the lcm. Throws BadInput on malformed text.
Cyclo parse_cyclo(const std::string& s);

}  // namespace equicount
