#include "equicount/rational.hpp"

#include <cctype>

#include "equicount/error.hpp"

namespace equicount {

Int int_from_ll(long long v) { return Int(std::to_string(v)); }

Rational::Rational(const Int& num, const Int& den) : q_(num, den) {
  if (den == 0) fail(ErrorCode::BadInput, "rational with zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::BadInput, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  std::size_t i = 0, n = s.size();
  auto bad = [&]() -> Rational {
    fail(ErrorCode::BadInput, "malformed rational: '" + s + "'");
  };
  if (n == 0) return bad();
  std::string num, den;
  if (s[i] == '+' || s[i] == '-') {
    if (s[i] == '-') num += '-';  // GMP rejects a leading '+'
    ++i;
  }
  if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i]))) return bad();
  while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
  if (i < n && s[i] == '/') {
    ++i;
    if (i >= n) return bad();
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
    if (den.empty()) return bad();
  }
  if (i != n) return bad();
  Int nn(num);
  Int dd(den.empty() ? "1" : den);
  if (dd == 0) return bad();
  return Rational(nn, dd);
}

}  // namespace equicount
