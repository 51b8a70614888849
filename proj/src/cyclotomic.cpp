#include "equicount/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "equicount/error.hpp"

namespace equicount {

namespace {

// Dense polynomial helpers over Rational, ascending degree, no trailing zeros.

void poly_trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// p mod q for monic q (exact long division, in place on a copy).
std::vector<Rational> poly_mod_monic(std::vector<Rational> p,
                                     const std::vector<Int>& q) {
  const std::size_t dq = q.size() - 1;
  poly_trim(p);
  while (p.size() > dq) {
    const Rational lead = p.back();
    const std::size_t shift = p.size() - 1 - dq;
    if (!lead.is_zero()) {
      for (std::size_t i = 0; i < dq; ++i)
        p[shift + i] -= lead * Rational(q[i]);
    }
    p.pop_back();
    poly_trim(p);
  }
  return p;
}

// Exact division of integer polynomials by a monic divisor; the remainder
// must vanish (Phi construction guarantees it).
std::vector<Int> poly_div_exact(std::vector<Int> p, const std::vector<Int>& q) {
  internal_check(!q.empty() && q.back() == 1, "divisor must be monic");
  const std::size_t dq = q.size() - 1;
  internal_check(p.size() >= q.size(), "degree underflow in exact division");
  std::vector<Int> quot(p.size() - dq, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Int c = p[k + dq];
    quot[k] = c;
    if (c != 0)
      for (std::size_t i = 0; i <= dq; ++i) p[k + i] -= c * q[i];
  }
  for (const Int& c : p) internal_check(c == 0, "non-exact cyclotomic division");
  return quot;
}

std::map<int, std::vector<Int>>& phi_cache() {
  static std::map<int, std::vector<Int>> cache;
  return cache;
}
std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Int> cyclotomic_polynomial_locked(int n) {
  auto& cache = phi_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Int> poly;
  if (n == 1) {
    poly = {Int(-1), Int(1)};  // x - 1
  } else {
    poly.assign(n + 1, Int(0));  // x^n - 1
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial_locked(d));
  }
  cache.emplace(n, poly);
  return poly;
}

long positive_mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

int euler_phi(int n) {
  internal_check(n >= 1, "euler_phi of non-positive argument");
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Int> cyclotomic_polynomial(int n) {
  if (n < 1) fail(ErrorCode::BadInput, "cyclotomic polynomial needs n >= 1");
  std::lock_guard<std::mutex> lock(phi_mutex());
  return cyclotomic_polynomial_locked(n);
}

Cyclo::Cyclo(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor) {
  if (conductor < 1) fail(ErrorCode::BadInput, "conductor must be >= 1");
  const auto phi = cyclotomic_polynomial(conductor);
  auto reduced = poly_mod_monic(std::move(coeffs), phi);
  reduced.resize(phi.size() - 1, Rational(0));
  coeffs_ = std::move(reduced);
}

bool Cyclo::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

bool Cyclo::is_rational(Rational* out) const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  if (out) *out = coeffs_[0];
  return true;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo Cyclo::embedded(int m) const {
  if (m == conductor_) return *this;
  if (m < 1 || m % conductor_ != 0)
    fail(ErrorCode::BadInput, "embedding target must be a conductor multiple");
  const int stretch = m / conductor_;
  std::vector<Rational> poly(static_cast<std::size_t>(
                                 (coeffs_.size() - 1) * stretch + 1),
                             Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    poly[i * stretch] = coeffs_[i];
  return Cyclo(m, std::move(poly));
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  const int l = std::lcm(a.conductor_, b.conductor_);
  Cyclo ea = a.embedded(l), eb = b.embedded(l);
  for (std::size_t i = 0; i < ea.coeffs_.size(); ++i)
    ea.coeffs_[i] += eb.coeffs_[i];
  return ea;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  const int l = std::lcm(a.conductor_, b.conductor_);
  const Cyclo ea = a.embedded(l), eb = b.embedded(l);
  std::vector<Rational> prod(ea.coeffs_.size() + eb.coeffs_.size() - 1,
                             Rational(0));
  for (std::size_t i = 0; i < ea.coeffs_.size(); ++i) {
    if (ea.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < eb.coeffs_.size(); ++j)
      prod[i + j] += ea.coeffs_[i] * eb.coeffs_[j];
  }
  return Cyclo(l, std::move(prod));
}

Cyclo operator*(const Rational& c, const Cyclo& a) {
  Cyclo r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  const int l = std::lcm(a.conductor_, b.conductor_);
  return a.embedded(l).coeffs_ == b.embedded(l).coeffs_;
}

Cyclo Cyclo::galois(long k) const {
  const long n = conductor_;
  k = positive_mod(k, n);
  if (std::gcd(k, n) != 1)
    fail(ErrorCode::BadInput, "galois exponent not coprime to conductor");
  std::vector<Rational> poly(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    poly[static_cast<std::size_t>((static_cast<long>(i) * k) % n)] += coeffs_[i];
  return Cyclo(conductor_, std::move(poly));
}

Cyclo Cyclo::conj() const { return galois(conductor_ - 1); }

Cyclo Cyclo::pow(long e) const {
  internal_check(e >= 0, "negative power of cyclotomic");
  Cyclo r(1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

namespace {

// Solves sum_j x_j * cols[j] = target over Q by Gaussian elimination.
// Returns false if inconsistent.
bool solve_linear(const std::vector<std::vector<Rational>>& cols,
                  const std::vector<Rational>& target,
                  std::vector<Rational>* solution) {
  const std::size_t rows = target.size(), ncols = cols.size();
  std::vector<std::vector<Rational>> m(rows,
                                       std::vector<Rational>(ncols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
    m[r][ncols] = target[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!m[i][ncols].is_zero()) return false;
  solution->assign(ncols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    (*solution)[pivot_col[i]] = m[i][ncols];
  return true;
}

}  // namespace

Cyclo Cyclo::reduce_conductor() const {
  const int n = conductor_;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    // Fixed by Gal(Q(zeta_n)/Q(zeta_d)) = { zeta -> zeta^k : k = 1 mod d }?
    bool fixed = true;
    for (int k = 1; k < n && fixed; ++k) {
      if (k % d != 1 % d || std::gcd(k, n) != 1) continue;
      if (galois(k) != *this) fixed = false;
    }
    if (!fixed) continue;
    // Express in the power basis of Q(zeta_d).
    const int pd = euler_phi(d);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(pd);
    for (int j = 0; j < pd; ++j) {
      Cyclo basis = root_of_unity(d, j).embedded(n);
      basis.coeffs_.resize(coeffs_.size(), Rational(0));
      cols.push_back(basis.coeffs_);
    }
    std::vector<Rational> sol;
    if (solve_linear(cols, coeffs_, &sol)) return Cyclo(d, std::move(sol));
  }
  return *this;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> z = 0;
  const double tau = 2.0 * 3.14159265358979323846;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const double arg = tau * static_cast<double>(i) / conductor_;
    z += coeffs_[i].to_double() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return z;
}

Cyclo root_of_unity(int n, long k) {
  if (n < 1) fail(ErrorCode::BadInput, "root of unity needs conductor >= 1");
  k = ((k % n) + n) % n;
  std::vector<Rational> poly(static_cast<std::size_t>(k) + 1, Rational(0));
  poly[static_cast<std::size_t>(k)] = Rational(1);
  return Cyclo(n, std::move(poly));
}

std::string Cyclo::str() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    std::string term;
    if (i == 0) {
      term = mag.str();
    } else {
      if (mag == Rational(1))
        term = "";
      else
        term = mag.str() + "*";
      term += "z" + std::to_string(conductor_) + "^" + std::to_string(i);
    }
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return first ? "0" : out;
}

namespace {

struct CycloParser {
  const std::string& s;
  std::size_t i = 0;

  explicit CycloParser(const std::string& text) : s(text) {}

  [[noreturn]] void bad(const std::string& why) {
    fail(ErrorCode::BadInput,
         "malformed cyclotomic '" + s + "' at offset " + std::to_string(i) +
             ": " + why);
  }
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek_digit() {
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  long parse_uint() {
    if (!peek_digit()) bad("expected digit");
    long v = 0;
    while (peek_digit()) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000000L) bad("number too large");
      ++i;
    }
    return v;
  }
  Rational parse_rat() {
    long num = parse_uint();
    if (i < s.size() && s[i] == '/') {
      ++i;
      long den = parse_uint();
      if (den == 0) bad("zero denominator");
      return Rational(Int(num), Int(den));
    }
    return Rational(num);
  }
  // zeta := 'z' uint ('^' uint)?
  Cyclo parse_zeta() {
    ++i;  // 'z'
    long n = parse_uint();
    if (n < 1) bad("conductor must be >= 1");
    long k = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      k = parse_uint();
    }
    return root_of_unity(static_cast<int>(n), k);
  }
  Cyclo parse_term() {
    skip_ws();
    if (i < s.size() && s[i] == 'z') return parse_zeta();
    Rational c = parse_rat();
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
      if (i >= s.size() || s[i] != 'z') bad("expected zeta after '*'");
      return c * parse_zeta();
    }
    return Cyclo(c);
  }
  Cyclo parse() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    Cyclo acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (i >= s.size()) break;
      if (s[i] != '+' && s[i] != '-') bad("expected '+' or '-'");
      const bool sub = s[i] == '-';
      ++i;
      Cyclo t = parse_term();
      acc = sub ? acc - t : acc + t;
    }
    return acc;
  }
};

}  // namespace

Cyclo parse_cyclo(const std::string& s) {
  CycloParser p(s);
  Cyclo v = p.parse();
  return v;
}

}  // namespace equicount
