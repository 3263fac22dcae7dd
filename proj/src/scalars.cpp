#include "qw/scalars.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace qw {

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

QPolynomial QPolynomial::constant(const Rational& c) {
  return QPolynomial(std::vector<Rational>{c});
}

QPolynomial QPolynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("QPolynomial::monomial: negative degree");
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool QPolynomial::is_monomial() const {
  if (coeffs_.empty()) return false;
  return valuation() == degree();
}

int QPolynomial::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return 0;
}

Rational QPolynomial::coefficient(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

const Rational& QPolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPolynomial QPolynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  QPolynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

QPolynomial QPolynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  QPolynomial r;
  if (k > 0) {
    r.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
  }
  if (valuation() < -k) throw std::logic_error("QPolynomial::shifted: not divisible by q^k");
  r.coeffs_.assign(coeffs_.begin() + (-k), coeffs_.end());
  return r;
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& dividend,
                                                        const QPolynomial& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  QPolynomial rem = dividend;
  const int dd = divisor.degree();
  if (rem.degree() < dd) return {QPolynomial{}, rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - dd) + 1);
  const Rational& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    Rational factor = rem.leading() / lead;
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= dd; ++i)
      rem.coeffs_[static_cast<std::size_t>(i + shift)] -=
          factor * divisor.coeffs_[static_cast<std::size_t>(i)];
    // the leading term cancels exactly; trim guards against exact zeros below it
    rem.trim();
  }
  return {QPolynomial(std::move(quot)), rem};
}

Rational QPolynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

bool QPolynomial::operator==(const QPolynomial& rhs) const {
  if (coeffs_.size() != rhs.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != rhs.coeffs_[i]) return false;
  return true;
}

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    auto r = QPolynomial::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading());
}

std::string integer_poly_text(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (c.get_den() != 1) throw std::logic_error("integer_poly_text: non-integer coefficient");
    Integer n = c.get_num();
    if (n < 0) {
      out += '-';
      n = -n;
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (d == 0) {
      out += n.get_str();
      continue;
    }
    if (n != 1) out += n.get_str() + "*";
    out += "q";
    if (d != 1) out += "^" + std::to_string(d);
  }
  return out;
}

std::string rational_text(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---------------------------------------------------------------------------
// QScalar

namespace {

Integer lcm_of_denominators(const QPolynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients())
    if (c != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Integer gcd_of_numerators(const QPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients())
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

QPolynomial exact_quotient(const QPolynomial& a, const QPolynomial& b) {
  auto [quot, rem] = QPolynomial::divmod(a, b);
  if (!rem.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
  return quot;
}

}  // namespace

QScalar::QScalar() : num_(), den_(QPolynomial::constant(1)) {}

QScalar::QScalar(long value)
    : num_(QPolynomial::constant(Rational(value))), den_(QPolynomial::constant(1)) {}

QScalar::QScalar(const Rational& value)
    : num_(QPolynomial::constant(value)), den_(QPolynomial::constant(1)) {}

QScalar QScalar::q() { return QScalar(QPolynomial::monomial(1, 1), QPolynomial::constant(1), true); }

QScalar QScalar::canonicalize(QPolynomial num, QPolynomial den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) return QScalar();

  const int common = std::min(num.valuation(), den.valuation());
  if (common > 0) {
    num = num.shifted(-common);
    den = den.shifted(-common);
  }
  // After stripping q^common, a monomial on either side is coprime to the other.
  if (!num.is_monomial() && !den.is_monomial()) {
    QPolynomial g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }

  Rational scale = Rational(lcm_of_denominators(den)) ;
  den = den.scaled(scale);
  num = num.scaled(scale);
  Rational content = Rational(gcd_of_numerators(den));
  if (den.leading() < 0) content = -content;
  if (content != 1) {
    den = den.scaled(1 / content);
    num = num.scaled(1 / content);
  }
  return QScalar(std::move(num), std::move(den), true);
}

bool QScalar::is_one() const { return num_.is_constant() && den_.is_constant() && num_ == den_; }

Rational QScalar::as_rational() const {
  if (!is_rational()) throw std::logic_error("QScalar::as_rational: value depends on q");
  if (num_.is_zero()) return 0;
  return num_.coefficients()[0] / den_.coefficients()[0];
}

int QScalar::leading_sign() const {
  if (num_.is_zero()) return 0;
  return num_.leading() > 0 ? 1 : -1;
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return canonicalize(den_, num_);
}

QScalar QScalar::operator-() const { return QScalar(-num_, den_, true); }

QScalar& QScalar::operator+=(const QScalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    *this = canonicalize(num_ + rhs.num_, den_);
  } else {
    *this = canonicalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& rhs) { return *this += -rhs; }

QScalar& QScalar::operator*=(const QScalar& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = QScalar();
  if (rhs.is_rational()) {
    num_ = num_.scaled(rhs.as_rational());
    return *this;
  }
  if (is_rational()) {
    const Rational r = as_rational();
    return *this = QScalar(rhs.num_.scaled(r), rhs.den_, true);
  }
  *this = canonicalize(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero scalar");
  return *this *= rhs.inverse();
}

Rational QScalar::eval_at(const Rational& point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw PoleError("denominator " + integer_poly_text(den_) + " vanishes at q=" +
                              rational_text(point));
  return num_.evaluate(point) / d;
}

std::string QScalar::to_text() const {
  if (is_zero()) return "0";
  const Integer l = lcm_of_denominators(num_);
  const QPolynomial num = num_.scaled(Rational(l));
  const QPolynomial den = den_.scaled(Rational(l));
  auto single_term = [](const QPolynomial& p) {
    return p.is_monomial() && !(p.degree() > 0 && p.leading() != 1 && p.leading() != -1);
  };
  if (den.is_constant() && den.leading() == 1) return integer_poly_text(num);
  std::string n = integer_poly_text(num);
  std::string d = integer_poly_text(den);
  if (!single_term(num)) n = "(" + n + ")";
  if (!single_term(den)) d = "(" + d + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const QScalar& s) { return os << s.to_text(); }

// ---------------------------------------------------------------------------
// q-number primitives

QScalar q_power(int m) {
  if (m >= 0) return QScalar::canonicalize(QPolynomial::monomial(1, m), QPolynomial::constant(1));
  return QScalar::canonicalize(QPolynomial::constant(1), QPolynomial::monomial(1, -m));
}

QScalar q_integer(int n) {
  // [n]_q = 1 + q + ... + q^{n-1} for n > 0, and [-n]_q = -q^{-n}[n]_q.
  if (n == 0) return QScalar();
  const int k = std::abs(n);
  std::vector<Rational> ones(static_cast<std::size_t>(k), Rational(1));
  if (n > 0) return QScalar::canonicalize(QPolynomial(std::move(ones)), QPolynomial::constant(1));
  return QScalar::canonicalize(-QPolynomial(std::move(ones)), QPolynomial::monomial(1, k));
}

QScalar central_coeff(int m) {
  if (m >= -1 && m <= 1) return QScalar();
  static std::mutex mutex;
  static std::map<int, QScalar> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  QScalar value = q_power(-m) * q_integer(m - 1) * q_integer(m) * q_integer(m + 1) /
                  (QScalar(6) * (QScalar(1) + q_power(m)));
  std::lock_guard lock(mutex);
  cache.emplace(m, value);
  return value;
}

}  // namespace qw
