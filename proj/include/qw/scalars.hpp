#pragma once

// Exact arithmetic in Q(q), the field of rational functions in the formal
// deformation parameter q with rational coefficients.
//
// Every QScalar is stored in a single canonical form:
//   * numerator and denominator are coprime,
//   * the denominator has integer coefficients with content 1 and a
//     positive leading coefficient.
// Structural equality is therefore mathematical equality.

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qw {

using Integer = mpz_class;
using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a rational function is evaluated at one of its poles.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial over Q in the variable q.
class QPolynomial {
 public:
  QPolynomial() = default;
  /// coefficients[d] is the coefficient of q^d; trailing zeros are dropped.
  explicit QPolynomial(std::vector<Rational> coefficients);

  static QPolynomial constant(const Rational& c);
  static QPolynomial monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// True for c*q^d with c != 0.
  bool is_monomial() const;
  /// Lowest degree carrying a nonzero coefficient (0 for the zero polynomial).
  int valuation() const;

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int d) const;
  const Rational& leading() const;

  QPolynomial operator-() const;
  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }

  QPolynomial scaled(const Rational& c) const;
  /// Multiplies by q^k. Negative k requires q^{-k} to divide the polynomial.
  QPolynomial shifted(int k) const;

  /// Euclidean division; throws DivisionByZero when divisor is zero.
  static std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& dividend,
                                                    const QPolynomial& divisor);

  Rational evaluate(const Rational& at) const;

  bool operator==(const QPolynomial& rhs) const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both arguments are zero).
QPolynomial gcd(QPolynomial a, QPolynomial b);

/// Integer-coefficient text, highest degree first: "6*q^2+6", "-q+1".
/// Requires every coefficient to be an integer.
std::string integer_poly_text(const QPolynomial& p);

class QScalar {
 public:
  QScalar();
  QScalar(long value);  // NOLINT(google-explicit-constructor)
  QScalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Canonical representative of num/den; throws DivisionByZero for den == 0.
  static QScalar canonicalize(QPolynomial num, QPolynomial den);
  static QScalar q();

  const QPolynomial& numerator() const { return num_; }
  const QPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// True when the value lies in Q.
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational as_rational() const;
  /// Sign of the leading numerator coefficient (0 for zero).
  int leading_sign() const;

  QScalar inverse() const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& rhs);
  QScalar& operator-=(const QScalar& rhs);
  QScalar& operator*=(const QScalar& rhs);
  QScalar& operator/=(const QScalar& rhs);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }

  bool operator==(const QScalar& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }

  /// Exact value at q = point; throws PoleError if the denominator vanishes.
  Rational eval_at(const Rational& point) const;

  /// Canonical text, e.g. "(q^2+q)/(6*q^2+6)", "q/2", "-1/q".
  std::string to_text() const;

 private:
  QScalar(QPolynomial num, QPolynomial den, bool /*trusted*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  QPolynomial num_;
  QPolynomial den_;
};

std::ostream& operator<<(std::ostream& os, const QScalar& s);

/// q^m, with negative powers stored as 1/q^{|m|}.
QScalar q_power(int m);
/// The q-number [n]_q = (q^n - 1)/(q - 1), for any integer n.
QScalar q_integer(int n);
/// q^{-m}[m-1]_q[m]_q[m+1]_q / (6(1+q^m)), the central coefficient.
QScalar central_coeff(int m);

std::string rational_text(const Rational& r);

}  // namespace qw
