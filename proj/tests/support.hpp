#pragma once

#include <initializer_list>
#include <string>

#include "qw/textio.hpp"

namespace qwtest {

// Polynomial in q from ascending integer coefficients.
inline qw::QPolynomial poly(std::initializer_list<long> c) {
  std::vector<qw::Rational> v;
  for (long x : c) v.emplace_back(x);
  return qw::QPolynomial(std::move(v));
}

inline qw::QScalar ratio(std::initializer_list<long> num, std::initializer_list<long> den) {
  return qw::QScalar::canonicalize(poly(num), poly(den));
}

inline qw::AlgebraElement L(int m) { return qw::AlgebraElement::generator(qw::GeneratorSymbol::L(m)); }
inline qw::AlgebraElement W(int m) { return qw::AlgebraElement::generator(qw::GeneratorSymbol::W(m)); }
inline qw::AlgebraElement C() { return qw::AlgebraElement::generator(qw::GeneratorSymbol::C()); }
inline qw::AlgebraElement T(int e = 1) {
  qw::NormalMonomial m;
  m.t = e;
  return qw::AlgebraElement::monomial(m);
}

inline qw::NormalMonomial mono(int t, int c, std::vector<int> l, std::vector<int> w) {
  qw::NormalMonomial m;
  m.t = t;
  m.c = c;
  m.l = std::move(l);
  m.w = std::move(w);
  return m;
}

inline qw::AlgebraElement element(const std::string& text,
                                  qw::RelationMode mode = qw::RelationMode::central) {
  const qw::Value v = qw::evaluate(text, mode);
  if (auto s = std::get_if<qw::QScalar>(&v)) return qw::AlgebraElement::scalar(*s);
  return std::get<qw::AlgebraElement>(v);
}

}  // namespace qwtest
