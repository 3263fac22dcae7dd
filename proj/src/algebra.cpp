#include "qw/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace qw {

bool NormalMonomial::well_formed() const {
  return c >= 0 && std::is_sorted(l.begin(), l.end()) && std::is_sorted(w.begin(), w.end());
}

int NormalMonomial::weight() const {
  int s = 0;
  for (int i : l) s += i;
  for (int i : w) s += i;
  return s;
}

std::vector<GeneratorSymbol> NormalMonomial::word() const {
  std::vector<GeneratorSymbol> out;
  for (int i = 0; i < (t < 0 ? -t : t); ++i)
    out.push_back(t > 0 ? GeneratorSymbol::T() : GeneratorSymbol::Tinv());
  for (int i = 0; i < c; ++i) out.push_back(GeneratorSymbol::C());
  for (int m : l) out.push_back(GeneratorSymbol::L(m));
  for (int m : w) out.push_back(GeneratorSymbol::W(m));
  return out;
}

AlgebraElement AlgebraElement::identity() { return monomial(NormalMonomial{}); }

AlgebraElement AlgebraElement::scalar(const QScalar& s) { return monomial(NormalMonomial{}, s); }

AlgebraElement AlgebraElement::monomial(NormalMonomial m, const QScalar& coeff) {
  AlgebraElement e;
  e.add_term(m, coeff);
  return e;
}

AlgebraElement AlgebraElement::generator(GeneratorSymbol g) {
  NormalMonomial m;
  switch (g.kind) {
    case GeneratorKind::L: m.l.push_back(g.index); break;
    case GeneratorKind::W: m.w.push_back(g.index); break;
    case GeneratorKind::C: m.c = 1; break;
    case GeneratorKind::T: m.t = 1; break;
    case GeneratorKind::Tinv: m.t = -1; break;
  }
  return monomial(std::move(m));
}

QScalar AlgebraElement::coefficient(const NormalMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QScalar() : it->second;
}

void AlgebraElement::add_term(const NormalMonomial& m, const QScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement AlgebraElement::scaled(const QScalar& s) const {
  if (s.is_zero()) return {};
  AlgebraElement r = *this;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

AlgebraElement LieGenerator::as_element() const {
  switch (kind) {
    case LieKind::L: return AlgebraElement::generator(GeneratorSymbol::L(index));
    case LieKind::W: return AlgebraElement::generator(GeneratorSymbol::W(index));
    case LieKind::C: break;
  }
  return AlgebraElement::generator(GeneratorSymbol::C());
}

std::string LieGenerator::name() const {
  switch (kind) {
    case LieKind::L: return "L(" + std::to_string(index) + ")";
    case LieKind::W: return "W(" + std::to_string(index) + ")";
    case LieKind::C: break;
  }
  return "C";
}

AlgebraElement bracket_table(LieGenerator x, LieGenerator y) {
  if (x.kind == LieKind::C || y.kind == LieKind::C) return {};
  if (x.kind == LieKind::W && y.kind == LieKind::W) return {};
  if (x.kind == LieKind::W) return -bracket_table(y, x);

  // x = L_m; the central term carries the coefficient of the left index.
  const int m = x.index;
  const int n = y.index;
  const LieGenerator image = y.kind == LieKind::L ? LieGenerator::L(m + n) : LieGenerator::W(m + n);
  AlgebraElement out = image.as_element().scaled(q_integer(m) - q_integer(n));
  if (m == -n) out += AlgebraElement::generator(GeneratorSymbol::C()).scaled(central_coeff(m));
  return out;
}

std::vector<std::pair<LieGenerator, QScalar>> lie_components(const AlgebraElement& x) {
  std::vector<std::pair<LieGenerator, QScalar>> out;
  for (const auto& [m, coeff] : x.terms()) {
    const bool is_l = m.t == 0 && m.c == 0 && m.l.size() == 1 && m.w.empty();
    const bool is_w = m.t == 0 && m.c == 0 && m.l.empty() && m.w.size() == 1;
    const bool is_c = m.t == 0 && m.c == 1 && m.l.empty() && m.w.empty();
    if (is_l) out.emplace_back(LieGenerator::L(m.l[0]), coeff);
    else if (is_w) out.emplace_back(LieGenerator::W(m.w[0]), coeff);
    else if (is_c) out.emplace_back(LieGenerator::C(), coeff);
    else throw std::invalid_argument("element is not a linear combination of L, W, C");
  }
  return out;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  const auto ys = lie_components(y);
  for (const auto& [gx, cx] : lie_components(x))
    for (const auto& [gy, cy] : ys) out += bracket_table(gx, gy).scaled(cx * cy);
  return out;
}

AlgebraElement f_q(LieGenerator x) {
  // C is given the index-0 weight q^0 + 1 = 2.
  const int m = x.kind == LieKind::C ? 0 : x.index;
  return x.as_element().scaled(q_power(m) + QScalar(1));
}

AlgebraElement f_q(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [g, c] : lie_components(x)) out += f_q(g).scaled(c);
  return out;
}

bool check_q_jacobi(LieGenerator u, LieGenerator v, LieGenerator w) {
  const AlgebraElement eu = u.as_element(), ev = v.as_element(), ew = w.as_element();
  AlgebraElement sum = bracket(f_q(u), bracket(ev, ew));
  sum += bracket(f_q(w), bracket(eu, ev));
  sum += bracket(f_q(v), bracket(ew, eu));
  return sum.is_zero();
}

bool check_antisymmetry(LieGenerator u, LieGenerator v) {
  return bracket_table(u, v) == -bracket_table(v, u);
}

}  // namespace qw
