#pragma once

// Hopf structure on U_q: coproduct, counit, antipode, tensor powers, and the
// axiom/relation checks.
//
//   Delta(L_m) = L_m (x) T^m + T^m (x) L_m     (same for W_m)
//   Delta(C)   = C (x) 1 + 1 (x) C
//   Delta(T)   = T (x) T
//   eps(L_m) = eps(W_m) = eps(C) = 0, eps(T) = 1
//   S(L_m) = -T^{-m} L_m T^{-m},  S(C) = -C,  S(T) = T^{-1}

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "qw/rewrite.hpp"

namespace qw {

/// Element of the N-fold tensor power of U_q. Multiplication is slotwise,
/// each slot normal-ordered independently.
template <std::size_t N>
class TensorPower {
 public:
  using Key = std::array<NormalMonomial, N>;
  using Terms = std::map<Key, QScalar>;

  TensorPower() = default;
  static TensorPower identity() {
    TensorPower r;
    r.add_term(Key{}, QScalar(1));
    return r;
  }
  static TensorPower pure(const Key& key, const QScalar& coeff = QScalar(1)) {
    TensorPower r;
    r.add_term(key, coeff);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& key, const QScalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  TensorPower& operator+=(const TensorPower& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
  }
  TensorPower& operator-=(const TensorPower& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
  }
  friend TensorPower operator+(TensorPower a, const TensorPower& b) { return a += b; }
  friend TensorPower operator-(TensorPower a, const TensorPower& b) { return a -= b; }
  TensorPower operator-() const { return scaled(QScalar(-1)); }
  TensorPower scaled(const QScalar& s) const {
    if (s.is_zero()) return {};
    TensorPower r = *this;
    for (auto& [k, c] : r.terms_) c *= s;
    return r;
  }

  bool operator==(const TensorPower& rhs) const { return terms_ == rhs.terms_; }

 private:
  Terms terms_;
};

using TensorElement = TensorPower<2>;
using TensorCubeElement = TensorPower<3>;

/// a (x) b for plain elements.
TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b);

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b, RelationMode mode);
TensorCubeElement tensor_multiply(const TensorCubeElement& a, const TensorCubeElement& b,
                                  RelationMode mode);

/// Exchanges the two tensor slots.
TensorElement flip(const TensorElement& x);

TensorElement coproduct(GeneratorSymbol g);
TensorElement coproduct(const AlgebraElement& x, RelationMode mode);
QScalar counit(const AlgebraElement& x);
AlgebraElement antipode(GeneratorSymbol g, RelationMode mode);
/// Anti-multiplicative extension over the stored normal-ordered words.
AlgebraElement antipode(const AlgebraElement& x, RelationMode mode);
/// S(g_k) ... S(g_1) for the word g_1 ... g_k, without normalizing the word first.
AlgebraElement antipode_of_word(const RawWord& word, RelationMode mode);

/// Delta(g_1) ... Delta(g_k), without normalizing the word first.
TensorElement coproduct_of_word(const RawWord& word, RelationMode mode);

/// Multiplies the slots together, left slot first.
AlgebraElement multiply_slots(const TensorElement& x, RelationMode mode);

bool check_coassociativity(const AlgebraElement& x, RelationMode mode);
bool check_counit_axiom(const AlgebraElement& x, RelationMode mode);
bool check_antipode_axiom(const AlgebraElement& x, RelationMode mode);
bool check_cocommutativity(const AlgebraElement& x, RelationMode mode);

enum class RelationKind { LL, LW, WW, TL, TW, TC, CL };
std::string to_string(RelationKind kind);

/// Result of comparing both sides of a relation after applying a map.
struct RelationCheck {
  bool holds = false;
  std::string relation;  // statement of the identity that was compared
  std::variant<TensorElement, AlgebraElement> difference;  // lhs - rhs
};

/// Delta(lhs) == Delta(rhs) for the defining relation of the given kind.
/// LL/LW/WW: q-brackets of L_m/W_m with L_n/W_n. TL/TW: T^m X_n = q^{-(n+1)m} X_n T^m.
/// TC: the mode's C-T relation at exponent m. CL: C L_m = L_m C (n ignored).
RelationCheck delta_respects_relation(int m, int n, RelationKind kind, RelationMode mode);
bool check_delta_respects_relations(int m, int n, RelationKind kind, RelationMode mode);

/// S applied anti-multiplicatively to both sides of an LL, LW or WW relation.
RelationCheck antipode_respects_relation(int m, int n, RelationKind kind, RelationMode mode);
bool check_antipode_antihom(int m, int n, RelationKind kind, RelationMode mode);

}  // namespace qw
