#pragma once

// Generators, normal-ordered monomials and elements of U_q, plus the
// q-bracket tables of W_q with its central extension.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qw/scalars.hpp"

namespace qw {

enum class GeneratorKind { L, W, C, T, Tinv };

struct GeneratorSymbol {
  GeneratorKind kind = GeneratorKind::C;
  int index = 0;  // meaningful for L and W only

  static GeneratorSymbol L(int m) { return {GeneratorKind::L, m}; }
  static GeneratorSymbol W(int m) { return {GeneratorKind::W, m}; }
  static GeneratorSymbol C() { return {GeneratorKind::C, 0}; }
  static GeneratorSymbol T() { return {GeneratorKind::T, 0}; }
  static GeneratorSymbol Tinv() { return {GeneratorKind::Tinv, 0}; }

  bool has_index() const { return kind == GeneratorKind::L || kind == GeneratorKind::W; }
  auto operator<=>(const GeneratorSymbol&) const = default;
};

/// The word T^t C^c L_{l1}...L_{lj} W_{w1}...W_{wk} with both index blocks
/// nondecreasing. This is the PBW-style basis of U_q.
struct NormalMonomial {
  int t = 0;
  int c = 0;
  std::vector<int> l;
  std::vector<int> w;

  bool is_identity() const { return t == 0 && c == 0 && l.empty() && w.empty(); }
  /// c >= 0 and both blocks sorted.
  bool well_formed() const;
  /// Sum of L and W indices (T and C have weight 0).
  int weight() const;
  std::vector<GeneratorSymbol> word() const;

  auto operator<=>(const NormalMonomial&) const = default;
};

/// Finite Q(q)-linear combination of normal monomials. Zero coefficients are
/// never stored.
class AlgebraElement {
 public:
  using Terms = std::map<NormalMonomial, QScalar>;

  AlgebraElement() = default;
  static AlgebraElement identity();
  static AlgebraElement scalar(const QScalar& s);
  static AlgebraElement monomial(NormalMonomial m, const QScalar& coeff = QScalar(1));
  /// A single generator as an element; T and Tinv become T^{+-1}.
  static AlgebraElement generator(GeneratorSymbol g);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QScalar coefficient(const NormalMonomial& m) const;

  void add_term(const NormalMonomial& m, const QScalar& coeff);

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement scaled(const QScalar& s) const;

  bool operator==(const AlgebraElement& rhs) const { return terms_ == rhs.terms_; }

 private:
  Terms terms_;
};

/// Basis vectors of W_q: L_m, W_m and the central element C.
enum class LieKind { L, W, C };

struct LieGenerator {
  LieKind kind = LieKind::C;
  int index = 0;

  static LieGenerator L(int m) { return {LieKind::L, m}; }
  static LieGenerator W(int m) { return {LieKind::W, m}; }
  static LieGenerator C() { return {LieKind::C, 0}; }

  AlgebraElement as_element() const;
  std::string name() const;
  auto operator<=>(const LieGenerator&) const = default;
};

/// [x, y]_q from the structure-constant tables (not from the realization).
AlgebraElement bracket_table(LieGenerator x, LieGenerator y);

/// Bilinear extension of bracket_table to linear combinations of L, W, C.
/// Throws std::invalid_argument if an argument contains T or a product.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

AlgebraElement f_q(LieGenerator x);
AlgebraElement f_q(const AlgebraElement& x);

/// Decomposes a degree-one element into its generator coefficients.
std::vector<std::pair<LieGenerator, QScalar>> lie_components(const AlgebraElement& x);

bool check_q_jacobi(LieGenerator u, LieGenerator v, LieGenerator w);
bool check_antisymmetry(LieGenerator u, LieGenerator v);

}  // namespace qw
