#include "qw/hopf.hpp"

#include <stdexcept>

namespace qw {

namespace {

template <std::size_t N>
TensorPower<N> multiply_slotwise(const TensorPower<N>& a, const TensorPower<N>& b,
                                 RelationMode mode) {
  using Key = typename TensorPower<N>::Key;
  TensorPower<N> out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      std::array<AlgebraElement, N> slots;
      for (std::size_t i = 0; i < N; ++i) slots[i] = multiply(ka[i], kb[i], mode);
      // Expand the product of the per-slot sums.
      TensorPower<N> partial = TensorPower<N>::pure(Key{}, ca * cb);
      for (std::size_t i = 0; i < N; ++i) {
        TensorPower<N> next;
        for (const auto& [key, coeff] : partial.terms()) {
          for (const auto& [mono, c] : slots[i].terms()) {
            Key k = key;
            k[i] = mono;
            next.add_term(k, coeff * c);
          }
        }
        partial = std::move(next);
      }
      out += partial;
    }
  }
  return out;
}

NormalMonomial t_power(int e) {
  NormalMonomial m;
  m.t = e;
  return m;
}

RawWord t_word(int e) {
  return RawWord(static_cast<std::size_t>(e < 0 ? -e : e),
                 e >= 0 ? GeneratorSymbol::T() : GeneratorSymbol::Tinv());
}

RawWord concat(RawWord a, const RawWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

GeneratorSymbol indexed(RelationKind kind_slot, int index) {
  return kind_slot == RelationKind::LL ? GeneratorSymbol::L(index) : GeneratorSymbol::W(index);
}

std::string gen_name(GeneratorSymbol g) { return word_text({g}); }

}  // namespace

TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b) {
  TensorElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term({ma, mb}, ca * cb);
  return out;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b, RelationMode mode) {
  return multiply_slotwise(a, b, mode);
}

TensorCubeElement tensor_multiply(const TensorCubeElement& a, const TensorCubeElement& b,
                                  RelationMode mode) {
  return multiply_slotwise(a, b, mode);
}

TensorElement flip(const TensorElement& x) {
  TensorElement out;
  for (const auto& [k, c] : x.terms()) out.add_term({k[1], k[0]}, c);
  return out;
}

TensorElement coproduct(GeneratorSymbol g) {
  switch (g.kind) {
    case GeneratorKind::L:
    case GeneratorKind::W: {
      const NormalMonomial x = *as_normal_monomial({g});
      const NormalMonomial tm = t_power(g.index);
      TensorElement out;
      out.add_term({x, tm}, QScalar(1));
      out.add_term({tm, x}, QScalar(1));
      return out;
    }
    case GeneratorKind::C: {
      NormalMonomial c;
      c.c = 1;
      TensorElement out;
      out.add_term({c, NormalMonomial{}}, QScalar(1));
      out.add_term({NormalMonomial{}, c}, QScalar(1));
      return out;
    }
    case GeneratorKind::T: return TensorElement::pure({t_power(1), t_power(1)});
    case GeneratorKind::Tinv: return TensorElement::pure({t_power(-1), t_power(-1)});
  }
  return {};
}

TensorElement coproduct_of_word(const RawWord& word, RelationMode mode) {
  TensorElement out = TensorElement::identity();
  for (const auto& g : word) out = tensor_multiply(out, coproduct(g), mode);
  return out;
}

TensorElement coproduct(const AlgebraElement& x, RelationMode mode) {
  TensorElement out;
  for (const auto& [m, c] : x.terms()) {
    // T^t is grouplike, so start from T^t (x) T^t rather than t single factors.
    TensorElement image = TensorElement::pure({t_power(m.t), t_power(m.t)}, c);
    NormalMonomial rest = m;
    rest.t = 0;
    for (const auto& g : rest.word()) image = tensor_multiply(image, coproduct(g), mode);
    out += image;
  }
  return out;
}

QScalar counit(const AlgebraElement& x) {
  QScalar out;
  for (const auto& [m, c] : x.terms())
    if (m.c == 0 && m.l.empty() && m.w.empty()) out += c;
  return out;
}

AlgebraElement antipode(GeneratorSymbol g, RelationMode mode) {
  switch (g.kind) {
    case GeneratorKind::L:
    case GeneratorKind::W: {
      const RawWord w = concat(concat(t_word(-g.index), {g}), t_word(-g.index));
      return -normal_form(w, mode);
    }
    case GeneratorKind::C: return -AlgebraElement::generator(g);
    case GeneratorKind::T: return AlgebraElement::generator(GeneratorSymbol::Tinv());
    case GeneratorKind::Tinv: return AlgebraElement::generator(GeneratorSymbol::T());
  }
  return {};
}

AlgebraElement antipode_of_word(const RawWord& word, RelationMode mode) {
  AlgebraElement out = AlgebraElement::identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = multiply(out, antipode(*it, mode), mode);
  return out;
}

AlgebraElement antipode(const AlgebraElement& x, RelationMode mode) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) out += antipode_of_word(m.word(), mode).scaled(c);
  return out;
}

AlgebraElement multiply_slots(const TensorElement& x, RelationMode mode) {
  AlgebraElement out;
  for (const auto& [k, c] : x.terms()) out += multiply(k[0], k[1], mode).scaled(c);
  return out;
}

bool check_coassociativity(const AlgebraElement& x, RelationMode mode) {
  const TensorElement d = coproduct(x, mode);
  TensorCubeElement left, right;  // (1 (x) Delta) Delta and (Delta (x) 1) Delta
  for (const auto& [k, c] : d.terms()) {
    const TensorElement d1 = coproduct(AlgebraElement::monomial(k[1]), mode);
    for (const auto& [k2, c2] : d1.terms()) left.add_term({k[0], k2[0], k2[1]}, c * c2);
    const TensorElement d0 = coproduct(AlgebraElement::monomial(k[0]), mode);
    for (const auto& [k1, c1] : d0.terms()) right.add_term({k1[0], k1[1], k[1]}, c * c1);
  }
  return left == right;
}

bool check_counit_axiom(const AlgebraElement& x, RelationMode mode) {
  AlgebraElement left, right;  // (1 (x) eps) Delta and (eps (x) 1) Delta
  const TensorElement d = coproduct(x, mode);
  for (const auto& [k, c] : d.terms()) {
    left.add_term(k[0], c * counit(AlgebraElement::monomial(k[1])));
    right.add_term(k[1], c * counit(AlgebraElement::monomial(k[0])));
  }
  return left == x && right == x;
}

bool check_antipode_axiom(const AlgebraElement& x, RelationMode mode) {
  AlgebraElement left, right;  // nabla(1 (x) S) Delta and nabla(S (x) 1) Delta
  const TensorElement d = coproduct(x, mode);
  for (const auto& [k, c] : d.terms()) {
    const AlgebraElement a = AlgebraElement::monomial(k[0]);
    const AlgebraElement b = AlgebraElement::monomial(k[1]);
    left += multiply(a, antipode(b, mode), mode).scaled(c);
    right += multiply(antipode(a, mode), b, mode).scaled(c);
  }
  const AlgebraElement unit = AlgebraElement::scalar(counit(x));
  return left == unit && right == unit;
}

bool check_cocommutativity(const AlgebraElement& x, RelationMode mode) {
  const TensorElement d = coproduct(x, mode);
  return flip(d) == d;
}

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::LL: return "LL";
    case RelationKind::LW: return "LW";
    case RelationKind::WW: return "WW";
    case RelationKind::TL: return "TL";
    case RelationKind::TW: return "TW";
    case RelationKind::TC: return "TC";
    case RelationKind::CL: return "CL";
  }
  return "?";
}

RelationCheck delta_respects_relation(int m, int n, RelationKind kind, RelationMode mode) {
  auto delta = [mode](const RawWord& w) { return coproduct_of_word(w, mode); };
  TensorElement lhs, rhs;
  std::string text;
  const std::string M = std::to_string(m), N = std::to_string(n);

  switch (kind) {
    case RelationKind::LL:
    case RelationKind::LW:
    case RelationKind::WW: {
      const GeneratorSymbol x =
          kind == RelationKind::WW ? GeneratorSymbol::W(m) : GeneratorSymbol::L(m);
      const GeneratorSymbol y =
          kind == RelationKind::LL ? GeneratorSymbol::L(n) : GeneratorSymbol::W(n);
      lhs = delta({x, y}).scaled(q_power(m)) - delta({y, x}).scaled(q_power(n));
      if (kind != RelationKind::WW) {
        rhs = delta({indexed(kind, m + n)}).scaled(q_integer(m) - q_integer(n));
        if (m == -n) rhs += delta({GeneratorSymbol::C()}).scaled(central_coeff(m));
      }
      text = "q^" + M + " Delta(" + gen_name(x) + ")Delta(" + gen_name(y) + ") - q^" + N +
             " Delta(" + gen_name(y) + ")Delta(" + gen_name(x) + ") = Delta([" + gen_name(x) +
             "," + gen_name(y) + "]_q)";
      break;
    }
    case RelationKind::TL:
    case RelationKind::TW: {
      const GeneratorSymbol x =
          kind == RelationKind::TL ? GeneratorSymbol::L(n) : GeneratorSymbol::W(n);
      lhs = delta(concat(t_word(m), {x}));
      rhs = delta(concat({x}, t_word(m))).scaled(q_power(-(n + 1) * m));
      text = "Delta(T)^" + M + " Delta(" + gen_name(x) + ") = q^" + std::to_string(-(n + 1) * m) +
             " Delta(" + gen_name(x) + ") Delta(T)^" + M;
      break;
    }
    case RelationKind::TC: {
      const QScalar scale = mode == RelationMode::strict_paper ? q_power(m) : QScalar(1);
      lhs = delta(concat(t_word(m), {GeneratorSymbol::C()})).scaled(scale);
      rhs = delta(concat({GeneratorSymbol::C()}, t_word(m)));
      text = (mode == RelationMode::strict_paper ? "q^" + M + " " : std::string()) + "Delta(T)^" +
             M + " Delta(C) = Delta(C) Delta(T)^" + M;
      break;
    }
    case RelationKind::CL: {
      lhs = delta({GeneratorSymbol::C(), GeneratorSymbol::L(m)});
      rhs = delta({GeneratorSymbol::L(m), GeneratorSymbol::C()});
      text = "Delta(C) Delta(L(" + M + ")) = Delta(L(" + M + ")) Delta(C)";
      break;
    }
  }
  TensorElement diff = lhs - rhs;
  const bool holds = diff.is_zero();
  return {holds, text, std::move(diff)};
}

bool check_delta_respects_relations(int m, int n, RelationKind kind, RelationMode mode) {
  return delta_respects_relation(m, n, kind, mode).holds;
}

RelationCheck antipode_respects_relation(int m, int n, RelationKind kind, RelationMode mode) {
  if (kind != RelationKind::LL && kind != RelationKind::LW && kind != RelationKind::WW)
    throw std::invalid_argument("antipode check covers LL, LW and WW relations only");
  const GeneratorSymbol x = kind == RelationKind::WW ? GeneratorSymbol::W(m) : GeneratorSymbol::L(m);
  const GeneratorSymbol y = kind == RelationKind::LL ? GeneratorSymbol::L(n) : GeneratorSymbol::W(n);

  AlgebraElement lhs = antipode_of_word({x, y}, mode).scaled(q_power(m)) -
                       antipode_of_word({y, x}, mode).scaled(q_power(n));
  AlgebraElement rhs;
  if (kind != RelationKind::WW) {
    rhs = antipode(indexed(kind, m + n), mode).scaled(q_integer(m) - q_integer(n));
    if (m == -n) rhs += antipode(GeneratorSymbol::C(), mode).scaled(central_coeff(m));
  }
  const std::string text = "q^" + std::to_string(m) + " S(" + gen_name(x) + "*" + gen_name(y) +
                           ") - q^" + std::to_string(n) + " S(" + gen_name(y) + "*" +
                           gen_name(x) + ") = S([" + gen_name(x) + "," + gen_name(y) + "]_q)";
  AlgebraElement diff = lhs - rhs;
  const bool holds = diff.is_zero();
  return {holds, text, std::move(diff)};
}

bool check_antipode_antihom(int m, int n, RelationKind kind, RelationMode mode) {
  return antipode_respects_relation(m, n, kind, mode).holds;
}

}  // namespace qw
