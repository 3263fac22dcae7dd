#include "qw/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace qw {

std::string to_string(RelationMode mode) {
  return mode == RelationMode::central ? "central" : "strict_paper";
}

RelationMode parse_relation_mode(const std::string& text) {
  if (text == "central") return RelationMode::central;
  if (text == "strict_paper") return RelationMode::strict_paper;
  throw std::invalid_argument("unknown relation mode '" + text + "'");
}

namespace {

AlgebraElement apply_suffix(AlgebraElement x, const std::vector<GeneratorSymbol>& suffix,
                            RelationMode mode) {
  for (const auto& g : suffix) {
    if (x.is_zero()) break;
    x = multiply_generator(x, g, mode);
  }
  return x;
}

// coeff * m * T^e
void append_t(const NormalMonomial& m, const QScalar& coeff, int e, RelationMode mode,
              AlgebraElement& out) {
  // X_n T^e = q^{(n+1)e} T^e X_n, and in strict mode C T^e = q^e T^e C.
  int exponent = 0;
  for (int n : m.l) exponent += n + 1;
  for (int n : m.w) exponent += n + 1;
  if (mode == RelationMode::strict_paper) exponent += m.c;
  NormalMonomial r = m;
  r.t += e;
  out.add_term(r, coeff * q_power(exponent * e));
}

// coeff * m * W_n
void append_w(const NormalMonomial& m, const QScalar& coeff, int n, AlgebraElement& out) {
  auto pos = std::upper_bound(m.w.begin(), m.w.end(), n);
  int exponent = 0;
  for (auto it = pos; it != m.w.end(); ++it) exponent += n - *it;
  NormalMonomial r = m;
  r.w.insert(r.w.begin() + (pos - m.w.begin()), n);
  out.add_term(r, coeff * q_power(exponent));
}

// coeff * m * L_n
void append_l(const NormalMonomial& m, const QScalar& coeff, int n, RelationMode mode,
              AlgebraElement& out) {
  const QScalar qn = q_integer(n);
  const QScalar cn = central_coeff(n);
  QScalar main = coeff;

  // Move L_n leftwards through the W block: R2.
  for (std::size_t j = m.w.size(); j-- > 0;) {
    const int k = m.w[j];
    const QScalar scale = main * -q_power(-k);
    const std::vector<int> before(m.w.begin(), m.w.begin() + static_cast<long>(j));
    const std::vector<int> after(m.w.begin() + static_cast<long>(j) + 1, m.w.end());

    const QScalar lin = scale * (qn - q_integer(k));
    if (!lin.is_zero()) {
      NormalMonomial prefix{m.t, m.c, m.l, before};
      std::vector<GeneratorSymbol> suffix{GeneratorSymbol::W(n + k)};
      for (int s : after) suffix.push_back(GeneratorSymbol::W(s));
      out += apply_suffix(AlgebraElement::monomial(prefix, lin), suffix, mode);
    }
    if (n == -k && !cn.is_zero()) {
      NormalMonomial central{m.t, m.c + 1, m.l, before};
      central.w.insert(central.w.end(), after.begin(), after.end());
      out.add_term(central, scale * cn);
    }
    main *= q_power(n - k);
  }

  // Move L_n leftwards through larger L indices: R1.
  std::size_t i = m.l.size();
  for (; i > 0 && m.l[i - 1] > n; --i) {
    const int k = m.l[i - 1];
    const QScalar scale = main * -q_power(-k);
    const std::vector<int> before(m.l.begin(), m.l.begin() + static_cast<long>(i) - 1);
    const std::vector<int> after(m.l.begin() + static_cast<long>(i), m.l.end());

    const QScalar lin = scale * (qn - q_integer(k));
    if (!lin.is_zero()) {
      NormalMonomial prefix{m.t, m.c, before, {}};
      std::vector<GeneratorSymbol> suffix{GeneratorSymbol::L(n + k)};
      for (int s : after) suffix.push_back(GeneratorSymbol::L(s));
      for (int s : m.w) suffix.push_back(GeneratorSymbol::W(s));
      out += apply_suffix(AlgebraElement::monomial(prefix, lin), suffix, mode);
    }
    if (n == -k && !cn.is_zero()) {
      NormalMonomial central{m.t, m.c + 1, before, m.w};
      central.l.insert(central.l.end(), after.begin(), after.end());
      out.add_term(central, scale * cn);
    }
    main *= q_power(n - k);
  }

  NormalMonomial r = m;
  r.l.insert(r.l.begin() + static_cast<long>(i), n);
  out.add_term(r, main);
}

int rank(const GeneratorSymbol& g) {
  switch (g.kind) {
    case GeneratorKind::T:
    case GeneratorKind::Tinv: return 0;
    case GeneratorKind::C: return 1;
    case GeneratorKind::L: return 2;
    case GeneratorKind::W: return 3;
  }
  return 0;
}

bool inverted(const GeneratorSymbol& a, const GeneratorSymbol& b) {
  const int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra > rb;
  if (ra >= 2) return a.index > b.index;
  return false;
}

bool is_t(const GeneratorSymbol& g) {
  return g.kind == GeneratorKind::T || g.kind == GeneratorKind::Tinv;
}

}  // namespace

AlgebraElement multiply_generator(const AlgebraElement& a, GeneratorSymbol g, RelationMode mode) {
  AlgebraElement out;
  for (const auto& [m, coeff] : a.terms()) {
    switch (g.kind) {
      case GeneratorKind::T: append_t(m, coeff, 1, mode, out); break;
      case GeneratorKind::Tinv: append_t(m, coeff, -1, mode, out); break;
      case GeneratorKind::C: {
        NormalMonomial r = m;
        ++r.c;
        out.add_term(r, coeff);
        break;
      }
      case GeneratorKind::W: append_w(m, coeff, g.index, out); break;
      case GeneratorKind::L: append_l(m, coeff, g.index, mode, out); break;
    }
  }
  return out;
}

AlgebraElement normal_form(const RawWord& word, RelationMode mode) {
  return apply_suffix(AlgebraElement::identity(), word, mode);
}

AlgebraElement multiply(const NormalMonomial& a, const NormalMonomial& b, RelationMode mode) {
  return apply_suffix(AlgebraElement::monomial(a), b.word(), mode);
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, RelationMode mode) {
  AlgebraElement out;
  for (const auto& [mb, cb] : b.terms()) {
    const auto suffix = mb.word();
    for (const auto& [ma, ca] : a.terms())
      out += apply_suffix(AlgebraElement::monomial(ma, ca * cb), suffix, mode);
  }
  return out;
}

AlgebraElement q_bracket_realized(const AlgebraElement& x, const AlgebraElement& y, int wx, int wy,
                                  RelationMode mode) {
  return multiply(x, y, mode).scaled(q_power(wx)) - multiply(y, x, mode).scaled(q_power(wy));
}

std::optional<std::vector<WeightedWord>> rewrite_step(const RawWord& word, RelationMode mode) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    const GeneratorSymbol a = word[i], b = word[i + 1];
    auto spliced = [&](std::vector<GeneratorSymbol> middle) {
      RawWord r(word.begin(), word.begin() + static_cast<long>(i));
      r.insert(r.end(), middle.begin(), middle.end());
      r.insert(r.end(), word.begin() + static_cast<long>(i) + 2, word.end());
      return r;
    };

    if (is_t(a) && is_t(b)) {
      if (a.kind == b.kind) continue;
      return std::vector<WeightedWord>{{spliced({}), QScalar(1)}};  // R5
    }
    if (!inverted(a, b)) continue;

    if (is_t(b)) {
      const int e = b.kind == GeneratorKind::T ? 1 : -1;
      int exponent = 0;
      if (a.has_index()) exponent = (a.index + 1) * e;                       // R4
      else if (mode == RelationMode::strict_paper) exponent = e;             // C T^e = q^e T^e C
      return std::vector<WeightedWord>{{spliced({b, a}), q_power(exponent)}};
    }
    if (b.kind == GeneratorKind::C)
      return std::vector<WeightedWord>{{spliced({b, a}), QScalar(1)}};
    if (a.kind == GeneratorKind::W && b.kind == GeneratorKind::W)
      return std::vector<WeightedWord>{{spliced({b, a}), q_power(b.index - a.index)}};  // R3

    // R1 (a = L_n) or R2 (a = W_n), with b = L_m.
    const int n = a.index, m = b.index;
    const GeneratorSymbol image =
        a.kind == GeneratorKind::L ? GeneratorSymbol::L(m + n) : GeneratorSymbol::W(m + n);
    std::vector<WeightedWord> out{{spliced({b, a}), q_power(m - n)}};
    const QScalar lin = -q_power(-n) * (q_integer(m) - q_integer(n));
    if (!lin.is_zero()) out.push_back({spliced({image}), lin});
    if (m == -n && !central_coeff(m).is_zero())
      out.push_back({spliced({GeneratorSymbol::C()}), -q_power(-n) * central_coeff(m)});
    return out;
  }
  return std::nullopt;
}

WordMeasure measure(const RawWord& word) {
  WordMeasure r{word.size(), 0};
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (inverted(word[i], word[j])) ++r.inversions;
  return r;
}

std::optional<NormalMonomial> as_normal_monomial(const RawWord& word) {
  if (rewrite_step(word, RelationMode::central)) return std::nullopt;
  NormalMonomial m;
  for (const auto& g : word) {
    switch (g.kind) {
      case GeneratorKind::T: ++m.t; break;
      case GeneratorKind::Tinv: --m.t; break;
      case GeneratorKind::C: ++m.c; break;
      case GeneratorKind::L: m.l.push_back(g.index); break;
      case GeneratorKind::W: m.w.push_back(g.index); break;
    }
  }
  return m;
}

StepwiseResult normal_form_stepwise(const RawWord& word, RelationMode mode,
                                    std::size_t step_limit) {
  StepwiseResult result;
  std::vector<WeightedWord> pending{{word, QScalar(1)}};
  while (!pending.empty()) {
    WeightedWord item = std::move(pending.back());
    pending.pop_back();
    auto next = rewrite_step(item.word, mode);
    if (!next) {
      result.value.add_term(*as_normal_monomial(item.word), item.coeff);
      continue;
    }
    if (++result.steps > step_limit)
      throw std::runtime_error("normal_form_stepwise: step limit exceeded for " + word_text(word));
    for (auto& r : *next) pending.push_back({std::move(r.word), item.coeff * r.coeff});
  }
  return result;
}

// --- confluence probe -------------------------------------------------------

WordSampler::WordSampler(std::uint64_t seed, int index_bound, int max_len)
    : rng_(seed), index_bound_(index_bound), max_len_(max_len) {
  if (index_bound < 0 || max_len < 1) throw std::invalid_argument("WordSampler: bad bounds");
}

int WordSampler::draw(int bound) {
  return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound));
}

RawWord WordSampler::next() {
  // Kind weights L:W:C:T:Tinv = 3:3:1:1:1.
  const int len = 1 + draw(max_len_);
  RawWord word;
  for (int i = 0; i < len; ++i) {
    const int k = draw(9);
    const int idx = draw(2 * index_bound_ + 1) - index_bound_;
    if (k < 3) word.push_back(GeneratorSymbol::L(idx));
    else if (k < 6) word.push_back(GeneratorSymbol::W(idx));
    else if (k == 6) word.push_back(GeneratorSymbol::C());
    else if (k == 7) word.push_back(GeneratorSymbol::T());
    else word.push_back(GeneratorSymbol::Tinv());
  }
  return word;
}

namespace {
bool all_well_formed(const AlgebraElement& x) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [](const auto& kv) { return kv.first.well_formed(); });
}
}  // namespace

ConfluenceReport confluence_probe(std::size_t sample_count, int index_bound, int max_len,
                                  std::uint64_t seed, RelationMode mode) {
  ConfluenceReport report;
  WordSampler sampler(seed, index_bound, max_len);
  for (std::size_t s = 0; s < sample_count; ++s) {
    RawWord u = sampler.next(), v = sampler.next(), w = sampler.next();
    const AlgebraElement nu = normal_form(u, mode), nv = normal_form(v, mode),
                         nw = normal_form(w, mode);
    AlgebraElement left = multiply(multiply(nu, nv, mode), nw, mode);
    AlgebraElement right = multiply(nu, multiply(nv, nw, mode), mode);
    report.shapes_ok = report.shapes_ok && all_well_formed(left) && all_well_formed(right);
    ++report.samples;
    if (left == right) continue;
    ++report.failures;
    if (!report.first_failure)
      report.first_failure =
          AssociativityFailure{std::move(u), std::move(v), std::move(w), std::move(left),
                               std::move(right)};
  }
  return report;
}

std::string word_text(const RawWord& word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '*';
    const auto& g = word[i];
    switch (g.kind) {
      case GeneratorKind::L: out += "L(" + std::to_string(g.index) + ")"; break;
      case GeneratorKind::W: out += "W(" + std::to_string(g.index) + ")"; break;
      case GeneratorKind::C: out += "C"; break;
      case GeneratorKind::T: out += "T"; break;
      case GeneratorKind::Tinv: out += "T^-1"; break;
    }
  }
  return out;
}

}  // namespace qw
