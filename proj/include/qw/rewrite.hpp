#pragma once

// Multiplication in U_q by rewriting generator words into the normal order
// T^t C^c L-block W-block.
//
// Rules (n > m where an ordering condition applies):
//   R1  L_n L_m -> q^{m-n} L_m L_n - q^{-n}(([m]-[n]) L_{m+n} + c(m) d_{m,-n} C)
//   R2  W_n L_m -> q^{m-n} L_m W_n - q^{-n}(([m]-[n]) W_{m+n} + c(m) d_{m,-n} C)
//   R3  W_n W_m -> q^{m-n} W_m W_n
//   R4  X_n T^e -> q^{(n+1)e} T^e X_n            (X = L, W)
//   R5  T T^{-1} = T^{-1} T = 1
//   R6  C commutes with L, W; against T it follows the RelationMode.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qw/algebra.hpp"

namespace qw {

/// How C and T commute. `central`: TC = CT. `strict_paper`: q^m T^m C = C T^m.
enum class RelationMode { central, strict_paper };

std::string to_string(RelationMode mode);
/// Accepts "central" and "strict_paper"; throws std::invalid_argument otherwise.
RelationMode parse_relation_mode(const std::string& text);

using RawWord = std::vector<GeneratorSymbol>;

/// Normal form of a word, built by appending generators one at a time to an
/// already normal-ordered prefix.
AlgebraElement normal_form(const RawWord& word, RelationMode mode);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, RelationMode mode);
AlgebraElement multiply(const NormalMonomial& a, const NormalMonomial& b, RelationMode mode);

/// Right multiplication by a single generator.
AlgebraElement multiply_generator(const AlgebraElement& a, GeneratorSymbol g, RelationMode mode);

/// q^{wx} x y - q^{wy} y x, normal-ordered.
AlgebraElement q_bracket_realized(const AlgebraElement& x, const AlgebraElement& y, int wx, int wy,
                                  RelationMode mode);

// --- single-step rewriting on raw words -------------------------------------

struct WeightedWord {
  RawWord word;
  QScalar coeff;
};

/// Applies one rule at the leftmost redex. Returns nullopt for a word that is
/// already normal-ordered.
std::optional<std::vector<WeightedWord>> rewrite_step(const RawWord& word, RelationMode mode);

/// Termination measure: (length, inversions against T < C < L-ascending < W-ascending).
struct WordMeasure {
  std::size_t length = 0;
  std::size_t inversions = 0;
  auto operator<=>(const WordMeasure&) const = default;
};
WordMeasure measure(const RawWord& word);

struct StepwiseResult {
  AlgebraElement value;
  std::size_t steps = 0;
};

/// Normal form by repeated leftmost single steps; throws std::runtime_error if
/// more than step_limit rewrites are needed.
StepwiseResult normal_form_stepwise(const RawWord& word, RelationMode mode,
                                    std::size_t step_limit = 1'000'000);

/// Converts a normal-ordered word back into its monomial; nullopt if the word
/// is not normal-ordered.
std::optional<NormalMonomial> as_normal_monomial(const RawWord& word);

// --- empirical associativity ------------------------------------------------

struct AssociativityFailure {
  RawWord u, v, w;
  AlgebraElement left_grouped;   // (uv)w
  AlgebraElement right_grouped;  // u(vw)
};

struct ConfluenceReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::optional<AssociativityFailure> first_failure;
  /// Every normal form produced during the probe had the T C L W shape.
  bool shapes_ok = true;
  bool passed() const { return failures == 0 && shapes_ok; }
};

/// Deterministic random word of length 1..max_len over L, W (indices in
/// [-index_bound, index_bound]), C, T and T^{-1}.
class WordSampler {
 public:
  WordSampler(std::uint64_t seed, int index_bound, int max_len);
  RawWord next();

 private:
  int draw(int bound);

  std::mt19937_64 rng_;
  int index_bound_;
  int max_len_;
};

ConfluenceReport confluence_probe(std::size_t sample_count, int index_bound, int max_len,
                                  std::uint64_t seed, RelationMode mode);

std::string word_text(const RawWord& word);

}  // namespace qw
