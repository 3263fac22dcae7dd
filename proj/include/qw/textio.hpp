#pragma once

// Expression language for elements of U_q and its tensor square.
//
//   expr   := sign? tensor (('+' | '-') tensor)*
//   tensor := term ('⊗' term)?
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | atom ('^' int)?
//   atom   := int | 'q' | 'L(' int ')' | 'W(' int ')' | 'C' | 'T'
//           | '[' expr ',' expr (';' int ',' int)? ']_q'
//           | 'Delta(' expr ')' | 'S(' expr ')' | 'eps(' expr ')' | '(' expr ')'
//
// Division is by scalars only. Exponents are signed integer literals.

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qw/hopf.hpp"

namespace qw {

struct SourcePosition {
  std::size_t offset = 0;  // byte offset into the input, at most its length
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourcePosition where, std::set<std::string> expected);
  const SourcePosition& where() const { return where_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  SourcePosition where_;
  std::set<std::string> expected_;
};

/// A generator index that is not an integer literal.
class IndexError : public ParseError {
 public:
  using ParseError::ParseError;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// Operands of incompatible kinds, e.g. a tensor times a plain element.
class EvalTypeError : public EvalError {
 public:
  using EvalError::EvalError;
};
/// A bracket operand with no single weight and no declared weights.
class WeightError : public EvalError {
 public:
  using EvalError::EvalError;
};

enum class NodeKind {
  integer,     // value
  q,           // the variable
  generator,   // symbol
  sum,         // children, signs
  product,     // children, left to right
  quotient,    // children[0] / children[1]
  negation,    // children[0]
  power,       // children[0] ^ exponent
  bracket,     // [children[0], children[1]]_q, optional weights
  tensor,      // children[0] ⊗ children[1]
  coproduct,   // Delta(children[0])
  antipode,    // S(children[0])
  counit,      // eps(children[0])
};

struct ExpressionAst;
using AstPtr = std::shared_ptr<const ExpressionAst>;

struct ExpressionAst {
  NodeKind kind = NodeKind::integer;
  SourcePosition where;
  Integer value;                      // integer
  GeneratorSymbol symbol{};           // generator
  int exponent = 0;                   // power
  std::optional<std::pair<int, int>> weights;  // bracket
  std::vector<AstPtr> children;
  std::vector<int> signs;             // sum: +1 or -1 per child
};

AstPtr parse(const std::string& input);

using Value = std::variant<QScalar, AlgebraElement, TensorElement>;

Value evaluate(const ExpressionAst& ast, RelationMode mode);
Value evaluate(const std::string& input, RelationMode mode);

/// Weight shared by every monomial (sum of L and W indices); nullopt if mixed.
std::optional<int> homogeneous_weight(const AlgebraElement& x);

enum class OutputFormat { text, json, latex };
std::string to_string(OutputFormat f);
OutputFormat parse_output_format(const std::string& text);

std::string render(const QScalar& x, OutputFormat format);
std::string render(const AlgebraElement& x, OutputFormat format);
std::string render(const TensorElement& x, OutputFormat format);
std::string render(const TensorCubeElement& x, OutputFormat format);
std::string render(const Value& x, OutputFormat format);

/// Text of a normal monomial without coefficient, e.g. "T^-2*L(1)"; "1" for the identity.
std::string monomial_text(const NormalMonomial& m);

}  // namespace qw
