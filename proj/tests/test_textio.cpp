#include <doctest.h>

#include <json.hpp>

#include "support.hpp"

using namespace qw;
using qwtest::element;
using qwtest::mono;
using qwtest::ratio;

namespace {

constexpr RelationMode kCentral = RelationMode::central;

template <class E>
SourcePosition error_position(const std::string& input) {
  try {
    parse(input);
  } catch (const E& e) {
    return e.where();
  }
  FAIL("no error for: " << input);
  return {};
}

}  // namespace

TEST_SUITE("textio") {
  TEST_CASE("parse: generator node") {
    const AstPtr a = parse("L(3)");
    CHECK(a->kind == NodeKind::generator);
    CHECK(a->symbol == GeneratorSymbol::L(3));
  }

  TEST_CASE("parse: bracket node") {
    const AstPtr a = parse("[L(1),L(-1)]_q");
    REQUIRE(a->kind == NodeKind::bracket);
    REQUIRE(a->children.size() == 2);
    CHECK(a->children[0]->symbol == GeneratorSymbol::L(1));
    CHECK(a->children[1]->symbol == GeneratorSymbol::L(-1));
    CHECK_FALSE(a->weights.has_value());
    const AstPtr d = parse("[L(1)+L(2)*L(-1), W(0); 1, 0]_q");
    REQUIRE(d->weights.has_value());
    CHECK(*d->weights == std::pair{1, 0});
  }

  TEST_CASE("parse: precedence") {
    const AstPtr a = parse("q^2*L(3)*W(-1) + C");
    REQUIRE(a->kind == NodeKind::sum);
    REQUIRE(a->children.size() == 2);
    CHECK(a->children[0]->kind == NodeKind::product);
    CHECK(a->children[0]->children.size() == 3);
    CHECK(a->children[1]->symbol == GeneratorSymbol::C());
  }

  TEST_CASE("parse: whitespace insensitive") {
    CHECK(evaluate(" L ( 2 ) *\n W( -1 ) ", kCentral) == evaluate("L(2)*W(-1)", kCentral));
  }

  TEST_CASE("parse errors carry a position inside the input") {
    for (const std::string bad : {"(", "L(", "L(3", "[L(1)]_q", "L(1)+", "*", "q^", "Delta L(1)", "W(1) ) ",
                                  "L(1)\n+ ?", ""}) {
      const SourcePosition p = error_position<ParseError>(bad);
      CHECK(p.offset <= bad.size());
      CHECK(p.line >= 1);
      CHECK(p.column >= 1);
    }
    const SourcePosition p = error_position<ParseError>("L(1)\n+ ?");
    CHECK(p.line == 2);
    CHECK(p.column == 3);
  }

  TEST_CASE("parse error lists expected tokens") {
    try {
      parse("L(1) +");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK_FALSE(e.expected().empty());
    }
  }

  TEST_CASE("non-integer generator index") {
    CHECK_THROWS_AS(parse("L(q)"), IndexError);
    CHECK_THROWS_AS(parse("W(1/2)"), IndexError);
    CHECK_THROWS_AS(parse("L(x)"), IndexError);
    CHECK(error_position<IndexError>("W(q)").offset == 2);
  }

  TEST_CASE("evaluate examples") {
    CHECK(element("[L(1),L(-1)]_q") == qwtest::L(0).scaled(QScalar(1) + q_power(-1)));
    CHECK(std::get<QScalar>(evaluate("eps(T)", kCentral)) == QScalar(1));
    const NormalMonomial one = mono(0, 0, {}, {});
    const NormalMonomial c = mono(0, 1, {}, {});
    CHECK(std::get<TensorElement>(evaluate("Delta(C)", kCentral)) ==
          TensorElement::pure({c, one}, QScalar(1)) + TensorElement::pure({one, c}, QScalar(1)));
    CHECK(element("[L(2),W(-2)]_q") == bracket_table(LieGenerator::L(2), LieGenerator::W(-2)));
    CHECK(element("S(L(1))") == antipode(qwtest::L(1), kCentral));
    CHECK(element("T^-1*T") == AlgebraElement::identity());
    CHECK(std::get<QScalar>(evaluate("(q+1)/q", kCentral)) == ratio({1, 1}, {0, 1}));
    CHECK(element("L(1)/(q+1)") == qwtest::L(1).scaled(ratio({1}, {1, 1})));
  }

  TEST_CASE("bracket with declared weights on a mixed operand") {
    const AlgebraElement x = element("[L(1)*T, W(0); 1, 0]_q");
    const AlgebraElement u = normal_form({GeneratorSymbol::L(1), GeneratorSymbol::T()}, kCentral);
    CHECK(x == q_bracket_realized(u, qwtest::W(0), 1, 0, kCentral));
  }

  TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(evaluate("Delta(L(1))*L(1)", kCentral), EvalTypeError);
    CHECK_THROWS_AS(evaluate("S(Delta(L(1)))", kCentral), EvalTypeError);
    CHECK_THROWS_AS(evaluate("Delta(L(1)) + L(1)", kCentral), EvalTypeError);
    CHECK_THROWS_AS(evaluate("[L(1)+L(2), W(0)]_q", kCentral), WeightError);
    CHECK_THROWS_AS(evaluate("L(1)/L(2)", kCentral), EvalError);
    CHECK_THROWS_AS(evaluate("L(1)/0", kCentral), EvalError);
  }

  TEST_CASE("homogeneous weight") {
    CHECK(homogeneous_weight(element("L(2)*W(-1)*T^3")) == 1);
    CHECK(homogeneous_weight(AlgebraElement::identity()) == 0);
    CHECK_FALSE(homogeneous_weight(element("L(1)+L(2)")).has_value());
  }

  TEST_CASE("render text") {
    CHECK(render(AlgebraElement(), OutputFormat::text) == "0");
    CHECK(render(qwtest::L(0).scaled(QScalar(1) + q_power(-1)), OutputFormat::text) == "((q+1)/q)*L(0)");
    CHECK(render(element("2*L(0)"), OutputFormat::text) == "2*L(0)");
    CHECK(render(element("q^2*L(3)*W(-1) + C"), OutputFormat::text) == "(q^2)*L(3)*W(-1) + C");
    CHECK(render(element("S(L(1))"), OutputFormat::text) == "-(1/q^2)*T^-2*L(1)");
    CHECK(render(coproduct(qwtest::L(3), kCentral), OutputFormat::text) == "L(3) ⊗ T^3 + T^3 ⊗ L(3)");
    CHECK(monomial_text(mono(-2, 1, {1, 1}, {0})) == "T^-2*C*L(1)*L(1)*W(0)");
    CHECK(monomial_text(mono(0, 0, {}, {})) == "1");
  }

  TEST_CASE("render latex") {
    CHECK(render(coproduct(qwtest::L(3), kCentral), OutputFormat::latex) ==
          "L_{3}\\otimes\\mathcal{T}^{3}+\\mathcal{T}^{3}\\otimes L_{3}");
  }

  TEST_CASE("render json") {
    const auto j = nlohmann::json::parse(render(element("2*L(0) - T^-1*C*W(3)"), OutputFormat::json));
    REQUIRE(j["terms"].size() == 2);
    const auto& first = j["terms"][0];
    CHECK(first["t"] == -1);
    CHECK(first["c"] == 1);
    CHECK(first["W"] == nlohmann::json::array({3}));
    CHECK(first["coeff"] == "-1");
    CHECK(j["terms"][1]["L"] == nlohmann::json::array({0}));
    const auto t = nlohmann::json::parse(render(coproduct(qwtest::C(), kCentral), OutputFormat::json));
    REQUIRE(t["terms"].size() == 2);
    CHECK(t["terms"][0].contains("left"));
    CHECK(t["terms"][0].contains("right"));
  }

  TEST_CASE("format names") {
    CHECK(parse_output_format("latex") == OutputFormat::latex);
    CHECK(to_string(OutputFormat::json) == "json");
    CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
  }

  TEST_CASE("round trip on random products") {
    WordSampler sampler(17, 5, 4);
    for (int s = 0; s < 200; ++s) {
      AlgebraElement x = normal_form(sampler.next(), kCentral);
      x += normal_form(sampler.next(), kCentral).scaled(ratio({1, -2, 0, 1}, {3, 0, 1}));
      CHECK(element(render(x, OutputFormat::text)) == x);
      const TensorElement d = coproduct(x, kCentral);
      CHECK(std::get<TensorElement>(evaluate(render(d, OutputFormat::text), kCentral)) == d);
    }
  }

  TEST_CASE("round trip on scalars") {
    for (const QScalar& s : {QScalar(), QScalar(-3), ratio({1, 2}, {0, 0, 7}), central_coeff(5), -q_integer(-4)}) {
      CHECK(std::get<QScalar>(evaluate(render(s, OutputFormat::text), kCentral)) == s);
    }
  }

  TEST_CASE("rendering is deterministic") {
    const AlgebraElement a = element("W(2)*L(1) + L(-1)");
    const AlgebraElement b = element("L(-1) + W(2)*L(1)");
    REQUIRE(a == b);
    CHECK(render(a, OutputFormat::text) == render(b, OutputFormat::text));
    CHECK(render(a, OutputFormat::json) == render(b, OutputFormat::json));
  }
}
