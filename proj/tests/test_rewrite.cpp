#include <doctest.h>

#include "support.hpp"

using namespace qw;
using qwtest::mono;
using qwtest::ratio;

namespace {

constexpr RelationMode kCentral = RelationMode::central;
constexpr RelationMode kStrict = RelationMode::strict_paper;

GeneratorSymbol Lg(int m) { return GeneratorSymbol::L(m); }
GeneratorSymbol Wg(int m) { return GeneratorSymbol::W(m); }

}  // namespace

TEST_SUITE("rewrite") {
  TEST_CASE("relation mode names") {
    CHECK(parse_relation_mode("central") == kCentral);
    CHECK(parse_relation_mode("strict_paper") == kStrict);
    CHECK(to_string(kStrict) == "strict_paper");
    CHECK_THROWS_AS(parse_relation_mode("strict"), std::invalid_argument);
  }

  TEST_CASE("normal form examples") {
    CHECK(normal_form({Wg(0), Lg(0)}, kCentral) == AlgebraElement::monomial(mono(0, 0, {0}, {0})));
    const QScalar inv_q = q_power(-1);
    CHECK(normal_form({Lg(1), Lg(0)}, kCentral) ==
          AlgebraElement::monomial(mono(0, 0, {0, 1}, {}), inv_q) + qwtest::L(1).scaled(inv_q));
    // T L_2 = q^{-3} L_2 T.
    CHECK(normal_form({GeneratorSymbol::T(), Lg(2)}, kCentral) ==
          normal_form({Lg(2), GeneratorSymbol::T()}, kCentral).scaled(q_power(-3)));
    CHECK(normal_form({Lg(2), GeneratorSymbol::T()}, kCentral) ==
          AlgebraElement::monomial(mono(1, 0, {2}, {}), q_power(3)));
  }

  TEST_CASE("T and its inverse cancel") {
    CHECK(multiply(qwtest::T(), qwtest::T(-1), kCentral) == AlgebraElement::identity());
    CHECK(normal_form({GeneratorSymbol::Tinv(), GeneratorSymbol::T()}, kStrict) ==
          AlgebraElement::identity());
  }

  TEST_CASE("unit law") {
    const AlgebraElement x = normal_form({Wg(2), Lg(-1), GeneratorSymbol::T(), GeneratorSymbol::C()}, kCentral);
    CHECK(multiply(AlgebraElement::identity(), x, kCentral) == x);
    CHECK(multiply(x, AlgebraElement::identity(), kCentral) == x);
  }

  TEST_CASE("C placement per mode") {
    const RawWord ct{GeneratorSymbol::C(), GeneratorSymbol::T()};
    CHECK(normal_form(ct, kCentral) == AlgebraElement::monomial(mono(1, 1, {}, {})));
    // strict: C T = q T C
    CHECK(normal_form(ct, kStrict) == AlgebraElement::monomial(mono(1, 1, {}, {}), q_power(1)));
    CHECK(normal_form({Lg(3), GeneratorSymbol::C()}, kStrict) ==
          AlgebraElement::monomial(mono(0, 1, {3}, {})));
  }

  TEST_CASE("realized brackets equal the table on [-5, 5]") {
    for (int m = -5; m <= 5; ++m)
      for (int n = -5; n <= 5; ++n) {
        CHECK(q_bracket_realized(qwtest::L(m), qwtest::L(n), m, n, kCentral) ==
              bracket_table(LieGenerator::L(m), LieGenerator::L(n)));
        CHECK(q_bracket_realized(qwtest::L(m), qwtest::W(n), m, n, kCentral) ==
              bracket_table(LieGenerator::L(m), LieGenerator::W(n)));
        CHECK(q_bracket_realized(qwtest::W(m), qwtest::W(n), m, n, kCentral).is_zero());
      }
    CHECK(q_bracket_realized(qwtest::L(3), qwtest::L(3), 3, 3, kCentral).is_zero());
    CHECK(q_bracket_realized(qwtest::L(1), qwtest::L(-1), 1, -1, kCentral) ==
          qwtest::L(0).scaled(ratio({1, 1}, {0, 1})));
  }

  TEST_CASE("q^2 L_2 W_-2 - q^-2 W_-2 L_2 is the table bracket") {
    const AlgebraElement lhs = multiply(qwtest::L(2), qwtest::W(-2), kCentral).scaled(q_power(2)) -
                               multiply(qwtest::W(-2), qwtest::L(2), kCentral).scaled(q_power(-2));
    CHECK(lhs == bracket_table(LieGenerator::L(2), LieGenerator::W(-2)));
  }

  TEST_CASE("noncommutativity witness") {
    CHECK(multiply(qwtest::L(1), qwtest::L(2), kCentral) !=
          multiply(qwtest::L(2), qwtest::L(1), kCentral));
  }

  TEST_CASE("single steps strictly decrease the measure") {
    WordSampler sampler(5, 4, 6);
    for (int s = 0; s < 200; ++s) {
      const RawWord w = sampler.next();
      const WordMeasure before = measure(w);
      if (auto next = rewrite_step(w, kCentral))
        for (const auto& ww : *next) CHECK(measure(ww.word) < before);
      else
        CHECK(as_normal_monomial(w).has_value());
    }
  }

  TEST_CASE("stepwise normalization terminates and yields the normal shape") {
    WordSampler sampler(9, 3, 5);
    for (int s = 0; s < 200; ++s) {
      const StepwiseResult r = normal_form_stepwise(sampler.next(), kCentral);
      for (const auto& [m, c] : r.value.terms()) CHECK(m.well_formed());
    }
  }

  TEST_CASE("two-letter words agree between strategies") {
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n)
        for (const RawWord& w : {RawWord{Lg(m), Lg(n)}, RawWord{Wg(m), Lg(n)}, RawWord{Lg(m), Wg(n)},
                                 RawWord{Wg(m), GeneratorSymbol::T()}, RawWord{GeneratorSymbol::Tinv(), Lg(n)}})
          CHECK(normal_form_stepwise(w, kCentral).value == normal_form(w, kCentral));
  }

  TEST_CASE("normal form is a projection") {
    WordSampler sampler(3, 3, 4);
    for (int s = 0; s < 100; ++s) {
      const AlgebraElement x = normal_form(sampler.next(), kCentral);
      AlgebraElement again;
      for (const auto& [m, c] : x.terms()) again += normal_form(m.word(), kCentral).scaled(c);
      CHECK(again == x);
    }
  }

  // Values below come from an independent leftmost-adjacent rewriting oracle.
  TEST_CASE("the relations are not confluent: L L L overlap") {
    const AlgebraElement left =
        multiply(multiply(qwtest::L(3), qwtest::L(2), kCentral), qwtest::L(1), kCentral);
    const AlgebraElement right =
        multiply(qwtest::L(3), multiply(qwtest::L(2), qwtest::L(1), kCentral), kCentral);
    AlgebraElement expected;
    expected.add_term(mono(0, 0, {2, 4}, {}), ratio({-1, -1, 1, 1}, {0, 0, 0, 0, 0, 1}));
    expected.add_term(mono(0, 0, {3, 3}, {}), ratio({1, 0, 0, -1}, {0, 0, 0, 0, 1}));
    expected.add_term(mono(0, 0, {6}, {}), ratio({-1, 0, 1}, {0, 0, 0, 0, 1}));
    expected.add_term(mono(0, 0, {1, 5}, {}), ratio({1, -1}, {0, 0, 0, 0, 0, 1}));
    CHECK(left - right == expected);
  }

  TEST_CASE("the relations are not confluent: L L T overlap") {
    const AlgebraElement left =
        multiply(multiply(qwtest::L(2), qwtest::L(1), kCentral), qwtest::T(), kCentral);
    const AlgebraElement right =
        multiply(qwtest::L(2), multiply(qwtest::L(1), qwtest::T(), kCentral), kCentral);
    CHECK(left - right == AlgebraElement::monomial(mono(1, 0, {3}, {}), ratio({0, 0, 0, 1, -1}, {1})));
  }

  TEST_CASE("confluence probe reports failures deterministically") {
    const ConfluenceReport a = confluence_probe(100, 3, 3, 42, kCentral);
    const ConfluenceReport b = confluence_probe(100, 3, 3, 42, kCentral);
    CHECK(a.samples == 100);
    CHECK(a.shapes_ok);
    CHECK(a.failures == b.failures);
    CHECK(a.failures > 0);
    REQUIRE(a.first_failure.has_value());
    CHECK(a.first_failure->left_grouped != a.first_failure->right_grouped);
    CHECK(word_text(a.first_failure->u) == word_text(b.first_failure->u));
  }

  TEST_CASE("single generators can already fail to associate") {
    const ConfluenceReport r = confluence_probe(300, 3, 1, 1, kCentral);
    CHECK(r.shapes_ok);
    CHECK(r.failures > 0);
  }

  TEST_CASE("word text") {
    CHECK(word_text({Lg(3), GeneratorSymbol::Tinv(), GeneratorSymbol::C()}) == "L(3)*T^-1*C");
    CHECK(word_text({}) == "1");
  }
}
