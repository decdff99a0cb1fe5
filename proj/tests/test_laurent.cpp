#include <limits>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "tlkl/laurent.hpp"

using tlkl::LaurentPoly;
using tlkl::Span;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 5), expo(-8, 8), coef(-9, 9);
  LaurentPoly p;
  for (int i = terms(rng); i > 0; --i) p += LaurentPoly::monomial(coef(rng), expo(rng));
  return p;
}

}  // namespace

TEST_CASE("add and multiply") {
  CHECK(P("1 + q") + P("-q") == P("1"));
  CHECK(P("q^(1/2)") * P("q^(-1/2)") == P("1"));
  CHECK((P("q") - 1) * (P("q") - 1) == P("1 - 2q + q^2"));
  CHECK(P("q^(1/2) + q^(-1/2)") * P("q^(1/2) + q^(-1/2)") == P("q^(-1) + 2 + q"));
  CHECK((P("q") - P("q")).is_zero());
}

TEST_CASE("bar") {
  CHECK(P("q").bar() == P("q^(-1)"));
  CHECK(P("2 + 3q^(3/2)").bar() == P("2 + 3q^(-3/2)"));
  CHECK(LaurentPoly(7).bar() == LaurentPoly(7));
}

TEST_CASE("coefficients") {
  const LaurentPoly p = P("1 - q + 5q^(3/2)");
  CHECK(p.coeff_at(0) == 1);
  CHECK(p.coeff_at(2) == -1);
  CHECK(p.coeff_at(3) == 5);
  CHECK(p.coeff_at(1) == 0);
  CHECK(p.min_exponent() == 0);
  CHECK(p.max_exponent() == 3);
}

TEST_CASE("spans") {
  CHECK(P("1 - q + q^3").in_span(Span::NonNegativeQ));
  CHECK_FALSE(P("q^(1/2)").in_span(Span::NonNegativeQ));
  CHECK_FALSE(P("q^(-1)").in_span(Span::NonNegativeQ));
  CHECK(P("q^(-1/2) - 2q^(-3)").in_span(Span::StrictlyNegativeV));
  CHECK_FALSE(P("1 + q^(-1/2)").in_span(Span::StrictlyNegativeV));
  CHECK(P("1 + q^(-1/2)").in_span(Span::NonPositiveV));
  CHECK(LaurentPoly().in_span(Span::StrictlyNegativeV));
  CHECK(P("3 + q^(-1/2) + q").negative_part() == P("q^(-1/2)"));
}

TEST_CASE("text form") {
  CHECK(P("-q + q^2").to_string() == "-q + q^2");
  CHECK(LaurentPoly::q_power(-1).to_string() == "q^(-1)");
  CHECK(LaurentPoly::v_power(-1).to_string() == "q^(-1/2)");
  CHECK(LaurentPoly::v_power(3).to_string() == "q^(3/2)");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly(1).to_string() == "1");
  CHECK_THROWS_AS(P("q^"), std::invalid_argument);
  CHECK_THROWS_AS(P("1 + + q"), std::invalid_argument);
  CHECK_THROWS_AS(P("x"), std::invalid_argument);
}

TEST_CASE("exact division") {
  const LaurentPoly a = P("1 - q + q^2"), b = P("q^(-1/2) + 3q");
  auto d = (a * b).divide_exact(b);
  REQUIRE(d.has_value());
  CHECK(*d == a);
  CHECK_FALSE(P("1 + q").divide_exact(P("1 - q")).has_value());
  CHECK_THROWS_AS(a.divide_exact(LaurentPoly()), std::domain_error);
}

TEST_CASE("overflow is detected") {
  const auto big = std::numeric_limits<LaurentPoly::Coeff>::max();
  CHECK_THROWS_AS(LaurentPoly(big) + LaurentPoly(1), std::overflow_error);
  CHECK_THROWS_AS(LaurentPoly(big) * LaurentPoly(2), std::overflow_error);
  CHECK_THROWS_AS(LaurentPoly(big / 2 + 1) * P("1 + q") * P("1 + q"), std::overflow_error);
}

TEST_CASE("ring axioms and bar on random polynomials") {
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 400; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
    CHECK(LaurentPoly::parse(a.to_string()) == a);
    LaurentPoly acc = a;
    acc.add_product(b, c);
    CHECK(acc == a + b * c);
    if (!b.is_zero()) {
      auto q = (a * b).divide_exact(b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
  }
}
