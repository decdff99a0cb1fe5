#include "doctest.h"
#include "tlkl/engine.hpp"

using namespace tlkl;

namespace {

const LaurentPoly q = LaurentPoly::q();

bool fc(Engine& e, Element w) { return e.group.is_fully_commutative(w); }

}  // namespace

TEST_CASE("linear systems") {
  const Element a{1}, b{2};
  SUBCASE("integer solution") {
    LinearSystem sys({a, b});
    sys.add_equation({{a, 1}, {b, 1}}, 3);
    sys.add_equation({{a, 1}, {b, -1}}, 1);
    auto x = sys.solve();
    CHECK(x[a] == LaurentPoly(2));
    CHECK(x[b] == LaurentPoly(1));
  }
  SUBCASE("non-unit pivot with an exact quotient") {
    LinearSystem sys({a, b});
    sys.add_equation({{a, 1 + q}, {b, q}}, 1 + 2 * q);
    sys.add_equation({{b, 1}}, 1);
    auto x = sys.solve();
    CHECK(x[a] == LaurentPoly(1));
    CHECK(x[b] == LaurentPoly(1));
  }
  SUBCASE("redundant equations are fine") {
    LinearSystem sys({a});
    sys.add_equation({{a, q}}, q * q);
    sys.add_equation({{a, 2 * q}}, 2 * q * q);
    CHECK(sys.solve()[a] == q);
  }
  SUBCASE("failures") {
    LinearSystem inconsistent({a});
    inconsistent.add_equation({{a, 1}}, 1);
    inconsistent.add_equation({{a, 1}}, 2);
    CHECK_THROWS_AS(inconsistent.solve(), std::logic_error);
    LinearSystem under({a, b});
    under.add_equation({{a, 1}, {b, 1}}, 1);
    CHECK_THROWS_AS(under.solve(), std::logic_error);
    LinearSystem fractional({a});
    fractional.add_equation({{a, 1 + q}}, 1);
    CHECK_THROWS_AS(fractional.solve(), std::logic_error);
  }
}

TEST_CASE("inversion in the t-basis") {
  Engine e("A2");
  auto& g = e.group;
  const Element s = g.parse("1");
  AlgebraVector want(Basis::t);
  want.add(s, LaurentPoly::q_power(-1));
  want.add(g.identity(), LaurentPoly::q_power(-1) * (1 - q));
  CHECK(e.oracle.oracle_invert_t(s) == want);
  const Element w = g.parse("1 2");
  CHECK(e.oracle.oracle_invert_t(w) == e.tl.t_inverse_t(w));

  Engine a3("A3");
  for (Element y : a3.group.enumerate_up_to(5))
    if (fc(a3, y)) CHECK(a3.oracle.oracle_invert_t(y) == a3.tl.t_inverse_t(y));
}

TEST_CASE("a through the Hecke inverse") {
  Engine e("A3");
  auto& g = e.group;
  CHECK(e.oracle.oracle_a_via_hecke(g.identity(), g.parse("1")) == 1 - q);
  for (Element w : g.enumerate_up_to(-1)) {
    if (!fc(e, w)) continue;
    CHECK(e.oracle.oracle_a_via_hecke(w, w) == LaurentPoly(1));
    for (Element x : e.tl.fc_below(w)) CHECK(e.oracle.oracle_a_via_hecke(x, w) == e.tl.a_poly_closed(x, w));
  }
}

TEST_CASE("bar-invariant solve for the IC basis") {
  Engine e("A3");
  auto& g = e.group;
  const Element s = g.parse("3");
  Column cs{{g.identity(), LaurentPoly::v_power(-1)}, {s, LaurentPoly(1)}};
  CHECK(e.oracle.oracle_ic_solve(s) == cs);
  for (Element w : g.enumerate_up_to(-1)) {
    if (!fc(e, w)) continue;
    for (Element x : e.tl.fc_below(w)) CHECK(column_value(e.oracle.oracle_ic_solve(w), x) == e.tl.l_poly_closed(x, w));
  }
  for (const char* spec : {"I2(4)", "I2(7)"}) {
    Engine f(spec);
    for (Element w : f.group.enumerate_up_to(-1))
      if (fc(f, w)) CHECK(f.oracle.oracle_ic_solve(w) == f.tl.l_column_closed(w));
  }
}

TEST_CASE("R, P and D by brute force") {
  for (const char* spec : {"A3", "B3", "I2(5)"}) {
    Engine e(spec);
    auto& g = e.group;
    for (Element w : g.enumerate_up_to(-1)) {
      for (Element x : g.lower_interval(w)) {
        CHECK(e.oracle.r_poly(x, w) == e.hecke.r_poly(x, w));
        CHECK(e.oracle.kl_poly(x, w) == e.hecke.kl_poly(x, w));
      }
      for (Element x : e.tl.fc_below(w)) CHECK(e.oracle.d_poly_ideal(x, w) == e.tl.d_poly_rec(x, w));
    }
  }
  Engine a2("A2");
  for (Element x : a2.tl.fc_below(a2.group.parse("1 2 1")))
    CHECK(a2.oracle.d_poly_ideal(x, a2.group.parse("1 2 1")) == LaurentPoly(-1));
}
