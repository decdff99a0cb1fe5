#include <set>

#include "doctest.h"
#include "tlkl/hecke.hpp"

using namespace tlkl;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

const LaurentPoly q = LaurentPoly::q();

bool boolean_interval(CoxeterGroup& g, Element x, Element w) {
  std::vector<Element> in;
  for (Element y : g.lower_interval(w))
    if (g.bruhat_leq(x, y)) in.push_back(y);
  const int r = g.length(w) - g.length(x);
  if (in.size() != (std::size_t{1} << r)) return false;
  std::vector<Element> atoms;
  for (Element y : in)
    if (g.length(y) == g.length(x) + 1) atoms.push_back(y);
  if (static_cast<int>(atoms.size()) != r) return false;
  std::vector<unsigned> mask(in.size());
  std::set<unsigned> seen;
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (g.bruhat_leq(atoms[a], in[i])) mask[i] |= 1U << a;
    if (!seen.insert(mask[i]).second) return false;
  }
  for (std::size_t i = 0; i < in.size(); ++i)
    for (std::size_t j = 0; j < in.size(); ++j)
      if (g.bruhat_leq(in[i], in[j]) != ((mask[i] & mask[j]) == mask[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("generator products") {
  CoxeterGroup g(CoxeterGraph::parse("A2"));
  HeckeAlgebra h(g);
  const Element s = g.parse("1"), e = g.identity();
  AlgebraVector ts_ts = h.mul_gen(h.basis(s), 0);
  AlgebraVector want(Basis::T);
  want.add(e, q);
  want.add(s, q - 1);
  CHECK(ts_ts == want);

  AlgebraVector sum = h.basis(s) + h.basis(e);
  AlgebraVector want2(Basis::T);
  want2.add(e, q);
  want2.add(s, q);
  CHECK(h.mul_gen(sum, 0) == want2);

  CHECK(h.mul_gen(h.basis(s), 1) == h.basis(g.parse("1 2")));
  CHECK(h.mul_gen(h.basis(s), 1, Side::Left) == h.basis(g.parse("2 1")));
  CHECK(format_vector(g, h.basis(g.parse("1 2"))) == "(1)*T[1 2]");
}

TEST_CASE("R-polynomials") {
  CoxeterGroup g(CoxeterGraph::parse("A3"));
  HeckeAlgebra h(g);
  CHECK(h.r_poly(g.identity(), g.parse("1")) == q - 1);
  CHECK(h.r_poly(g.parse("1"), g.parse("1")) == LaurentPoly(1));
  CHECK(h.r_poly(g.parse("2"), g.parse("1 3")).is_zero());
  // s1 s2 s1 over e: (q-1)^3 + q(q-1)
  CHECK(h.r_poly(g.identity(), g.parse("1 2 1")) == (q - 1) * (q - 1) * (q - 1) + q * (q - 1));
}

TEST_CASE("R degree, leading coefficient and Boolean intervals") {
  for (const char* spec : {"A3", "B3"}) {
    CoxeterGroup g(CoxeterGraph::parse(spec));
    HeckeAlgebra h(g);
    std::size_t boolean = 0;
    for (Element w : g.enumerate_up_to(-1)) {
      LaurentPoly sum;
      for (Element x : g.lower_interval(w)) {
        const LaurentPoly r = h.r_poly(x, w);
        const int d = g.length(w) - g.length(x);
        REQUIRE_FALSE(r.is_zero());
        CHECK(r.in_span(Span::NonNegativeQ));
        CHECK(r.max_exponent() == 2 * d);
        CHECK(r.coeff_at(2 * d) == 1);
        CHECK(r.coeff_at(0) == (d % 2 == 0 ? 1 : -1));
        if (boolean_interval(g, x, w)) {
          ++boolean;
          LaurentPoly want = 1;
          for (int i = 0; i < d; ++i) want *= q - 1;
          CHECK(r == want);
        }
        sum += r;
      }
      CHECK(sum == LaurentPoly::q_power(g.length(w)));
    }
    CHECK(boolean > 0);
  }
}

TEST_CASE("KL polynomials") {
  CoxeterGroup g(CoxeterGraph::parse("A3"));
  HeckeAlgebra h(g);
  CHECK(h.kl_poly(g.identity(), g.parse("1")) == LaurentPoly(1));
  CHECK(h.kl_poly(g.identity(), g.parse("2 1 3 2")) == 1 + q);
  CHECK(h.kl_poly(g.parse("2"), g.parse("2 1 3 2")) == 1 + q);
  CHECK(h.kl_poly(g.parse("1 3"), g.parse("1 3 2 3 1")) == 1 + q);
  CHECK(h.kl_poly(g.parse("1 2"), g.parse("1 3 2 3 1")) == LaurentPoly(1));
  CHECK(h.kl_poly(g.parse("2"), g.parse("1 3")).is_zero());
  CHECK(h.mu(g.identity(), g.parse("1")) == 1);
  CHECK(h.mu(g.identity(), g.parse("2 1 3 2")) == 0);
  CHECK(h.mu(g.parse("2"), g.parse("2 1 3 2")) == 1);
  CHECK(h.mu(g.parse("1"), g.parse("1")) == 0);
}

TEST_CASE("KL properties") {
  for (const char* spec : {"A3", "B3", "I2(5)"}) {
    CoxeterGroup g(CoxeterGraph::parse(spec));
    HeckeAlgebra h(g);
    for (Element w : g.enumerate_up_to(-1)) {
      LaurentPoly signed_sum;
      for (Element x : g.lower_interval(w)) {
        const LaurentPoly p = h.kl_poly(x, w);
        CHECK(p.coeff_at(0) == 1);
        CHECK(p.in_span(Span::NonNegativeQ));
        if (x != w) CHECK(p.max_exponent() <= g.length(w) - g.length(x) - 1);
        signed_sum += p * LaurentPoly(g.sign(x));
        for (Generator s : g.descents(w, Side::Right)) CHECK(h.kl_poly(g.mult_gen(x, s, Side::Right), w) == p);
        for (Generator s : g.descents(w, Side::Left)) CHECK(h.kl_poly(g.mult_gen(x, s, Side::Left), w) == p);
      }
      if (w != g.identity()) CHECK(signed_sum.is_zero());
    }
  }
}

TEST_CASE("KL basis") {
  CoxeterGroup g(CoxeterGraph::parse("A2"));
  HeckeAlgebra h(g);
  const Element s = g.parse("1");
  AlgebraVector want(Basis::T);
  want.add(s, LaurentPoly::v_power(-1));
  want.add(g.identity(), LaurentPoly::v_power(-1));
  CHECK(h.c_prime_T(s) == want);
  CHECK(h.c_prime_T(g.identity()) == h.basis(g.identity()));
  const Element w0 = g.parse("1 2 1");
  const AlgebraVector c = h.c_prime_T(w0);
  CHECK(c.size() == 6);
  for (const auto& [x, coef] : c.terms()) CHECK(coef == LaurentPoly::v_power(-3));
}

TEST_CASE("bar invariance of C' and inverse contracts") {
  for (const char* spec : {"A3", "B3"}) {
    CoxeterGroup g(CoxeterGraph::parse(spec));
    HeckeAlgebra h(g);
    for (Element w : g.enumerate_up_to(6)) {
      CHECK(h.involution(h.c_prime_T(w)) == h.c_prime_T(w));
      CHECK(h.mul_basis(h.t_inverse_T(w), g.inverse(w)) == h.basis(g.identity()));
      CHECK(h.mul_basis(h.t_inverse_T(w), g.inverse(w), Side::Left) == h.basis(g.identity()));
    }
  }
  CoxeterGroup g(CoxeterGraph::parse("A1"));
  HeckeAlgebra h(g);
  AlgebraVector want(Basis::T);
  want.add(g.parse("1"), LaurentPoly::q_power(-1));
  want.add(g.identity(), LaurentPoly::q_power(-1) - 1);
  CHECK(h.t_inverse_T(g.parse("1")) == want);
}

TEST_CASE("results do not depend on the descent policy") {
  for (const char* spec : {"A3", "B3", "I2(6)"}) {
    CoxeterGroup g1(CoxeterGraph::parse(spec)), g2(CoxeterGraph::parse(spec));
    HeckeAlgebra h1(g1, DescentPolicy::Smallest), h2(g2, DescentPolicy::Largest);
    const auto e1 = g1.enumerate_up_to(-1), e2 = g2.enumerate_up_to(-1);
    REQUIRE(e1.size() == e2.size());
    for (std::size_t i = 0; i < e1.size(); ++i)
      for (std::size_t j = 0; j < e1.size(); ++j) {
        CHECK(h1.r_poly(e1[j], e1[i]) == h2.r_poly(e2[j], e2[i]));
        CHECK(h1.kl_poly(e1[j], e1[i]) == h2.kl_poly(e2[j], e2[i]));
      }
  }
}

TEST_CASE("graph relabelling maps KL polynomials to KL polynomials") {
  CoxeterGroup g(CoxeterGraph::parse("B3"));
  CoxeterGroup r(CoxeterGraph::parse("custom:[1,2,3;2,1,4;3,4,1]"));
  HeckeAlgebra hg(g), hr(r);
  std::multiset<std::string> a, b;
  for (Element w : g.enumerate_up_to(-1))
    for (Element x : g.lower_interval(w)) a.insert(hg.kl_poly(x, w).to_string());
  for (Element w : r.enumerate_up_to(-1))
    for (Element x : r.lower_interval(w)) b.insert(hr.kl_poly(x, w).to_string());
  CHECK(a == b);
}
