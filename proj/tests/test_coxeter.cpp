#include <algorithm>
#include <set>

#include "doctest.h"
#include "tlkl/coxeter.hpp"

using namespace tlkl;

namespace {

std::size_t fc_count(const std::string& spec) {
  CoxeterGroup g(CoxeterGraph::parse(spec));
  std::size_t n = 0;
  for (Element w : g.enumerate_up_to(-1)) n += g.is_fully_commutative(w);
  return n;
}

std::vector<int> permutation(const Word& w, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (Generator s : w) std::swap(p[s], p[s + 1]);
  return p;
}

bool avoids_321(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (p[i] > p[j] && p[j] > p[k]) return false;
  return true;
}

}  // namespace

TEST_CASE("graph parsing and classification") {
  CHECK(CoxeterGraph::parse("A3").classification().name == "A3");
  CHECK(CoxeterGraph::parse("I2(5)").classification().kind == GraphKind::Finite);
  CHECK(CoxeterGraph::parse("affA2").classification().kind == GraphKind::Affine);
  CHECK(CoxeterGraph::parse("custom:[1,3;3,1]").classification().name == "A2");
  CHECK(CoxeterGraph::parse("custom:[1,inf;inf,1]").classification().kind == GraphKind::Affine);
  CHECK(CoxeterGraph::parse("A3").projection_dichotomy_holds());
  CHECK(CoxeterGraph::parse("B3").projection_dichotomy_holds());
  CHECK(CoxeterGraph::parse("affC2").projection_dichotomy_holds());
  CHECK_FALSE(CoxeterGraph::parse("D4").projection_dichotomy_holds());
  CHECK_FALSE(CoxeterGraph::parse("affF4").projection_dichotomy_holds());
  CHECK_FALSE(CoxeterGraph::parse("E6").projection_dichotomy_holds());
  CHECK(CoxeterGraph::parse("H3").longest_length() == 15);
  CHECK_FALSE(CoxeterGraph::parse("affA2").longest_length().has_value());
  CHECK_THROWS_AS(CoxeterGraph::parse("Q7"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::parse("custom:[1,3;2,1]"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterGraph::parse("custom:[1,1;1,1]"), std::invalid_argument);
}

TEST_CASE("words") {
  CHECK(parse_word("1 2,3") == Word{0, 1, 2});
  CHECK(parse_word("e").empty());
  CHECK(format_word(Word{0, 2}) == "1 3");
  CHECK(format_word(Word{}) == "e");
  CHECK_THROWS_AS(parse_word("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1 x"), std::invalid_argument);
  CoxeterGroup g(CoxeterGraph::parse("A2"));
  CHECK_THROWS_AS(g.parse("3"), std::invalid_argument);
}

TEST_CASE("canonical forms") {
  CoxeterGroup g(CoxeterGraph::parse("A3"));
  CHECK(g.format(g.parse("2 1 2")) == "1 2 1");
  CHECK(g.format(g.parse("3 1")) == "1 3");
  CHECK(g.format(g.parse("1 1")) == "e");
  CHECK(g.length(g.parse("1 2 1 2")) == 2);
  CHECK(g.parse("1 2 1") == g.parse("2 1 2"));
  CHECK(g.sign(g.parse("1 2 1")) == -1);
}

TEST_CASE("descents") {
  CoxeterGroup g(CoxeterGraph::parse("A3"));
  const Element w = g.parse("1 2");
  CHECK(g.descents(w, Side::Right) == std::vector<Generator>{1});
  CHECK(g.descents(w, Side::Left) == std::vector<Generator>{0});
  const Element w0 = g.parse("1 2 1 3 2 1");
  CHECK(g.descents(w0, Side::Right).size() == 3);
  CHECK(g.descents(g.identity(), Side::Left).empty());
}

TEST_CASE("inverse and products") {
  CoxeterGroup g(CoxeterGraph::parse("B3"));
  for (Element w : g.enumerate_up_to(-1)) {
    const Element wi = g.inverse(w);
    CHECK(g.multiply(w, wi) == g.identity());
    CHECK(g.length(wi) == g.length(w));
    for (Generator s = 0; s < g.rank(); ++s) {
      const Element ws = g.mult_gen(w, s, Side::Right);
      CHECK(std::abs(g.length(ws) - g.length(w)) == 1);
      CHECK((g.length(ws) < g.length(w)) == g.is_descent(w, s, Side::Right));
      CHECK(g.mult_gen(ws, s, Side::Right) == w);
      CHECK(g.mult_gen(g.mult_gen(w, s, Side::Left), s, Side::Left) == w);
    }
  }
}

TEST_CASE("Bruhat order") {
  CoxeterGroup g(CoxeterGraph::parse("A3"));
  CHECK_FALSE(g.bruhat_leq(g.parse("2"), g.parse("1 3")));
  CHECK(g.bruhat_leq(g.parse("1"), g.parse("1 3")));
  CHECK(g.bruhat_leq(g.identity(), g.parse("2")));
  CHECK(g.lower_interval(g.parse("1 2 1")).size() == 6);

  // The order is the transitive closure of the length-one covers x < xt.
  const std::vector<Element> all = g.enumerate_up_to(-1);
  std::vector<Element> reflections;
  for (Element w : all)
    if (g.length(w) % 2 == 1 && g.multiply(w, w) == g.identity()) reflections.push_back(w);
  CHECK(reflections.size() == 6);
  std::set<std::pair<std::uint32_t, std::uint32_t>> leq;
  for (Element x : all) leq.insert({x.id, x.id});
  bool grown = true;
  std::set<std::pair<std::uint32_t, std::uint32_t>> cover;
  for (Element x : all)
    for (Element t : reflections) {
      const Element y = g.multiply(x, t);
      if (g.length(y) == g.length(x) + 1) cover.insert({x.id, y.id});
    }
  leq.insert(cover.begin(), cover.end());
  while (grown) {
    grown = false;
    for (auto [a, b] : std::vector(leq.begin(), leq.end()))
      for (auto [c, d] : cover)
        if (c == b && leq.insert({a, d}).second) grown = true;
  }
  for (Element x : all)
    for (Element w : all) CHECK(g.bruhat_leq(x, w) == leq.count({x.id, w.id}) > 0);
}

TEST_CASE("fully commutative elements") {
  CoxeterGroup b2(CoxeterGraph::parse("B2"));
  CHECK(b2.is_fully_commutative(b2.parse("1 2 1")));
  CHECK_FALSE(b2.is_fully_commutative(b2.parse("1 2 1 2")));
  CoxeterGroup a2(CoxeterGraph::parse("A2"));
  CHECK_FALSE(a2.is_fully_commutative(a2.parse("1 2 1")));
  const auto& bw = a2.braid_witness(a2.parse("1 2 1"));
  CHECK(bw.m == 3);
  CHECK(bw.prefix.empty());
  CHECK(bw.suffix.empty());
}

TEST_CASE("FC elements of type A are the 321-avoiding permutations") {
  for (int n : {4, 5}) {
    CoxeterGroup g(CoxeterGraph::parse("A" + std::to_string(n - 1)));
    for (Element w : g.enumerate_up_to(-1)) CHECK(g.is_fully_commutative(w) == avoids_321(permutation(g.word(w), n)));
  }
}

TEST_CASE("FC counts") {
  CHECK(fc_count("A2") == 5);
  CHECK(fc_count("A3") == 14);
  CHECK(fc_count("A4") == 42);
  CHECK(fc_count("A5") == 132);
  CHECK(fc_count("B2") == 7);
  CHECK(fc_count("B3") == 24);
  CHECK(fc_count("B4") == 83);
  CHECK(fc_count("I2(5)") == 9);
  CHECK(fc_count("H3") == 44);
  CoxeterGroup a3(CoxeterGraph::parse("A3"));
  CHECK(a3.enumerate_up_to(-1).size() == 24);
  CoxeterGroup b3(CoxeterGraph::parse("B3"));
  CHECK(b3.enumerate_up_to(-1).size() == 48);
}

TEST_CASE("relabelling the graph does not change the counts") {
  const auto m = CoxeterGraph::parse("B4").matrix();
  const int n = static_cast<int>(m.size());
  std::string spec = "custom:[";
  for (int i = n - 1; i >= 0; --i) {
    for (int j = n - 1; j >= 0; --j) spec += std::to_string(m[i][j]) + (j ? "," : "");
    spec += i ? ";" : "]";
  }
  CoxeterGroup g(CoxeterGraph::parse(spec));
  CHECK(g.graph().classification().name == "B4");
  const auto all = g.enumerate_up_to(-1);
  CHECK(all.size() == 384);
  CHECK(std::count_if(all.begin(), all.end(), [&](Element w) { return g.is_fully_commutative(w); }) == 83);
}

TEST_CASE("FC Bruhat intervals") {
  CoxeterGroup g(CoxeterGraph::parse("A2"));
  const auto c = g.bruhat_interval_c(g.identity(), g.parse("1 2 1"));
  CHECK(c.size() == 5);
  CHECK(g.bruhat_interval_c(g.parse("1"), g.parse("1 2")).size() == 2);
  CHECK_THROWS_AS(g.bruhat_interval_c(g.parse("1"), g.parse("2")), std::invalid_argument);
}

TEST_CASE("truncated enumeration of affine groups") {
  CoxeterGroup g(CoxeterGraph::parse("affA2"));
  const auto els = g.enumerate_up_to(3);
  // 1 + 3 + 6 + 9
  CHECK(els.size() == 19);
  CHECK(g.enumerate_up_to(0).size() == 1);
  CoxeterGroup capped(CoxeterGraph::parse("affA2"), 50);
  CHECK_THROWS_AS(capped.enumerate_up_to(10), SizeError);
}
