#pragma once

// Hecke algebra on the T-basis: products with generators, R-polynomials,
// Kazhdan-Lusztig polynomials, mu, the KL basis C'_w and the involution.

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tlkl/coxeter.hpp"
#include "tlkl/laurent.hpp"

namespace tlkl {

enum class Basis {
  T,  // Hecke algebra standard basis
  t,  // Temperley-Lieb standard basis, FC labels only
  c,  // Temperley-Lieb IC basis labels
};

/// Finite linear combination of basis labels with Laurent coefficients.
class AlgebraVector {
 public:
  using Terms = std::map<Element, LaurentPoly>;

  explicit AlgebraVector(Basis basis) : basis_(basis) {}
  static AlgebraVector unit(Basis basis, Element w, LaurentPoly c = 1) {
    AlgebraVector v(basis);
    v.add(w, c);
    return v;
  }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(Element w) const;

  void add(Element w, const LaurentPoly& c);
  /// this += c * other (bases must agree).
  void add_scaled(const AlgebraVector& other, const LaurentPoly& c);

  AlgebraVector& operator+=(const AlgebraVector& r);
  AlgebraVector& operator-=(const AlgebraVector& r);
  friend AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) { return a += b; }
  friend AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b) { return a -= b; }
  AlgebraVector scaled(const LaurentPoly& c) const;
  friend bool operator==(const AlgebraVector&, const AlgebraVector&) = default;

 private:
  Basis basis_;
  Terms terms_;  // no zero coefficients
};

/// Renders "q^(-1/2)*T[e] + ..." with labels in ShortLex order.
std::string format_vector(const CoxeterGroup& group, const AlgebraVector& v);

enum class Family { R, P, D, a, L };
enum class Route {
  Recursion,      // descent recursions
  ViaKl,          // triangular system over KL polynomials (D)
  Closed,         // closed formulas over R, P and D (a, L)
  IcSolve,        // bar-invariance solve through a-polynomials (L)
  OracleInverse,  // direct inversion / linear solve (R, a)
  OracleHecke,    // projection of the Hecke inverse (a)
  OracleIdeal,    // pure ideal-generator rewriting (D)
  OracleSolve,    // generic bar-invariant triangular solve (P, L)
  Cache,          // loaded from a cache file
};

std::string family_name(Family f);
Family parse_family(std::string_view s);
std::string route_name(Route r);

/// Memo table for one polynomial family: (x, w) -> polynomial plus the route
/// that produced it.
class PolyTable {
 public:
  struct Entry {
    LaurentPoly poly;
    Route route;
  };

  explicit PolyTable(Family family) : family_(family) {}
  Family family() const { return family_; }
  const Entry* find(Element x, Element w) const;
  void put(Element x, Element w, LaurentPoly poly, Route route);
  std::size_t size() const { return entries_.size(); }
  void clear() { entries_.clear(); }
  template <class F>
  void for_each(F&& f) const {
    for (const auto& [key, e] : entries_) f(Element{static_cast<std::uint32_t>(key >> 32)}, Element{static_cast<std::uint32_t>(key)}, e);
  }

 private:
  static std::uint64_t key(Element x, Element w) { return (std::uint64_t{x.id} << 32) | w.id; }
  Family family_;
  std::unordered_map<std::uint64_t, Entry> entries_;
};

/// Which right descent the recursions branch on; results do not depend on it.
enum class DescentPolicy { Smallest, Largest };

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(CoxeterGroup& group, DescentPolicy policy = DescentPolicy::Smallest);

  CoxeterGroup& group() { return group_; }
  const CoxeterGroup& group() const { return group_; }
  DescentPolicy policy() const { return policy_; }
  /// Picks a descent from a nonzero mask according to the policy.
  Generator pick(std::uint64_t mask) const;

  AlgebraVector basis(Element w) const { return AlgebraVector::unit(Basis::T, w); }
  /// v * T_s (Right) or T_s * v (Left).
  AlgebraVector mul_gen(const AlgebraVector& v, Generator s, Side side = Side::Right);
  /// v * T_w (Right) or T_w * v (Left), letter by letter.
  AlgebraVector mul_basis(const AlgebraVector& v, Element w, Side side = Side::Right);

  LaurentPoly r_poly(Element x, Element w);
  LaurentPoly kl_poly(Element x, Element w);
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; 0 unless x < w with odd length gap.
  int mu(Element x, Element w);
  /// All z < w with mu(z, w) != 0, ShortLex order.
  const std::vector<std::pair<Element, int>>& mu_below(Element w);

  /// (T_{w^{-1}})^{-1} = eps_w q^{-l(w)} sum_{x<=w} eps_x R_{x,w} T_x.
  AlgebraVector t_inverse_T(Element w);
  /// C'_w = q^{-l(w)/2} sum_{x<=w} P_{x,w} T_x.
  AlgebraVector c_prime_T(Element w);
  /// iota: q -> q^{-1}, T_x -> (T_{x^{-1}})^{-1}.
  AlgebraVector involution(const AlgebraVector& v);

  PolyTable& table(Family f) { return f == Family::R ? r_table_ : p_table_; }
  const PolyTable& table(Family f) const { return f == Family::R ? r_table_ : p_table_; }

 private:
  CoxeterGroup& group_;
  DescentPolicy policy_;
  PolyTable r_table_{Family::R};
  PolyTable p_table_{Family::P};
  std::unordered_map<std::uint32_t, std::vector<std::pair<Element, int>>> mu_memo_;
};

}  // namespace tlkl
