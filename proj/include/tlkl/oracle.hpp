#pragma once

// Brute-force ground truth. Nothing here calls the D-, a- or L-recursions,
// the R- or P-recursions, or the closed formulas; the only shared pieces are
// the Laurent ring, the group, the product rules on T and t, and (for
// oracle_invert_t) the rewriting of non-FC labels that t-products need.

#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "tlkl/tl.hpp"

namespace tlkl {

/// Linear system over Z[v, v^{-1}] with a Laurent-polynomial solution.
class LinearSystem {
 public:
  explicit LinearSystem(std::vector<Element> unknowns);

  const std::vector<Element>& unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }
  void add_equation(const std::map<Element, LaurentPoly>& coefficients, LaurentPoly rhs);
  /// Fraction-free Gauss-Jordan over Z[v, v^{-1}], taking unit pivots first
  /// (unknowns in the given order). Throws std::logic_error when the system is
  /// inconsistent, underdetermined or has no Laurent solution.
  std::map<Element, LaurentPoly> solve() const;
  /// Non-unit pivots taken by the last solve().
  std::size_t non_unit_pivots() const { return non_unit_pivots_; }

 private:
  struct Row {
    std::map<std::size_t, LaurentPoly> a;
    LaurentPoly rhs;
  };
  std::vector<Element> unknowns_;
  std::map<Element, std::size_t> index_;
  std::vector<Row> rows_;
  mutable std::size_t non_unit_pivots_ = 0;
};

/// Solves for the bar-invariant element sum_x v^{-l(x)} L_x b_x with L_top = 1
/// and L_x in v^{-1}Z[v^{-1}] otherwise, given iota on basis labels.
/// `labels` must be listed so that x precedes y whenever x < y; `iota(y)` must
/// be supported on labels <= y. Returns {x -> L_x}, zero entries dropped.
Column solve_bar_invariant(const CoxeterGroup& group, const std::vector<Element>& labels, Element top,
                           const std::function<AlgebraVector(Element)>& iota);

class Oracle {
 public:
  explicit Oracle(TemperleyLieb& tl);

  /// (t_{w^{-1}})^{-1}, from X * t_{w^{-1}} = t_e with X supported on FC y <= w.
  const AlgebraVector& oracle_invert_t(Element w);
  /// q^{l(w)} [t_x] oracle_invert_t(w).
  LaurentPoly a_via_inverse(Element x, Element w);
  /// q^{l(w)} [t_x] sigma((T_{w^{-1}})^{-1}), the Hecke inverse built from T_s^{-1} factors.
  LaurentPoly oracle_a_via_hecke(Element x, Element w);
  const Column& a_column_via_hecke(Element w);
  /// L_{x,w} for FC x <= w from iota(c_w) = c_w in t-coordinates.
  const Column& oracle_ic_solve(Element w);

  /// (T_{w^{-1}})^{-1} = T_{s_1}^{-1} ... T_{s_r}^{-1} for w = s_1 ... s_r.
  const AlgebraVector& inverse_T(Element w);
  /// eps_x eps_w q^{l(w)} [T_x] inverse_T(w).
  LaurentPoly r_poly(Element x, Element w);
  /// P_{x,w} from iota(C'_w) = C'_w in T-coordinates.
  LaurentPoly kl_poly(Element x, Element w);
  const Column& kl_column(Element w);
  /// D_{x,w} by rewriting T_w with the ideal generators alone.
  LaurentPoly d_poly_ideal(Element x, Element w);
  const AlgebraVector& d_vector_ideal(Element w);

 private:
  TemperleyLieb& tl_;
  HeckeAlgebra& hecke_;
  CoxeterGroup& group_;
  std::unordered_map<std::uint32_t, AlgebraVector> invert_t_, inverse_T_, d_ideal_;
  std::unordered_map<std::uint32_t, Column> a_hecke_, ic_, kl_;
};

}  // namespace tlkl
