#pragma once

// Generalized Temperley-Lieb algebra TL(X) = H(X)/J(X) on the t-basis
// {t_w : w fully commutative}.
//
// Non-FC labels produced by products are rewritten into the t-basis through
// D-polynomials: t_w = sum_{x FC, x <= w} D_{x,w} t_x. The module computes
// the D-, a- and L-families by several independent routes. Routes marked
// "closed" rely on sigma(C'_w) being c_w or 0 and refuse graphs where that
// fails (GateError); the general routes work on every graph.

#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tlkl/hecke.hpp"

namespace tlkl {

/// A closed-formula route was requested on a graph where sigma(C'_w) is not
/// always c_w or 0.
class GateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sparse column {x -> poly} of a polynomial family for a fixed w.
using Column = std::map<Element, LaurentPoly>;

/// Outcome of evaluating both sides of an identity.
struct IdentityCheck {
  bool holds = false;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

class TemperleyLieb {
 public:
  explicit TemperleyLieb(HeckeAlgebra& hecke);

  HeckeAlgebra& hecke() { return hecke_; }
  CoxeterGroup& group() { return group_; }
  bool cw0_holds() const { return cw0_; }
  void require_gate(const char* what) const;

  /// Fully commutative x <= w, ShortLex order.
  std::vector<Element> fc_below(Element w);

  AlgebraVector basis(Element w) const;
  /// v * t_s (Right) or t_s * v (Left); non-FC labels are rewritten at once.
  AlgebraVector mul_gen(const AlgebraVector& v, Generator s, Side side = Side::Right);
  AlgebraVector mul_basis(const AlgebraVector& v, Element w, Side side = Side::Right);
  /// t_w expressed in the t-basis (the column D_{.,w}).
  AlgebraVector rewrite(Element w);
  /// sigma: T_x -> t_x, non-FC labels rewritten through D.
  AlgebraVector sigma_project(const AlgebraVector& v);

  // D-polynomials.
  LaurentPoly d_poly_rec(Element x, Element w);
  LaurentPoly d_poly_via_kl(Element x, Element w);
  const Column& d_column_rec(Element w);
  const Column& d_column_via_kl(Element w);
  /// Number of columns built by ideal-generator rewriting because every
  /// right descent of w stays fully commutative.
  std::size_t d_ideal_fallbacks() const { return d_ideal_fallbacks_; }

  // a-polynomials.
  LaurentPoly a_poly_rec(Element x, Element w);
  LaurentPoly a_poly_closed(Element x, Element w);
  const Column& a_column_rec(Element w);
  const Column& a_column_closed(Element w);
  /// (t_{w^{-1}})^{-1} = q^{-l(w)} sum_y a_{y,w} t_y.
  AlgebraVector t_inverse_t(Element w);
  /// Used by a_column_rec when w has no admissible descent.
  void set_inversion_fallback(std::function<AlgebraVector(Element)> f) { inversion_fallback_ = std::move(f); }
  std::size_t a_fallbacks() const { return a_fallbacks_; }

  // L-polynomials, stored as L_{x,w}(q^{-1/2}), an element of v^{-1}Z[v^{-1}] for x < w.
  LaurentPoly l_poly_closed(Element x, Element w);
  const Column& l_column_closed(Element w);
  const Column& l_poly_ic_solve(Element w);
  /// Closed route where the gate holds, IC solve elsewhere.
  const Column& l_column(Element w);
  LaurentPoly l_poly(Element x, Element w);
  Route l_route() const { return cw0_ ? Route::Closed : Route::IcSolve; }
  /// Coefficient of q^{-1/2} in L_{x,w}.
  int m_coeff(Element x, Element w);

  /// c_w = sum_x q^{-l(x)/2} L_{x,w} t_x.
  AlgebraVector c_basis(Element w);
  /// t-coordinates of a c-labelled vector.
  AlgebraVector expand_c(const AlgebraVector& c_coords);
  /// c_s c_w in c-coordinates.
  AlgebraVector c_mul_cs(Generator s, Element w);
  /// t_s c_w in c-coordinates.
  AlgebraVector ts_mul_cw(Generator s, Element w);
  /// iota on TL: q -> q^{-1}, t_x -> (t_{x^{-1}})^{-1}.
  AlgebraVector involution(const AlgebraVector& v);

  // Identity checks.
  bool d_sign_sum_check(Element w);
  bool a_sign_sum_check(Element w);
  bool f_w_check(Element w);
  /// L_{x,w} = 0 when sw < w and x < sx is not FC.
  IdentityCheck l_vanishing_check(Element x, Element w, Generator s);
  /// L_{x,w} = q^{-1/2} L_{sx,w} when x < w, sw < w and x < sx is FC.
  IdentityCheck l_descent_check(Element x, Element w, Generator s);
  /// Four-term recursion for sx FC and sw < w, evaluated per sign of sx - x.
  IdentityCheck l_general_check(Element x, Element w, Generator s);

 private:
  Column ideal_rewrite_column(Element w);

  HeckeAlgebra& hecke_;
  CoxeterGroup& group_;
  bool cw0_;
  std::unordered_map<std::uint32_t, Column> d_rec_, d_kl_, a_rec_, a_closed_, l_closed_, l_ic_;
  std::unordered_map<std::uint32_t, std::vector<Element>> fc_below_;
  std::function<AlgebraVector(Element)> inversion_fallback_;
  std::size_t d_ideal_fallbacks_ = 0;
  std::size_t a_fallbacks_ = 0;
};

LaurentPoly column_value(const Column& c, Element x);

}  // namespace tlkl
