#include "tlkl/oracle.hpp"

#include <algorithm>
#include <string>

namespace tlkl {

namespace {

LaurentPoly column_entry(const auto& row, std::size_t col) {
  auto it = row.a.find(col);
  return it == row.a.end() ? LaurentPoly{} : it->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// LinearSystem

LinearSystem::LinearSystem(std::vector<Element> unknowns) : unknowns_(std::move(unknowns)) {
  for (std::size_t i = 0; i < unknowns_.size(); ++i) index_.emplace(unknowns_[i], i);
}

void LinearSystem::add_equation(const std::map<Element, LaurentPoly>& coefficients, LaurentPoly rhs) {
  Row row;
  for (const auto& [x, c] : coefficients) {
    if (c.is_zero()) continue;
    auto it = index_.find(x);
    if (it == index_.end()) throw std::logic_error("LinearSystem: coefficient on an unknown not in the ansatz");
    row.a.emplace(it->second, c);
  }
  row.rhs = std::move(rhs);
  rows_.push_back(std::move(row));
}

std::map<Element, LaurentPoly> LinearSystem::solve() const {
  // Fraction-free Gauss-Jordan: after each step every entry is a minor of the
  // original augmented matrix, so the division by the previous pivot is exact.
  std::vector<Row> rows = rows_;
  std::vector<bool> used(rows.size(), false);
  std::vector<std::ptrdiff_t> pivot_row(unknowns_.size(), -1);
  non_unit_pivots_ = 0;
  LaurentPoly prev = 1;
  auto divide = [](const LaurentPoly& a, const LaurentPoly& d) {
    std::optional<LaurentPoly> r = a.divide_exact(d);
    if (!r) throw std::logic_error("LinearSystem: inexact fraction-free step");
    return *r;
  };
  for (std::size_t step = 0; step < unknowns_.size(); ++step) {
    // Unit coefficient on the first possible unknown; else the coefficient
    // with fewest terms.
    std::ptrdiff_t p = -1;
    std::size_t col = 0, best = 0;
    bool unit = false;
    for (std::size_t c = 0; c < unknowns_.size() && !unit; ++c) {
      if (pivot_row[c] >= 0) continue;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) continue;
        auto it = rows[r].a.find(c);
        if (it == rows[r].a.end()) continue;
        if (it->second.is_unit()) {
          p = static_cast<std::ptrdiff_t>(r);
          col = c;
          unit = true;
          break;
        }
        if (p < 0 || it->second.terms().size() < best) {
          p = static_cast<std::ptrdiff_t>(r);
          col = c;
          best = it->second.terms().size();
        }
      }
    }
    if (p < 0) throw std::logic_error("LinearSystem: underdetermined system");
    if (!unit) ++non_unit_pivots_;
    used[p] = true;
    pivot_row[col] = p;
    const Row piv = rows[p];
    const LaurentPoly pc = piv.a.at(col);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<std::ptrdiff_t>(r) == p) continue;
      Row& dst = rows[r];
      LaurentPoly f = column_entry(dst, col);
      // row_r = (pc row_r - f row_p) / prev
      std::map<std::size_t, LaurentPoly> next;
      for (const auto& [j, c] : dst.a) next[j] = c * pc;
      if (!f.is_zero())
        for (const auto& [j, c] : piv.a) next[j] -= f * c;
      dst.a.clear();
      for (auto& [j, c] : next)
        if (!c.is_zero()) dst.a.emplace(j, divide(c, prev));
      LaurentPoly rhs = dst.rhs * pc;
      if (!f.is_zero()) rhs -= f * piv.rhs;
      dst.rhs = divide(rhs, prev);
    }
    prev = pc;
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!used[r] && (!rows[r].rhs.is_zero() || !rows[r].a.empty()))
      throw std::logic_error("LinearSystem: inconsistent system");
  std::map<Element, LaurentPoly> out;
  for (std::size_t col = 0; col < unknowns_.size(); ++col) {
    const Row& row = rows[pivot_row[col]];
    if (row.a.size() != 1) throw std::logic_error("LinearSystem: elimination left a coupled row");
    std::optional<LaurentPoly> v = row.rhs.divide_exact(row.a.begin()->second);
    if (!v) throw std::logic_error("LinearSystem: solution is not a Laurent polynomial");
    if (!v->is_zero()) out.emplace(unknowns_[col], std::move(*v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generic bar-invariant solve

Column solve_bar_invariant(const CoxeterGroup& group, const std::vector<Element>& labels, Element top,
                           const std::function<AlgebraVector(Element)>& iota) {
  // Coefficient of b_x is v^{-l(x)} L_x. Processing x top-down, iota of the
  // part already fixed gives K; the x-equation reads L_x - bar(L_x) = v^{l(x)} K.
  Column out;
  out.emplace(top, 1);
  AlgebraVector running = iota(top).scaled(LaurentPoly::v_power(group.length(top)));
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    const Element x = *it;
    if (x == top) continue;
    const int lx = group.length(x);
    LaurentPoly rhs = running.coeff(x).shifted(lx);
    if (rhs.coeff_at(0) != 0 || rhs.bar() != -rhs)
      throw std::logic_error("solve_bar_invariant: no bar-invariant solution at " + group.format(x));
    LaurentPoly l = rhs.negative_part();
    if (!l.in_span(Span::StrictlyNegativeV)) throw std::logic_error("solve_bar_invariant: degree constraint violated");
    if (l.is_zero()) continue;
    // bar(v^{-l(x)} L_x) = v^{l(x)} bar(L_x)
    running.add_scaled(iota(x), l.bar().shifted(lx));
    out.emplace(x, std::move(l));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracle

Oracle::Oracle(TemperleyLieb& tl) : tl_(tl), hecke_(tl.hecke()), group_(tl.group()) {}

const AlgebraVector& Oracle::oracle_invert_t(Element w) {
  if (auto it = invert_t_.find(w.id); it != invert_t_.end()) return it->second;
  if (!group_.is_fully_commutative(w))
    throw std::invalid_argument("oracle_invert_t needs a fully commutative w, got " + group_.format(w));
  std::vector<Element> ys = tl_.fc_below(w);
  // Prefer pivots on long labels first: the coefficient of t_e in t_y t_{w^{-1}}
  // is what pins down the top unknowns.
  std::vector<Element> order(ys.rbegin(), ys.rend());
  LinearSystem sys(order);
  const Element winv = group_.inverse(w);
  // X t_{w^{-1}} = t_e and t_{w^{-1}} X = t_e, one equation per label and side.
  for (Side side : {Side::Right, Side::Left}) {
    std::map<Element, std::map<Element, LaurentPoly>> rows;  // label z -> (y -> coefficient)
    for (Element y : ys) {
      AlgebraVector prod = tl_.mul_basis(AlgebraVector::unit(Basis::t, y), winv, side);
      for (const auto& [z, c] : prod.terms()) rows[z][y] = c;
    }
    rows.try_emplace(group_.identity());
    for (const auto& [z, coeffs] : rows) sys.add_equation(coeffs, z == group_.identity() ? 1 : 0);
  }
  std::map<Element, LaurentPoly> sol = sys.solve();
  AlgebraVector out(Basis::t);
  for (const auto& [y, c] : sol) out.add(y, c);
  return invert_t_.emplace(w.id, std::move(out)).first->second;
}

LaurentPoly Oracle::a_via_inverse(Element x, Element w) {
  return oracle_invert_t(w).coeff(x).shifted(2 * group_.length(w));
}

const AlgebraVector& Oracle::inverse_T(Element w) {
  if (auto it = inverse_T_.find(w.id); it != inverse_T_.end()) return it->second;
  // T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e
  const LaurentPoly qinv = LaurentPoly::q_power(-1);
  const LaurentPoly qinv_minus_1 = qinv - 1;
  AlgebraVector v = hecke_.basis(group_.identity());
  for (Generator s : group_.word(w)) {
    AlgebraVector next = hecke_.mul_gen(v, s, Side::Right).scaled(qinv);
    next.add_scaled(v, qinv_minus_1);
    v = std::move(next);
  }
  return inverse_T_.emplace(w.id, std::move(v)).first->second;
}

LaurentPoly Oracle::r_poly(Element x, Element w) {
  return inverse_T(w).coeff(x).shifted(2 * group_.length(w)) * (group_.sign(x) * group_.sign(w));
}

const Column& Oracle::a_column_via_hecke(Element w) {
  if (auto it = a_hecke_.find(w.id); it != a_hecke_.end()) return it->second;
  if (!group_.is_fully_commutative(w))
    throw std::invalid_argument("a_{x,w} needs a fully commutative w, got " + group_.format(w));
  AlgebraVector projected(Basis::t);
  for (const auto& [z, c] : inverse_T(w).terms()) projected.add_scaled(d_vector_ideal(z), c);
  Column col;
  for (const auto& [x, c] : projected.terms()) col.emplace(x, c.shifted(2 * group_.length(w)));
  return a_hecke_.emplace(w.id, std::move(col)).first->second;
}

LaurentPoly Oracle::oracle_a_via_hecke(Element x, Element w) { return column_value(a_column_via_hecke(w), x); }

const Column& Oracle::oracle_ic_solve(Element w) {
  if (auto it = ic_.find(w.id); it != ic_.end()) return it->second;
  if (!group_.is_fully_commutative(w))
    throw std::invalid_argument("oracle_ic_solve needs a fully commutative w, got " + group_.format(w));
  Column col = solve_bar_invariant(group_, tl_.fc_below(w), w,
                                   [this](Element y) { return oracle_invert_t(y); });
  return ic_.emplace(w.id, std::move(col)).first->second;
}

const Column& Oracle::kl_column(Element w) {
  if (auto it = kl_.find(w.id); it != kl_.end()) return it->second;
  Column l = solve_bar_invariant(group_, group_.lower_interval(w), w,
                                 [this](Element y) { return inverse_T(y); });
  Column p;
  const int lw = group_.length(w);
  for (const auto& [x, c] : l) p.emplace(x, c.shifted(lw - group_.length(x)));
  return kl_.emplace(w.id, std::move(p)).first->second;
}

LaurentPoly Oracle::kl_poly(Element x, Element w) { return column_value(kl_column(w), x); }

const AlgebraVector& Oracle::d_vector_ideal(Element w) {
  if (auto it = d_ideal_.find(w.id); it != d_ideal_.end()) return it->second;
  AlgebraVector out(Basis::t);
  if (group_.is_fully_commutative(w)) {
    out.add(w, 1);
    return d_ideal_.emplace(w.id, std::move(out)).first->second;
  }
  // T_a (sum over <s,t>) T_b lies in the ideal; every other term is shorter than w.
  const CoxeterGroup::BraidWitness wit = group_.braid_witness(w);
  AlgebraVector total(Basis::T);
  auto add_product = [&](const Word& middle) {
    AlgebraVector v = hecke_.basis(group_.canonical_form(wit.prefix));
    for (Generator g : middle) v = hecke_.mul_gen(v, g, Side::Right);
    for (Generator g : wit.suffix) v = hecke_.mul_gen(v, g, Side::Right);
    total += v;
  };
  add_product({});
  for (Generator first : {wit.s, wit.t}) {
    Generator other = first == wit.s ? wit.t : wit.s;
    Word alt;
    for (int k = 1; k < wit.m; ++k) {
      alt.push_back(k % 2 == 1 ? first : other);
      add_product(alt);
    }
  }
  for (const auto& [z, c] : total.terms()) {
    if (z == w) throw std::logic_error("d_vector_ideal: rewriting did not shorten " + group_.format(w));
    out.add_scaled(d_vector_ideal(z), -c);
  }
  return d_ideal_.emplace(w.id, std::move(out)).first->second;
}

LaurentPoly Oracle::d_poly_ideal(Element x, Element w) { return d_vector_ideal(w).coeff(x); }

}  // namespace tlkl
