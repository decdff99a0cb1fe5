#include "tlkl/hecke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tlkl {

// ---------------------------------------------------------------------------
// AlgebraVector

LaurentPoly AlgebraVector::coeff(Element w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void AlgebraVector::add(Element w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraVector::add_scaled(const AlgebraVector& other, const LaurentPoly& c) {
  if (other.basis_ != basis_) throw std::logic_error("AlgebraVector: basis mismatch");
  for (const auto& [w, d] : other.terms_) add(w, c * d);
}

AlgebraVector& AlgebraVector::operator+=(const AlgebraVector& r) {
  if (r.basis_ != basis_) throw std::logic_error("AlgebraVector: basis mismatch");
  for (const auto& [w, c] : r.terms_) add(w, c);
  return *this;
}

AlgebraVector& AlgebraVector::operator-=(const AlgebraVector& r) {
  if (r.basis_ != basis_) throw std::logic_error("AlgebraVector: basis mismatch");
  for (const auto& [w, c] : r.terms_) add(w, -c);
  return *this;
}

AlgebraVector AlgebraVector::scaled(const LaurentPoly& c) const {
  AlgebraVector out(basis_);
  for (const auto& [w, d] : terms_) out.add(w, c * d);
  return out;
}

std::string format_vector(const CoxeterGroup& group, const AlgebraVector& v) {
  if (v.is_zero()) return "0";
  std::vector<Element> labels;
  for (const auto& [w, c] : v.terms()) labels.push_back(w);
  group.sort_shortlex(labels);
  const char* name = v.basis() == Basis::T ? "T" : v.basis() == Basis::t ? "t" : "c";
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << " + ";
    os << '(' << v.coeff(labels[i]) << ")*" << name << '[' << group.format(labels[i]) << ']';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Names

std::string family_name(Family f) {
  switch (f) {
    case Family::R:
      return "R";
    case Family::P:
      return "P";
    case Family::D:
      return "D";
    case Family::a:
      return "a";
    case Family::L:
      return "L";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "R") return Family::R;
  if (s == "P") return Family::P;
  if (s == "D") return Family::D;
  if (s == "a") return Family::a;
  if (s == "L") return Family::L;
  throw std::invalid_argument("unknown polynomial family '" + std::string(s) + "' (expected R, P, D, a or L)");
}

std::string route_name(Route r) {
  switch (r) {
    case Route::Recursion:
      return "recursion";
    case Route::ViaKl:
      return "via-kl";
    case Route::Closed:
      return "closed";
    case Route::IcSolve:
      return "ic-solve";
    case Route::OracleInverse:
      return "oracle-inverse";
    case Route::OracleHecke:
      return "oracle-hecke";
    case Route::OracleIdeal:
      return "oracle-ideal";
    case Route::OracleSolve:
      return "oracle-solve";
    case Route::Cache:
      return "cache";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// PolyTable

const PolyTable::Entry* PolyTable::find(Element x, Element w) const {
  auto it = entries_.find(key(x, w));
  return it == entries_.end() ? nullptr : &it->second;
}

void PolyTable::put(Element x, Element w, LaurentPoly poly, Route route) {
  entries_.insert_or_assign(key(x, w), Entry{std::move(poly), route});
}

// ---------------------------------------------------------------------------
// HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(CoxeterGroup& group, DescentPolicy policy) : group_(group), policy_(policy) {}

Generator HeckeAlgebra::pick(std::uint64_t mask) const {
  if (mask == 0) throw std::logic_error("pick: empty descent set");
  return policy_ == DescentPolicy::Smallest ? __builtin_ctzll(mask) : 63 - __builtin_clzll(mask);
}

AlgebraVector HeckeAlgebra::mul_gen(const AlgebraVector& v, Generator s, Side side) {
  if (v.basis() != Basis::T) throw std::logic_error("HeckeAlgebra::mul_gen expects a T-basis vector");
  AlgebraVector out(Basis::T);
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly q_minus_1 = q - 1;
  for (const auto& [w, c] : v.terms()) {
    Element ws = group_.mult_gen(w, s, side);
    if (group_.length(ws) > group_.length(w)) {
      out.add(ws, c);
    } else {
      out.add(ws, q * c);
      out.add(w, q_minus_1 * c);
    }
  }
  return out;
}

AlgebraVector HeckeAlgebra::mul_basis(const AlgebraVector& v, Element w, Side side) {
  Word letters = group_.word(w);
  AlgebraVector out = v;
  if (side == Side::Right) {
    for (Generator s : letters) out = mul_gen(out, s, Side::Right);
  } else {
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = mul_gen(out, *it, Side::Left);
  }
  return out;
}

LaurentPoly HeckeAlgebra::r_poly(Element x, Element w) {
  if (x == w) return 1;
  if (!group_.bruhat_leq(x, w)) return {};
  if (const auto* e = r_table_.find(x, w)) return e->poly;
  // For ws < w: R_{x,w} = R_{xs,ws} if xs < x, else q R_{xs,ws} + (q-1) R_{x,ws}.
  Generator s = pick(group_.descent_mask(w, Side::Right));
  Element ws = group_.mult_gen(w, s, Side::Right);
  Element xs = group_.mult_gen(x, s, Side::Right);
  LaurentPoly r;
  if (group_.is_descent(x, s, Side::Right)) {
    r = r_poly(xs, ws);
  } else {
    r = LaurentPoly::q() * r_poly(xs, ws) + (LaurentPoly::q() - 1) * r_poly(x, ws);
  }
  r_table_.put(x, w, r, Route::Recursion);
  return r;
}

LaurentPoly HeckeAlgebra::kl_poly(Element x, Element w) {
  if (x == w) return 1;
  if (!group_.bruhat_leq(x, w)) return {};
  if (const auto* e = p_table_.find(x, w)) return e->poly;
  // w = vs > v:
  // P_{x,w} = q^{1-c} P_{xs,v} + q^c P_{x,v} - sum_{z<v, zs<z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z},
  // c = 1 if xs < x, else 0.
  Generator s = pick(group_.descent_mask(w, Side::Right));
  Element v = group_.mult_gen(w, s, Side::Right);
  Element xs = group_.mult_gen(x, s, Side::Right);
  const int c = group_.is_descent(x, s, Side::Right) ? 1 : 0;
  LaurentPoly p = kl_poly(xs, v).shifted(2 * (1 - c));
  p += kl_poly(x, v).shifted(2 * c);
  const int lw = group_.length(w);
  const std::vector<std::pair<Element, int>> below = mu_below(v);
  for (const auto& [z, m] : below) {
    if (!group_.is_descent(z, s, Side::Right)) continue;
    LaurentPoly pxz = kl_poly(x, z);
    if (pxz.is_zero()) continue;
    p.add_scaled(pxz, -m, lw - group_.length(z));
  }
  p_table_.put(x, w, p, Route::Recursion);
  return p;
}

const std::vector<std::pair<Element, int>>& HeckeAlgebra::mu_below(Element w) {
  if (auto it = mu_memo_.find(w.id); it != mu_memo_.end()) return it->second;
  std::vector<std::pair<Element, int>> out;
  const std::vector<Element> below = group_.lower_interval(w);
  const int lw = group_.length(w);
  for (Element z : below) {
    int gap = lw - group_.length(z);
    if (gap % 2 == 0) continue;
    auto m = kl_poly(z, w).coeff_at(gap - 1);
    if (m != 0) out.emplace_back(z, static_cast<int>(m));
  }
  return mu_memo_.emplace(w.id, std::move(out)).first->second;
}

int HeckeAlgebra::mu(Element x, Element w) {
  int gap = group_.length(w) - group_.length(x);
  if (gap <= 0 || gap % 2 == 0) return 0;
  return static_cast<int>(kl_poly(x, w).coeff_at(gap - 1));
}

AlgebraVector HeckeAlgebra::t_inverse_T(Element w) {
  AlgebraVector out(Basis::T);
  const int lw = group_.length(w);
  const std::vector<Element> below = group_.lower_interval(w);
  for (Element x : below) {
    int sign = group_.sign(w) * group_.sign(x);
    out.add(x, r_poly(x, w).shifted(-2 * lw) * sign);
  }
  return out;
}

AlgebraVector HeckeAlgebra::c_prime_T(Element w) {
  AlgebraVector out(Basis::T);
  const int lw = group_.length(w);
  const std::vector<Element> below = group_.lower_interval(w);
  for (Element x : below) out.add(x, kl_poly(x, w).shifted(-lw));
  return out;
}

AlgebraVector HeckeAlgebra::involution(const AlgebraVector& v) {
  if (v.basis() != Basis::T) throw std::logic_error("HeckeAlgebra::involution expects a T-basis vector");
  AlgebraVector out(Basis::T);
  for (const auto& [x, c] : v.terms()) out.add_scaled(t_inverse_T(x), c.bar());
  return out;
}

}  // namespace tlkl
