#pragma once

// Exact Laurent polynomials in v = q^{1/2} with integer coefficients.
//
// Exponents are stored in v, so q^n has v-exponent 2n and every element of
// Z[q^{1/2}, q^{-1/2}] is represented without rationals. Coefficients are
// 64-bit; any overflow during arithmetic throws std::overflow_error.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace tlkl {

/// Exponent constraints accepted by LaurentPoly::in_span.
enum class Span {
  NonNegativeQ,       // only even, nonnegative v-exponents: an element of Z[q]
  StrictlyNegativeV,  // every v-exponent <= -1: an element of v^{-1} Z[v^{-1}]
  NonPositiveV,       // every v-exponent <= 0
};

class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff c);  // NOLINT: integers embed as constants

  static LaurentPoly monomial(Coeff c, int v_exponent);
  /// q^n, i.e. v^{2n}.
  static LaurentPoly q_power(int n) { return monomial(1, 2 * n); }
  static LaurentPoly v_power(int k) { return monomial(1, k); }
  static LaurentPoly q() { return q_power(1); }

  /// Parses the grammar produced by to_string(), e.g. "-q + q^2",
  /// "q^(-1/2)", "3q^(3/2) - 2". Throws std::invalid_argument.
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_unit() const;  // +-v^k
  const Terms& terms() const { return terms_; }
  Coeff coeff_at(int v_exponent) const;
  /// Precondition: !is_zero().
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  /// The involution v -> v^{-1} (q -> q^{-1}).
  LaurentPoly bar() const;
  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  bool in_span(Span span) const;
  /// Part with v-exponents strictly below zero.
  LaurentPoly negative_part() const;
  /// The quotient when d divides this exactly in Z[v, v^{-1}], else nullopt.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  LaurentPoly& operator*=(const LaurentPoly& r);
  /// this += c * v^k * r, without materialising the product.
  LaurentPoly& add_scaled(const LaurentPoly& r, Coeff c, int k);
  LaurentPoly& add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& r) { return p += r; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& r) { return p -= r; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(int v_exponent, Coeff c);

  Terms terms_;  // no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Named forms of the ring operations.
inline LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
inline LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }
inline LaurentPoly lp_bar(const LaurentPoly& p) { return p.bar(); }
inline LaurentPoly::Coeff lp_coeff_at(const LaurentPoly& p, int e) { return p.coeff_at(e); }
inline bool lp_in_span(const LaurentPoly& p, Span s) { return p.in_span(s); }

}  // namespace tlkl
