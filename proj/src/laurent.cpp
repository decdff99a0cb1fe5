#include "tlkl/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tlkl {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow in addition");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow in multiplication");
  return r;
}

int checked_exp(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: exponent overflow");
  return r;
}

std::string render_power(int e) {
  if (e == 2) return "q";
  if (e % 2 == 0) {
    int n = e / 2;
    return n > 0 ? "q^" + std::to_string(n) : "q^(" + std::to_string(n) + ")";
  }
  return "q^(" + std::to_string(e) + "/2)";
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly run() {
    LaurentPoly out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term(sign);
      skip_ws();
    }
    return out;
  }

 private:
  LaurentPoly term(int sign) {
    Coeff c = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      have_number = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
      }
    }
    int e = 0;
    if (peek() == 'q') {
      get();
      e = 2;
      if (peek() == '^') {
        get();
        e = exponent();
      }
    } else if (!have_number) {
      fail("expected a coefficient or 'q'");
    }
    return LaurentPoly::monomial(checked_mul(sign, c), e);
  }

  // After '^': "n" or "(n)" or "(n/2)"; returned in v-units.
  int exponent() {
    if (peek() != '(') return 2 * static_cast<int>(number());
    get();
    int sign = 1;
    if (peek() == '-') {
      get();
      sign = -1;
    }
    int n = static_cast<int>(number()) * sign;
    int e = 2 * n;
    if (peek() == '/') {
      get();
      if (number() != 2) fail("only half-integer exponents are allowed");
      e = n;
    }
    if (get() != ')') fail("expected ')'");
    return e;
  }

  Coeff number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    Coeff v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = checked_add(checked_mul(v, 10), get() - '0');
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly::LaurentPoly(Coeff c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(Coeff c, int v_exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(v_exponent, c);
  return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::size_t b = 0;
  while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  if (text.substr(b) == "0") return {};
  return Parser(text).run();
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

LaurentPoly::Coeff LaurentPoly::coeff_at(int v_exponent) const {
  auto it = terms_.find(v_exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), checked_exp(e, k), c);
  return r;
}

bool LaurentPoly::in_span(Span span) const {
  for (auto [e, c] : terms_) {
    switch (span) {
      case Span::NonNegativeQ:
        if (e < 0 || e % 2 != 0) return false;
        break;
      case Span::StrictlyNegativeV:
        if (e >= 0) return false;
        break;
      case Span::NonPositiveV:
        if (e > 0) return false;
        break;
    }
  }
  return true;
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly r;
  for (auto it = terms_.begin(); it != terms_.end() && it->first < 0; ++it) r.terms_.emplace_hint(r.terms_.end(), *it);
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  LaurentPoly quotient;
  LaurentPoly rest = *this;
  const int d_top = d.max_exponent();
  const Coeff d_lead = d.terms_.rbegin()->second;
  const int width = d_top - d.min_exponent();
  while (!rest.is_zero()) {
    if (rest.max_exponent() - rest.min_exponent() < width) return std::nullopt;
    const auto [e, c] = *rest.terms_.rbegin();
    if (c % d_lead != 0) return std::nullopt;
    LaurentPoly step = monomial(c / d_lead, e - d_top);
    rest -= step * d;
    quotient += step;
  }
  return quotient;
}

void LaurentPoly::add_term(int v_exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(v_exponent, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  for (auto [e, c] : r.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
  for (auto [e, c] : r.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly& LaurentPoly::add_scaled(const LaurentPoly& r, Coeff c, int k) {
  if (c == 0) return *this;
  for (auto [e, d] : r.terms_) add_term(checked_exp(e, k), checked_mul(c, d));
  return *this;
}

LaurentPoly& LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) add_term(checked_exp(ea, eb), checked_mul(ca, cb));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) {
  *this = *this * r;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r) {
  LaurentPoly out;
  out.add_product(p, r);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, checked_mul(c, -1));
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms_) {
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << render_power(e);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace tlkl
