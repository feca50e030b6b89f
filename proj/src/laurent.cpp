#include "toroidal/laurent.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "toroidal/errors.hpp"

namespace toroidal {

namespace checked {

LaurentPoly::Coeff add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ArithmeticOverflow("Laurent coefficient overflow in addition");
  }
  return r;
}

LaurentPoly::Coeff mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ArithmeticOverflow("Laurent coefficient overflow in multiplication");
  }
  return r;
}

}  // namespace checked

namespace {

LaurentPoly::Exponent checked_exp_mul(LaurentPoly::Exponent a,
                                      LaurentPoly::Exponent b) {
  LaurentPoly::Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ArithmeticOverflow("Laurent exponent overflow");
  }
  return r;
}

LaurentPoly::Exponent checked_exp_add(LaurentPoly::Exponent a,
                                      LaurentPoly::Exponent b) {
  LaurentPoly::Exponent r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ArithmeticOverflow("Laurent exponent overflow");
  }
  return r;
}

void accumulate(LaurentPoly::Terms& terms, LaurentPoly::Exponent e,
                LaurentPoly::Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly run() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    LaurentPoly::Terms terms;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    for (;;) {
      auto [e, c] = term();
      accumulate(terms, e, negative ? checked::mul(c, -1) : c);
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') {
        throw ParseError(std::string("expected '+' or '-', found '") + op + "'",
                         pos_);
      }
      negative = op == '-';
      ++pos_;
    }
    return LaurentPoly(std::move(terms));
  }

 private:
  std::pair<LaurentPoly::Exponent, LaurentPoly::Coeff> term() {
    skip_ws();
    if (at_end()) throw ParseError("expected a term", pos_);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      LaurentPoly::Coeff c = integer();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 't') throw ParseError("expected 't'", pos_);
      }
      if (!at_end() && peek() == 't') return {monomial_exponent(), c};
      return {0, c};
    }
    if (peek() == 't') return {monomial_exponent(), 1};
    throw ParseError(std::string("unexpected character '") + peek() + "'",
                     pos_);
  }

  LaurentPoly::Exponent monomial_exponent() {
    ++pos_;  // 't'
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    LaurentPoly::Exponent e = integer();
    return negative ? -e : e;
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (__builtin_mul_overflow(v, 10, &v) ||
          __builtin_add_overflow(v, peek() - '0', &v)) {
        throw ParseError("integer too large", start);
      }
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(
    std::initializer_list<std::pair<const Exponent, Coeff>> terms) {
  for (const auto& [e, c] : terms) accumulate(terms_, e, c);
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (const auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, c);
  }
}

LaurentPoly LaurentPoly::monomial(Coeff c, Exponent e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_dense(std::initializer_list<Coeff> coeffs,
                                    Exponent low) {
  LaurentPoly p;
  Exponent e = low;
  for (Coeff c : coeffs) {
    if (c != 0) p.terms_.emplace(e, c);
    ++e;
  }
  return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  return PolyParser(text).run();
}

LaurentPoly::Coeff LaurentPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no degree");
  return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::invalid_argument("zero polynomial has no degree");
  return terms_.rbegin()->first;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    // |c| as unsigned so INT64_MIN prints correctly.
    std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c)
                              : static_cast<std::uint64_t>(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, checked::mul(c, -1));
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  for (const auto& [e, c] : q.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  for (const auto& [e, c] : q.terms_) {
    accumulate(terms_, e, checked::mul(c, -1));
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
  *this = *this * q;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly::Terms out;
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      accumulate(out, checked_exp_add(ep, eq), checked::mul(cp, cq));
    }
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly subst_power(const LaurentPoly& p, std::int64_t w) {
  if (w == 0) {
    throw std::invalid_argument("subst_power: exponent multiplier must be nonzero");
  }
  LaurentPoly::Terms out;
  for (const auto& [e, c] : p.terms()) out.emplace(checked_exp_mul(e, w), c);
  return LaurentPoly(std::move(out));
}

LaurentPoly mirror(const LaurentPoly& p) { return subst_power(p, -1); }

LaurentPoly shift(const LaurentPoly& p, LaurentPoly::Exponent n) {
  LaurentPoly::Terms out;
  for (const auto& [e, c] : p.terms()) out.emplace(checked_exp_add(e, n), c);
  return LaurentPoly(std::move(out));
}

LaurentPoly canonical_form(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  auto low = p.terms().begin();
  LaurentPoly r = shift(p, -low->first);
  return low->second < 0 ? -r : r;
}

bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) {
  return canonical_form(p) == canonical_form(q);
}

std::int64_t breadth(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("breadth of the zero polynomial");
  return p.max_exponent() - p.min_exponent();
}

LaurentPoly::Coeff evaluate_at_one(const LaurentPoly& p) {
  LaurentPoly::Coeff sum = 0;
  for (const auto& [e, c] : p.terms()) sum = checked::add(sum, c);
  return sum;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return p;
  const LaurentPoly::Exponent q_low = q.min_exponent();
  const LaurentPoly divisor = shift(q, -q_low);
  const LaurentPoly::Exponent d_deg = divisor.max_exponent();
  const LaurentPoly::Coeff d_lead = divisor.coeff(d_deg);
  const LaurentPoly::Exponent d_low = 0;

  LaurentPoly rem = p;
  LaurentPoly::Terms quot;
  while (!rem.is_zero()) {
    // Cancel the top term; the remainder's span must stay >= the divisor's.
    const LaurentPoly::Exponent r_deg = rem.max_exponent();
    const LaurentPoly::Coeff r_lead = rem.coeff(r_deg);
    if (r_deg - rem.min_exponent() < d_deg - d_low || r_lead % d_lead != 0) {
      throw std::domain_error("polynomial division is not exact");
    }
    const LaurentPoly::Exponent e = r_deg - d_deg;
    const LaurentPoly::Coeff c = r_lead / d_lead;
    quot.emplace(e, c);
    rem -= LaurentPoly::monomial(c, e) * divisor;
  }
  return shift(LaurentPoly(std::move(quot)), -q_low);
}

}  // namespace toroidal
