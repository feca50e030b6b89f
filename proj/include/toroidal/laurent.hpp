#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace toroidal {

/**
 * Integer Laurent polynomial in one variable t, i.e. an element of Z[t, 1/t].
 *
 * Stored sparsely as exponent -> coefficient with no zero coefficients, so the
 * zero polynomial is the empty map. Coefficient arithmetic is checked and
 * throws ArithmeticOverflow instead of wrapping.
 *
 * Text form (used by parse/to_string and every golden file):
 *
 *     poly  := "0" | term { ("+" | "-") term }
 *     term  := [ "-" ] ( int [ ["*"] mono ] | mono )
 *     mono  := "t" [ "^" [ "-" ] int ]
 *
 * Whitespace is ignored. Printing lists terms by ascending exponent, writes
 * `c*t^k` (`t^-k` for negative k), omits unit coefficients on non-constant
 * terms and separates terms with " + " / " - ", e.g. `t^-1 - 2 + 3*t^2`.
 */
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Coeff = std::int64_t;
  using Terms = std::map<Exponent, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<std::pair<const Exponent, Coeff>> terms);
  explicit LaurentPoly(Terms terms);

  /// c * t^e
  static LaurentPoly monomial(Coeff c, Exponent e);
  /// Dense coefficients c0 + c1 t + c2 t^2 + ... starting at `low`.
  static LaurentPoly from_dense(std::initializer_list<Coeff> coeffs,
                                Exponent low = 0);
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coeff(Exponent e) const;
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  /// Whether every exponent is >= 0.
  bool is_polynomial() const noexcept {
    return terms_.empty() || terms_.begin()->first >= 0;
  }

  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) {
    return p += q;
  }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) {
    return p -= q;
  }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

 private:
  Terms terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// t -> t^w. Throws std::invalid_argument for w == 0.
LaurentPoly subst_power(const LaurentPoly& p, std::int64_t w);

/// t -> 1/t.
LaurentPoly mirror(const LaurentPoly& p);

/// Multiply by t^n.
LaurentPoly shift(const LaurentPoly& p, LaurentPoly::Exponent n);

/// The unit multiple +-t^n * p whose lowest exponent is 0 and whose lowest
/// coefficient is positive.
LaurentPoly canonical_form(const LaurentPoly& p);

bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q);

/// max exponent - min exponent. Throws std::invalid_argument on zero.
std::int64_t breadth(const LaurentPoly& p);

LaurentPoly::Coeff evaluate_at_one(const LaurentPoly& p);

/// Exact quotient p / q in Z[t, 1/t]. Throws std::domain_error when q is zero
/// or does not divide p with integer coefficients.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q);

namespace checked {
LaurentPoly::Coeff add(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
LaurentPoly::Coeff mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
}  // namespace checked

}  // namespace toroidal
