#pragma once

// Independent reference implementations used to check the library. None of
// these call into LaurentPoly arithmetic or the Bareiss code.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "toroidal/diagrams.hpp"
#include "toroidal/laurent.hpp"

namespace oracle {

/// Dense Laurent polynomial: coeffs[i] is the coefficient of t^(low + i).
struct Dense {
  std::int64_t low = 0;
  std::vector<std::int64_t> coeffs;

  void trim() {
    std::size_t a = 0;
    while (a < coeffs.size() && coeffs[a] == 0) ++a;
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(a));
    low += static_cast<std::int64_t>(a);
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) low = 0;
  }
  bool zero() const { return coeffs.empty(); }
};

inline Dense dense(std::int64_t low, std::vector<std::int64_t> c) {
  Dense d{low, std::move(c)};
  d.trim();
  return d;
}

inline Dense from_lib(const toroidal::LaurentPoly& p) {
  if (p.is_zero()) return {};
  Dense d;
  d.low = p.min_exponent();
  d.coeffs.assign(static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1), 0);
  for (const auto& [e, c] : p.terms()) d.coeffs[static_cast<std::size_t>(e - d.low)] = c;
  return d;
}

inline toroidal::LaurentPoly to_lib(const Dense& d) {
  toroidal::LaurentPoly::Terms terms;
  for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
    if (d.coeffs[i] != 0) terms[d.low + static_cast<std::int64_t>(i)] = d.coeffs[i];
  }
  return toroidal::LaurentPoly(terms);
}

inline Dense add(const Dense& a, const Dense& b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  const std::int64_t low = std::min(a.low, b.low);
  const std::int64_t high = std::max(a.low + static_cast<std::int64_t>(a.coeffs.size()),
                                     b.low + static_cast<std::int64_t>(b.coeffs.size()));
  Dense r{low, std::vector<std::int64_t>(static_cast<std::size_t>(high - low), 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[a.low - low + i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[b.low - low + i] += b.coeffs[i];
  r.trim();
  return r;
}

inline Dense neg(Dense a) {
  for (auto& c : a.coeffs) c = -c;
  return a;
}

inline Dense mul(const Dense& a, const Dense& b) {
  if (a.zero() || b.zero()) return {};
  Dense r{a.low + b.low, std::vector<std::int64_t>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  r.trim();
  return r;
}

/// Long division of polynomials (low == 0) by a monic-up-to-sign divisor.
inline Dense divide_exact(Dense num, const Dense& den) {
  if (num.low != 0 || den.low != 0 || den.zero()) throw std::logic_error("oracle division");
  const std::int64_t lead = den.coeffs.back();
  if (num.coeffs.size() < den.coeffs.size()) throw std::logic_error("oracle division");
  std::vector<std::int64_t> q(num.coeffs.size() - den.coeffs.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t top = num.coeffs[k + den.coeffs.size() - 1];
    if (top % lead != 0) throw std::logic_error("oracle division not exact");
    q[k] = top / lead;
    for (std::size_t j = 0; j < den.coeffs.size(); ++j) num.coeffs[k + j] -= q[k] * den.coeffs[j];
  }
  for (auto c : num.coeffs) {
    if (c != 0) throw std::logic_error("oracle division has remainder");
  }
  return dense(0, q);
}

/// t^n - 1
inline Dense t_pow_minus_one(std::int64_t n) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  return dense(0, c);
}

/// Alexander polynomial of T(p,q) from (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
inline Dense torus_alexander(std::int64_t p, std::int64_t q) {
  return divide_exact(mul(t_pow_minus_one(p * q), t_pow_minus_one(1)),
                      mul(t_pow_minus_one(p), t_pow_minus_one(q)));
}

inline std::int64_t torus_genus(std::int64_t p, std::int64_t q) { return (p - 1) * (q - 1) / 2; }

/// Cofactor expansion along the first row.
inline Dense cofactor_det(const std::vector<std::vector<Dense>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return dense(0, {1});
  if (n == 1) return m[0][0];
  Dense total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].zero()) continue;
    std::vector<std::vector<Dense>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Dense> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      sub.push_back(std::move(row));
    }
    Dense term = mul(m[0][j], cofactor_det(sub));
    total = add(total, j % 2 == 0 ? term : neg(term));
  }
  return total;
}

/// Normalizes to lowest exponent 0 and positive lowest coefficient.
inline Dense unit_normal(Dense d) {
  d.trim();
  if (d.zero()) return d;
  d.low = 0;
  if (d.coeffs.front() < 0) d = neg(d);
  return d;
}

inline bool same_up_to_unit(const Dense& a, const Dense& b) {
  const Dense x = unit_normal(a);
  const Dense y = unit_normal(b);
  return x.coeffs == y.coeffs;
}

/// Prime -> multiplicity by trial division.
inline std::map<std::int64_t, std::int64_t> factor(std::int64_t n) {
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t d = 2; n > 1; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  return out;
}

}  // namespace oracle
