#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "toroidal/laurent.hpp"

namespace toroidal {

class KnotExpr;

struct Unknot {
  friend bool operator==(const Unknot&, const Unknot&) = default;
};

/// Torus knot T(p, q) with p, q >= 2 coprime. Not validated on construction;
/// normalize() rejects bad parameters.
struct TorusKnot {
  std::int64_t p = 2;
  std::int64_t q = 3;
  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
};

struct KnotSum {
  std::vector<KnotExpr> parts;
  friend bool operator==(const KnotSum&, const KnotSum&);
};

/// A knot known only through externally supplied invariants.
struct TableKnot {
  std::string name;
  std::optional<std::int64_t> genus;
  std::optional<LaurentPoly> delta;
  bool prime = true;
  friend bool operator==(const TableKnot&, const TableKnot&) = default;
};

/**
 * Symbolic knot type: unknot, torus knot, connected sum or table entry.
 *
 * Text grammar (whitespace-insensitive):
 *
 *     expr  := "unknot"
 *            | "torus(" int "," int ")"
 *            | "sum(" expr { ";" expr } ")"
 *            | "table(" name ")"
 *            | "table(" name "," "genus=" (int|"?") "," "delta=" (poly|"?")
 *                     "," "prime=" ("true"|"false") ")"
 *
 * The short table form looks `name` up in builtin_knot_table(). to_string()
 * emits the short form exactly when the entry matches the builtin one, so
 * printing and re-parsing reproduces the value.
 */
class KnotExpr {
 public:
  using Node = std::variant<Unknot, TorusKnot, KnotSum, TableKnot>;

  KnotExpr() : node_(Unknot{}) {}
  KnotExpr(Unknot u) : node_(u) {}              // NOLINT
  KnotExpr(TorusKnot t) : node_(t) {}           // NOLINT
  KnotExpr(KnotSum s) : node_(std::move(s)) {}  // NOLINT
  KnotExpr(TableKnot t) : node_(std::move(t)) {}  // NOLINT

  static KnotExpr unknot() { return Unknot{}; }
  static KnotExpr torus(std::int64_t p, std::int64_t q) {
    return TorusKnot{p, q};
  }
  static KnotExpr sum(std::vector<KnotExpr> parts) {
    return KnotSum{std::move(parts)};
  }
  static KnotExpr parse(std::string_view text);

  const Node& node() const noexcept { return node_; }
  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(node_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(node_);
  }

  std::string to_string() const;

  friend bool operator==(const KnotExpr&, const KnotExpr&) = default;

 private:
  Node node_;
};

/// Knot genus, possibly only bracketed. `upper == nullopt` means unbounded.
struct GenusValue {
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;

  static GenusValue exact(std::int64_t g) { return {g, g}; }
  static GenusValue unknown(std::int64_t lower,
                            std::optional<std::int64_t> upper = std::nullopt) {
    return {lower, upper};
  }

  bool is_exact() const noexcept { return upper && *upper == lower; }
  std::int64_t value() const;  // throws unless exact
  std::string to_string() const;

  friend bool operator==(const GenusValue&, const GenusValue&) = default;
};

/// Named prime knots with known invariants, keyed by Rolfsen name.
const std::vector<TableKnot>& builtin_knot_table();
std::optional<TableKnot> lookup_table_knot(std::string_view name);

/// Flattens sums, drops unknot summands, orders torus parameters p <= q and
/// collapses empty or singleton sums. Throws ValidationError on bad torus
/// parameters or negative table genus.
KnotExpr normalize(const KnotExpr& k);

GenusValue genus_of_knot(const KnotExpr& k);

/// Canonical-form Alexander polynomial. Throws InvariantUnavailable when a
/// table part has no declared polynomial.
LaurentPoly alexander_of_knot(const KnotExpr& k);

/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))
LaurentPoly torus_knot_alexander(std::int64_t p, std::int64_t q);

/// Nontrivial prime summands, sorted by their text form. Throws
/// NotDecomposable for a non-prime table entry.
std::vector<KnotExpr> prime_summands(const KnotExpr& k);

bool torus_knots_equivalent(std::int64_t p, std::int64_t q, std::int64_t p2,
                            std::int64_t q2);

/// Equivalence on the decidable fragment: equal prime-summand multisets.
bool same_prime_decomposition(const KnotExpr& a, const KnotExpr& b);

/// Key identifying a prime summand up to equivalence (torus parameters are
/// ordered, table entries compare by name).
std::string prime_key(const KnotExpr& prime);

}  // namespace toroidal
