#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "toroidal/laurent.hpp"

namespace toroidal {

/**
 * One crossing of a PD code.
 *
 * `labels` are the four edge labels read counterclockwise starting at the
 * incoming under-strand:
 *
 *              labels[2]
 *                  ^
 *                  |
 *   labels[3] -----|----> labels[1]     (over strand, either direction)
 *                  |
 *              labels[0]
 *
 * The under strand runs labels[0] -> labels[2]. `sign` is +1 when the over
 * strand runs labels[3] -> labels[1] and -1 when it runs labels[1] -> labels[3].
 */
struct Crossing {
  std::array<std::int64_t, 4> labels{};
  int sign = 0;
};

/// A validated single-component knot diagram.
class Diagram {
 public:
  /// Validates and orients `crossings` (their `sign` fields are ignored and
  /// recomputed). Throws ValidationError for inconsistent label usage and for
  /// multi-component links.
  static Diagram from_crossings(std::vector<Crossing> crossings);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }

  /// Number of Wirtinger arcs (maximal over-passing strands).
  std::size_t arc_count() const noexcept { return arc_count_; }

  /// Wirtinger arc index of each slot of crossing `c`.
  const std::array<std::size_t, 4>& slot_arcs(std::size_t c) const {
    return slot_arcs_[c];
  }

  std::string to_string() const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::array<std::size_t, 4>> slot_arcs_;
  std::size_t arc_count_ = 0;
};

/// Parses `PD[X[a,b,c,d], ...]` with positive integer labels.
/// Whitespace-insensitive. Throws ParseError or ValidationError.
Diagram parse_pd(std::string_view text);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// n x n Alexander matrix: row = crossing, column = Wirtinger arc.
PolyMatrix alexander_matrix(const Diagram& d);

/// Determinant by fraction-free (Bareiss) elimination over Z[t]. Entries must
/// be ordinary polynomials (no negative exponents).
LaurentPoly bareiss_determinant(PolyMatrix m);

/// Canonical determinant of the Alexander matrix with `row` and `col` deleted.
LaurentPoly alexander_minor(const Diagram& d, std::size_t row, std::size_t col);

/// Canonical Alexander polynomial (last row and column deleted).
LaurentPoly alexander_from_diagram(const Diagram& d);

/// Number of circles produced by Seifert's oriented smoothing.
std::size_t seifert_circle_count(const Diagram& d);

/// Genus of the Seifert surface built from this diagram.
std::int64_t seifert_genus_upper(const Diagram& d);

struct GenusBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  friend bool operator==(const GenusBounds&, const GenusBounds&) = default;
};

/// lower = ceil(breadth(Delta) / 2), upper = Seifert genus. Throws
/// InternalInconsistency if lower > upper.
GenusBounds genus_bounds(const Diagram& d);

}  // namespace toroidal
