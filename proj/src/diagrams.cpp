#include "toroidal/diagrams.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "toroidal/errors.hpp"

namespace toroidal {

namespace {

struct Slot {
  std::size_t crossing;
  int index;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

class PdParser {
 public:
  explicit PdParser(std::string_view text) : text_(text) {}

  std::vector<Crossing> run() {
    expect_word("PD");
    expect('[');
    std::vector<Crossing> out;
    if (!accept(']')) {
      do {
        out.push_back(crossing());
      } while (accept(','));
      expect(']');
    }
    skip_ws();
    if (pos_ < text_.size()) throw ParseError("trailing input after PD code", pos_);
    return out;
  }

 private:
  Crossing crossing() {
    expect_word("X");
    expect('[');
    Crossing c;
    for (int i = 0; i < 4; ++i) {
      if (i > 0 && !accept(',')) {
        throw ParseError("crossing needs 4 labels", pos_);
      }
      c.labels[i] = label();
    }
    expect(']');
    return c;
  }

  std::int64_t label() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (__builtin_mul_overflow(v, 10, &v) ||
          __builtin_add_overflow(v, text_[pos_] - '0', &v)) {
        throw ParseError("label too large", start);
      }
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a positive integer label", pos_);
    if (v == 0) throw ParseError("labels must be positive", start);
    return v;
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) {
      throw ParseError("expected '" + std::string(w) + "'", pos_);
    }
    pos_ += w.size();
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// The over strand enters at slot 3 for positive crossings, slot 1 otherwise.
int over_in_slot(const Crossing& c) { return c.sign > 0 ? 3 : 1; }

}  // namespace

Diagram Diagram::from_crossings(std::vector<Crossing> crossings) {
  Diagram d;
  const std::size_t n = crossings.size();
  if (n == 0) return d;

  std::map<std::int64_t, std::vector<Slot>> occurrences;
  for (std::size_t c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (crossings[c].labels[s] <= 0) {
        throw ValidationError("PD labels must be positive");
      }
      occurrences[crossings[c].labels[s]].push_back({c, s});
    }
  }
  for (const auto& [label, slots] : occurrences) {
    if (slots.size() != 2) {
      throw ValidationError("label " + std::to_string(label) + " occurs " +
                            std::to_string(slots.size()) +
                            " times; every edge label must occur exactly twice");
    }
  }

  // Walk the curve from the incoming under-strand of crossing 0, entering each
  // crossing at some slot and leaving by the opposite one.
  std::vector<int> over_in(n, -1);
  std::set<Slot> visited;
  const Slot start{0, 0};
  Slot cur = start;
  for (;;) {
    visited.insert(cur);
    const Crossing& x = crossings[cur.crossing];
    if (cur.index == 2) {
      throw ValidationError(
          "crossing " + std::to_string(cur.crossing + 1) +
          " is entered through its outgoing under-strand; list the incoming "
          "under-strand first");
    }
    if (cur.index == 1 || cur.index == 3) {
      if (over_in[cur.crossing] != -1) {
        throw ValidationError("over-strand of crossing " +
                              std::to_string(cur.crossing + 1) +
                              " is traversed twice");
      }
      over_in[cur.crossing] = cur.index;
    }
    const Slot exit{cur.crossing, (cur.index + 2) % 4};
    visited.insert(exit);
    const auto& slots = occurrences.at(x.labels[exit.index]);
    const Slot next = slots[0] == exit ? slots[1] : slots[0];
    if (next == start) break;
    if (visited.contains(next)) {
      throw ValidationError("inconsistent strand structure near crossing " +
                            std::to_string(next.crossing + 1));
    }
    cur = next;
  }
  if (visited.size() != 4 * n) {
    throw ValidationError(
        "diagram has more than one component; only knots are supported");
  }
  for (std::size_t c = 0; c < n; ++c) {
    crossings[c].sign = over_in[c] == 3 ? +1 : -1;
  }

  // Wirtinger arcs: edges joined through over-passes.
  std::map<std::int64_t, std::size_t> edge_index;
  for (const auto& [label, slots] : occurrences) {
    edge_index.emplace(label, edge_index.size());
  }
  UnionFind uf(edge_index.size());
  for (const auto& x : crossings) {
    uf.unite(edge_index[x.labels[1]], edge_index[x.labels[3]]);
  }
  std::map<std::size_t, std::size_t> arc_of_root;
  d.slot_arcs_.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      const std::size_t root = uf.find(edge_index[crossings[c].labels[s]]);
      auto [it, inserted] = arc_of_root.try_emplace(root, arc_of_root.size());
      d.slot_arcs_[c][s] = it->second;
    }
  }
  d.arc_count_ = arc_of_root.size();
  if (d.arc_count_ != n) {
    throw InternalInconsistency("knot diagram with " + std::to_string(n) +
                                " crossings produced " +
                                std::to_string(d.arc_count_) + " arcs");
  }
  d.crossings_ = std::move(crossings);
  return d;
}

std::string Diagram::to_string() const {
  std::string out = "PD[";
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    if (c) out += ",";
    out += "X[";
    for (int s = 0; s < 4; ++s) {
      if (s) out += ",";
      out += std::to_string(crossings_[c].labels[s]);
    }
    out += "]";
  }
  return out + "]";
}

Diagram parse_pd(std::string_view text) {
  return Diagram::from_crossings(PdParser(text).run());
}

PolyMatrix alexander_matrix(const Diagram& d) {
  const std::size_t n = d.crossing_count();
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly one_minus_t = LaurentPoly(1) - t;
  const LaurentPoly minus_one(-1);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& arcs = d.slot_arcs(k);
    const std::size_t over = arcs[1];
    const std::size_t under_in = arcs[0];
    const std::size_t under_out = arcs[2];
    // Fox derivative of the Wirtinger relation at t = image of every generator.
    m[k][over] += one_minus_t;
    if (d.crossings()[k].sign > 0) {
      m[k][under_in] += t;
      m[k][under_out] += minus_one;
    } else {
      m[k][under_in] += minus_one;
      m[k][under_out] += t;
    }
  }
  return m;
}

LaurentPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t size = m.size();
  if (size == 0) return LaurentPoly(1);
  LaurentPoly previous(1);
  bool negate = false;
  for (std::size_t k = 0; k < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < size && m[r][k].is_zero()) ++r;
      if (r == size) return LaurentPoly();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
      }
      m[i][k] = LaurentPoly();
    }
    previous = m[k][k];
  }
  return negate ? -m[size - 1][size - 1] : m[size - 1][size - 1];
}

LaurentPoly alexander_minor(const Diagram& d, std::size_t row, std::size_t col) {
  const std::size_t n = d.crossing_count();
  if (n <= 1) return LaurentPoly(1);
  if (row >= n || col >= n) throw std::out_of_range("alexander_minor index");
  const PolyMatrix full = alexander_matrix(d);
  PolyMatrix minor;
  minor.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == row) continue;
    std::vector<LaurentPoly> r;
    r.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != col) r.push_back(full[i][j]);
    }
    minor.push_back(std::move(r));
  }
  return canonical_form(bareiss_determinant(std::move(minor)));
}

LaurentPoly alexander_from_diagram(const Diagram& d) {
  const std::size_t n = d.crossing_count();
  if (n <= 1) return LaurentPoly(1);
  return alexander_minor(d, n - 1, n - 1);
}

std::size_t seifert_circle_count(const Diagram& d) {
  const auto& xs = d.crossings();
  if (xs.empty()) return 1;
  // Oriented smoothing: each incoming edge continues along the other strand's
  // outgoing edge.
  std::map<std::int64_t, std::int64_t> next;
  for (const auto& x : xs) {
    const int in_over = over_in_slot(x);
    const int out_over = (in_over + 2) % 4;
    next[x.labels[0]] = x.labels[out_over];
    next[x.labels[in_over]] = x.labels[2];
  }
  std::set<std::int64_t> seen;
  std::size_t circles = 0;
  for (const auto& [edge, unused] : next) {
    if (seen.contains(edge)) continue;
    ++circles;
    for (std::int64_t e = edge; !seen.contains(e); e = next.at(e)) seen.insert(e);
  }
  return circles;
}

std::int64_t seifert_genus_upper(const Diagram& d) {
  // A validated diagram is a single closed curve, so its projection is
  // connected and Seifert's surface is connected.
  const auto c = static_cast<std::int64_t>(d.crossing_count());
  const auto s = static_cast<std::int64_t>(seifert_circle_count(d));
  const std::int64_t twice = c - s + 1;
  if (twice < 0 || twice % 2 != 0) {
    throw InternalInconsistency("Seifert surface Euler characteristic is odd");
  }
  return twice / 2;
}

GenusBounds genus_bounds(const Diagram& d) {
  const LaurentPoly delta = alexander_from_diagram(d);
  if (delta.is_zero()) {
    throw InternalInconsistency("knot diagram has zero Alexander polynomial");
  }
  GenusBounds b{(breadth(delta) + 1) / 2, seifert_genus_upper(d)};
  if (b.lower > b.upper) {
    throw InternalInconsistency("Alexander lower bound " +
                                std::to_string(b.lower) +
                                " exceeds Seifert upper bound " +
                                std::to_string(b.upper));
  }
  return b;
}

}  // namespace toroidal
