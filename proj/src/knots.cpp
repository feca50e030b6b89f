#include "toroidal/knots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "toroidal/errors.hpp"

namespace toroidal {

bool operator==(const KnotSum& a, const KnotSum& b) {
  return a.parts == b.parts;
}

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

class KnotParser {
 public:
  explicit KnotParser(std::string_view text) : text_(text) {}

  KnotExpr run() {
    KnotExpr k = expr();
    skip_ws();
    if (!at_end()) throw ParseError("trailing input after knot expression", pos_);
    return k;
  }

 private:
  KnotExpr expr() {
    skip_ws();
    const std::size_t start = pos_;
    std::string word = identifier();
    if (word == "unknot") return Unknot{};
    if (word == "torus") {
      expect('(');
      std::int64_t p = integer();
      expect(',');
      std::int64_t q = integer();
      expect(')');
      return TorusKnot{p, q};
    }
    if (word == "sum") {
      expect('(');
      KnotSum s;
      s.parts.push_back(expr());
      while (accept(';')) s.parts.push_back(expr());
      expect(')');
      return s;
    }
    if (word == "table") return table();
    throw ParseError("unknown knot constructor '" + word + "'", start);
  }

  KnotExpr table() {
    expect('(');
    skip_ws();
    const std::size_t name_pos = pos_;
    std::string name = identifier();
    if (accept(')')) {
      auto entry = lookup_table_knot(name);
      if (!entry) {
        throw ParseError("unknown table knot '" + name +
                             "' (give genus=, delta=, prime= explicitly)",
                         name_pos);
      }
      return *entry;
    }
    TableKnot t;
    t.name = name;
    expect(',');
    keyword("genus");
    expect('=');
    if (!accept('?')) t.genus = integer();
    expect(',');
    keyword("delta");
    expect('=');
    if (!accept('?')) {
      skip_ws();
      const std::size_t poly_start = pos_;
      while (!at_end() && peek() != ',' && peek() != ')') ++pos_;
      try {
        t.delta = LaurentPoly::parse(text_.substr(poly_start, pos_ - poly_start));
      } catch (const ParseError& e) {
        throw ParseError("bad delta polynomial", poly_start + e.position());
      }
    }
    expect(',');
    keyword("prime");
    expect('=');
    std::string flag = identifier();
    if (flag == "true") {
      t.prime = true;
    } else if (flag == "false") {
      t.prime = false;
    } else {
      throw ParseError("expected true or false", pos_ - flag.size());
    }
    expect(')');
    return t;
  }

  void keyword(std::string_view kw) {
    skip_ws();
    const std::size_t at = pos_;
    if (identifier() != kw) {
      throw ParseError("expected '" + std::string(kw) + "'", at);
    }
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_' || peek() == '.' || peek() == '-')) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a name", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = accept('-');
    std::int64_t v = 0;
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (__builtin_mul_overflow(v, 10, &v) ||
          __builtin_add_overflow(v, peek() - '0', &v)) {
        throw ParseError("integer too large", start);
      }
      ++pos_;
    }
    if (pos_ == digits) throw ParseError("expected an integer", pos_);
    return negative ? -v : v;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
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

void flatten_into(const KnotExpr& k, std::vector<KnotExpr>& out) {
  std::visit(Overloaded{
                 [](const Unknot&) {},
                 [&](const TorusKnot& t) {
                   if (t.p < 2 || t.q < 2 || std::gcd(t.p, t.q) != 1) {
                     throw ValidationError(
                         "torus(" + std::to_string(t.p) + "," +
                         std::to_string(t.q) +
                         ") needs coprime parameters both >= 2");
                   }
                   out.push_back(TorusKnot{std::min(t.p, t.q), std::max(t.p, t.q)});
                 },
                 [&](const KnotSum& s) {
                   for (const auto& part : s.parts) flatten_into(part, out);
                 },
                 [&](const TableKnot& t) {
                   if (t.genus && *t.genus < 0) {
                     throw ValidationError("table knot '" + t.name +
                                           "' has negative genus");
                   }
                   out.push_back(t);
                 },
             },
             k.node());
}

std::int64_t genus_lower_from_delta(const std::optional<LaurentPoly>& delta) {
  if (!delta || delta->is_zero()) return 0;
  return (breadth(*delta) + 1) / 2;
}

}  // namespace

KnotExpr KnotExpr::parse(std::string_view text) { return KnotParser(text).run(); }

std::string KnotExpr::to_string() const {
  return std::visit(
      Overloaded{
          [](const Unknot&) -> std::string { return "unknot"; },
          [](const TorusKnot& t) -> std::string {
            return "torus(" + std::to_string(t.p) + "," + std::to_string(t.q) +
                   ")";
          },
          [](const KnotSum& s) -> std::string {
            std::string out = "sum(";
            for (std::size_t i = 0; i < s.parts.size(); ++i) {
              if (i) out += "; ";
              out += s.parts[i].to_string();
            }
            return out + ")";
          },
          [](const TableKnot& t) -> std::string {
            auto builtin = lookup_table_knot(t.name);
            if (builtin && *builtin == t) return "table(" + t.name + ")";
            return "table(" + t.name +
                   ", genus=" + (t.genus ? std::to_string(*t.genus) : "?") +
                   ", delta=" + (t.delta ? t.delta->to_string() : "?") +
                   ", prime=" + (t.prime ? "true" : "false") + ")";
          },
      },
      node_);
}

std::int64_t GenusValue::value() const {
  if (!is_exact()) throw InvariantUnavailable("genus is not known exactly");
  return lower;
}

std::string GenusValue::to_string() const {
  if (is_exact()) return std::to_string(lower);
  return "[" + std::to_string(lower) + ", " +
         (upper ? std::to_string(*upper) : std::string("inf")) + "]";
}

const std::vector<TableKnot>& builtin_knot_table() {
  static const std::vector<TableKnot> table = {
      {"4_1", 1, LaurentPoly::from_dense({1, -3, 1}), true},
      {"5_2", 1, LaurentPoly::from_dense({2, -3, 2}), true},
      {"6_1", 1, LaurentPoly::from_dense({2, -5, 2}), true},
      {"6_2", 2, LaurentPoly::from_dense({1, -3, 3, -3, 1}), true},
      {"6_3", 2, LaurentPoly::from_dense({1, -3, 5, -3, 1}), true},
  };
  return table;
}

std::optional<TableKnot> lookup_table_knot(std::string_view name) {
  for (const auto& entry : builtin_knot_table()) {
    if (entry.name == name) return entry;
  }
  return std::nullopt;
}

KnotExpr normalize(const KnotExpr& k) {
  std::vector<KnotExpr> parts;
  flatten_into(k, parts);
  if (parts.empty()) return Unknot{};
  if (parts.size() == 1) return parts.front();
  return KnotSum{std::move(parts)};
}

GenusValue genus_of_knot(const KnotExpr& k) {
  return std::visit(
      Overloaded{
          [](const Unknot&) { return GenusValue::exact(0); },
          [](const TorusKnot& t) {
            return GenusValue::exact((t.p - 1) * (t.q - 1) / 2);
          },
          [](const KnotSum& s) {
            GenusValue total = GenusValue::exact(0);
            for (const auto& part : s.parts) {
              GenusValue g = genus_of_knot(part);
              total.lower += g.lower;
              if (total.upper && g.upper) {
                *total.upper += *g.upper;
              } else {
                total.upper.reset();
              }
            }
            return total;
          },
          [](const TableKnot& t) {
            if (t.genus) return GenusValue::exact(*t.genus);
            return GenusValue::unknown(genus_lower_from_delta(t.delta));
          },
      },
      k.node());
}

LaurentPoly torus_knot_alexander(std::int64_t p, std::int64_t q) {
  const LaurentPoly one(1);
  const LaurentPoly num =
      (LaurentPoly::monomial(1, p * q) - one) * (LaurentPoly::monomial(1, 1) - one);
  const LaurentPoly den =
      (LaurentPoly::monomial(1, p) - one) * (LaurentPoly::monomial(1, q) - one);
  return canonical_form(exact_divide(num, den));
}

LaurentPoly alexander_of_knot(const KnotExpr& k) {
  return std::visit(
      Overloaded{
          [](const Unknot&) { return LaurentPoly(1); },
          [](const TorusKnot& t) { return torus_knot_alexander(t.p, t.q); },
          [](const KnotSum& s) {
            LaurentPoly product(1);
            for (const auto& part : s.parts) product *= alexander_of_knot(part);
            return canonical_form(product);
          },
          [](const TableKnot& t) {
            if (!t.delta) {
              throw InvariantUnavailable("Alexander polynomial of table knot '" +
                                         t.name + "' is unavailable");
            }
            return canonical_form(*t.delta);
          },
      },
      k.node());
}

std::string prime_key(const KnotExpr& prime) {
  if (prime.is<TorusKnot>()) {
    const auto& t = prime.as<TorusKnot>();
    return "torus(" + std::to_string(std::min(t.p, t.q)) + "," +
           std::to_string(std::max(t.p, t.q)) + ")";
  }
  if (prime.is<TableKnot>()) return "table(" + prime.as<TableKnot>().name + ")";
  return prime.to_string();
}

std::vector<KnotExpr> prime_summands(const KnotExpr& k) {
  const KnotExpr n = normalize(k);
  std::vector<KnotExpr> out;
  auto take = [&out](const KnotExpr& part) {
    if (part.is<TableKnot>() && !part.as<TableKnot>().prime) {
      throw NotDecomposable("table knot '" + part.as<TableKnot>().name +
                            "' is not prime and has no decomposition");
    }
    out.push_back(part);
  };
  if (n.is<KnotSum>()) {
    for (const auto& part : n.as<KnotSum>().parts) take(part);
  } else if (!n.is<Unknot>()) {
    take(n);
  }
  std::stable_sort(out.begin(), out.end(), [](const KnotExpr& a, const KnotExpr& b) {
    return prime_key(a) < prime_key(b);
  });
  return out;
}

bool torus_knots_equivalent(std::int64_t p, std::int64_t q, std::int64_t p2,
                            std::int64_t q2) {
  return (p == p2 && q == q2) || (p == q2 && q == p2);
}

bool same_prime_decomposition(const KnotExpr& a, const KnotExpr& b) {
  auto keys = [](const KnotExpr& k) {
    std::vector<std::string> out;
    for (const auto& s : prime_summands(k)) out.push_back(prime_key(s));
    return out;
  };
  return keys(a) == keys(b);
}

}  // namespace toroidal
