#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "support/oracles.hpp"
#include "toroidal/diagrams.hpp"
#include "toroidal/errors.hpp"

using namespace toroidal;

namespace {

Diagram load(const std::string& name) {
  std::ifstream in(std::string(TOROIDAL_DATA_DIR) + "/pd/" + name + ".pd");
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pd(buf.str());
}

struct CorpusEntry {
  const char* file;
  oracle::Dense delta;
  std::int64_t genus;
};

std::vector<CorpusEntry> corpus() {
  const auto trefoil = oracle::torus_alexander(2, 3);
  return {
      {"trefoil", trefoil, oracle::torus_genus(2, 3)},
      {"figure_eight", oracle::dense(0, {1, -3, 1}), 1},
      {"torus_2_5", oracle::torus_alexander(2, 5), oracle::torus_genus(2, 5)},
      {"torus_2_7", oracle::torus_alexander(2, 7), oracle::torus_genus(2, 7)},
      {"torus_3_4", oracle::torus_alexander(3, 4), oracle::torus_genus(3, 4)},
      {"granny", oracle::mul(trefoil, trefoil), 2},
  };
}

oracle::Dense cofactor_minor(const PolyMatrix& m, std::size_t row, std::size_t col) {
  std::vector<std::vector<oracle::Dense>> sub;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<oracle::Dense> r;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != col) r.push_back(oracle::from_lib(m[i][j]));
    }
    sub.push_back(std::move(r));
  }
  return oracle::cofactor_det(sub);
}

}  // namespace

TEST_CASE("PD parsing") {
  const Diagram trefoil = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  CHECK(trefoil.crossing_count() == 3);
  CHECK(trefoil.arc_count() == 3);
  CHECK(trefoil.to_string() == "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  CHECK(parse_pd("PD[]").crossing_count() == 0);
  CHECK(parse_pd("  PD[ X[1, 4,2,5] ,X[3,6,4,1],X[5,2,6,3] ] ").crossing_count() == 3);

  CHECK_THROWS_AS(parse_pd("PD[X[1,2,3]]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[X[0,1,1,0]]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,7]]"), ValidationError);
  // Hopf link: two components.
  CHECK_THROWS_AS(parse_pd("PD[X[4,1,3,2],X[2,3,1,4]]"), ValidationError);
  try {
    parse_pd("PD[X[1,2,3]]");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("4 labels") != std::string::npos);
  }
}

TEST_CASE("crossing signs of the torus corpus are all equal") {
  for (const char* name : {"trefoil", "torus_2_5", "torus_2_7", "torus_3_4", "granny"}) {
    const Diagram d = load(name);
    const int first = d.crossings().front().sign;
    CHECK(std::all_of(d.crossings().begin(), d.crossings().end(),
                      [&](const Crossing& c) { return c.sign == first; }));
  }
  const Diagram fig8 = load("figure_eight");
  int total = 0;
  for (const auto& c : fig8.crossings()) total += c.sign;
  CHECK(total == 0);
}

TEST_CASE("Alexander polynomial of the corpus matches closed forms") {
  for (const auto& e : corpus()) {
    CAPTURE(e.file);
    const Diagram d = load(e.file);
    const LaurentPoly delta = alexander_from_diagram(d);
    CHECK(oracle::same_up_to_unit(oracle::from_lib(delta), e.delta));
    CHECK(std::abs(evaluate_at_one(delta)) == 1);
    CHECK(equal_up_to_unit(delta, mirror(delta)));
  }
  CHECK(alexander_from_diagram(parse_pd("PD[]")) == LaurentPoly(1));
}

TEST_CASE("every first minor agrees, and Bareiss matches cofactor expansion") {
  for (const auto& e : corpus()) {
    CAPTURE(e.file);
    const Diagram d = load(e.file);
    const PolyMatrix m = alexander_matrix(d);
    const std::size_t n = d.crossing_count();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const LaurentPoly minor = alexander_minor(d, r, c);
        CHECK(oracle::same_up_to_unit(oracle::from_lib(minor), e.delta));
      }
    }
    CHECK(oracle::same_up_to_unit(oracle::from_lib(alexander_minor(d, 0, 0)),
                                  cofactor_minor(m, 0, 0)));
    // The full matrix is singular: every row sums to zero.
    CHECK(bareiss_determinant(m).is_zero());
  }
}

TEST_CASE("invariants ignore labelling and crossing order") {
  std::mt19937_64 rng(3);
  for (const auto& e : corpus()) {
    CAPTURE(e.file);
    const Diagram d = load(e.file);
    std::vector<Crossing> xs = d.crossings();
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::int64_t> perm(2 * xs.size());
      std::iota(perm.begin(), perm.end(), std::int64_t{101});
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Crossing> relabelled = xs;
      for (auto& c : relabelled) {
        for (auto& l : c.labels) l = perm[static_cast<std::size_t>(l - 1)];
      }
      std::shuffle(relabelled.begin(), relabelled.end(), rng);
      const Diagram moved = Diagram::from_crossings(relabelled);
      CHECK(oracle::same_up_to_unit(oracle::from_lib(alexander_from_diagram(moved)), e.delta));
      CHECK(seifert_circle_count(moved) == seifert_circle_count(d));
    }
  }
}

TEST_CASE("Seifert circles and genus bounds") {
  CHECK(seifert_circle_count(load("trefoil")) == 2);
  CHECK(seifert_circle_count(load("figure_eight")) == 3);
  CHECK(seifert_genus_upper(parse_pd("PD[]")) == 0);
  for (const auto& e : corpus()) {
    CAPTURE(e.file);
    const GenusBounds b = genus_bounds(load(e.file));
    CHECK(b.lower == e.genus);
    CHECK(b.upper == e.genus);
  }
  const GenusBounds u = genus_bounds(parse_pd("PD[]"));
  CHECK(u.lower == 0);
  CHECK(u.upper == 0);
}
