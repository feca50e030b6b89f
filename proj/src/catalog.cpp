#include "toroidal/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <system_error>

#include "toroidal/tower_io.hpp"

namespace toroidal {

namespace {

const KnotExpr kTrefoil = KnotExpr::torus(2, 3);

Tower make(std::string name, KnotExpr initial, std::vector<Stage> prefix,
           std::vector<Stage> cycle) {
  Tower t;
  t.name = std::move(name);
  t.initial = std::move(initial);
  t.prefix = std::move(prefix);
  t.cycle = std::move(cycle);
  return t;
}

std::vector<std::filesystem::path> tower_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Tower> builtin_catalog() {
  const LaurentPoly one(1);
  return {
      // Each torus sits in the previous one as a Whitehead double: winding 0,
      // unknotted pattern with trivial polynomial.
      make("whitehead", KnotExpr::unknot(), {},
           {Stage::generic(0, 0, one, false)}),
      make("modified_whitehead", KnotExpr::unknot(), {},
           {Stage::generic(1, 0, one, false)}),
      make("dyadic_solenoid", KnotExpr::unknot(), {}, {Stage::wind(2, 0)}),
      make("generalized_solenoid", KnotExpr::unknot(), {},
           {Stage::wind(2), Stage::wind(3)}),
      make("knotted_dyadic_solenoid", kTrefoil, {}, {Stage::wind(2)}),
      make("infinite_trefoil_sum", kTrefoil, {}, {Stage::swallow(kTrefoil)}),
      make("tame_trefoil", kTrefoil, {}, {Stage::core_parallel()}),
  };
}

KnotExpr mask_knot(std::size_t i) {
  const auto p = static_cast<std::int64_t>(i) + 1;
  return KnotExpr::torus(p, p + 1);
}

Tower mask_tower(std::string_view bits) {
  if (bits.empty()) throw ValidationError("mask must be nonempty");
  std::vector<Stage> prefix;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      prefix.push_back(Stage::swallow(mask_knot(i + 1)));
    } else if (bits[i] == '0') {
      prefix.push_back(Stage::core_parallel());
    } else {
      throw ValidationError("mask may only contain 0 and 1, got '" +
                            std::string(bits) + "'");
    }
  }
  return make("mask_" + std::string(bits), KnotExpr::unknot(), std::move(prefix),
              {Stage::swallow(mask_knot(bits.size() + 1))});
}

std::vector<std::string> catalog_names(const std::optional<std::filesystem::path>& dir) {
  std::vector<std::string> names;
  for (const auto& t : builtin_catalog()) names.push_back(t.name);
  if (dir) {
    for (const auto& p : tower_files(*dir)) {
      const std::string stem = p.stem().string();
      if (std::find(names.begin(), names.end(), stem) == names.end()) {
        names.push_back(stem);
      }
    }
  }
  return names;
}

Tower find_catalog_tower(std::string_view name,
                         const std::optional<std::filesystem::path>& dir) {
  if (name.starts_with("mask:")) return mask_tower(name.substr(5));
  if (dir) {
    const auto file = *dir / (std::string(name) + ".json");
    if (std::filesystem::is_regular_file(file)) return load_tower_file(file);
  }
  for (auto& t : builtin_catalog()) {
    if (t.name == name) return t;
  }
  throw Error("unknown catalog tower '" + std::string(name) + "'");
}

std::optional<std::filesystem::path> catalog_dir_from_env() {
  const char* v = std::getenv(kCatalogDirEnv);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

}  // namespace toroidal
