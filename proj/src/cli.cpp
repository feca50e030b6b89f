#include "toroidal/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "toroidal/catalog.hpp"
#include "toroidal/diagrams.hpp"
#include "toroidal/knots.hpp"
#include "toroidal/tower_io.hpp"

namespace toroidal::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int knot_command(const std::string& what, const std::string& text, bool as_json,
                 std::ostream& out) {
  const KnotExpr k = KnotExpr::parse(text);
  json j{{"expr", k.to_string()}, {"normalized", normalize(k).to_string()}};
  std::string line;
  if (what == "genus") {
    const GenusValue g = genus_of_knot(k);
    j["genus"] = g.to_string();
    line = g.to_string();
  } else {
    const LaurentPoly delta = alexander_of_knot(k);
    j["alexander"] = delta.to_string();
    line = delta.to_string();
  }
  if (as_json) {
    emit(out, j);
  } else {
    out << line << "\n";
  }
  return kExitOk;
}

int diagram_command(const std::string& what, const std::string& path, bool as_json,
                    std::ostream& out) {
  const Diagram d = parse_pd(read_file(path));
  json j{{"file", std::filesystem::path(path).filename().string()},
         {"crossings", d.crossing_count()}};
  std::string line;
  if (what == "alexander") {
    const LaurentPoly delta = alexander_from_diagram(d);
    j["alexander"] = delta.to_string();
    line = delta.to_string();
  } else {
    const GenusBounds b = genus_bounds(d);
    j["genus_lower"] = b.lower;
    j["genus_upper"] = b.upper;
    if (b.lower == b.upper) {
      j["genus"] = std::to_string(b.lower);
      line = std::to_string(b.lower);
    } else {
      j["genus"] = nullptr;
      line = "[" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]";
    }
  }
  if (as_json) {
    emit(out, j);
  } else {
    out << line << "\n";
  }
  return kExitOk;
}

int report(const Tower& t, bool as_json, std::ostream& out) {
  const json r = tower_report(t);
  if (as_json) {
    emit(out, r);
  } else {
    out << render_report_text(r);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classifier for toroidal sets presented as towers of solid tori",
               "toroidal"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string action;
  std::string operand;

  auto* knot = app.add_subcommand("knot", "Invariants of a knot expression");
  knot->add_option("action", action, "genus | alexander")
      ->required()
      ->check(CLI::IsMember({"genus", "alexander"}));
  knot->add_option("expr", operand, "e.g. \"sum(torus(2,3); table(4_1))\"")->required();

  auto* diagram = app.add_subcommand("diagram", "Invariants of a PD-code file");
  diagram->add_option("action", action, "genus | alexander")
      ->required()
      ->check(CLI::IsMember({"genus", "alexander"}));
  diagram->add_option("file", operand, "file holding PD[X[...],...]")->required();

  auto* tower = app.add_subcommand("tower", "Classify a tower file");
  tower->add_option("action", action, "report")
      ->required()
      ->check(CLI::IsMember({"report"}));
  tower->add_option("file", operand, "tower JSON file")->required();

  auto* catalog = app.add_subcommand("catalog", "Built-in example towers");
  catalog->add_option("action", action, "list | report")
      ->required()
      ->check(CLI::IsMember({"list", "report"}));
  catalog->add_option("name", operand, "tower name or mask:<bits>");

  for (auto* sub : {knot, diagram, tower, catalog}) {
    sub->add_flag("--json", as_json, "JSON output");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (knot->parsed()) return knot_command(action, operand, as_json, out);
    if (diagram->parsed()) return diagram_command(action, operand, as_json, out);
    if (tower->parsed()) {
      const std::string text = read_file(operand);
      return report(parse_tower_json(text), as_json, out);
    }
    const auto dir = catalog_dir_from_env();
    if (action == "list") {
      const auto names = catalog_names(dir);
      if (as_json) {
        emit(out, json(names));
      } else {
        for (const auto& n : names) out << n << "\n";
      }
      return kExitOk;
    }
    if (operand.empty()) throw UsageError("catalog report needs a tower name");
    Tower t;
    try {
      t = find_catalog_tower(operand, dir);
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return report(t, as_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TowerValidationError& e) {
    err << "invalid tower:\n" << e.report().to_string() << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.position() << ": " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace toroidal::cli
