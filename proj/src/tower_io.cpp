#include "toroidal/tower_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace toroidal {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ValidationError("tower file: " + where + ": " + what);
}

std::int64_t get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::optional<std::int64_t> get_opt_int(const json& obj, const char* key,
                                        const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return get_int(*it, where + "." + key);
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.contains(key)) bad(where, "unknown key '" + key + "'");
  }
}

Stage stage_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "stage must be an object");
  reject_unknown_keys(j, {"kind", "w", "knot", "pattern_genus", "pattern_delta",
                          "declared_genus", "concentric"},
                      where);
  if (!j.contains("kind")) bad(where, "missing 'kind'");
  const std::string kind = get_string(j["kind"], where + ".kind");

  Stage s;
  if (kind == "core_parallel") {
    s = Stage::core_parallel();
  } else if (kind == "swallow") {
    if (!j.contains("knot")) bad(where, "swallow stage needs 'knot'");
    s = Stage::swallow(KnotExpr::parse(get_string(j["knot"], where + ".knot")));
  } else if (kind == "wind") {
    if (!j.contains("w")) bad(where, "wind stage needs 'w'");
    s = Stage::wind(get_int(j["w"], where + ".w"));
  } else if (kind == "generic") {
    if (!j.contains("w")) bad(where, "generic stage needs 'w'");
    s = Stage::generic(get_int(j["w"], where + ".w"), std::nullopt);
  } else {
    bad(where + ".kind", "unknown stage kind '" + kind + "'");
  }
  if (j.contains("knot") && kind != "swallow") bad(where, "'knot' is only valid for swallow");

  if (auto it = j.find("w"); it != j.end()) s.winding = get_int(*it, where + ".w");
  if (auto it = j.find("pattern_genus"); it != j.end()) {
    s.pattern_genus = get_opt_int(j, "pattern_genus", where);
  }
  if (auto it = j.find("pattern_delta"); it != j.end()) {
    if (it->is_null()) {
      s.pattern_delta.reset();
    } else {
      s.pattern_delta = LaurentPoly::parse(get_string(*it, where + ".pattern_delta"));
    }
  }
  s.declared_result_genus = get_opt_int(j, "declared_genus", where);
  if (auto it = j.find("concentric"); it != j.end()) {
    if (!it->is_boolean()) bad(where + ".concentric", "expected a boolean");
    s.concentric = it->get<bool>();
  }
  return s;
}

json opt_to_json(const std::optional<std::int64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json stage_to_json(const Stage& s) {
  json j;
  j["kind"] = to_string(s.kind);
  j["w"] = s.winding;
  if (s.swallowed) j["knot"] = s.swallowed->to_string();
  j["pattern_genus"] = opt_to_json(s.pattern_genus);
  j["pattern_delta"] = s.pattern_delta ? json(s.pattern_delta->to_string()) : json(nullptr);
  if (s.declared_result_genus) j["declared_genus"] = *s.declared_result_genus;
  j["concentric"] = s.concentric;
  return j;
}

struct Cite {
  const char* rule;
  const char* ref;
};

json cite(const Cite& c) { return json{{"rule", c.rule}, {"paper_ref", c.ref}}; }

Cite h1_cite() {
  return {"direct_limit_of_windings",
          "first Cech cohomology is the direct limit of Z under multiplication "
          "by the winding numbers"};
}

Cite genus_cite(const GenusResult& g) {
  switch (g.reason) {
    case GenusReason::StronglyKnotted:
      return {"strongly_knotted",
              "nontrivial patterns recurring with nonzero winding give infinite "
              "genus (Schubert inequality)"};
    case GenusReason::WindingBlowup:
      return {"winding_blowup",
              "a knotted natural neighbourhood followed by recurring winding >= 2 "
              "gives infinite genus (Schubert inequality)"};
    case GenusReason::DeclaredConsistentChain:
      return {"schubert_chain",
              "lower bound from the Schubert inequality g(T') >= w*g(T) + g(T,T')"};
    case GenusReason::Computed:
      break;
  }
  return {"limit_of_torus_genera",
          "genus of a toroidal set is the limit of the genera of a nested "
          "basis of solid tori"};
}

Cite homeo_cite(const HomeoVerdict& v) {
  switch (v.rule) {
    case HomeoRule::InfiniteGenus:
      return {"R1", "toroidal attractors of homeomorphisms have finite genus"};
    case HomeoRule::KnottedWithH1NotZ:
      return {"R2",
              "finite-genus toroidal sets with H^1 != Z are unknotted, so every "
              "natural neighbourhood of an attractor is unknotted"};
    case HomeoRule::None:
      break;
  }
  return {"none", "no homeomorphism obstruction applies"};
}

Cite flow_cite(const FlowVerdict& v) {
  switch (v.rule) {
    case FlowRule::H1NotZ:
      return {"F1", "a toroidal attractor of a flow has H^1 = Z"};
    case FlowRule::EventuallyConcentric:
      return {"F3",
              "a basis of eventually concentric solid tori realizes the set as a "
              "flow attractor"};
    case FlowRule::PersistentlyNonConcentric:
      break;
  }
  return {"F2",
          "every basis of a flow attractor is eventually concentric (Edwards "
          "transitivity of concentric tori)"};
}

}  // namespace

Tower tower_from_json(const json& j) {
  if (!j.is_object()) bad("top level", "expected an object");
  reject_unknown_keys(j, {"name", "initial", "initial_genus", "prefix", "cycle"},
                      "top level");
  Tower t;
  if (!j.contains("name")) bad("top level", "missing 'name'");
  t.name = get_string(j["name"], "name");
  if (!j.contains("initial")) bad("top level", "missing 'initial'");
  t.initial = KnotExpr::parse(get_string(j["initial"], "initial"));
  t.initial_genus_declared = get_opt_int(j, "initial_genus", "top level");
  auto stages = [&](const char* key, std::vector<Stage>& out) {
    auto it = j.find(key);
    if (it == j.end()) return;
    if (!it->is_array()) bad(key, "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      out.push_back(stage_from_json((*it)[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
  };
  stages("prefix", t.prefix);
  if (!j.contains("cycle")) bad("top level", "missing 'cycle'");
  stages("cycle", t.cycle);
  return t;
}

Tower parse_tower_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte ? e.byte - 1 : 0);
  }
  return tower_from_json(j);
}

Tower load_tower_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tower_json(buf.str());
}

json tower_to_json(const Tower& t) {
  json j;
  j["name"] = t.name;
  j["initial"] = t.initial.to_string();
  if (t.initial_genus_declared) j["initial_genus"] = *t.initial_genus_declared;
  j["prefix"] = json::array();
  for (const auto& s : t.prefix) j["prefix"].push_back(stage_to_json(s));
  j["cycle"] = json::array();
  for (const auto& s : t.cycle) j["cycle"].push_back(stage_to_json(s));
  return j;
}

json tower_report(const Tower& t) {
  require_valid(t);
  json r;
  r["schema_version"] = kSchemaVersion;
  r["tool_version"] = std::string(kToolVersion);
  r["name"] = t.name;
  r["initial"] = t.initial.to_string();
  json rules = json::object();
  json notes = json::array();

  const CohProfile coh = cech_h1(t);
  r["h1"] = to_string(coh.h1_class);
  rules["h1"] = cite(h1_cite());
  if (coh.steinitz) {
    r["steinitz"] = steinitz_to_string(*coh.steinitz);
    rules["steinitz"] = cite({"steinitz_type",
                              "extension: type of the direct limit as a subgroup of Q"});
  } else {
    r["steinitz"] = nullptr;
  }

  const GenusResult genus = genus_of_tower(t);
  r["genus"] = genus.to_string();
  r["genus_reason"] = to_string(genus.reason);
  r["unknotted"] = genus.is_exact() && genus.value == 0;
  rules["genus"] = cite(genus_cite(genus));

  try {
    r["alexander"] = tower_alexander(t).to_string();
    rules["alexander"] = cite({"stabilized_satellite_formula",
                               "Delta_satellite = Delta_pattern(t) * Delta_companion(t^w) "
                               "stabilizes along a basis with trivial patterns and w = 1"});
  } catch (const PreconditionFailed& e) {
    r["alexander"] = nullptr;
    r["alexander_unavailable"] = to_string(e.reason());
  } catch (const InvariantUnavailable&) {
    r["alexander"] = nullptr;
    r["alexander_unavailable"] = "invariant_unavailable";
  }

  const HomeoVerdict homeo = homeo_attractor_verdict(t);
  r["homeo_verdict"] = homeo.to_string();
  rules["homeo_verdict"] = cite(homeo_cite(homeo));
  if (!homeo.obstructed) {
    notes.push_back("no_obstruction_found is not a realizability guarantee");
  }

  const FlowVerdict flow = flow_attractor_verdict(t);
  r["flow_verdict"] = flow.to_string();
  rules["flow_verdict"] = cite(flow_cite(flow));
  if (flow.extrapolated) {
    notes.push_back(
        "cycle mixes concentric and non-concentric stages; the flow verdict "
        "extends the concentricity transitivity argument");
  }

  r["r"] = r_of_toroidal(t);
  rules["r"] = cite({"r_of_toroidal", "toroidal sets have r = 1"});
  r["rules"] = std::move(rules);
  r["notes"] = std::move(notes);
  return r;
}

std::string render_report_text(const json& r) {
  std::ostringstream out;
  auto field = [&](const char* label, const json& v) {
    out << label << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  };
  field("tower", r["name"]);
  field("initial", r["initial"]);
  field("h1", r["h1"]);
  if (!r["steinitz"].is_null()) field("steinitz (extension)", r["steinitz"]);
  out << "genus: " << r["genus"].get<std::string>() << " ("
      << r["genus_reason"].get<std::string>() << ")\n";
  field("unknotted", r["unknotted"]);
  if (r["alexander"].is_null()) {
    out << "alexander: unavailable (" << r["alexander_unavailable"].get<std::string>()
        << ")\n";
  } else {
    field("alexander", r["alexander"]);
  }
  out << "homeo_verdict: " << r["homeo_verdict"].get<std::string>() << " ["
      << r["rules"]["homeo_verdict"]["rule"].get<std::string>() << "]\n";
  out << "flow_verdict: " << r["flow_verdict"].get<std::string>() << " ["
      << r["rules"]["flow_verdict"]["rule"].get<std::string>() << "]\n";
  field("r", r["r"]);
  for (const auto& n : r["notes"]) out << "note: " << n.get<std::string>() << "\n";
  return out.str();
}

}  // namespace toroidal
