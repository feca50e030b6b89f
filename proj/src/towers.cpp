#include "toroidal/towers.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace toroidal {

namespace {

std::int64_t saturating_mul_add(std::int64_t w, std::int64_t g, std::int64_t p) {
  std::int64_t r;
  if (__builtin_mul_overflow(w, g, &r) || __builtin_add_overflow(r, p, &r) ||
      r > kGenusCap) {
    return kGenusCap;
  }
  return r;
}

bool trivial_delta(const std::optional<LaurentPoly>& d) {
  return !d || equal_up_to_unit(*d, LaurentPoly(1));
}

struct Located {
  StageRef where;
  const Stage* stage;
};

std::vector<Located> unroll(const Tower& t, std::size_t passes) {
  std::vector<Located> out;
  for (std::size_t i = 0; i < t.prefix.size(); ++i) {
    out.push_back({{Section::Prefix, i, 0}, &t.prefix[i]});
  }
  for (std::size_t pass = 1; pass <= passes; ++pass) {
    for (std::size_t i = 0; i < t.cycle.size(); ++i) {
      out.push_back({{Section::Cycle, i, pass}, &t.cycle[i]});
    }
  }
  return out;
}

/// Genus of T_{i+1} when the stage pins it down from an exact genus of T_i.
std::optional<std::int64_t> derived_exact(const Stage& s,
                                          std::optional<std::int64_t> companion) {
  if (!companion) return std::nullopt;
  if (s.concentric) return companion;
  if (s.kind == StageKind::Swallow && s.swallowed) {
    GenusValue g = genus_of_knot(*s.swallowed);
    if (g.is_exact()) return *companion + g.lower;
  }
  // An unknotted companion extends its framing to all of R^3, so the new
  // torus has exactly the pattern's genus.
  if (*companion == 0 && s.pattern_genus) return s.pattern_genus;
  return std::nullopt;
}

struct InitialGenus {
  std::int64_t lower = 0;
  std::optional<std::int64_t> exact;
};

InitialGenus initial_genus(const Tower& t) {
  if (t.initial_genus_declared) {
    return {*t.initial_genus_declared, t.initial_genus_declared};
  }
  GenusValue g = genus_of_knot(normalize(t.initial));
  InitialGenus out{g.lower, std::nullopt};
  if (g.is_exact()) out.exact = g.lower;
  return out;
}

GenusChain walk_chain(const Tower& t, std::size_t passes,
                      std::vector<Violation>* violations) {
  GenusChain chain;
  InitialGenus init = initial_genus(t);
  chain.initial_lower = init.lower;
  chain.initial_exact = init.exact;
  std::int64_t lower = init.lower;
  std::optional<std::int64_t> exact = init.exact;
  for (const auto& [where, stage] : unroll(t, passes)) {
    ChainStep step;
    step.where = where;
    step.winding = stage->winding;
    step.lower_before = lower;
    step.exact_before = exact;
    const std::int64_t bound =
        stage->winding >= 1
            ? saturating_mul_add(stage->winding, lower, stage->pattern_genus_lower())
            : 0;
    const std::optional<std::int64_t> derived = derived_exact(*stage, exact);
    if (stage->declared_result_genus) {
      const std::int64_t d = *stage->declared_result_genus;
      if (violations && stage->winding >= 1 && d < bound) {
        violations->push_back(
            {ViolationKind::SchubertViolation, where,
             "declared genus " + std::to_string(d) + " < " +
                 std::to_string(stage->winding) + "*" + std::to_string(lower) +
                 " + " + std::to_string(stage->pattern_genus_lower()) +
                 " (g(T') >= w*g(T) + g(T,T'))"});
      }
      if (violations && derived && *derived != d) {
        violations->push_back({ViolationKind::MalformedStage, where,
                               "declared genus " + std::to_string(d) +
                                   " conflicts with derived genus " +
                                   std::to_string(*derived)});
      }
      lower = d;
      exact = d;
    } else {
      lower = derived ? std::max(*derived, bound) : bound;
      exact = derived;
    }
    step.lower_after = lower;
    step.exact_after = exact;
    chain.steps.push_back(step);
  }
  return chain;
}

void check_stage(const Stage& s, const StageRef& where,
                 std::vector<Violation>& out) {
  auto malformed = [&](const std::string& msg) {
    out.push_back({ViolationKind::MalformedStage, where, msg});
  };
  if (s.winding < 0) malformed("winding number must be nonnegative");
  if (s.pattern_genus && *s.pattern_genus < 0) malformed("pattern genus must be nonnegative");
  if (s.declared_result_genus && *s.declared_result_genus < 0) {
    malformed("declared genus must be nonnegative");
  }
  if (s.pattern_delta) {
    if (s.pattern_delta->is_zero() || std::abs(evaluate_at_one(*s.pattern_delta)) != 1) {
      malformed("pattern Alexander polynomial must satisfy |Delta(1)| = 1");
    } else if (s.pattern_genus &&
               (breadth(*s.pattern_delta) + 1) / 2 > *s.pattern_genus) {
      malformed("pattern Alexander polynomial " + s.pattern_delta->to_string() +
                " needs pattern genus >= " +
                std::to_string((breadth(*s.pattern_delta) + 1) / 2));
    }
  }
  switch (s.kind) {
    case StageKind::CoreParallel:
      if (s.winding != 1 || s.pattern_genus.value_or(0) != 0 ||
          !trivial_delta(s.pattern_delta) || !s.concentric) {
        malformed("core_parallel stage must have w=1, trivial pattern and be concentric");
      }
      break;
    case StageKind::Swallow: {
      if (!s.swallowed) {
        malformed("swallow stage has no knot");
        break;
      }
      KnotExpr j;
      try {
        j = normalize(*s.swallowed);
      } catch (const ValidationError& e) {
        malformed(e.what());
        break;
      }
      if (s.winding != 1) malformed("swallow stage must have w=1");
      if (s.concentric) malformed("swallow stage cannot be concentric");
      GenusValue g = genus_of_knot(j);
      if (g.is_exact() && s.pattern_genus != g.lower) {
        malformed("swallow pattern genus must equal genus of " + j.to_string());
      }
      try {
        LaurentPoly d = alexander_of_knot(j);
        if (!s.pattern_delta || !equal_up_to_unit(*s.pattern_delta, d)) {
          malformed("swallow pattern polynomial must equal Delta of " + j.to_string());
        }
      } catch (const InvariantUnavailable&) {
      }
      break;
    }
    case StageKind::Wind:
      if (s.winding < 1) malformed("wind stage needs w >= 1");
      if (s.pattern_genus.value_or(0) != 0 || !trivial_delta(s.pattern_delta)) {
        malformed("wind stage has a trivial pattern");
      }
      break;
    case StageKind::Generic:
      break;
  }
  if (s.concentric && s.kind != StageKind::CoreParallel) {
    if (s.winding != 1 || s.pattern_genus != std::optional<std::int64_t>(0) ||
        !trivial_delta(s.pattern_delta)) {
      out.push_back({ViolationKind::ConcentricityContract, where,
                     "concentric stage needs w=1 and pattern genus 0 (w=" +
                         std::to_string(s.winding) + ")"});
    }
  }
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool cycle_all_windings_positive(const Tower& t) {
  return std::all_of(t.cycle.begin(), t.cycle.end(),
                     [](const Stage& s) { return s.winding >= 1; });
}

}  // namespace

// ------------------------------------------------------------------- Stage

Stage Stage::core_parallel() {
  Stage s;
  s.kind = StageKind::CoreParallel;
  s.winding = 1;
  s.pattern_genus = 0;
  s.pattern_delta = LaurentPoly(1);
  s.concentric = true;
  return s;
}

Stage Stage::swallow(const KnotExpr& knot) {
  Stage s;
  s.kind = StageKind::Swallow;
  s.winding = 1;
  s.concentric = false;
  KnotExpr j = normalize(knot);
  GenusValue g = genus_of_knot(j);
  if (g.is_exact()) s.pattern_genus = g.lower;
  try {
    s.pattern_delta = alexander_of_knot(j);
  } catch (const InvariantUnavailable&) {
  }
  s.swallowed = std::move(j);
  return s;
}

Stage Stage::wind(std::int64_t w, std::optional<std::int64_t> declared) {
  Stage s;
  s.kind = StageKind::Wind;
  s.winding = w;
  s.pattern_genus = 0;
  s.pattern_delta = LaurentPoly(1);
  s.declared_result_genus = declared;
  return s;
}

Stage Stage::generic(std::int64_t w, std::optional<std::int64_t> pattern_genus,
                     std::optional<LaurentPoly> pattern_delta, bool concentric,
                     std::optional<std::int64_t> declared) {
  Stage s;
  s.kind = StageKind::Generic;
  s.winding = w;
  s.pattern_genus = pattern_genus;
  s.pattern_delta = std::move(pattern_delta);
  s.concentric = concentric;
  s.declared_result_genus = declared;
  return s;
}

std::int64_t Stage::pattern_genus_lower() const {
  if (pattern_genus) return *pattern_genus;
  std::int64_t lower = 0;
  if (pattern_delta && !pattern_delta->is_zero()) {
    lower = (breadth(*pattern_delta) + 1) / 2;
  }
  if (swallowed) lower = std::max(lower, genus_of_knot(*swallowed).lower);
  return lower;
}

std::string to_string(StageKind kind) {
  switch (kind) {
    case StageKind::CoreParallel: return "core_parallel";
    case StageKind::Swallow: return "swallow";
    case StageKind::Wind: return "wind";
    case StageKind::Generic: return "generic";
  }
  return "?";
}

// -------------------------------------------------------------- validation

std::string StageRef::to_string() const {
  switch (section) {
    case Section::Initial: return "initial";
    case Section::Prefix: return "prefix[" + std::to_string(index) + "]";
    case Section::Cycle:
      return "cycle[" + std::to_string(index) + "] (periodic" +
             (pass ? ", pass " + std::to_string(pass) : std::string()) + ")";
  }
  return "?";
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::SchubertViolation: return "SchubertViolation";
    case ViolationKind::ConcentricityContract: return "ConcentricityContract";
    case ViolationKind::MalformedStage: return "MalformedStage";
  }
  return "?";
}

std::string ValidationReport::to_string() const {
  if (ok()) return "OK";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "\n";
    out += toroidal::to_string(v.kind) + " at " + v.where.to_string() + ": " +
           v.message;
  }
  return out;
}

TowerValidationError::TowerValidationError(ValidationReport report)
    : ValidationError("invalid tower:\n" + report.to_string()),
      report_(std::move(report)) {}

ValidationReport validate_tower(const Tower& t) {
  std::vector<Violation> found;
  const StageRef initial_ref{Section::Initial, 0, 0};
  if (t.cycle.empty()) {
    found.push_back({ViolationKind::MalformedStage, initial_ref,
                     "cycle must be nonempty"});
  }
  bool initial_ok = true;
  try {
    KnotExpr k = normalize(t.initial);
    GenusValue g = genus_of_knot(k);
    if (t.initial_genus_declared) {
      const std::int64_t d = *t.initial_genus_declared;
      if (d < 0 || d < g.lower || (g.upper && d > *g.upper)) {
        found.push_back({ViolationKind::MalformedStage, initial_ref,
                         "declared initial genus " + std::to_string(d) +
                             " is incompatible with " + k.to_string() +
                             " (genus " + g.to_string() + ")"});
        initial_ok = false;
      }
    }
  } catch (const ValidationError& e) {
    found.push_back({ViolationKind::MalformedStage, initial_ref, e.what()});
    initial_ok = false;
  }
  for (std::size_t i = 0; i < t.prefix.size(); ++i) {
    check_stage(t.prefix[i], {Section::Prefix, i, 0}, found);
  }
  for (std::size_t i = 0; i < t.cycle.size(); ++i) {
    check_stage(t.cycle[i], {Section::Cycle, i, 0}, found);
  }
  // Chain checks need well-formed stages. Two cycle passes suffice: a
  // declaration resets the chain to a constant, so pass 3 repeats pass 2.
  if (found.empty() && initial_ok) {
    std::vector<Violation> chain_found;
    walk_chain(t, 2, &chain_found);
    std::set<std::tuple<int, int, std::size_t>> seen;
    for (auto& v : chain_found) {
      auto key = std::make_tuple(static_cast<int>(v.kind),
                                 static_cast<int>(v.where.section), v.where.index);
      if (seen.insert(key).second) found.push_back(std::move(v));
    }
  }
  return ValidationReport{std::move(found)};
}

void require_valid(const Tower& t) {
  ValidationReport r = validate_tower(t);
  if (!r.ok()) throw TowerValidationError(std::move(r));
}

GenusChain unroll_genus_chain(const Tower& t, std::size_t cycle_passes) {
  return walk_chain(t, cycle_passes, nullptr);
}

// -------------------------------------------------------------- cohomology

std::string to_string(H1Class c) {
  switch (c) {
    case H1Class::Trivial: return "trivial";
    case H1Class::Z: return "Z";
    case H1Class::NotFinitelyGenerated: return "not_finitely_generated";
  }
  return "?";
}

std::string steinitz_to_string(const Steinitz& s) {
  if (s.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : s) {
    if (!out.empty()) out += "*";
    out += std::to_string(p) + "^" + (e ? std::to_string(*e) : std::string("inf"));
  }
  return out;
}

CohProfile cech_h1(const Tower& t) {
  require_valid(t);
  CohProfile out;
  if (!cycle_all_windings_positive(t)) {
    out.h1_class = H1Class::Trivial;
    return out;
  }
  const bool all_one = std::all_of(t.cycle.begin(), t.cycle.end(),
                                   [](const Stage& s) { return s.winding == 1; });
  out.h1_class = all_one ? H1Class::Z : H1Class::NotFinitelyGenerated;

  // The direct limit only sees bonding maps after the last zero one.
  Steinitz st;
  std::size_t first = 0;
  for (std::size_t i = 0; i < t.prefix.size(); ++i) {
    if (t.prefix[i].winding == 0) first = i + 1;
  }
  for (std::size_t i = first; i < t.prefix.size(); ++i) {
    for (std::int64_t p : prime_factors(t.prefix[i].winding)) {
      auto& e = st[p];
      e = e.value_or(0) + 1;
    }
  }
  for (const auto& s : t.cycle) {
    for (std::int64_t p : prime_factors(s.winding)) st[p] = std::nullopt;
  }
  out.steinitz = std::move(st);
  return out;
}

// ------------------------------------------------------------------- genus

std::string to_string(GenusReason r) {
  switch (r) {
    case GenusReason::Computed: return "computed";
    case GenusReason::StronglyKnotted: return "strongly_knotted";
    case GenusReason::WindingBlowup: return "winding_blowup";
    case GenusReason::DeclaredConsistentChain: return "declared_consistent_chain";
  }
  return "?";
}

std::string GenusResult::to_string() const {
  switch (kind) {
    case GenusKind::Exact: return std::to_string(value);
    case GenusKind::Infinite: return "infinite";
    case GenusKind::LowerBound: return ">=" + std::to_string(value);
  }
  return "?";
}

GenusResult genus_of_tower(const Tower& t) {
  require_valid(t);
  const std::size_t p = t.prefix.size();
  const std::size_t c = t.cycle.size();
  const bool natural = cycle_all_windings_positive(t);
  const GenusChain chain = walk_chain(t, 2, nullptr);

  if (natural) {
    for (const auto& s : t.cycle) {
      if (s.pattern_genus_lower() > 0) {
        return GenusResult::infinite(GenusReason::StronglyKnotted);
      }
    }
    const bool winds = std::any_of(t.cycle.begin(), t.cycle.end(),
                                   [](const Stage& s) { return s.winding >= 2; });
    const std::int64_t entering =
        std::max(chain.steps[p].lower_before, chain.steps[p + c].lower_before);
    if (winds && entering > 0) {
      return GenusResult::infinite(GenusReason::WindingBlowup);
    }
  }

  bool periodic_exact = true;
  std::int64_t max_exact = 0;
  std::int64_t min_exact = kGenusCap;
  for (std::size_t i = 0; i < c; ++i) {
    const auto& first = chain.steps[p + i].exact_after;
    const auto& second = chain.steps[p + c + i].exact_after;
    if (!first || !second || *first != *second) {
      periodic_exact = false;
      break;
    }
    max_exact = std::max(max_exact, *second);
    min_exact = std::min(min_exact, *second);
  }
  if (natural) {
    if (periodic_exact) return GenusResult::exact(max_exact);
    return GenusResult::lower_bound(chain.steps.back().lower_after);
  }
  // Homologically trivial: the tori are still arbitrarily small
  // neighbourhoods, so only genus 0 is certain; Schubert bounds do not apply.
  if (periodic_exact && min_exact == 0) return GenusResult::exact(0);
  return GenusResult::lower_bound(0);
}

bool is_unknotted_tower(const Tower& t) {
  const GenusResult g = genus_of_tower(t);
  return g.is_exact() && g.value == 0;
}

// --------------------------------------------------------------- Alexander

std::string to_string(PreconditionReason r) {
  switch (r) {
    case PreconditionReason::H1NotZ: return "h1_not_z";
    case PreconditionReason::InfiniteGenus: return "infinite_genus";
    case PreconditionReason::GenusUndetermined: return "genus_undetermined";
    case PreconditionReason::NotConnectedSumShape: return "not_connected_sum_shape";
  }
  return "?";
}

PreconditionFailed::PreconditionFailed(PreconditionReason reason,
                                       const std::string& detail)
    : Error("precondition failed (" + to_string(reason) + "): " + detail),
      reason_(reason) {}

namespace {

void require_exact_genus(const GenusResult& g, const char* op) {
  if (g.is_infinite()) {
    throw PreconditionFailed(PreconditionReason::InfiniteGenus,
                             std::string(op) + " needs finite genus");
  }
  if (!g.is_exact()) {
    throw PreconditionFailed(PreconditionReason::GenusUndetermined,
                             std::string(op) + " needs an exactly known genus, have " +
                                 g.to_string());
  }
}

}  // namespace

LaurentPoly tower_alexander(const Tower& t) {
  if (cech_h1(t).h1_class != H1Class::Z) {
    throw PreconditionFailed(PreconditionReason::H1NotZ,
                             "the stabilized Alexander polynomial needs H^1 = Z");
  }
  require_exact_genus(genus_of_tower(t), "tower_alexander");

  LaurentPoly delta = alexander_of_knot(normalize(t.initial));
  auto apply = [&delta](const Stage& s, bool past_stabilization) {
    LaurentPoly pattern(1);
    if (s.pattern_delta) {
      pattern = *s.pattern_delta;
    } else if (!past_stabilization && s.pattern_genus != std::optional<std::int64_t>(0)) {
      throw InvariantUnavailable("pattern Alexander polynomial of a " +
                                 to_string(s.kind) + " stage is unknown");
    }
    const LaurentPoly companion = s.winding >= 1
                                      ? subst_power(delta, s.winding)
                                      : LaurentPoly(evaluate_at_one(delta));
    delta = canonical_form(pattern * companion);
  };
  for (const auto& s : t.prefix) apply(s, false);
  // With finite genus and H^1 = Z every cycle pattern is trivial and w = 1.
  const LaurentPoly stabilized = delta;
  for (const auto& s : t.cycle) apply(s, true);
  if (!equal_up_to_unit(stabilized, delta)) {
    throw InternalInconsistency("Alexander polynomial did not stabilize over the cycle");
  }
  return canonical_form(delta);
}

Tower reembed_unknotted(const Tower& t) {
  require_exact_genus(genus_of_tower(t), "reembed_unknotted");
  if (is_unknotted_tower(t)) return t;
  Tower out;
  out.name = t.name + "_unknotted";
  out.initial = KnotExpr::unknot();
  // Past one full cycle the genus is constant, so every later pattern is
  // trivial; re-embed from there.
  for (const auto& s : t.cycle) {
    Stage u = s;
    switch (s.kind) {
      case StageKind::CoreParallel:
        break;
      case StageKind::Swallow:
        u = Stage::core_parallel();
        break;
      case StageKind::Wind:
      case StageKind::Generic:
        u.pattern_genus = 0;
        u.pattern_delta = LaurentPoly(1);
        break;
    }
    if (s.declared_result_genus) u.declared_result_genus = 0;
    out.cycle.push_back(std::move(u));
  }
  return out;
}

// ----------------------------------------------------------------- verdicts

std::string HomeoVerdict::to_string() const {
  switch (rule) {
    case HomeoRule::InfiniteGenus: return "obstructed:infinite_genus";
    case HomeoRule::KnottedWithH1NotZ: return "obstructed:knotted_with_h1_not_z";
    case HomeoRule::None: return "no_obstruction_found";
  }
  return "?";
}

std::string FlowVerdict::to_string() const {
  switch (rule) {
    case FlowRule::EventuallyConcentric: return "realizable:eventually_concentric";
    case FlowRule::H1NotZ: return "not_realizable:h1_not_z";
    case FlowRule::PersistentlyNonConcentric:
      return "not_realizable:persistently_nonconcentric";
  }
  return "?";
}

HomeoVerdict homeo_attractor_verdict(const Tower& t) {
  if (genus_of_tower(t).is_infinite()) return {true, HomeoRule::InfiniteGenus};
  if (cech_h1(t).h1_class != H1Class::NotFinitelyGenerated) {
    return {false, HomeoRule::None};
  }
  // Every torus after the last zero winding is a natural neighbourhood; one
  // knotted natural neighbourhood rules out unknottedness.
  std::optional<std::size_t> last_zero;
  for (std::size_t i = 0; i < t.prefix.size(); ++i) {
    if (t.prefix[i].winding == 0) last_zero = i;
  }
  bool knotted = false;
  const GenusChain chain = walk_chain(t, 2, nullptr);
  if (!last_zero) {
    knotted = !normalize(t.initial).is<Unknot>() || chain.initial_lower > 0;
  }
  for (std::size_t k = last_zero.value_or(0); k < chain.steps.size() && !knotted; ++k) {
    knotted = chain.steps[k].lower_after > 0;
  }
  if (knotted) return {true, HomeoRule::KnottedWithH1NotZ};
  return {false, HomeoRule::None};
}

FlowVerdict flow_attractor_verdict(const Tower& t) {
  if (cech_h1(t).h1_class != H1Class::Z) return {false, FlowRule::H1NotZ, false};
  const auto concentric = std::count_if(t.cycle.begin(), t.cycle.end(),
                                        [](const Stage& s) { return s.concentric; });
  if (static_cast<std::size_t>(concentric) == t.cycle.size()) {
    return {true, FlowRule::EventuallyConcentric, false};
  }
  // A recurring non-concentric pair forbids eventual concentricity of the
  // basis (concentricity is transitive through a middle torus).
  return {false, FlowRule::PersistentlyNonConcentric, concentric > 0};
}

// ---------------------------------------------------------- connected sums

SummandMultiset connected_sum_summands(const Tower& t) {
  require_valid(t);
  SummandMultiset out;
  auto add = [&](const KnotExpr& k, bool recurring) {
    std::vector<KnotExpr> primes;
    try {
      primes = prime_summands(k);
    } catch (const NotDecomposable& e) {
      throw PreconditionFailed(PreconditionReason::NotConnectedSumShape, e.what());
    }
    for (const auto& prime : primes) {
      Multiplicity& m = out[prime_key(prime)];
      if (recurring) {
        m.omega = true;
      } else {
        ++m.count;
      }
    }
  };
  auto take_stage = [&](const Stage& s, bool recurring) {
    if (s.kind == StageKind::CoreParallel) return;
    if (s.kind != StageKind::Swallow || !s.swallowed) {
      throw PreconditionFailed(PreconditionReason::NotConnectedSumShape,
                               "tower '" + t.name + "' has a " + to_string(s.kind) +
                                   " stage; only swallow and core_parallel stages "
                                   "form connected sums");
    }
    add(*s.swallowed, recurring);
  };
  add(t.initial, false);
  for (const auto& s : t.prefix) take_stage(s, false);
  for (const auto& s : t.cycle) take_stage(s, true);
  for (auto& [key, m] : out) {
    if (m.omega) m.count = 0;
  }
  return out;
}

SumDistinction distinguish_connected_sums(const Tower& a, const Tower& b) {
  const SummandMultiset ma = connected_sum_summands(a);
  const SummandMultiset mb = connected_sum_summands(b);
  std::set<std::string> keys;
  for (const auto& [k, m] : ma) keys.insert(k);
  for (const auto& [k, m] : mb) keys.insert(k);
  for (const auto& k : keys) {
    auto ia = ma.find(k);
    auto ib = mb.find(k);
    const Multiplicity none;
    if ((ia == ma.end() ? none : ia->second) != (ib == mb.end() ? none : ib->second)) {
      return {SumComparison::Inequivalent, k};
    }
  }
  return {SumComparison::Inconclusive, ""};
}

// ------------------------------------------------------------- r-invariant

int r_of_toroidal(const Tower& t) {
  require_valid(t);
  return 1;
}

std::string to_string(RClass c) {
  switch (c) {
    case RClass::Toroidal: return "toroidal";
    case RClass::ToroidalComponentPlusCellular: return "toroidal_component_plus_cellular";
    case RClass::Inconclusive: return "inconclusive";
  }
  return "?";
}

RClassification classify_by_r(std::optional<std::int64_t> r, H1Kind h1,
                              bool h2_trivial, bool connected) {
  if (r == 1 && h2_trivial && h1 == H1Kind::Other) {
    if (connected) return {RClass::Toroidal, "continuum with r = 1, H^2 = 0, H^1 != 0, Z"};
    return {RClass::ToroidalComponentPlusCellular,
            "exactly one component is toroidal, the others are cellular"};
  }
  if (r == 0 && h2_trivial) {
    return {RClass::Inconclusive, "connected case would be cellular"};
  }
  return {RClass::Inconclusive, "hypotheses r = 1, H^2 = 0, H^1 != 0, Z not met"};
}

}  // namespace toroidal
