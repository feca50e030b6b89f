#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toroidal/errors.hpp"
#include "toroidal/knots.hpp"
#include "toroidal/laurent.hpp"

namespace toroidal {

enum class StageKind { CoreParallel, Swallow, Wind, Generic };

/**
 * One nesting step T_{i+1} inside T_i of a tower of solid tori.
 *
 * `pattern_genus` / `pattern_delta` describe the pattern, i.e. the knot type
 * of T_{i+1} after T_i is unknotted by its preferred framing. `concentric`
 * is declared data: the region between the two tori is a product
 * torus x interval.
 *
 * - CoreParallel: T_{i+1} is a thinner regular neighbourhood of the core.
 * - Swallow(J):   T_{i+1} is T_i with a local knot J tied in (connected sum).
 * - Wind:         T_{i+1} winds w times around T_i like a (w,1) cable.
 * - Generic:      anything else, described only by its numbers.
 */
struct Stage {
  StageKind kind = StageKind::Generic;
  std::int64_t winding = 1;
  std::optional<std::int64_t> pattern_genus;
  std::optional<LaurentPoly> pattern_delta;
  std::optional<std::int64_t> declared_result_genus;
  bool concentric = false;
  std::optional<KnotExpr> swallowed;  // Swallow only

  static Stage core_parallel();
  static Stage swallow(const KnotExpr& knot);
  static Stage wind(std::int64_t w,
                    std::optional<std::int64_t> declared = std::nullopt);
  static Stage generic(std::int64_t w, std::optional<std::int64_t> pattern_genus,
                       std::optional<LaurentPoly> pattern_delta = std::nullopt,
                       bool concentric = false,
                       std::optional<std::int64_t> declared = std::nullopt);

  /// Best known lower bound on the pattern genus.
  std::int64_t pattern_genus_lower() const;

  friend bool operator==(const Stage&, const Stage&) = default;
};

/// Eventually periodic tower: T_0 has core `initial`, then `prefix` once,
/// then `cycle` repeated forever.
struct Tower {
  std::string name;
  KnotExpr initial;
  std::optional<std::int64_t> initial_genus_declared;
  std::vector<Stage> prefix;
  std::vector<Stage> cycle;

  friend bool operator==(const Tower&, const Tower&) = default;
};

std::string to_string(StageKind kind);

// ---------------------------------------------------------------- validation

enum class Section { Initial, Prefix, Cycle };

/// Position in the unrolled tower. `pass` counts cycle repetitions from 1 and
/// is 0 outside the cycle.
struct StageRef {
  Section section = Section::Initial;
  std::size_t index = 0;
  std::size_t pass = 0;

  std::string to_string() const;
  friend bool operator==(const StageRef&, const StageRef&) = default;
};

enum class ViolationKind { SchubertViolation, ConcentricityContract, MalformedStage };

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  StageRef where;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate_tower(const Tower& t);

/// Thrown by classifiers handed a tower that fails validation.
class TowerValidationError : public ValidationError {
 public:
  explicit TowerValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

void require_valid(const Tower& t);

/// One step of the unrolled genus chain. `lower_*` are Schubert lower bounds
/// on the genus of the torus before/after the step; `exact_after` is set when
/// the step determines that genus exactly.
struct ChainStep {
  StageRef where;
  std::int64_t winding = 0;
  std::int64_t lower_before = 0;
  std::int64_t lower_after = 0;
  std::optional<std::int64_t> exact_before;
  std::optional<std::int64_t> exact_after;
};

struct GenusChain {
  std::int64_t initial_lower = 0;
  std::optional<std::int64_t> initial_exact;
  std::vector<ChainStep> steps;
};

/// Genus bounds along initial + prefix + `cycle_passes` copies of the cycle.
/// Bounds saturate at kGenusCap. Does not validate.
GenusChain unroll_genus_chain(const Tower& t, std::size_t cycle_passes = 2);

inline constexpr std::int64_t kGenusCap = std::int64_t{1} << 50;

// --------------------------------------------------------------- cohomology

enum class H1Class { Trivial, Z, NotFinitelyGenerated };

std::string to_string(H1Class c);

/// Supernatural number: prime -> exponent, nullopt meaning infinity.
using Steinitz = std::map<std::int64_t, std::optional<std::int64_t>>;

std::string steinitz_to_string(const Steinitz& s);

struct CohProfile {
  H1Class h1_class = H1Class::Trivial;
  std::optional<Steinitz> steinitz;  // absent for Trivial
  bool h2_trivial = true;
};

CohProfile cech_h1(const Tower& t);

// ------------------------------------------------------------------- genus

enum class GenusKind { Exact, Infinite, LowerBound };
enum class GenusReason {
  Computed,                // Exact
  StronglyKnotted,         // Infinite: nontrivial pattern recurs with w >= 1
  WindingBlowup,           // Infinite: knotted and some recurring w >= 2
  DeclaredConsistentChain  // LowerBound: best Schubert chain value
};

std::string to_string(GenusReason r);

struct GenusResult {
  GenusKind kind = GenusKind::Exact;
  std::int64_t value = 0;  // genus for Exact, bound for LowerBound
  GenusReason reason = GenusReason::Computed;

  static GenusResult exact(std::int64_t g) {
    return {GenusKind::Exact, g, GenusReason::Computed};
  }
  static GenusResult infinite(GenusReason why) {
    return {GenusKind::Infinite, 0, why};
  }
  static GenusResult lower_bound(std::int64_t g) {
    return {GenusKind::LowerBound, g, GenusReason::DeclaredConsistentChain};
  }

  bool is_exact() const noexcept { return kind == GenusKind::Exact; }
  bool is_infinite() const noexcept { return kind == GenusKind::Infinite; }
  std::string to_string() const;

  friend bool operator==(const GenusResult&, const GenusResult&) = default;
};

GenusResult genus_of_tower(const Tower& t);

bool is_unknotted_tower(const Tower& t);

// ---------------------------------------------------------------- Alexander

enum class PreconditionReason {
  H1NotZ,
  InfiniteGenus,
  GenusUndetermined,
  NotConnectedSumShape,
};

std::string to_string(PreconditionReason r);

class PreconditionFailed : public Error {
 public:
  PreconditionFailed(PreconditionReason reason, const std::string& detail);
  PreconditionReason reason() const noexcept { return reason_; }

 private:
  PreconditionReason reason_;
};

/// Stabilized Alexander polynomial of a tower with H^1 = Z and exact genus.
LaurentPoly tower_alexander(const Tower& t);

/// Tower with unknotted initial core and trivial patterns from the
/// stabilization point on. Identity on towers that are already unknotted.
Tower reembed_unknotted(const Tower& t);

// ----------------------------------------------------------------- verdicts

enum class HomeoRule { InfiniteGenus, KnottedWithH1NotZ, None };

struct HomeoVerdict {
  bool obstructed = false;
  HomeoRule rule = HomeoRule::None;
  std::string to_string() const;
};

HomeoVerdict homeo_attractor_verdict(const Tower& t);

enum class FlowRule { EventuallyConcentric, H1NotZ, PersistentlyNonConcentric };

struct FlowVerdict {
  bool realizable = false;
  FlowRule rule = FlowRule::H1NotZ;
  /// Set for cycles mixing concentric and non-concentric stages, where the
  /// verdict extends the transitivity argument rather than applying it as is.
  bool extrapolated = false;
  std::string to_string() const;
};

FlowVerdict flow_attractor_verdict(const Tower& t);

// ------------------------------------------------------- connected sums

/// Multiplicity in N u {omega}; omega for summands that recur in the cycle.
struct Multiplicity {
  std::int64_t count = 0;
  bool omega = false;
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

using SummandMultiset = std::map<std::string, Multiplicity>;

/// Prime summands of the core knot of the whole tower, keyed by prime_key().
/// Requires every stage to be Swallow or CoreParallel.
SummandMultiset connected_sum_summands(const Tower& t);

enum class SumComparison { Inequivalent, Inconclusive };

struct SumDistinction {
  SumComparison result = SumComparison::Inconclusive;
  std::string witness;  // a summand whose multiplicity differs
};

SumDistinction distinguish_connected_sums(const Tower& a, const Tower& b);

// ------------------------------------------------------------- r-invariant

int r_of_toroidal(const Tower& t);

enum class H1Kind { Zero, Z, Other };
enum class RClass { Toroidal, ToroidalComponentPlusCellular, Inconclusive };

struct RClassification {
  RClass kind = RClass::Inconclusive;
  std::string note;
};

/// `r == nullopt` encodes r = infinity.
RClassification classify_by_r(std::optional<std::int64_t> r, H1Kind h1,
                              bool h2_trivial, bool connected);

std::string to_string(RClass c);

}  // namespace toroidal
