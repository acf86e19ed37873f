#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdlab/graph.hpp"
#include "zdlab/ring.hpp"

namespace zdlab {

enum class Verdict { Pass, Fail, NotApplicable, Unreconciled };

std::string_view to_string(Verdict v);

// Which degree/edge counting conventions the numeric claims are compared
// under.
enum class ConventionChoice { Simple, WithLoops, Both };

std::optional<ConventionChoice> parse_convention(std::string_view text);

struct Counterexample {
  FiniteRing ring;
  std::vector<Element> witnesses;
  std::string message;
};

struct Tally {
  std::size_t checked = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
  std::size_t unreconciled = 0;
};

/// Verdict of one claim over some set of rings. A fail always carries a
/// counterexample ring that reproduces it.
struct TheoremReport {
  std::string claim;
  std::string scope;
  Verdict verdict = Verdict::NotApplicable;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;
  Tally tally;
  double seconds = 0.0;
};

// Folds `next` into `into` (same claim): fail beats unreconciled beats pass
// beats not-applicable; the first counterexample is kept.
void merge_report(TheoremReport& into, const TheoremReport& next);

/// Everything the per-ring checks look at, computed once.
struct RingContext {
  explicit RingContext(FiniteRing r);

  FiniteRing ring;
  ElementSets sets;
  ZdGraph graph;
  DistanceMatrix dist;
  ElementSet sinks;
  ElementSet sources;
  ElementSet inv_r;
  ElementSet inv_l;

  std::size_t order() const { return ring.order(); }
  bool square_zero(Element x) const { return ring.mul(x, x) == 0; }
};

// Per-ring checks. Each returns one report per claim id it covers.
std::vector<TheoremReport> check_lemma_2_1(const RingContext& ctx);
std::vector<TheoremReport> check_lemma_2_2_and_list(const RingContext& ctx);
std::vector<TheoremReport> check_prop_2_3(const RingContext& ctx);
std::vector<TheoremReport> check_theorem_2_4(const RingContext& ctx);
std::vector<TheoremReport> check_decomposition(const RingContext& ctx);
std::vector<TheoremReport> check_prop_2_5(const RingContext& ctx, ConventionChoice conv);
std::vector<TheoremReport> check_prop_2_6(const RingContext& ctx);
std::vector<TheoremReport> check_cor_2_7(const RingContext& ctx);
std::vector<TheoremReport> check_prop_3_1(const RingContext& ctx);
std::vector<TheoremReport> check_prop_3_2_to_cor_3_9(const RingContext& ctx, ConventionChoice conv);
std::vector<TheoremReport> check_prop_4_2_to_cor_4_9(const RingContext& ctx);

// Builds its own rings (matrix rings and first-row rings).
std::vector<TheoremReport> check_examples_2_8_to_2_10();

// All per-ring checks above on one ring.
std::vector<TheoremReport> check_ring(const FiniteRing& ring,
                                      ConventionChoice conv = ConventionChoice::Both);

/// Shapes of Gamma(R) allowed for |R| <= 4 by the small-ring list; empty
/// for other orders. Names: K_0..K_3, path (o<->o<->o), in_star (o->o<-o),
/// out_star (o<-o->o).
std::vector<std::pair<std::string, Digraph>> small_ring_graph_list(std::size_t order);

// Name of the listed shape Gamma(R) matches, if any.
std::optional<std::string> classify_small_graph(const RingContext& ctx);

enum class ClaimKind { Checked, FiniteSpecialization, Definition, OutOfScope };

struct ClaimInfo {
  std::string id;
  ClaimKind kind;
  std::string summary;
};

// Every claim id the suite knows, in report order.
const std::vector<ClaimInfo>& claim_catalog();

// Whether claim `id` is selected by `selector` ("Prop4.2" selects
// "Prop4.2(1)" ... "Prop4.2(4)").
bool claim_selected(std::string_view id, const std::vector<std::string>& selectors);

// Builder-family instances used by the suite (and their opposites).
std::vector<FiniteRing> family_rings(const SizeCaps& caps = {});

// A user-supplied per-ring check, run alongside the built-in ones.
using RingCheck = std::function<std::vector<TheoremReport>(const RingContext&)>;

struct SuiteConfig {
  std::size_t min_order = 2;
  std::size_t max_order = 8;
  bool enumerate = true;
  bool families = true;
  std::vector<std::string> claims;  // empty: all
  ConventionChoice convention = ConventionChoice::Both;
  bool fail_fast = false;
  bool allow_large = false;
  std::size_t threads = 1;
  SizeCaps caps = {};
  std::vector<RingCheck> extra_checks;
};

struct SuiteResult {
  std::string scope;
  std::vector<TheoremReport> reports;  // one per claim, catalog order
  std::size_t rings_checked = 0;

  bool any_fail() const;
};

/// Enumerates rings of each order (one per isomorphism class), adds the
/// family rings, runs every selected check and aggregates per claim.
/// Throws OrderTooLarge when max_order is past the enumeration limits.
SuiteResult run_suite(const SuiteConfig& config);

// Human-readable table, one row per claim.
std::string format_table(const SuiteResult& result, bool timing = false);
// One JSON object per claim per line; keys sorted, no timing unless asked.
std::string format_jsonl(const SuiteResult& result, bool timing = false);

}  // namespace zdlab
