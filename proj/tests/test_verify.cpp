#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "zdlab/serialize.hpp"
#include "zdlab/verify.hpp"

using namespace zdlab;

namespace {

const TheoremReport& find(const std::vector<TheoremReport>& reports, std::string_view id) {
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [&](const TheoremReport& r) { return r.claim == id; });
  REQUIRE_MESSAGE(it != reports.end(), "no report for " << id);
  return *it;
}

bool has_note(const TheoremReport& r, std::string_view text) {
  return std::any_of(r.notes.begin(), r.notes.end(),
                     [&](const std::string& n) { return n.find(text) != std::string::npos; });
}

SuiteConfig small_suite() {
  SuiteConfig c;
  c.min_order = 2;
  c.max_order = 6;
  return c;
}

// Rejects commutative rings with a zero divisor, citing one.
std::vector<TheoremReport> no_commutative_zero_divisors(const RingContext& ctx) {
  TheoremReport r;
  r.claim = "Injected";
  r.verdict = Verdict::Pass;
  if (is_commutative(ctx.ring) && !ctx.sets.zero_divisors.empty()) {
    r.verdict = Verdict::Fail;
    r.counterexample = Counterexample{ctx.ring, {ctx.sets.zero_divisors.front()}, "zero divisor"};
  }
  ++r.tally.checked;
  ++(r.verdict == Verdict::Fail ? r.tally.fail : r.tally.pass);
  return {r};
}

}  // namespace

TEST_CASE("verdict names and conventions") {
  CHECK(to_string(Verdict::Pass) == "pass");
  CHECK(to_string(Verdict::Unreconciled) == "unreconciled");
  CHECK(to_string(Verdict::NotApplicable) == "not-applicable");
  CHECK(parse_convention("simple") == ConventionChoice::Simple);
  CHECK(parse_convention("loops") == ConventionChoice::WithLoops);
  CHECK(parse_convention("both") == ConventionChoice::Both);
  CHECK_FALSE(parse_convention("none"));
}

TEST_CASE("merging keeps the most severe verdict and the first counterexample") {
  const std::vector<Verdict> order = {Verdict::NotApplicable, Verdict::Pass,
                                      Verdict::Unreconciled, Verdict::Fail};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      TheoremReport a;
      a.verdict = order[i];
      TheoremReport b;
      b.verdict = order[j];
      merge_report(a, b);
      CHECK(a.verdict == order[std::max(i, j)]);
    }
  }
  TheoremReport into;
  TheoremReport f1;
  f1.verdict = Verdict::Fail;
  f1.counterexample = Counterexample{cyclic_ring(4), {2}, "first"};
  f1.tally.checked = f1.tally.fail = 1;
  TheoremReport f2 = f1;
  f2.counterexample->message = "second";
  merge_report(into, f1);
  merge_report(into, f2);
  REQUIRE(into.counterexample);
  CHECK(into.counterexample->message == "first");
  CHECK(into.tally.fail == 2);
  CHECK(into.tally.checked == 2);
}

TEST_CASE("the 2x2 first-row ring over Z/2") {
  const auto reports = check_ring(support::t2());
  CHECK(find(reports, "Thm2.4").verdict == Verdict::Pass);
  // One-sided identities only, so the small-ring lemma does not apply.
  CHECK(find(reports, "Lemma2.2").verdict == Verdict::NotApplicable);
  CHECK(find(check_ring(cyclic_ring(4)), "Lemma2.2").verdict == Verdict::Pass);
  CHECK(find(reports, "List2.2").verdict == Verdict::Pass);
  CHECK(find(reports, "Cor3.3").verdict == Verdict::NotApplicable);
  CHECK(find(check_ring(direct_product(support::t2(), cyclic_ring(2))), "Cor3.3").verdict ==
        Verdict::Pass);
  CHECK(find(reports, "IeRe").verdict == Verdict::Pass);
  CHECK(find(reports, "Cor4.9").verdict == Verdict::Pass);
  const TheoremReport& degrees = find(reports, "Prop2.5(1)");
  CHECK(degrees.verdict == Verdict::Unreconciled);
  CHECK(has_note(degrees, "actual"));
  CHECK(has_note(degrees, "simple actual 2; loops actual 3"));
  // Order 4 is below the range of the endpoint characterization; the
  // square-zero source lies in both Z_l and Z_r.
  const TheoremReport& sinks = find(reports, "Prop4.2(3)");
  CHECK(sinks.verdict == Verdict::NotApplicable);
  CHECK(has_note(sinks, "below order 5"));
  for (const auto& r : reports) CHECK_MESSAGE(r.verdict != Verdict::Fail, r.claim);

  const RingContext ctx(support::t2());
  CHECK(classify_small_graph(ctx) == std::optional<std::string>{"out_star"});
  CHECK(classify_small_graph(RingContext(opposite_ring(support::t2()))) ==
        std::optional<std::string>{"in_star"});
}

TEST_CASE("rings with an identity") {
  for (const FiniteRing& r : {cyclic_ring(6), cyclic_ring(8), full_matrix_ring(2, 2)}) {
    CAPTURE(r.label());
    const auto reports = check_ring(r);
    CHECK(find(reports, "Thm2.4").verdict == Verdict::Pass);
    CHECK(find(reports, "Prop2.5(1)").verdict == Verdict::NotApplicable);
    CHECK(find(reports, "Cor4.8").verdict != Verdict::Fail);
    for (const auto& rep : reports) CHECK_MESSAGE(rep.verdict != Verdict::Fail, rep.claim);
  }
}

TEST_CASE("first-row ring over Z/3") {
  const RingContext ctx(support::u3());
  CHECK(ctx.inv_r == ctx.sinks);
  CHECK(ctx.sources.empty());
  const auto reports = check_prop_3_2_to_cor_3_9(ctx, ConventionChoice::Both);
  CHECK(find(reports, "Prop3.8").verdict == Verdict::Pass);
  // ann_l(e) has three elements here.
  CHECK(find(reports, "Cor3.3").verdict == Verdict::NotApplicable);
  CHECK(find(check_prop_4_2_to_cor_4_9(ctx), "Prop4.2(1)").verdict == Verdict::Pass);
  CHECK(find(check_prop_3_1(ctx), "Prop3.1(1)").verdict == Verdict::NotApplicable);
}

TEST_CASE("conventions restrict the comparison") {
  const RingContext ctx(support::t2());
  const auto simple = check_prop_2_5(ctx, ConventionChoice::Simple);
  const auto loops = check_prop_2_5(ctx, ConventionChoice::WithLoops);
  CHECK(find(simple, "Prop2.5(3)").verdict == Verdict::Pass);
  CHECK(find(loops, "Prop2.5(3)").verdict == Verdict::Unreconciled);
}

TEST_CASE("worked examples") {
  const auto reports = check_examples_2_8_to_2_10();
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CAPTURE(r.claim);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.tally.checked >= 2);
  }
}

TEST_CASE("small-ring graph list") {
  CHECK(small_ring_graph_list(2).size() == 2);
  CHECK(small_ring_graph_list(3).size() == 2);
  CHECK(small_ring_graph_list(4).size() == 7);
  CHECK(small_ring_graph_list(5).empty());
}

TEST_CASE("claim catalog") {
  const auto& cat = claim_catalog();
  std::set<std::string> ids;
  for (const auto& c : cat) ids.insert(c.id);
  CHECK(ids.size() == cat.size());
  for (const char* id : {"Lemma2.1", "Thm2.4", "Prop2.5(3)", "Ex2.10", "Prop3.8", "Def3.7",
                         "Prop4.2(4)", "Prop4.7", "Cor4.9"}) {
    CHECK_MESSAGE(ids.count(id) == 1, id);
  }
  const auto kind = [&](std::string_view id) {
    return std::find_if(cat.begin(), cat.end(), [&](const ClaimInfo& c) { return c.id == id; })
        ->kind;
  };
  CHECK(kind("Def4.1") == ClaimKind::Definition);
  CHECK(kind("Prop4.7") == ClaimKind::FiniteSpecialization);
  CHECK(kind("Cor4.8(general)") == ClaimKind::OutOfScope);

  // Every checked claim shows up in a full suite run.
  const SuiteResult all = run_suite(small_suite());
  for (const auto& c : cat) {
    if (c.kind == ClaimKind::Checked || c.kind == ClaimKind::FiniteSpecialization) {
      const bool found = std::any_of(all.reports.begin(), all.reports.end(),
                                     [&](const TheoremReport& r) { return r.claim == c.id; });
      CHECK_MESSAGE(found, c.id);
    }
  }
}

TEST_CASE("claim selection") {
  CHECK(claim_selected("Prop4.2(3)", {}));
  CHECK(claim_selected("Prop4.2(3)", {"Prop4.2"}));
  CHECK(claim_selected("Prop4.2(3)", {"Prop4.2(3)"}));
  CHECK_FALSE(claim_selected("Prop4.2(3)", {"Prop4.2(1)"}));
  CHECK_FALSE(claim_selected("Prop4.20", {"Prop4.2"}));
  CHECK_FALSE(claim_selected("Thm2.4", {"Prop2.5", "Cor2.7"}));

  SuiteConfig c = small_suite();
  c.claims = {"Prop4.2", "Thm2.4"};
  const SuiteResult r = run_suite(c);
  std::vector<std::string> ids;
  for (const auto& rep : r.reports) ids.push_back(rep.claim);
  CHECK(ids == std::vector<std::string>{"Thm2.4", "Prop4.2(1)", "Prop4.2(2)", "Prop4.2(3)",
                                        "Prop4.2(4)"});
}

TEST_CASE("the default suite has no failures") {
  SuiteConfig c;
  const SuiteResult r = run_suite(c);
  CHECK_FALSE(r.any_fail());
  CHECK(r.rings_checked == 75 + family_rings().size());
  CHECK(family_rings().size() == 53);
  CHECK(r.scope.find("orders 2..8") != std::string::npos);
  CHECK(find(r.reports, "List2.2").verdict == Verdict::Pass);
  CHECK(has_note(find(r.reports, "List2.2"), "order 4 realizes K_0 K_1 K_2 K_3 path in_star out_star"));
  CHECK(find(r.reports, "Prop2.5(1)").verdict == Verdict::Unreconciled);
}

TEST_CASE("suite output is deterministic across runs and thread counts") {
  SuiteConfig c;
  const std::string one = format_jsonl(run_suite(c));
  CHECK(format_jsonl(run_suite(c)) == one);
  const std::string table = format_table(run_suite(c));
  c.threads = 3;
  CHECK(format_jsonl(run_suite(c)) == one);
  CHECK(format_table(run_suite(c)) == table);
}

TEST_CASE("an injected failure carries a replayable counterexample") {
  SuiteConfig c = small_suite();
  c.families = false;
  c.extra_checks.push_back(no_commutative_zero_divisors);
  const SuiteResult r = run_suite(c);
  CHECK(r.any_fail());
  const TheoremReport& injected = r.reports.back();
  CHECK(injected.claim == "Injected");
  CHECK(injected.verdict == Verdict::Fail);
  REQUIRE(injected.counterexample);
  const Counterexample& cx = *injected.counterexample;

  // Round trip through JSON and rerun the check on the rebuilt ring.
  const FiniteRing replay = ring_from_json_text(ring_to_line(cx.ring));
  CHECK(replay == cx.ring);
  const auto again = no_commutative_zero_divisors(RingContext(replay));
  CHECK(again.front().verdict == Verdict::Fail);
  CHECK(again.front().counterexample->witnesses == cx.witnesses);
  CHECK(replay.mul(cx.witnesses[0], cx.witnesses[0]) != 1);

  const std::string table = format_table(r);
  CHECK(table.find("FAIL") != std::string::npos);
  CHECK(table.find(cx.ring.label()) != std::string::npos);
  const std::string jsonl = format_jsonl(r);
  const auto last = nlohmann::json::parse(jsonl.substr(jsonl.rfind('\n', jsonl.size() - 2) + 1));
  CHECK(last["claim"] == "Injected");
  CHECK(last["verdict"] == "fail");
  CHECK(ring_from_json(last["counterexample"]["ring"]) == cx.ring);

  c.fail_fast = true;
  const SuiteResult fast = run_suite(c);
  CHECK(fast.any_fail());
  CHECK(fast.rings_checked < r.rings_checked);
  CHECK(fast.reports.back().tally.fail == 1);
}

TEST_CASE("orders past the enumeration limits are refused") {
  SuiteConfig c;
  c.max_order = 9;
  CHECK_THROWS_AS(run_suite(c), RingError);
  c.max_order = 32;
  c.allow_large = true;
  try {
    run_suite(c);
    FAIL("accepted");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::OrderTooLarge);
  }
  c.min_order = 5;
  c.max_order = 4;
  CHECK_THROWS_AS(run_suite(c), RingError);
}

TEST_CASE("report formats") {
  SuiteConfig c = small_suite();
  c.claims = {"Thm2.4"};
  const SuiteResult r = run_suite(c);
  const std::string table = format_table(r);
  CHECK(table.rfind("scope: orders 2..6", 0) == 0);
  CHECK(table.find("Thm2.4") != std::string::npos);
  CHECK(table.find("no failures") != std::string::npos);
  CHECK(format_table(r, true).find("seconds") != std::string::npos);

  const std::string jsonl = format_jsonl(r);
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 1);
  const auto j = nlohmann::json::parse(jsonl);
  CHECK(j["claim"] == "Thm2.4");
  CHECK(j["verdict"] == "pass");
  CHECK(j["counterexample"].is_null());
  CHECK(j["kind"] == "checked");
  CHECK_FALSE(j.contains("seconds"));
  CHECK(nlohmann::json::parse(format_jsonl(r, true)).contains("seconds"));
  CHECK(j["tally"]["checked"] == r.rings_checked);
}
