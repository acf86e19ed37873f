#include <iomanip>
#include <sstream>

#include "zdlab/serialize.hpp"
#include "zdlab/verify.hpp"

namespace zdlab {

namespace {

std::string_view kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::Checked: return "checked";
    case ClaimKind::FiniteSpecialization: return "finite specialization";
    case ClaimKind::Definition: return "definition";
    case ClaimKind::OutOfScope: return "out of scope";
  }
  return "?";
}

const ClaimInfo* catalog_entry(const std::string& id) {
  for (const ClaimInfo& c : claim_catalog()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace

std::string format_table(const SuiteResult& result, bool timing) {
  std::ostringstream os;
  os << "scope: " << result.scope << "\n";
  os << std::left << std::setw(16) << "claim" << std::setw(16) << "verdict" << std::right
     << std::setw(6) << "pass" << std::setw(6) << "fail" << std::setw(6) << "n/a" << std::setw(7)
     << "unrec";
  if (timing) os << std::setw(10) << "seconds";
  os << "  scope\n";
  for (const TheoremReport& r : result.reports) {
    std::string verdict(to_string(r.verdict));
    const ClaimInfo* info = catalog_entry(r.claim);
    if (info && info->kind == ClaimKind::FiniteSpecialization) verdict += "*";
    os << std::left << std::setw(16) << r.claim << std::setw(16) << verdict << std::right
       << std::setw(6) << r.tally.pass << std::setw(6) << r.tally.fail << std::setw(6)
       << r.tally.not_applicable << std::setw(7) << r.tally.unreconciled;
    if (timing) os << std::setw(10) << std::fixed << std::setprecision(3) << r.seconds;
    os << "  " << (r.scope == result.scope ? std::string("suite") : r.scope) << "\n";
    if (r.counterexample) {
      os << "    counterexample " << r.counterexample->ring.label() << ": "
         << r.counterexample->message << "\n";
    }
    for (const std::string& note : r.notes) os << "    " << note << "\n";
  }
  bool header = false;
  for (const ClaimInfo& c : claim_catalog()) {
    if (c.kind == ClaimKind::Checked) continue;
    if (!header) {
      os << "\n";
      header = true;
    }
    os << std::left << std::setw(16) << c.id << kind_name(c.kind) << ": " << c.summary << "\n";
  }
  os << "\n" << result.rings_checked << " rings checked; "
     << (result.any_fail() ? "FAIL" : "no failures") << "\n";
  return os.str();
}

std::string format_jsonl(const SuiteResult& result, bool timing) {
  std::string out;
  for (const TheoremReport& r : result.reports) {
    nlohmann::json doc;
    doc["claim"] = r.claim;
    doc["scope"] = r.scope;
    doc["verdict"] = std::string(to_string(r.verdict));
    if (const ClaimInfo* info = catalog_entry(r.claim)) {
      doc["kind"] = std::string(kind_name(info->kind));
    }
    doc["tally"] = {{"checked", r.tally.checked},
                    {"pass", r.tally.pass},
                    {"fail", r.tally.fail},
                    {"not_applicable", r.tally.not_applicable},
                    {"unreconciled", r.tally.unreconciled}};
    if (r.counterexample) {
      doc["counterexample"] = {{"ring", ring_to_json(r.counterexample->ring)},
                               {"witnesses", r.counterexample->witnesses},
                               {"message", r.counterexample->message}};
    } else {
      doc["counterexample"] = nullptr;
    }
    doc["notes"] = r.notes;
    if (timing) doc["seconds"] = r.seconds;
    out += doc.dump() + "\n";
  }
  return out;
}

}  // namespace zdlab
