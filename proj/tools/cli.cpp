#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "zdlab/builders.hpp"
#include "zdlab/enumerate.hpp"
#include "zdlab/graph.hpp"
#include "zdlab/serialize.hpp"
#include "zdlab/verify.hpp"

namespace zdlab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t parse_size(std::string_view text, const std::string& what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("expected a non-negative integer for " + what + ", got '" +
                     std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, sep)) parts.push_back(part);
  return parts;
}

FiniteRing build_family(const std::string& family, const std::vector<std::string>& params,
                        const SizeCaps& caps) {
  std::vector<std::size_t> p;
  for (const auto& s : params) p.push_back(parse_size(s, family + " parameter"));
  auto arity = [&](std::size_t n) {
    if (p.size() != n) {
      throw UsageError(family + " takes " + std::to_string(n) + " parameter(s), got " +
                       std::to_string(p.size()));
    }
  };
  if (family == "cyclic") {
    arity(1);
    return cyclic_ring(p[0], caps);
  }
  if (family == "null") {
    if (p.empty()) throw RingError(ErrorKind::EmptyFactorList, "null needs at least one factor");
    return null_ring(p, caps);
  }
  if (family == "first_row") {
    arity(2);
    return first_row_ring(p[0], p[1], caps);
  }
  if (family == "full_matrix") {
    arity(2);
    return full_matrix_ring(p[0], p[1], caps);
  }
  throw UsageError("unknown family '" + family + "'");
}

std::string read_stream(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FiniteRing read_ring(const std::string& source, std::istream& in) {
  if (source.empty() || source == "-") return ring_from_json_text(read_stream(in));
  std::ifstream file(source);
  if (!file) throw UsageError("cannot open '" + source + "'");
  return ring_from_json_text(read_stream(file));
}

// "family:p1,p2" or a ring JSON file.
FiniteRing ring_spec(const std::string& spec, const SizeCaps& caps, std::istream& in) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return read_ring(spec, in);
  return build_family(spec.substr(0, colon), split(spec.substr(colon + 1), ','), caps);
}

std::pair<std::size_t, std::size_t> parse_orders(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t n = parse_size(text, "--orders");
    return {n, n};
  }
  const std::size_t lo = parse_size(std::string_view(text).substr(0, dots), "--orders");
  const std::size_t hi = parse_size(std::string_view(text).substr(dots + 2), "--orders");
  if (lo < 1 || lo > hi) throw UsageError("bad order range '" + text + "'");
  return {lo, hi};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

std::string render_graph(const FiniteRing& ring, bool dot) {
  const ZdGraph g = build_graph(ring);
  return dot ? graph_to_dot(g) : graph_to_json(g).dump() + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite rings and their directed zero-divisor graphs", "zdlab"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool deterministic = false;
  app.add_flag("--deterministic", deterministic, "Single-threaded, no timing output");

  auto* build = app.add_subcommand("build", "Build a ring and print it as JSON");
  std::string family;
  std::vector<std::string> params;
  bool opposite = false;
  build->add_option("family", family, "cyclic | null | first_row | full_matrix | product")
      ->required();
  build->add_option("params", params,
                    "Family parameters; product takes two specs such as cyclic:2 or ring.json")
      ->required();
  build->add_flag("--opposite", opposite, "Reverse the multiplication");

  auto* enumerate = app.add_subcommand("enumerate", "List the rings of one order as JSON lines");
  std::size_t order = 0;
  bool dedup = true;
  std::size_t shards = 1;
  std::string emit = "jsonl";
  bool large = false;
  bool stats = false;
  enumerate->add_option("--order", order, "Ring order")->required();
  enumerate->add_flag("--dedup,!--no-dedup", dedup,
                      "One ring per isomorphism class (default) or every table");
  enumerate->add_option("--shards", shards, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--emit", emit, "jsonl | count")->check(CLI::IsMember({"jsonl", "count"}));
  enumerate->add_flag("--large", large, "Allow orders above the default limit");
  enumerate->add_flag("--stats", stats, "Print search statistics to stderr");

  auto* graph = app.add_subcommand("graph", "Print the zero-divisor graph of a ring");
  std::string graph_input = "-";
  bool dot = false;
  graph->add_option("ring", graph_input, "Ring JSON file, - for stdin");
  graph->add_flag("--dot", dot, "Graphviz output instead of JSON");

  auto* exporter = app.add_subcommand("export", "Write the graph (or ring) of a ring to a file");
  std::string export_input = "-";
  std::string export_format = "dot";
  std::string export_output;
  exporter->add_option("ring", export_input, "Ring JSON file, - for stdin");
  exporter->add_option("--format", export_format, "dot | json | ring")
      ->check(CLI::IsMember({"dot", "json", "ring"}));
  exporter->add_option("-o,--output", export_output, "Output path, - for stdout")->required();

  auto* verify = app.add_subcommand("verify", "Run the theorem suite");
  std::string orders = "2..8";
  std::vector<std::string> claims;
  std::string convention = "both";
  bool fail_fast = false;
  bool jsonl = false;
  bool no_families = false;
  bool no_enumeration = false;
  bool verify_large = false;
  bool timing = false;
  std::size_t threads = 1;
  verify->add_option("--orders", orders, "Order range a..b (or a single order)");
  verify->add_option("--claims", claims, "Claim ids; Prop4.2 selects all its parts")
      ->delimiter(',');
  verify->add_option("--convention", convention, "simple | loop | both")
      ->check(CLI::IsMember({"simple", "loop", "both"}));
  verify->add_flag("--fail-fast", fail_fast, "Stop at the first failing ring");
  verify->add_flag("--jsonl", jsonl, "JSON lines instead of a table");
  verify->add_flag("--no-families", no_families, "Skip the builder-family rings");
  verify->add_flag("--no-enumeration", no_enumeration, "Only the builder-family rings");
  verify->add_flag("--large", verify_large, "Allow orders above the default limit");
  verify->add_flag("--timing", timing, "Report time per claim");
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const SizeCaps caps = SizeCaps::from_env();
  try {
    if (*build) {
      FiniteRing ring = [&] {
        if (family == "product") {
          if (params.size() != 2) throw UsageError("product takes exactly two ring specs");
          return direct_product(ring_spec(params[0], caps, in), ring_spec(params[1], caps, in),
                                caps);
        }
        return build_family(family, params, caps);
      }();
      if (opposite) ring = opposite_ring(ring);
      out << ring_to_line(ring);
      return kOk;
    }
    if (*enumerate) {
      EnumerationTask task;
      EnumerationStats counters;
      task.order = order;
      task.dedup = dedup;
      task.shards = deterministic ? 1 : shards;
      task.allow_large = large;
      task.caps = caps;
      task.stats = &counters;
      std::size_t count = 0;
      enumerate_rings(task, [&](const FiniteRing& r) {
        ++count;
        if (emit == "jsonl") out << ring_to_line(r);
      });
      if (emit == "count") out << count << "\n";
      if (stats) {
        err << "search nodes " << counters.search_nodes << ", structures "
            << counters.raw_structures << ", classes " << counters.classes << "\n";
      }
      return kOk;
    }
    if (*graph) {
      out << render_graph(read_ring(graph_input, in), dot);
      return kOk;
    }
    if (*exporter) {
      const FiniteRing ring = read_ring(export_input, in);
      const std::string text =
          export_format == "ring" ? ring_to_line(ring) : render_graph(ring, export_format == "dot");
      write_output(export_output, text, out);
      return kOk;
    }
    if (*verify) {
      if (no_families && no_enumeration) throw UsageError("nothing to verify");
      SuiteConfig config;
      std::tie(config.min_order, config.max_order) = parse_orders(orders);
      config.enumerate = !no_enumeration;
      config.families = !no_families;
      config.claims = claims;
      config.convention = *parse_convention(convention);
      config.fail_fast = fail_fast;
      config.allow_large = verify_large;
      config.threads = deterministic ? 1 : threads;
      config.caps = caps;
      const bool show_timing = timing && !deterministic;
      const SuiteResult result = run_suite(config);
      if (result.reports.empty()) throw UsageError("no claim matches --claims");
      out << (jsonl ? format_jsonl(result, show_timing) : format_table(result, show_timing));
      return result.any_fail() ? kVerificationFailed : kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RingError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace zdlab::cli
