#include "zdlab/serialize.hpp"

#include <sstream>

namespace zdlab {

using nlohmann::json;

namespace {

json table_json(const FiniteRing& ring, bool multiply) {
  const std::size_t n = ring.order();
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = static_cast<Element>(i);
      const auto b = static_cast<Element>(j);
      row.push_back(multiply ? ring.mul(a, b) : ring.add(a, b));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Table table_from_json(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw RingError(ErrorKind::ParseError, std::string("missing table \"") + key + "\"");
  }
  Table table;
  for (const json& row : doc[key]) {
    if (!row.is_array()) {
      throw RingError(ErrorKind::ParseError, std::string(key) + " rows must be arrays");
    }
    std::vector<std::int64_t> values;
    for (const json& v : row) {
      if (!v.is_number_integer()) {
        throw RingError(ErrorKind::ParseError, std::string(key) + " entries must be integers");
      }
      values.push_back(v.get<std::int64_t>());
    }
    table.push_back(std::move(values));
  }
  return table;
}

json set_json(const ElementSet& s) {
  json out = json::array();
  for (Element x : s) out.push_back(x);
  return out;
}

}  // namespace

json ring_to_json(const FiniteRing& ring) {
  json doc;
  doc["order"] = ring.order();
  doc["add"] = table_json(ring, false);
  doc["mul"] = table_json(ring, true);
  doc["label"] = ring.label();
  if (!ring.names().empty()) doc["names"] = ring.names();
  return doc;
}

FiniteRing ring_from_json(const json& doc) {
  if (!doc.is_object()) throw RingError(ErrorKind::ParseError, "ring must be a JSON object");
  const Table add = table_from_json(doc, "add");
  const Table mul = table_from_json(doc, "mul");
  if (doc.contains("order")) {
    if (!doc["order"].is_number_integer() ||
        doc["order"].get<std::int64_t>() != static_cast<std::int64_t>(add.size())) {
      throw RingError(ErrorKind::ParseError, "\"order\" disagrees with the tables");
    }
  }
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw RingError(ErrorKind::ParseError, "label must be a string");
    label = doc["label"].get<std::string>();
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    try {
      names = doc["names"].get<std::vector<std::string>>();
    } catch (const json::exception&) {
      throw RingError(ErrorKind::ParseError, "names must be an array of strings");
    }
  }
  return validate_ring(add, mul, std::move(label), std::move(names));
}

FiniteRing ring_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw RingError(ErrorKind::ParseError, e.what());
  }
  return ring_from_json(doc);
}

std::string ring_to_line(const FiniteRing& ring) { return ring_to_json(ring).dump() + "\n"; }

json graph_to_json(const ZdGraph& g) {
  const DistanceMatrix dist = distances(g.digraph());
  json doc;
  doc["vertices"] = set_json(g.vertices());
  json edges = json::array();
  for (const auto& [from, to] : g.digraph().edges()) edges.push_back({from, to});
  doc["edges"] = std::move(edges);
  doc["loops"] = set_json(g.loops());
  doc["sinks"] = set_json(sinks(g));
  doc["sources"] = set_json(sources(g));
  const auto diameter = dist.diameter();
  doc["diameter"] = diameter ? json(*diameter) : json(nullptr);
  doc["max_finite_distance"] = dist.max_finite();
  doc["clique_number"] = clique_number(g.digraph());
  doc["strongly_connected"] = strongly_connected(g.digraph());
  doc["weakly_connected"] = weakly_connected(g.digraph());
  return doc;
}

std::string graph_to_dot(const ZdGraph& g) {
  const ElementSet sink_set = sinks(g);
  const ElementSet source_set = sources(g);
  std::ostringstream os;
  std::string title = g.ring().label();
  for (char& c : title) {
    if (c == '"') c = '\'';
  }
  os << "digraph zd {\n";
  os << "  label=\"Gamma(" << title << ")\";\n";
  os << "  node [shape=circle];\n";
  for (Element v : g.vertices()) {
    std::string name = g.ring().element_name(v);
    for (char& c : name) {
      if (c == '"') c = '\'';
    }
    os << "  v" << v << " [label=\"" << name << "\"";
    if (contains(sink_set, v)) {
      os << ", style=filled, fillcolor=\"#d95f02\", class=sink";
    } else if (contains(source_set, v)) {
      os << ", style=filled, fillcolor=\"#1b9e77\", class=source";
    }
    os << "];\n";
  }
  for (const auto& [from, to] : g.digraph().edges()) {
    os << "  v" << from << " -> v" << to << ";\n";
  }
  for (Element v : g.loops()) os << "  v" << v << " -> v" << v << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace zdlab
