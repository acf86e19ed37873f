#pragma once

#include <string>

#include "json.hpp"
#include "zdlab/graph.hpp"
#include "zdlab/ring.hpp"

namespace zdlab {

// {"add": [[...]], "label": "...", "mul": [[...]], "order": n} plus "names"
// when the ring carries element names. Keys are emitted in sorted order.
nlohmann::json ring_to_json(const FiniteRing& ring);

// Validates the tables; malformed documents throw ParseError, bad tables the
// usual validate_ring errors.
FiniteRing ring_from_json(const nlohmann::json& doc);
FiniteRing ring_from_json_text(const std::string& text);

// One line, newline-terminated.
std::string ring_to_line(const FiniteRing& ring);

// {vertices, edges, loops, sinks, sources, diameter, max_finite_distance,
//  clique_number, strongly_connected, weakly_connected}. An infinite diameter
// is written as null.
nlohmann::json graph_to_json(const ZdGraph& g);

// Graphviz rendering: sinks and sources colored, loops drawn as self-edges,
// element names (when present) as vertex labels.
std::string graph_to_dot(const ZdGraph& g);

}  // namespace zdlab
