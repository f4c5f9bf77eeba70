#pragma once

#include <string>

#include <json.hpp>

#include "impalg/algebra.hpp"
#include "impalg/hypergraph.hpp"
#include "impalg/polymatroid.hpp"
#include "impalg/profile.hpp"
#include "impalg/synth.hpp"

namespace impalg {

// File formats. All three are plain JSON objects with deterministic
// output ordering, so identical inputs always serialize to identical
// bytes.
//
//   hypergraph:  {"vertices": ["a", ...], "edges": [["a","b"], ...]}
//                edge members listed in vertex order; an optional
//                "as": "algebra" marks the antichain reading
//   profile:     {"m": k, "values": {"<mask>": v, ...}}
//                one decimal-bitmask key for every nonempty subset
//   polymatroid: {"m": k, "values": {"<mask>": v, ...}}
//                every subset including "0", which must map to 0

Hypergraph hypergraph_from_json(const nlohmann::json& j);
nlohmann::json hypergraph_to_json(const Hypergraph& h);
nlohmann::json algebra_to_json(const ImplicationAlgebra& alg);

Profile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const Profile& p);

PolymatroidFn polymatroid_from_json(const nlohmann::json& j);
nlohmann::json polymatroid_to_json(const PolymatroidFn& r);

nlohmann::json degeneracy_to_json(const DegeneracyReport& report);

// Parses a whole document, mapping malformed JSON to parse_error.
nlohmann::json parse_document(const std::string& text);

// Reads a file, mapping a missing/unreadable file to parse_error.
nlohmann::json load_json_file(const std::string& path);

// Bipartite incidence rendering for graphviz: round vertex nodes, boxed
// edge nodes, one undirected arc per membership.
std::string dot_incidence(const std::vector<std::string>& vertex_names,
                          std::span<const VertexSet> edges);
std::string dot_incidence(const Hypergraph& h);

}  // namespace impalg
