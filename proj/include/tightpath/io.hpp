#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tightpath/digraph.hpp"
#include "tightpath/psg.hpp"
#include "tightpath/rdigraph.hpp"
#include "tightpath/thresholds.hpp"

namespace tightpath {

using Json = nlohmann::json;

// All readers throw Error(InvalidInput) with the offending field named.
Json parse_json(std::string_view text, std::string_view what = "input");

// {"r", "n", "edges": [[...]]}
Json to_json(const RDigraph& g);
RDigraph rdigraph_from_json(const Json& doc);

// {"m", "arcs": [[u, v]]}, optionally "labels" (PSG vertex names).
Json to_json(const Digraph& d, const std::vector<std::string>& labels = {});
Digraph digraph_from_json(const Json& doc);

// Vertex references in cycle lists and certificates are either integer ids or,
// when `r` is known, permutation strings resolved to their PSG rank.
int vertex_from_json(const Json& v, std::optional<int> r);

// {"r", "cycles": [["1234", ...]]}
Json cycle_list_to_json(int r, const CycleFamily& family);
CycleFamily cycle_list_from_json(const Json& doc, std::optional<int> r);

// {"kind", "t", "avoid", "transversal", "family"}; PSG vertices are written as
// permutation strings when `r` is given.
Json to_json(const ThresholdCertificate& cert, std::optional<int> r = std::nullopt);
ThresholdCertificate certificate_from_json(const Json& doc, std::optional<int> r);

std::vector<std::string> psg_labels(int r);

// DOT with quoted identifiers; loops and labels kept.
std::string to_dot(const Digraph& d, const std::vector<std::string>& labels = {}, std::string_view name = "G");
// Incidence form: one box node per edge, arcs from its vertices labelled by position.
std::string to_dot(const RDigraph& g, std::string_view name = "H");

// Stable rendering used for every output: two-space indent, trailing newline.
std::string dump(const Json& doc);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

}  // namespace tightpath
