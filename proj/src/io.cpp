#include "tightpath/io.hpp"

#include <cstdio>
#include <sstream>

#include "tightpath/error.hpp"
#include "tightpath/permutation.hpp"

namespace tightpath {

namespace {

const Json& field(const Json& doc, const char* key, std::string_view what) {
  if (!doc.is_object() || !doc.contains(key)) {
    fail(ErrorKind::InvalidInput, std::string(what) + ": missing field \"" + key + "\"");
  }
  return doc.at(key);
}

int int_field(const Json& doc, const char* key, std::string_view what) {
  const Json& v = field(doc, key, what);
  if (!v.is_number_integer()) fail(ErrorKind::InvalidInput, std::string(what) + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const Json& v, std::string_view what) {
  if (!v.is_array()) fail(ErrorKind::InvalidInput, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) fail(ErrorKind::InvalidInput, std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<int> vertex_list(const Json& v, std::optional<int> r, std::string_view what) {
  if (!v.is_array()) fail(ErrorKind::InvalidInput, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(vertex_from_json(x, r));
  return out;
}

Json vertex_to_json(int v, std::optional<int> r) {
  if (r) return Permutation::unrank(*r, static_cast<std::uint64_t>(v)).to_string();
  return v;
}

Json vertices_to_json(const std::vector<int>& vs, std::optional<int> r) {
  Json out = Json::array();
  for (int v : vs) out.push_back(vertex_to_json(v, r));
  return out;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string(what) + ": " + e.what());
  }
}

Json to_json(const RDigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(e);
  return {{"r", g.r()}, {"n", g.n()}, {"edges", std::move(edges)}};
}

RDigraph rdigraph_from_json(const Json& doc) {
  const int r = int_field(doc, "r", "r-digraph");
  const int n = int_field(doc, "n", "r-digraph");
  if (n < 0 || r < 1) fail(ErrorKind::InvalidInput, "r-digraph: need n >= 0 and r >= 1");
  const Json& edges = field(doc, "edges", "r-digraph");
  if (!edges.is_array()) fail(ErrorKind::InvalidInput, "r-digraph: \"edges\" must be an array");
  std::vector<Tuple> tuples;
  tuples.reserve(edges.size());
  for (const auto& e : edges) tuples.push_back(int_list(e, "r-digraph edge"));
  return RDigraph(n, r, std::move(tuples));
}

Json to_json(const Digraph& d, const std::vector<std::string>& labels) {
  Json arcs = Json::array();
  for (const auto& [u, v] : d.arcs()) arcs.push_back({u, v});
  Json out = {{"m", d.vertex_count()}, {"arcs", std::move(arcs)}};
  if (!labels.empty()) out["labels"] = labels;
  return out;
}

Digraph digraph_from_json(const Json& doc) {
  const int m = int_field(doc, "m", "digraph");
  if (m < 0) fail(ErrorKind::InvalidInput, "digraph: need m >= 0");
  const Json& arcs = field(doc, "arcs", "digraph");
  if (!arcs.is_array()) fail(ErrorKind::InvalidInput, "digraph: \"arcs\" must be an array");
  std::vector<Arc> list;
  for (const auto& a : arcs) {
    const auto uv = int_list(a, "digraph arc");
    if (uv.size() != 2 || uv[0] < 0 || uv[1] < 0 || uv[0] >= m || uv[1] >= m) {
      fail(ErrorKind::InvalidInput, "digraph: arc " + a.dump() + " is not a pair of vertices in [0, m)");
    }
    list.emplace_back(uv[0], uv[1]);
  }
  return Digraph(m, std::move(list));
}

int vertex_from_json(const Json& v, std::optional<int> r) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    if (!r) fail(ErrorKind::InvalidInput, "permutation vertex " + v.dump() + " needs a pattern-shift graph");
    const Permutation p = Permutation::parse(v.get<std::string>());
    if (p.size() != *r) fail(ErrorKind::InvalidInput, "vertex " + v.dump() + " is not a permutation of [" + std::to_string(*r) + "]");
    return static_cast<int>(p.rank());
  }
  fail(ErrorKind::InvalidInput, "vertex " + v.dump() + " must be an integer or a permutation string");
}

Json cycle_list_to_json(int r, const CycleFamily& family) {
  Json cycles = Json::array();
  for (const auto& c : family.cycles) cycles.push_back(vertices_to_json(c, r));
  return {{"r", r}, {"cycles", std::move(cycles)}};
}

CycleFamily cycle_list_from_json(const Json& doc, std::optional<int> r) {
  const Json& cycles = doc.is_array() ? doc : field(doc, "cycles", "cycle list");
  if (doc.is_object() && doc.contains("r") && !doc.at("r").is_null()) {
    const int declared = int_field(doc, "r", "cycle list");
    if (r && *r != declared) fail(ErrorKind::InvalidInput, "cycle list declares r = " + std::to_string(declared));
    r = declared;
  }
  if (!cycles.is_array()) fail(ErrorKind::InvalidInput, "cycle list must be an array");
  CycleFamily family;
  for (const auto& c : cycles) family.cycles.push_back(vertex_list(c, r, "cycle"));
  return family;
}

Json to_json(const ThresholdCertificate& cert, std::optional<int> r) {
  Json out;
  out["kind"] = cert.kind == CertificateKind::WalkAvoidance ? "walk-avoidance" : "cycle-transversal";
  out["t"] = cert.t ? Json(*cert.t) : Json(nullptr);
  if (r) out["psg"] = *r;
  out["avoid"] = vertices_to_json(cert.avoid_set, r);
  out["transversal"] = vertices_to_json(cert.transversal, r);
  out["family"] = nullptr;
  if (cert.family) {
    Json cycles = Json::array();
    for (const auto& c : cert.family->cycles) cycles.push_back(vertices_to_json(c, r));
    out["family"] = std::move(cycles);
  }
  return out;
}

ThresholdCertificate certificate_from_json(const Json& doc, std::optional<int> r) {
  ThresholdCertificate cert;
  const std::string kind = field(doc, "kind", "certificate").is_string() ? doc.at("kind").get<std::string>() : "";
  if (kind == "walk-avoidance") {
    cert.kind = CertificateKind::WalkAvoidance;
  } else if (kind == "cycle-transversal") {
    cert.kind = CertificateKind::CycleTransversal;
  } else {
    fail(ErrorKind::InvalidInput, "certificate: kind must be \"walk-avoidance\" or \"cycle-transversal\"");
  }
  if (doc.contains("psg") && !doc.at("psg").is_null()) {
    const int declared = int_field(doc, "psg", "certificate");
    if (r && *r != declared) {
      fail(ErrorKind::InvalidInput, "certificate is for PSG_" + std::to_string(declared) + ", not PSG_" + std::to_string(*r));
    }
  }
  if (doc.contains("t") && !doc.at("t").is_null()) cert.t = int_field(doc, "t", "certificate");
  if (doc.contains("avoid")) cert.avoid_set = vertex_list(doc.at("avoid"), r, "certificate avoid");
  if (doc.contains("transversal")) cert.transversal = vertex_list(doc.at("transversal"), r, "certificate transversal");
  if (doc.contains("family") && !doc.at("family").is_null()) cert.family = cycle_list_from_json(doc.at("family"), r);
  return cert;
}

std::vector<std::string> psg_labels(int r) {
  std::vector<std::string> out;
  const std::uint64_t count = permutation_count(r);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(Permutation::unrank(r, i).to_string());
  return out;
}

std::string to_dot(const Digraph& d, const std::vector<std::string>& labels, std::string_view name) {
  auto id = [&](int v) { return quote(labels.empty() ? std::to_string(v) : labels[static_cast<std::size_t>(v)]); };
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  for (int v = 0; v < d.vertex_count(); ++v) os << "  " << id(v) << ";\n";
  for (const auto& [u, v] : d.arcs()) os << "  " << id(u) << " -> " << id(v) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const RDigraph& g, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << quote(std::to_string(v)) << ";\n";
  std::size_t i = 0;
  for (const auto& e : g.edges()) {
    std::string label;
    for (std::size_t p = 0; p < e.size(); ++p) label += (p ? " " : "") + std::to_string(e[p]);
    const std::string node = quote("e" + std::to_string(i++));
    os << "  " << node << " [shape=box, label=" << quote(label) << "];\n";
    for (std::size_t p = 0; p < e.size(); ++p) {
      os << "  " << quote(std::to_string(e[p])) << " -> " << node << " [label=" << quote(std::to_string(p + 1)) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace tightpath
