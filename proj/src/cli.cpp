#include "tightpath/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tightpath/conjectures.hpp"
#include "tightpath/error.hpp"
#include "tightpath/io.hpp"
#include "tightpath/paths.hpp"
#include "tightpath/psg.hpp"
#include "tightpath/table.hpp"
#include "tightpath/thresholds.hpp"
#include "tightpath/tournament.hpp"

#ifndef TIGHTPATH_VERSION
#define TIGHTPATH_VERSION "dev"
#endif

namespace tightpath {

namespace {

// Thrown by handlers for usage problems found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::string format = "json";
  std::uint64_t seed = 1;
  int threads = 1;
  std::int64_t budget_ms = 0;
  bool quiet = false;
  std::string out_path;
  std::string manifest_path;

  std::ostream* err = nullptr;
  std::ostringstream out;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest

  std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::InvalidInput, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    inputs.emplace_back(path, hex64(fnv1a64(text)));
    return text;
  }

  Json read_json(const std::string& path) { return parse_json(read_input(path), path); }

  void info(const std::string& message, Json extra = Json::object()) const {
    if (quiet) return;
    extra["level"] = "info";
    extra["message"] = message;
    *err << extra.dump() << "\n";
  }

  // Text falls back to JSON; DOT must be provided by the command.
  void emit(const Json& doc, const std::function<std::string()>& text = {},
            const std::function<std::string()>& dot = {}) {
    if (format == "dot") {
      if (!dot) throw UsageError("--format dot is not available for this command");
      out << dot();
    } else if (format == "text" && text) {
      out << text();
    } else {
      out << dump(doc);
    }
  }
};

void diagnostic(std::ostream& err, const char* level, int code, const std::string& kind, const std::string& message) {
  const Json line = {{"level", level}, {"exit", code}, {"kind", kind}, {"message", message}};
  err << line.dump() << "\n";
}

Json perm_list(const std::vector<Permutation>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

void check_order(int r) {
  if (r < 1 || r > PatternShiftGraph::kMaxOrder) {
    throw UsageError("--r must be in [1, " + std::to_string(PatternShiftGraph::kMaxOrder) + "]");
  }
}

// ---- psg -------------------------------------------------------------------

int psg_build(Context& ctx, int r) {
  check_order(r);
  const PatternShiftGraph psg(r);
  const auto labels = psg_labels(r);
  Json doc = to_json(psg.graph(), labels);
  doc["r"] = r;
  ctx.emit(
      doc,
      [&] {
        std::ostringstream os;
        for (int v = 0; v < psg.vertex_count(); ++v) {
          os << labels[v] << " ->";
          for (int w : psg.graph().out(v)) os << " " << labels[w];
          os << "\n";
        }
        return os.str();
      },
      [&] { return to_dot(psg.graph(), labels, "PSG_" + std::to_string(r)); });
  return kExitOk;
}

int psg_shift_cycles(Context& ctx, int r) {
  check_order(r);
  CycleFamily family;
  for (const auto& c : shift_cycles(r)) {
    std::vector<int> ids;
    for (const auto& p : c.vertices) ids.push_back(static_cast<int>(p.rank()));
    family.cycles.push_back(std::move(ids));
  }
  const Json doc = cycle_list_to_json(r, family);
  ctx.emit(doc, [&] {
    std::string s;
    for (const auto& c : doc.at("cycles")) {
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + c[i].get<std::string>();
      s += "\n";
    }
    return s;
  });
  return kExitOk;
}

int psg_chorded(Context& ctx, int r) {
  check_order(r);
  if (r < 2) throw UsageError("--r must be at least 2 for chord scans");
  const PatternShiftGraph psg(r);
  Json cycles = Json::array();
  bool valid = true;
  for (const auto& cycle : shift_cycles(r)) {
    const auto chords = chords_of(psg, cycle);
    if (chords.empty()) continue;
    Json ch = Json::array();
    for (const auto& c : chords) ch.push_back({c.from_index, c.to_index});
    const auto [a, b] = split_cycle(psg, cycle, chords.front());
    std::vector<int> ia, ib;
    for (const auto& p : a) ia.push_back(psg.vertex(p));
    for (const auto& p : b) ib.push_back(psg.vertex(p));
    const bool ok = verify_cycle_family(psg.graph(), CycleFamily{{ia, ib}}).ok && ia.size() + ib.size() == cycle.vertices.size();
    valid &= ok;
    cycles.push_back({{"cycle", perm_list(cycle.vertices)}, {"chords", ch}, {"split", {perm_list(a), perm_list(b)}},
                      {"split_valid", ok}});
  }
  const int phi = totient(r);
  const bool count_ok = static_cast<int>(cycles.size()) == phi;
  ctx.emit({{"r", r}, {"phi", phi}, {"chorded", cycles.size()}, {"cycles", cycles}, {"ok", count_ok && valid}});
  if (!count_ok) ctx.info("chorded shift-cycle count differs from phi(r)", {{"phi", phi}, {"found", cycles.size()}});
  return count_ok && valid ? kExitOk : kExitViolation;
}

// ---- thresh ----------------------------------------------------------------

struct GraphSource {
  Digraph graph;
  std::optional<int> r;  // set for PSG_r
  std::string name;
};

GraphSource load_graph(Context& ctx, int psg_r, const std::string& path) {
  if ((psg_r > 0) == !path.empty()) throw UsageError("give exactly one of --psg and --graph");
  if (psg_r > 0) {
    check_order(psg_r);
    return {PatternShiftGraph(psg_r).graph(), psg_r, "PSG_" + std::to_string(psg_r)};
  }
  return {digraph_from_json(ctx.read_json(path)), std::nullopt, path};
}

int thresh_exact(Context& ctx, int psg_r, const std::string& graph, std::optional<int> t, bool acyclic) {
  if (t.has_value() == acyclic) throw UsageError("give exactly one of --t and --acyclic");
  if (t && *t < 1) throw UsageError("--t must be at least 1");
  const GraphSource src = load_graph(ctx, psg_r, graph);
  const auto start = std::chrono::steady_clock::now();
  const ThetaResult res = theta_exact(src.graph, t);
  const VerifyResult check = verify_certificate(src.graph, res.certificate);
  ctx.info("theta_exact finished",
           {{"ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()}});
  Json doc = {{"graph", src.name},
              {"t", t ? Json(*t) : Json(nullptr)},
              {"theta", res.value},
              {"tau", src.graph.vertex_count() - res.value},
              {"nodes", res.nodes},
              {"certificate", to_json(res.certificate, src.r)},
              {"certificate_ok", check.ok}};
  ctx.emit(doc, [&] {
    return std::string(t ? "theta_" + std::to_string(*t) : "a") + "(" + src.name + ") = " + std::to_string(res.value) +
           ", tau = " + std::to_string(src.graph.vertex_count() - res.value) + "\n";
  });
  if (!check.ok) ctx.info("certificate failed: " + check.diagnostic);
  return check.ok ? kExitOk : kExitViolation;
}

int thresh_certify(Context& ctx, int psg_r, const std::string& graph, const std::string& cert_path) {
  const GraphSource src = load_graph(ctx, psg_r, graph);
  const ThresholdCertificate cert = certificate_from_json(ctx.read_json(cert_path), src.r);
  const VerifyResult res = verify_certificate(src.graph, cert);
  Json doc = {{"graph", src.name},
              {"kind", cert.kind == CertificateKind::WalkAvoidance ? "walk-avoidance" : "cycle-transversal"},
              {"t", cert.t ? Json(*cert.t) : Json(nullptr)},
              {"transversal_size", cert.transversal.size()},
              {"avoid_size", cert.avoid_set.size()},
              {"family_size", cert.family ? Json(cert.family->size()) : Json(nullptr)},
              {"ok", res.ok},
              {"diagnostic", res.diagnostic}};
  // A transversal matched by a disjoint family of the same size is optimal.
  if (res.ok && cert.family && cert.family->size() == cert.transversal.size()) {
    doc["tau"] = cert.transversal.size();
    doc["a"] = static_cast<std::size_t>(src.graph.vertex_count()) - cert.transversal.size();
  }
  ctx.emit(doc, [&] { return res.ok ? std::string("certificate ok\n") : "certificate rejected: " + res.diagnostic + "\n"; });
  return res.ok ? kExitOk : kExitViolation;
}

int thresh_family(Context& ctx, int r, bool search, std::uint64_t budget) {
  check_order(r);
  const PatternShiftGraph psg(r);
  CycleFamily family = try_bundled_cycle_family(r).value_or(disjoint_cycle_family(r));
  if (search) {
    FamilySearchOptions opts;
    opts.seed = ctx.seed;
    opts.budget = budget;
    opts.initial = family;
    family = search_disjoint_cycle_family(psg.graph(), opts);
  }
  const VerifyResult ok = verify_cycle_family(psg.graph(), family);
  std::map<std::size_t, std::size_t> lengths;
  for (const auto& c : family.cycles) ++lengths[c.size()];
  Json counts = Json::object();
  for (const auto& [len, count] : lengths) counts[std::to_string(len)] = count;
  Json doc = cycle_list_to_json(r, family);
  doc["size"] = family.size();
  doc["length_counts"] = counts;
  doc["valid"] = ok.ok;
  if (search) {
    doc["seed"] = ctx.seed;
    doc["budget"] = budget;
  }
  ctx.emit(doc);
  if (!ok.ok) ctx.info("family invalid: " + ok.diagnostic);
  return ok.ok ? kExitOk : kExitViolation;
}

// ---- tourn -----------------------------------------------------------------

std::vector<Permutation> read_patterns(Context& ctx, const std::string& path, int r) {
  const std::string text = ctx.read_input(path);
  std::vector<Permutation> out;
  auto add = [&](const std::string& s) {
    Permutation p = Permutation::parse(s);
    if (p.size() != r) fail(ErrorKind::InvalidInput, "pattern " + s + " is not a permutation of [" + std::to_string(r) + "]");
    out.push_back(std::move(p));
  };
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    const Json doc = parse_json(text, path);
    const Json& list = doc.is_array() ? doc : doc.at("patterns");
    for (const auto& p : list) add(p.get<std::string>());
  } else {
    std::istringstream is(text);
    for (std::string s; is >> s;) add(s);
  }
  return out;
}

int tourn_construct(Context& ctx, const std::string& kind, int n, int r, std::optional<int> t, const std::string& patterns) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw UsageError(kind + " needs " + what);
  };
  RDigraph g;
  if (kind == "binary33") {
    need(t.has_value(), "--t");
    if (*t < 1 || *t > kBinary33MaterialiseLimit) throw UsageError("--t must be in [1, 7] for binary33");
    if (n > 0 && n != (1 << *t)) throw UsageError("binary33 has 2^t vertices");
    g = construct_binary_33(*t).to_rdigraph();
  } else {
    need(n >= 0, "--n");
    if (kind == "middle-not-max") {
      if (r > 0 && r != 3) throw UsageError("middle-not-max is a 3-digraph");
      g = construct_middle_not_max(n).to_rdigraph();
    } else {
      need(r > 0, "--r");
      if (kind == "max-second") {
        g = construct_max_second(n, r).to_rdigraph();
      } else if (kind == "first-not-max") {
        g = construct_first_not_max(n, r).to_rdigraph();
      } else if (kind == "interval-density") {
        need(t.has_value(), "--t");
        g = construct_interval_density(n, r, *t);
      } else if (kind == "cycle-sharpness") {
        g = construct_cycle_sharpness(n, r).tournament.to_rdigraph();
      } else if (kind == "pattern-set") {
        need(!patterns.empty(), "--patterns");
        g = construct_from_pattern_set(n, r, read_patterns(ctx, patterns, r)).to_rdigraph();
      }
    }
  }
  ctx.emit(to_json(g), {}, [&] { return to_dot(g, kind); });
  return kExitOk;
}

int tourn_random(Context& ctx, int n, int r, int k, bool triangle_free) {
  if (n < 0 || r < 1 || k < 0) throw UsageError("tourn random needs --n, --r and --k");
  if (triangle_free && (r != 3 || k != 4)) throw UsageError("--triangle-free samples (3,4)-tournaments only");
  Rng rng(ctx.seed);
  const RDigraph g =
      (triangle_free ? random_triangle_free_34(n, rng) : random_rk_tournament(n, r, k, rng)).to_rdigraph();
  ctx.emit(to_json(g), {}, [&] { return to_dot(g, "random"); });
  return kExitOk;
}

int tourn_check(Context& ctx, const std::string& in) {
  const RDigraph g = rdigraph_from_json(ctx.read_json(in));
  const RkCheck c = is_rk_tournament(g);
  Json doc = {{"n", g.n()}, {"r", g.r()}, {"edges", g.edge_count()}, {"k", c.k ? Json(*c.k) : Json(nullptr)},
              {"closed_walk", has_closed_walk(g)}};
  if (!c.k) doc["counterexample"] = {{"set", c.counterexample}, {"expected", c.expected}, {"found", c.found}};
  ctx.emit(doc);
  return kExitOk;
}

// ---- paths -----------------------------------------------------------------

RDigraph load_rdigraph(Context& ctx, const std::string& in) {
  if (in.empty()) throw UsageError("--in is required");
  return rdigraph_from_json(ctx.read_json(in));
}

int paths_longest(Context& ctx, const std::string& in, bool heuristic, std::int64_t budget) {
  const RDigraph g = load_rdigraph(ctx, in);
  PathSearchOptions opts;
  opts.mode = heuristic ? PathSearchMode::Heuristic : PathSearchMode::Exact;
  opts.seed = ctx.seed;
  const std::int64_t ms = budget > 0 ? budget : ctx.budget_ms;
  opts.time_budget = std::chrono::milliseconds(ms);
  const PathResult res = longest_tight_path(g, opts);
  Json doc = {{"mode", heuristic ? "heuristic" : "exact"}, {"size", res.size()}, {"path", res.path},
              {"optimal", res.optimal}, {"states", res.states}, {"note", res.note}};
  if (heuristic) doc["seed"] = ctx.seed;
  ctx.emit(doc, [&] { return std::to_string(res.size()) + ": " + join(res.path) + "\n"; });
  if (!heuristic && !res.optimal) {
    diagnostic(*ctx.err, "error", kExitResource, "resource", "exact search stopped early: " + res.note);
    return kExitResource;
  }
  return kExitOk;
}

int paths_span35(Context& ctx, const std::string& in) {
  const RDigraph g = load_rdigraph(ctx, in);
  const InsertionResult res = spanning_path_35(g);
  const bool ok = static_cast<int>(res.path.size()) == g.n() && is_tight_path(g, res.path);
  ctx.emit({{"size", res.path.size()}, {"path", res.path}, {"insertions", res.insertions}, {"ok", ok}},
           [&] { return join(res.path) + "\n"; });
  return ok ? kExitOk : kExitViolation;
}

int paths_span_flex(Context& ctx, const std::string& in) {
  const RDigraph g = load_rdigraph(ctx, in);
  const FlexibleResult res = spanning_path_flexible(g);
  ctx.emit({{"success", res.success}, {"size", res.path.size()}, {"path", res.path}, {"steps", res.steps},
            {"report", res.report}},
           [&] { return join(res.path) + "\n"; });
  ctx.info("flexible extension steps", {{"steps", res.steps}});
  return res.success ? kExitOk : kExitViolation;
}

int paths_from_cycles(Context& ctx, const std::string& in) {
  const RDigraph g = load_rdigraph(ctx, in);
  const CyclePathResult res = path_from_cycles(g);
  ctx.emit({{"size", res.path.size()},
            {"path", res.path},
            {"cycles", res.cycles},
            {"tuples", res.tuples},
            {"h0_min_degree", res.h0_min_degree},
            {"guarantee", to_string(res.guarantee)}},
           [&] { return join(res.path) + "\n"; });
  return kExitOk;
}

int paths_extract(Context& ctx, const std::string& in, int s) {
  const RDigraph g = load_rdigraph(ctx, in);
  if (s < 1) throw UsageError("--s must be positive");
  const BoundedWalkSubgraph res = extract_bounded_walk_subgraph(g, s);
  ctx.emit({{"vertices", res.vertices}, {"subgraph", to_json(res.subgraph)}, {"longest_walk", res.longest_walk},
            {"good_sets", res.good_sets}},
           {}, [&] { return to_dot(res.subgraph, "extract"); });
  return kExitOk;
}

// ---- conj ------------------------------------------------------------------

int conj_check34(Context& ctx, int n, const std::string& mode, std::uint64_t samples, bool acyclic) {
  const SearchMode m = mode == "exhaustive" ? SearchMode::Exhaustive : SearchMode::Random;
  if (m == SearchMode::Random && samples == 0) throw UsageError("random mode needs --samples");
  const SearchReport rep = acyclic ? check_34_acyclic(n, m, ctx.seed, samples) : check_34(n, m, ctx.seed, samples);
  Json doc = {{"n", rep.n},
              {"mode", mode},
              {"acyclic", rep.acyclic_only},
              {"samples", rep.samples},
              {"seed", rep.seed},
              {"raw_instances", rep.raw_instances},
              {"canonical_instances", rep.canonical_instances},
              {"filtered_out", rep.filtered_out},
              {"checked", rep.checked},
              {"min_spanning_paths", rep.min_spanning_paths ? Json(*rep.min_spanning_paths) : Json(nullptr)},
              {"counterexample", rep.counterexample ? to_json(rep.counterexample->to_rdigraph()) : Json(nullptr)}};
  ctx.emit(doc);
  ctx.info("check34 finished", {{"ms", rep.runtime_ms}});
  return rep.counterexample ? kExitViolation : kExitOk;
}

int conj_count_paths(Context& ctx, const std::string& in) {
  const RDigraph g = load_rdigraph(ctx, in);
  const std::uint64_t count = count_spanning_paths(g);
  ctx.emit({{"n", g.n()}, {"count", count}}, [&] { return std::to_string(count) + "\n"; });
  return kExitOk;
}

int conj_coloring(Context& ctx, const std::string& in) {
  const RDigraph g = load_rdigraph(ctx, in);
  const WalkColoring c = walk_length_coloring(g);
  Json colours = Json::array();
  for (const auto& [pair, colour] : c.colour) {
    colours.push_back({{"pair", {pair.first, pair.second}}, {"colour", {colour.first, colour.second}}});
  }
  ctx.emit({{"longest_walk", c.longest_walk},
            {"distinct_colours", c.distinct_colours},
            {"monochromatic_triangle", c.monochromatic_triangle ? Json(*c.monochromatic_triangle) : Json(nullptr)},
            {"colours", colours}});
  return c.monochromatic_triangle ? kExitViolation : kExitOk;
}

int conj_intersecting(Context& ctx, const std::string& in) {
  const RDigraph g = load_rdigraph(ctx, in);
  const IntersectionReport rep = check_pairwise_intersecting(g);
  ctx.emit({{"intersecting", rep.intersecting},
            {"max_size", rep.max_size},
            {"maximum_paths", rep.maximum_paths},
            {"distinct_vertex_sets", rep.distinct_vertex_sets},
            {"first", rep.first},
            {"second", rep.second},
            {"repaired", rep.repaired}});
  return rep.intersecting ? kExitOk : kExitViolation;
}

// ---- table -----------------------------------------------------------------

int table_cmd(Context& ctx, int r, const std::string& expected_path) {
  ThresholdTable table = table_thresholds(r);
  if (!expected_path.empty()) {
    const Json expected = ctx.read_json(expected_path);
    const std::string key = std::to_string(r);
    if (!expected.contains(key)) fail(ErrorKind::InvalidInput, expected_path + " has no rows for r = " + key);
    table.compared = true;
    table.diffs = diff_table(table.rows, expected.at(key));
  }
  ctx.emit(to_json(table), [&] { return to_text(table); });
  for (const auto& d : table.diffs) {
    diagnostic(*ctx.err, "error", kExitViolation, "table-diff",
               "row " + std::to_string(d.row) + " " + d.column + ": expected " + d.expected + ", computed " + d.computed);
  }
  for (const auto& c : table.checks) {
    if (!c.ok) {
      diagnostic(*ctx.err, "error", kExitViolation, "cross-check",
                 c.name + ": expected " + c.expected + ", computed " + c.computed);
    }
  }
  return table.ok() ? kExitOk : kExitViolation;
}

// ---- manifest --------------------------------------------------------------

// Drops the manifest/output destination flags; the rest replays verbatim.
std::vector<std::string> replayable_args(const std::vector<const char*>& argv) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < argv.size(); ++i) {
    const std::string a = argv[i];
    if (a == "--manifest" || a == "--out") {
      ++i;
      continue;
    }
    if (a.rfind("--manifest=", 0) == 0 || a.rfind("--out=", 0) == 0) continue;
    out.push_back(a);
  }
  return out;
}

Json manifest_json(const Context& ctx, const std::vector<std::string>& args, const std::string& output, int code,
                   double ms) {
  Json inputs = Json::array();
  for (const auto& [path, digest] : ctx.inputs) inputs.push_back({{"path", path}, {"fnv1a64", digest}});
  return {{"tool", "tightpath"},
          {"version", TIGHTPATH_VERSION},
          {"argv", args},
          {"seed", ctx.seed},
          {"threads", ctx.threads},
          {"budget_ms", ctx.budget_ms},
          {"format", ctx.format},
          {"inputs", inputs},
          {"output", {{"fnv1a64", hex64(fnv1a64(output))}, {"bytes", output.size()}}},
          {"exit_code", code},
          {"runtime_ms", ms}};
}

int replay(Context& ctx, const std::string& path) {
  const Json m = ctx.read_json(path);
  if (!m.contains("argv") || !m.contains("output")) fail(ErrorKind::InvalidInput, path + ": not a run manifest");
  std::vector<std::string> args = m.at("argv").get<std::vector<std::string>>();
  std::vector<const char*> argv{"tightpath"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(argv, out, err);
  const std::string digest = hex64(fnv1a64(out.str()));
  const bool same_output = digest == m.at("output").at("fnv1a64").get<std::string>();
  const bool same_code = code == m.value("exit_code", code);
  Json changed = Json::array();
  for (const auto& in : m.value("inputs", Json::array())) {
    std::ifstream f(in.at("path").get<std::string>(), std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    if (!f || hex64(fnv1a64(buf.str())) != in.at("fnv1a64").get<std::string>()) changed.push_back(in.at("path"));
  }
  const bool version_ok = m.value("version", std::string()) == TIGHTPATH_VERSION;
  ctx.emit({{"manifest", path},
            {"output_fnv1a64", digest},
            {"identical", same_output},
            {"exit_code", code},
            {"exit_code_matches", same_code},
            {"changed_inputs", changed},
            {"version_matches", version_ok}});
  return same_output && same_code && changed.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<const char*>& argv, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.err = &err;
  ctx.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  CLI::App app{"Tight paths in (r,k)-tournaments and the pattern-shift graph", "tightpath"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", TIGHTPATH_VERSION);
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--seed", ctx.seed, "Seed for every randomised step");
  app.add_option("--threads", ctx.threads, "Worker threads (recorded; solvers run single-threaded)")
      ->envname("TIGHTPATH_THREADS")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-ms", ctx.budget_ms, "Wall-clock budget for searches, 0 = unlimited")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--quiet", ctx.quiet, "Suppress informational diagnostics");
  app.add_option("--out", ctx.out_path, "Write output to a file instead of standard output");
  app.add_option("--manifest", ctx.manifest_path, "Write a run manifest");

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

  int r = 0, n = -1, psg_r = 0, k = -1, s = 0;
  std::optional<int> t;
  std::string in, graph, cert, patterns, kind, mode = "random", manifest, expected;
  bool dot = false, json = false, acyclic = false, search = false, exact = false, heuristic = false;
  std::uint64_t budget = 20000, samples = 0;
  std::int64_t budget_ms_local = 0;

  auto* psg = app.add_subcommand("psg", "Pattern-shift graphs")->require_subcommand(1);
  {
    auto* b = psg->add_subcommand("build", "Build PSG_r");
    b->add_option("--r", r)->required();
    auto* fd = b->add_flag("--dot", dot);
    auto* fj = b->add_flag("--json", json);
    fd->excludes(fj);
    bind(b, [&] {
      if (dot) ctx.format = "dot";
      if (json) ctx.format = "json";
      return psg_build(ctx, r);
    });
    auto* sc = psg->add_subcommand("shift-cycles", "Shift-cycle partition of PSG_r");
    sc->add_option("--r", r)->required();
    bind(sc, [&] { return psg_shift_cycles(ctx, r); });
    auto* ch = psg->add_subcommand("chorded", "Shift cycles with a chord or loop, split along it");
    ch->add_option("--r", r)->required();
    bind(ch, [&] { return psg_chorded(ctx, r); });
  }

  auto* thresh = app.add_subcommand("thresh", "Walk-avoidance and cycle-transversal numbers")->require_subcommand(1);
  {
    auto* ex = thresh->add_subcommand("exact", "Exact theta_t or a(D) with a certificate");
    ex->add_option("--psg", psg_r);
    ex->add_option("--graph", graph);
    ex->add_option("--t", t);
    ex->add_flag("--acyclic", acyclic);
    bind(ex, [&] { return thresh_exact(ctx, psg_r, graph, t, acyclic); });
    auto* ce = thresh->add_subcommand("certify", "Verify a certificate");
    ce->add_option("--psg", psg_r);
    ce->add_option("--graph", graph);
    ce->add_option("--cert", cert)->required();
    bind(ce, [&] { return thresh_certify(ctx, psg_r, graph, cert); });
    auto* fa = thresh->add_subcommand("family", "Disjoint cycle family of PSG_r");
    fa->add_option("--psg", psg_r)->required();
    fa->add_flag("--search", search);
    fa->add_option("--budget", budget, "Local-search iterations");
    bind(fa, [&] { return thresh_family(ctx, psg_r, search, budget); });
  }

  auto* tourn = app.add_subcommand("tourn", "Tournament constructions")->require_subcommand(1);
  {
    auto* co = tourn->add_subcommand("construct", "Emit a construction as an r-digraph");
    co->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"max-second", "first-not-max", "middle-not-max", "interval-density", "binary33",
                               "cycle-sharpness", "pattern-set"}));
    co->add_option("--n", n);
    co->add_option("--r", r);
    co->add_option("--t", t);
    co->add_option("--patterns", patterns);
    bind(co, [&] { return tourn_construct(ctx, kind, n, r, t, patterns); });
    auto* ra = tourn->add_subcommand("random", "Uniform random (r,k)-tournament");
    ra->add_option("--n", n)->required();
    ra->add_option("--r", r)->required();
    ra->add_option("--k", k)->required();
    ra->add_flag("--triangle-free", search, "No tight 3-cycle (r = 3, k = 4)");
    bind(ra, [&] { return tourn_random(ctx, n, r, k, search); });
    auto* ck = tourn->add_subcommand("check", "Report k and closed walks of an r-digraph");
    ck->add_option("--in", in)->required();
    bind(ck, [&] { return tourn_check(ctx, in); });
  }

  auto* paths = app.add_subcommand("paths", "Tight paths")->require_subcommand(1);
  {
    auto* lo = paths->add_subcommand("longest", "Longest tight path");
    lo->add_option("--in", in)->required();
    auto* fe = lo->add_flag("--exact", exact);
    auto* fh = lo->add_flag("--heuristic", heuristic);
    fe->excludes(fh);
    lo->add_option("--budget", budget_ms_local, "Milliseconds")->check(CLI::NonNegativeNumber);
    bind(lo, [&] { return paths_longest(ctx, in, heuristic, budget_ms_local); });
    auto* sp = paths->add_subcommand("span35", "Spanning path of a (3,5)-tournament by insertion");
    sp->add_option("--in", in)->required();
    bind(sp, [&] { return paths_span35(ctx, in); });
    auto* fl = paths->add_subcommand("span-flex", "Spanning path through flexible paths");
    fl->add_option("--in", in)->required();
    bind(fl, [&] { return paths_span_flex(ctx, in); });
    auto* fc = paths->add_subcommand("from-cycles", "Long path from tight r-cycles");
    fc->add_option("--in", in)->required();
    bind(fc, [&] { return paths_from_cycles(ctx, in); });
    auto* xt = paths->add_subcommand("extract", "Subgraph with bounded walks");
    xt->add_option("--in", in)->required();
    xt->add_option("--s", s)->required();
    bind(xt, [&] { return paths_extract(ctx, in, s); });
  }

  auto* conj = app.add_subcommand("conj", "Conjecture checks")->require_subcommand(1);
  {
    auto* c34 = conj->add_subcommand("check34", "Spanning paths in (3,4)-tournaments");
    c34->add_option("--n", n)->required();
    c34->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}));
    c34->add_option("--samples", samples);
    c34->add_flag("--acyclic", acyclic);
    bind(c34, [&] { return conj_check34(ctx, n, mode, samples, acyclic); });
    auto* cp = conj->add_subcommand("count-paths", "Number of spanning tight paths");
    cp->add_option("--in", in)->required();
    bind(cp, [&] { return conj_count_paths(ctx, in); });
    auto* cl = conj->add_subcommand("coloring", "Walk-length edge colouring");
    cl->add_option("--in", in)->required();
    bind(cl, [&] { return conj_coloring(ctx, in); });
    auto* ci = conj->add_subcommand("intersecting", "Maximum paths pairwise intersect");
    ci->add_option("--in", in)->required();
    bind(ci, [&] { return conj_intersecting(ctx, in); });
  }

  auto* table = app.add_subcommand("table", "Threshold tables")->require_subcommand(1);
  {
    auto* th = table->add_subcommand("thresholds", "Bounds on thresholds for r in {3,4,5}");
    th->add_option("--r", r)->required();
    th->add_option("--expected", expected, "Expected table to diff against instead of the bundled one");
    bind(th, [&] { return table_cmd(ctx, r, expected); });
  }

  auto* rp = app.add_subcommand("replay", "Rerun a manifest and compare outputs");
  rp->add_option("manifest_file", manifest)->required();
  bind(rp, [&] { return replay(ctx, manifest); });

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << TIGHTPATH_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    diagnostic(err, "error", kExitUsage, "usage", e.what());
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    code = action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    diagnostic(err, "error", kExitUsage, "usage", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    code = e.kind() == ErrorKind::Resource ? kExitResource : kExitUsage;
    diagnostic(err, "error", code, to_string(e.kind()), e.what());
    return code;
  } catch (const Json::exception& e) {
    diagnostic(err, "error", kExitUsage, "invalid-input", e.what());
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    diagnostic(err, "error", kExitResource, "resource", "out of memory");
    return kExitResource;
  } catch (const std::exception& e) {
    // Internal guarantees (asserted bounds, re-verification) surface here.
    diagnostic(err, "error", kExitViolation, "violation", e.what());
    return kExitViolation;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string output = ctx.out.str();
  if (ctx.out_path.empty()) {
    out << output;
  } else {
    std::ofstream f(ctx.out_path, std::ios::binary);
    f << output;
    if (!f) {
      diagnostic(err, "error", kExitUsage, "usage", "cannot write " + ctx.out_path);
      return kExitUsage;
    }
  }
  if (!ctx.manifest_path.empty()) {
    std::ofstream f(ctx.manifest_path, std::ios::binary);
    f << dump(manifest_json(ctx, replayable_args(argv), output, code, ms));
    if (!f) {
      diagnostic(err, "error", kExitUsage, "usage", "cannot write " + ctx.manifest_path);
      return kExitUsage;
    }
  }
  return code;
}

int run(const std::vector<const char*>& argv) { return run(argv, std::cout, std::cerr); }

}  // namespace tightpath
