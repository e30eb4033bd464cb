#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightpath/digraph.hpp"
#include "tightpath/psg.hpp"
#include "tightpath/rational.hpp"

namespace tightpath {

// Pairwise vertex-disjoint directed cycles of a host digraph.
struct CycleFamily {
  std::vector<std::vector<int>> cycles;

  std::size_t size() const { return cycles.size(); }
};

enum class CertificateKind { WalkAvoidance, CycleTransversal };

// Certifies theta_t / tau_t (walk-avoidance, with t) or a / tau (cycle
// transversal, t absent). `family`, when present, is a lower-bound witness
// for the transversal size.
struct ThresholdCertificate {
  CertificateKind kind = CertificateKind::CycleTransversal;
  std::optional<int> t;
  std::vector<int> avoid_set;
  std::vector<int> transversal;
  std::optional<CycleFamily> family;
};

struct VerifyResult {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

// Checks every clause of a certificate against `d` and names the first failure.
VerifyResult verify_certificate(const Digraph& d, const ThresholdCertificate& cert);

// Pairwise disjoint and each a directed cycle of `d`.
VerifyResult verify_cycle_family(const Digraph& d, const CycleFamily& family);

struct ThetaOptions {
  int vertex_limit = 30;
  std::uint64_t node_budget = 50'000'000;
};

struct ThetaResult {
  int value = 0;  // theta_t(D) or a(D)
  ThresholdCertificate certificate;
  std::uint64_t nodes = 0;
};

// Exact theta_t(D) (maximum vertex set inducing no walk of t vertices), or
// a(D) when t is nullopt. Branch and bound over minimal obstructions (cycles
// and t-vertex paths) with disjoint-packing lower bounds.
ThetaResult theta_exact(const Digraph& d, std::optional<int> t, const ThetaOptions& options = {});

// Permutations whose value 1 sits at 0-based position r-1 or at a multiple
// of t. Meets every walk of t vertices in PSG_r. Returned as PSG vertex ids.
std::vector<int> construct_transversal_mod_t(int r, int t);

// (tau_t, theta_t) of PSG_r when t divides r-1.
std::pair<Rational, Rational> tau_formula_divisible(int r, int t);

// ceil(r/t) * (r-1)!: every walk-t transversal meets each shift cycle in at
// least ceil(r/t) vertices.
BigInt tau_lower_bound_shift_cycles(int r, int t);

// Identity, reverse, and every permutation with a bump at position 2; for
// r = 5 the bumps at both 2 and 4 with u_3 = 1 are dropped. Cycle transversal
// of PSG_r for r in {4, 5}.
std::vector<int> construct_bump_transversal(int r);

// Membership in S0 u S1 u S2 of the bookmark/cluster transversal; values are
// one-line notation of a permutation of [r].
bool cluster_transversal_contains(std::span<const int> u, int t);

struct ClusterTransversalCount {
  std::uint64_t s0 = 0;
  std::uint64_t s1 = 0;
  std::uint64_t s2 = 0;
  std::uint64_t total() const { return s0 + s1 + s2; }
};

// r >= max(3t+2, 3). Materialised (PSG vertex ids) for r <= 9.
std::vector<int> construct_cycle_transversal_clusters(int r, int t);
// Exact part sizes by streaming over all r! permutations; r <= 12.
ClusterTransversalCount count_cycle_transversal_clusters(int r, int t);
// r!(1/r + 1/(r t!) + 6(3t+2)/(r(r-1))).
Rational cluster_transversal_bound(int r, int t);

// Shift cycles with each chorded one split along its constructed chord;
// (r-1)! + phi(r) cycles, as PSG vertex ids.
CycleFamily disjoint_cycle_family(int r);
// Largest known families shipped with the project: r = 4 (10) and r = 5 (36).
CycleFamily bundled_cycle_family(int r);
std::optional<CycleFamily> try_bundled_cycle_family(int r);

struct FamilySearchOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = 20000;  // local-search iterations
  std::optional<CycleFamily> initial;
};

// Local search over greedy shortest-cycle packings: destroy a random cluster of
// cycles, repack the freed vertices, keep non-worsening moves. Deterministic
// in the seed; returns the best family seen.
CycleFamily search_disjoint_cycle_family(const Digraph& d, const FamilySearchOptions& options = {});

struct GrowingThreshold {
  std::optional<BigInt> value;
  BigInt lower;
  BigInt upper;
  std::string basis;
};

// 1 + a(PSG_r); exact for r <= 5, an interval otherwise.
GrowingThreshold growing_threshold(int r);

// PSG_5 certificate: the bump transversal S' with the bundled 36-cycle family.
ThresholdCertificate psg5_certificate();

}  // namespace tightpath
