#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scarf/instance.hpp"
#include "scarf/solver.hpp"

namespace scarf::matchings {

using Vertex = std::size_t;
using EdgeId = std::size_t;

/// Hypergraph with, per vertex, a linear order on the edges containing it.
/// orders[v] lists those edges from least to most preferred.
struct HypergraphPrefSystem {
  std::vector<std::string> labels;
  std::vector<std::vector<Vertex>> edges;
  std::vector<std::vector<EdgeId>> orders;

  std::size_t vertex_count() const noexcept { return labels.size(); }
  std::size_t edge_count() const noexcept { return edges.size(); }
  bool contains(EdgeId e, Vertex v) const;

  /// Position of e in orders[v], 1-based; larger is more preferred.
  std::size_t preference(Vertex v, EdgeId e) const;
};

/// Throws Error(InvalidInput) on empty edges, unknown vertices, or an order
/// that is not exactly a permutation of the edges containing its vertex.
void validate(const HypergraphPrefSystem& h);

/// Nonnegative weight per edge.
using FractionalMatching = std::vector<Rational>;

struct MatchingReductionMap {
  std::vector<Column> slack_cols;  // vertex -> column (< m)
  std::vector<Column> edge_cols;   // edge -> column (>= m)
};

struct MatchingReduction {
  ScarfInstance instance;
  MatchingReductionMap map;
};

/// One row per vertex, columns are the vertex slacks then the edges,
/// B = [I | vertex-edge incidence], b = 1. Row v of C:
///   own slack             -1
///   edge h containing v   preference(v, h), so more preferred is larger
///   edge h not at v       |E| + h + 1
///   foreign slack u       2|E| + u + 1
/// Same shape as the kernel reduction: if edge column e is subordinated at
/// row v, then e contains v, slack_v is out of J, and all weight at v sits on
/// edges v ranks at or above e, so sum_{h at v, e <=_v h} w(h) = 1.
MatchingReduction reduce_to_scarf(const HypergraphPrefSystem& h);

FractionalMatching extract_matching(const ScarfSolution& sol, const MatchingReductionMap& map);

/// Exact check of sum_{h at v} w(h) <= 1 per vertex and, per edge e, some
/// v in e with sum_{h at v, e <=_v h} w(h) = 1.
VerifyResult verify_stable_matching(const HypergraphPrefSystem& h, const FractionalMatching& w);

/// Reduce, solve, extract; the result is checked with verify_stable_matching.
FractionalMatching solve_stable_matching(const HypergraphPrefSystem& h, const SolveOptions& options = {});

/// For graphs (all edges of size 2) and a 0/1 matching: edges {u,v} outside
/// the matching where both endpoints prefer it to what they hold.
std::vector<EdgeId> blocking_edges(const HypergraphPrefSystem& h, const std::vector<bool>& matched);

}  // namespace scarf::matchings
