#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scarf/solver.hpp"

/// Brute-force ground truth for small instances. Nothing here calls into the
/// walk, the pivots, or is_subordinating: feasibility and subordination are
/// re-derived from their definitions so the two routes can disagree.
namespace scarf::oracle {

inline constexpr std::size_t kDefaultColumnCap = 16;

enum class Feasibility {
  Plain,          // B_J invertible and B_J^-1 b >= 0
  Lexicographic,  // feasible for b + (eps, eps^2, ..., eps^m), small eps > 0
};

/// All size-m feasible bases, each ascending, in lexicographic order.
/// Throws Error(CapExceeded) when n exceeds `cap`.
std::vector<ColumnSet> enumerate_feasible_bases(const ScarfInstance& inst,
                                                Feasibility mode = Feasibility::Plain,
                                                std::size_t cap = kDefaultColumnCap);

/// All subordinating sets of the given size (m by default) under the ranks.
std::vector<ColumnSet> enumerate_subordinating(const CanonicalScarf& canon,
                                               std::size_t cap = kDefaultColumnCap);
std::vector<ColumnSet> enumerate_subordinating_of_size(const CanonicalScarf& canon, std::size_t size,
                                                       std::size_t cap = kDefaultColumnCap);

struct PathGraph {
  std::vector<ColumnSet> f_side;  // feasible bases containing column 1
  std::vector<ColumnSet> s_side;  // subordinating m-sets without column 1
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (f index, s index)
  std::vector<std::size_t> f_degree;
  std::vector<std::size_t> s_degree;
  std::vector<bool> f_terminal;  // also subordinating
  std::vector<bool> s_terminal;  // also a feasible basis
  std::size_t slack_index = 0;   // position of [m] in f_side

  /// Vertices on the component of [m], in walk order starting from [m].
  /// Entries are (is_s_side, index).
  std::vector<std::pair<bool, std::size_t>> slack_component;

  /// Degree and shape violations; empty when the graph is a valid
  /// end-of-the-line instance.
  std::vector<std::string> audit;
};

/// Builds the bipartite graph with lexicographic feasibility on the F side,
/// matching the symbolic perturbation used by the solver.
PathGraph build_path_graph(const ScarfInstance& inst, std::size_t cap = kDefaultColumnCap);

std::string to_dot(const PathGraph& graph);

/// Every set that is subordinating (under the ranks) and a feasible basis,
/// with alpha and a witness. Each entry passes verify_solution.
std::vector<ScarfSolution> brute_solve(const ScarfInstance& inst, std::size_t cap = kDefaultColumnCap);

/// Calls `visit` on every ascending size-k subset of {0..n-1}, in
/// lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  ColumnSet subset(k);
  for (std::size_t p = 0; p < k; ++p) subset[p] = p;
  for (;;) {
    visit(static_cast<const ColumnSet&>(subset));
    std::size_t p = k;
    while (p > 0 && subset[p - 1] == n - k + p - 1) --p;
    if (p == 0) return;
    ++subset[p - 1];
    for (std::size_t q = p; q < k; ++q) subset[q] = subset[q - 1] + 1;
  }
}

}  // namespace scarf::oracle
