#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "scarf/digraph.hpp"
#include "scarf/instance.hpp"
#include "scarf/solver.hpp"

namespace scarf::kernels {

/// Nonnegative weight per vertex, indexed by vertex id.
using KernelFunction = std::vector<Rational>;

inline constexpr std::size_t kDefaultCliqueCap = 100'000;
inline constexpr std::size_t kDefaultCycleCap = 100'000;

struct CliqueLimit {
  std::optional<std::size_t> max_size;  // 3 for the bounded-clique problems
  std::size_t enumeration_cap = kDefaultCliqueCap;
};

/// Maximal cliques of the underlying undirected graph, each ascending, the
/// list sorted. With a max_size, meeting any larger clique throws
/// Error(CliqueTooLarge); past the cap, Error(CapExceeded).
std::vector<VertexSet> maximal_cliques(const Digraph& d, CliqueLimit limit = {});

/// Maximal cliques of the subgraph induced by `within`.
std::vector<VertexSet> maximal_cliques_within(const Digraph& d, const VertexSet& within,
                                              std::size_t cap = kDefaultCliqueCap);

/// No clique contains a cycle made only of irreversible arcs.
bool is_clique_acyclic(const Digraph& d);

struct CycleEnumeration {
  std::vector<VertexSet> cycles;  // vertex sequence, starting at its smallest vertex
  bool truncated = false;
};

/// Simple cycles made of irreversible arcs, at most `cap` of them.
CycleEnumeration enumerate_proper_cycles(const Digraph& d, std::size_t cap = kDefaultCycleCap);

/// Every external in-neighbor of the cycle points at all of its vertices.
bool is_homogeneous(const Digraph& d, const VertexSet& cycle);

struct KernelValidation {
  ValidationReport problems;
  bool inconclusive = false;  // cycle enumeration hit its cap
  std::vector<VertexSet> proper_cycles;

  bool ok() const noexcept { return problems.empty() && !inconclusive; }
};

/// Clique-acyclic, maximal cliques of size <= 3, proper cycles homogeneous
/// and pairwise node-disjoint.
KernelValidation validate_3kernel_instance(const Digraph& d, std::size_t cycle_cap = kDefaultCycleCap);

struct KernelReductionMap {
  std::vector<VertexSet> clique_rows;  // row i <-> clique i
  std::vector<Column> vertex_cols;     // vertex -> column (>= m)
  std::vector<Column> slack_cols;      // clique -> column (< m)
};

struct KernelReduction {
  ScarfInstance instance;
  KernelReductionMap map;
};

/// Rows are the maximal cliques, columns the clique slacks then the vertices,
/// b = 1 and B = [I | clique-vertex incidence]. Row K of C:
///   own slack            -1
///   vertex v in K        1-based position of v in a linear order of K in
///                        which an irreversible arc v->u puts u before v
///                        (remaining ties by vertex id)
///   vertex v not in K    |V| + id(v) + 1
///   foreign slack L      2|V| + m + L + 1
/// If vertex column v is subordinated at row K with J = supp(alpha), the
/// values force v in K, slack_K not in J, and every u in K with alpha_u > 0
/// ranked at or above v, hence u in I(v); the tight row K then gives
/// sum over {u in K : u ranked >= v} f(u) = 1, a clique inside I(v).
KernelReduction reduce_to_scarf(const Digraph& d);

KernelFunction extract_kernel(const ScarfSolution& sol, const KernelReductionMap& map);

VerifyResult verify_fractional_kernel(const Digraph& d, const KernelFunction& f);
VerifyResult verify_strong_kernel(const Digraph& d, const KernelFunction& f);

/// A fractional kernel where every vertex with f(v) > 0 lies in some I(v')
/// whose sum is exactly 1, so no player can lower its weight alone.
VerifyResult verify_nash(const Digraph& d, const KernelFunction& f);

/// reduce_to_scarf, solve, extract_kernel; the result is checked with
/// verify_strong_kernel (Error(LemmaViolation) otherwise).
KernelFunction solve_strong_kernel(const Digraph& d, const SolveOptions& options = {});

struct NashOptions {
  std::uint64_t iteration_cap = 100'000;
  std::size_t cycle_cap = kDefaultCycleCap;
};

struct NashResult {
  KernelFunction f;
  std::uint64_t iterations = 0;
  std::vector<VertexSet> cover_cycles;  // cycles of the maximum cycle cover
  std::vector<VertexSet> super_nodes;   // contracted homogeneous proper cycles
};

/// Turns a strong fractional kernel into a Nash fractional kernel following
/// the cycle-cover / contraction / slack-reduction / expansion procedure.
/// Throws Error(Unrepairable) if the result fails verify_fractional_kernel
/// or verify_nash, Error(IterationCap) if the reduction loop does not settle.
NashResult compute_nash(const Digraph& d, const KernelFunction& w, const NashOptions& options = {});

}  // namespace scarf::kernels
