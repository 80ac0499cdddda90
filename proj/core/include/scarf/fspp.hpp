#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scarf/digraph.hpp"
#include "scarf/kernels.hpp"
#include "scarf/solver.hpp"

namespace scarf::fspp {

using Node = std::size_t;
using Path = std::vector<Node>;  // node sequence, first = owner, last = destination

struct PermittedPath {
  Path nodes;
  std::size_t rank;  // 1 = least preferred; the empty path has rank 0

  friend bool operator==(const PermittedPath&, const PermittedPath&) = default;
};

/// Destination-rooted path-preference system. Higher rank = more preferred.
class FsppInstance {
 public:
  FsppInstance() = default;
  /// Validates: paths start at their owner, end at dest, are simple, follow
  /// edges; ranks at each node are exactly 1..|P^v|; dest has no paths.
  FsppInstance(std::vector<std::string> labels, Node dest, std::vector<std::pair<Node, Node>> edges,
               std::vector<std::vector<PermittedPath>> paths);

  std::size_t node_count() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Node v) const { return labels_.at(v); }
  Node dest() const noexcept { return dest_; }
  const std::vector<std::pair<Node, Node>>& edges() const noexcept { return edges_; }
  const std::vector<PermittedPath>& paths(Node v) const { return paths_.at(v); }
  std::size_t path_count() const;

  /// Owner and index of a permitted path equal to `p`, if any.
  std::optional<std::pair<Node, std::size_t>> find_path(const Path& p) const;

  std::string path_label(const Path& p) const;

  friend bool operator==(const FsppInstance& a, const FsppInstance& b) {
    return a.labels_ == b.labels_ && a.dest_ == b.dest_ && a.edges_ == b.edges_ && a.paths_ == b.paths_;
  }

 private:
  std::vector<std::string> labels_;
  Node dest_ = 0;
  std::vector<std::pair<Node, Node>> edges_;  // (min, max), sorted
  std::vector<std::vector<PermittedPath>> paths_;
  std::map<Path, std::pair<Node, std::size_t>> index_;
};

/// w[v][p] is the weight of the p-th permitted path of node v.
using FsppWeights = std::vector<std::vector<Rational>>;

FsppWeights zero_weights(const FsppInstance& inst);

/// Weight of S as assigned by its first node; 0 if S is not permitted there.
Rational weight_of(const FsppInstance& inst, const FsppWeights& w, const Path& s);

/// Indices of paths in P^v whose node sequence ends with S (P = S included).
std::vector<std::size_t> suffix_paths(Node v, const Path& s, const FsppInstance& inst);

VerifyResult verify_feasible(const FsppInstance& inst, const FsppWeights& w);
VerifyResult verify_stable(const FsppInstance& inst, const FsppWeights& w);

/// Unity, eps-tree (sum <= w(S) + eps) and the stability clause with
/// sum = w(S) + eps in its second branch.
VerifyResult verify_eps_solution(const FsppInstance& inst, const FsppWeights& w, const Rational& eps);

/// Feasible, and per Q one of: 1 - eps <= sum_v <= 1 with better-or-equal
/// support; or some proper suffix S with w(S) - eps <= sum <= w(S) and
/// better-or-equal support.
VerifyResult verify_eps_stable(const FsppInstance& inst, const FsppWeights& w, const Rational& eps);

/// Which digraph arcs turn into two-hop paths at a node.
enum class ArcOrientation {
  /// v gets vud for every arc (u, v): u is in I(v). Default; makes
  /// f(v) = w(vd) a Nash fractional kernel.
  InNeighbor,
  /// v gets vud for every arc (v, u), the literal reading of the reduction.
  OutNeighbor,
};

struct FsppNodeMap {
  std::vector<Node> vertex_node;         // digraph vertex -> FSPP node
  std::vector<std::size_t> direct_path;  // digraph vertex -> index of [v, d] in P^v
  Node dest = 0;
};

struct FsppReduction {
  FsppInstance instance;
  FsppNodeMap map;
};

/// G = underlying graph of D plus a destination adjacent to every vertex.
/// P^v = {vd} plus one vud per arc selected by `orientation`; vd has rank 1,
/// the two-hop paths ranks 2.. by ascending vertex id of u.
FsppReduction digraph_to_fspp(const kernels::Digraph& d,
                              ArcOrientation orientation = ArcOrientation::InNeighbor);

/// f(v) = w(vd).
kernels::KernelFunction fspp_solution_to_kernel(const FsppWeights& w, const FsppNodeMap& map);

}  // namespace scarf::fspp
