#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scarf::kernels {

using Vertex = std::size_t;
using Arc = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // ascending

/// Simple digraph: no self-loops, no duplicate arcs. Vertices are indexed
/// 0..size()-1 in the order given; that index is the vertex id used for every
/// deterministic tie-break.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<std::string> labels, std::vector<Arc> arcs);

  /// Labels "1".."n".
  static Digraph with_size(std::size_t n, std::vector<Arc> arcs);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find(const std::string& label) const;

  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  bool has_arc(Vertex u, Vertex v) const { return adj_[u * size() + v]; }
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }
  /// (u, v) is an arc and (v, u) is not.
  bool irreversible(Vertex u, Vertex v) const { return has_arc(u, v) && !has_arc(v, u); }

  /// v together with every u such that (u, v) is an arc.
  const VertexSet& in_closure(Vertex v) const { return in_closure_[v]; }
  const VertexSet& out_neighbors(Vertex v) const { return out_[v]; }

 private:
  std::vector<std::string> labels_;
  std::vector<Arc> arcs_;
  std::vector<bool> adj_;
  std::vector<VertexSet> in_closure_;
  std::vector<VertexSet> out_;
};

}  // namespace scarf::kernels
