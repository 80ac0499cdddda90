#include "scarf/digraph.hpp"

#include <algorithm>
#include <set>

#include "scarf/error.hpp"

namespace scarf::kernels {

Digraph::Digraph(std::vector<std::string> labels, std::vector<Arc> arcs)
    : labels_(std::move(labels)), arcs_(std::move(arcs)) {
  const std::size_t n = labels_.size();
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != n) throw Error(ErrorKind::InvalidInput, "duplicate vertex label");

  adj_.assign(n * n, false);
  for (auto [u, v] : arcs_) {
    if (u >= n || v >= n) throw Error(ErrorKind::InvalidInput, "arc references an unknown vertex");
    if (u == v) throw Error(ErrorKind::InvalidInput, "self-loop at " + labels_[u]);
    if (adj_[u * n + v]) {
      throw Error(ErrorKind::InvalidInput, "duplicate arc " + labels_[u] + "->" + labels_[v]);
    }
    adj_[u * n + v] = true;
  }
  std::sort(arcs_.begin(), arcs_.end());

  in_closure_.assign(n, {});
  out_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (u == v || has_arc(u, v)) in_closure_[v].push_back(u);
      if (has_arc(v, u)) out_[v].push_back(u);
    }
  }
}

Digraph Digraph::with_size(std::size_t n, std::vector<Arc> arcs) {
  std::vector<std::string> labels;
  for (std::size_t v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
  return Digraph(std::move(labels), std::move(arcs));
}

std::optional<Vertex> Digraph::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

}  // namespace scarf::kernels
