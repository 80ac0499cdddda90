#include "scarf/fspp.hpp"

#include <algorithm>
#include <set>

#include "scarf/error.hpp"

namespace scarf::fspp {

namespace {

enum class Relaxation { Exact, EpsSolution, EpsStable };

struct Conditions {
  Relaxation kind = Relaxation::Exact;
  Rational eps = 0;
};

// Proper final segments of p that start at another node: p[t..] for t >= 1
// with at least one edge.
std::vector<Path> foreign_suffixes(const Path& p) {
  std::vector<Path> out;
  for (std::size_t t = 1; t + 1 < p.size(); ++t) out.emplace_back(p.begin() + static_cast<std::ptrdiff_t>(t), p.end());
  return out;
}

bool ends_with(const Path& p, const Path& s) {
  return s.size() <= p.size() && std::equal(s.rbegin(), s.rend(), p.rbegin());
}

VerifyResult check_shape(const FsppInstance& inst, const FsppWeights& w) {
  if (w.size() != inst.node_count()) return VerifyResult::fail("weights must cover every node");
  for (Node v = 0; v < inst.node_count(); ++v) {
    if (w[v].size() != inst.paths(v).size()) {
      return VerifyResult::fail("weights at " + inst.label(v) + " must cover every permitted path");
    }
    for (std::size_t p = 0; p < w[v].size(); ++p) {
      if (sgn(w[v][p]) < 0) {
        return VerifyResult::fail("negative weight on " + inst.path_label(inst.paths(v)[p].nodes));
      }
    }
  }
  return VerifyResult::pass();
}

Rational node_total(const FsppWeights& w, Node v) {
  Rational s = 0;
  for (const auto& x : w[v]) s += x;
  return s;
}

Rational suffix_total(const FsppInstance& inst, const FsppWeights& w, Node v, const Path& s) {
  Rational total = 0;
  for (std::size_t p : suffix_paths(v, s, inst)) total += w[v][p];
  return total;
}

VerifyResult check_feasible(const FsppInstance& inst, const FsppWeights& w, const Rational& tree_slack) {
  if (auto r = check_shape(inst, w); !r) return r;
  for (Node v = 0; v < inst.node_count(); ++v) {
    if (node_total(w, v) > 1) return VerifyResult::fail("unity condition at " + inst.label(v));
    std::set<Path> suffixes;
    for (const auto& pp : inst.paths(v)) {
      for (auto& s : foreign_suffixes(pp.nodes)) suffixes.insert(std::move(s));
    }
    for (const auto& s : suffixes) {
      if (suffix_total(inst, w, v, s) > weight_of(inst, w, s) + tree_slack) {
        return VerifyResult::fail("tree condition at (" + inst.label(v) + ", S=" + inst.path_label(s) + ")");
      }
    }
  }
  return VerifyResult::pass();
}

bool support_at_least(const FsppInstance& inst, const FsppWeights& w, Node v,
                      const std::vector<std::size_t>& candidates, std::size_t rank) {
  return std::all_of(candidates.begin(), candidates.end(), [&](std::size_t p) {
    return sgn(w[v][p]) == 0 || inst.paths(v)[p].rank >= rank;
  });
}

VerifyResult check_stability(const FsppInstance& inst, const FsppWeights& w, const Conditions& c) {
  for (Node v = 0; v < inst.node_count(); ++v) {
    const auto& paths = inst.paths(v);
    std::vector<std::size_t> all(paths.size());
    for (std::size_t p = 0; p < all.size(); ++p) all[p] = p;
    // Most preferred Q first, so the diagnostic names the best blocked path.
    std::vector<std::size_t> order = all;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return paths[a].rank > paths[b].rank; });

    const Rational total = node_total(w, v);
    for (std::size_t q : order) {
      const std::size_t rank = paths[q].rank;
      bool saturated = c.kind == Relaxation::EpsStable ? (total >= 1 - c.eps && total <= 1) : total == 1;
      if (saturated && support_at_least(inst, w, v, all, rank)) continue;

      bool held = false;
      for (const auto& s : foreign_suffixes(paths[q].nodes)) {
        const Rational sum = suffix_total(inst, w, v, s);
        const Rational ws = weight_of(inst, w, s);
        bool tight = false;
        switch (c.kind) {
          case Relaxation::Exact: tight = sum == ws; break;
          case Relaxation::EpsSolution: tight = sum == ws + c.eps; break;
          case Relaxation::EpsStable: tight = sum >= ws - c.eps && sum <= ws; break;
        }
        if (tight && support_at_least(inst, w, v, suffix_paths(v, s, inst), rank)) {
          held = true;
          break;
        }
      }
      if (!held) {
        return VerifyResult::fail("stability fails at (" + inst.label(v) + ", Q=" + inst.path_label(paths[q].nodes) + ")");
      }
    }
  }
  return VerifyResult::pass();
}

}  // namespace

FsppInstance::FsppInstance(std::vector<std::string> labels, Node dest, std::vector<std::pair<Node, Node>> edges,
                           std::vector<std::vector<PermittedPath>> paths)
    : labels_(std::move(labels)), dest_(dest), paths_(std::move(paths)) {
  const std::size_t n = labels_.size();
  if (dest_ >= n) throw Error(ErrorKind::InvalidInput, "destination is not a node");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
    throw Error(ErrorKind::InvalidInput, "duplicate node label");
  }
  std::set<std::pair<Node, Node>> edge_set;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n || a == b) throw Error(ErrorKind::InvalidInput, "invalid edge");
    edge_set.insert({std::min(a, b), std::max(a, b)});
  }
  edges_.assign(edge_set.begin(), edge_set.end());

  paths_.resize(n);
  if (!paths_[dest_].empty()) throw Error(ErrorKind::InvalidInput, "destination must have no permitted paths");
  for (Node v = 0; v < n; ++v) {
    std::vector<std::size_t> ranks;
    for (std::size_t p = 0; p < paths_[v].size(); ++p) {
      const Path& path = paths_[v][p].nodes;
      if (path.size() < 2 || path.front() != v || path.back() != dest_) {
        throw Error(ErrorKind::InvalidInput, "path at " + labels_[v] + " must run from it to the destination");
      }
      if (std::set<Node>(path.begin(), path.end()).size() != path.size()) {
        throw Error(ErrorKind::InvalidInput, "path " + path_label(path) + " is not simple");
      }
      for (std::size_t t = 0; t + 1 < path.size(); ++t) {
        if (path[t] >= n || path[t + 1] >= n ||
            !edge_set.count({std::min(path[t], path[t + 1]), std::max(path[t], path[t + 1])})) {
          throw Error(ErrorKind::InvalidInput, "path " + path_label(path) + " leaves the graph");
        }
      }
      if (!index_.emplace(path, std::make_pair(v, p)).second) {
        throw Error(ErrorKind::InvalidInput, "path " + path_label(path) + " listed twice");
      }
      ranks.push_back(paths_[v][p].rank);
    }
    std::sort(ranks.begin(), ranks.end());
    for (std::size_t r = 0; r < ranks.size(); ++r) {
      if (ranks[r] != r + 1) {
        throw Error(ErrorKind::InvalidInput, "ranks at " + labels_[v] + " must be exactly 1.." + std::to_string(ranks.size()));
      }
    }
  }
}

std::size_t FsppInstance::path_count() const {
  std::size_t total = 0;
  for (const auto& p : paths_) total += p.size();
  return total;
}

std::optional<std::pair<Node, std::size_t>> FsppInstance::find_path(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string FsppInstance::path_label(const Path& p) const {
  const bool compact = std::all_of(p.begin(), p.end(), [&](Node v) { return v < labels_.size() && labels_[v].size() == 1; });
  std::string out;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (t && !compact) out += "-";
    out += p[t] < labels_.size() ? labels_[p[t]] : "?";
  }
  return out;
}

FsppWeights zero_weights(const FsppInstance& inst) {
  FsppWeights w(inst.node_count());
  for (Node v = 0; v < inst.node_count(); ++v) w[v].assign(inst.paths(v).size(), Rational(0));
  return w;
}

Rational weight_of(const FsppInstance& inst, const FsppWeights& w, const Path& s) {
  auto found = inst.find_path(s);
  if (!found) return 0;
  return w.at(found->first).at(found->second);
}

std::vector<std::size_t> suffix_paths(Node v, const Path& s, const FsppInstance& inst) {
  std::vector<std::size_t> out;
  if (s.size() < 2) return out;
  const auto& paths = inst.paths(v);
  for (std::size_t p = 0; p < paths.size(); ++p) {
    if (ends_with(paths[p].nodes, s)) out.push_back(p);
  }
  return out;
}

VerifyResult verify_feasible(const FsppInstance& inst, const FsppWeights& w) {
  return check_feasible(inst, w, 0);
}

VerifyResult verify_stable(const FsppInstance& inst, const FsppWeights& w) {
  if (auto r = check_feasible(inst, w, 0); !r) return r;
  return check_stability(inst, w, {Relaxation::Exact, 0});
}

VerifyResult verify_eps_solution(const FsppInstance& inst, const FsppWeights& w, const Rational& eps) {
  if (sgn(eps) < 0) throw Error(ErrorKind::InvalidInput, "eps must be nonnegative");
  if (auto r = check_feasible(inst, w, eps); !r) return r;
  return check_stability(inst, w, {Relaxation::EpsSolution, eps});
}

VerifyResult verify_eps_stable(const FsppInstance& inst, const FsppWeights& w, const Rational& eps) {
  if (sgn(eps) < 0) throw Error(ErrorKind::InvalidInput, "eps must be nonnegative");
  if (auto r = check_feasible(inst, w, 0); !r) return r;
  return check_stability(inst, w, {Relaxation::EpsStable, eps});
}

FsppReduction digraph_to_fspp(const kernels::Digraph& d, ArcOrientation orientation) {
  if (d.size() == 0) throw Error(ErrorKind::EmptyInstance, "digraph has no vertices");
  const std::size_t nv = d.size();
  std::vector<std::string> labels = d.labels();
  std::string dest_label = "d";
  while (d.find(dest_label)) dest_label += "'";
  labels.push_back(dest_label);
  const Node dest = nv;

  std::vector<std::pair<Node, Node>> edges;
  for (auto [u, v] : d.arcs()) edges.emplace_back(u, v);
  for (kernels::Vertex v = 0; v < nv; ++v) edges.emplace_back(v, dest);

  FsppReduction out;
  std::vector<std::vector<PermittedPath>> paths(nv + 1);
  for (kernels::Vertex v = 0; v < nv; ++v) {
    paths[v].push_back({{v, dest}, 1});
    std::size_t rank = 2;
    for (kernels::Vertex u = 0; u < nv; ++u) {
      const bool selected = orientation == ArcOrientation::InNeighbor ? d.has_arc(u, v) : d.has_arc(v, u);
      if (selected) paths[v].push_back({{v, u, dest}, rank++});
    }
    out.map.vertex_node.push_back(v);
    out.map.direct_path.push_back(0);
  }
  out.map.dest = dest;
  out.instance = FsppInstance(std::move(labels), dest, std::move(edges), std::move(paths));
  return out;
}

kernels::KernelFunction fspp_solution_to_kernel(const FsppWeights& w, const FsppNodeMap& map) {
  kernels::KernelFunction f;
  for (std::size_t v = 0; v < map.vertex_node.size(); ++v) {
    f.push_back(w.at(map.vertex_node[v]).at(map.direct_path[v]));
  }
  return f;
}

}  // namespace scarf::fspp
