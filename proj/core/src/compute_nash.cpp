#include <algorithm>
#include <functional>
#include <set>

#include "scarf/error.hpp"
#include "scarf/kernels.hpp"

namespace scarf::kernels {

namespace {

// Maximum cycle cover with unit arc weights = maximum bipartite matching
// between out-copies and in-copies of the vertices. Returns successor links
// of the matched arcs.
std::vector<std::optional<Vertex>> max_cycle_cover(const Digraph& d) {
  const std::size_t n = d.size();
  std::vector<std::optional<Vertex>> match_in(n);  // in-copy v -> tail u
  std::function<bool(Vertex, std::vector<bool>&)> augment = [&](Vertex u, std::vector<bool>& seen) {
    for (Vertex v : d.out_neighbors(u)) {
      if (seen[v]) continue;
      seen[v] = true;
      if (!match_in[v] || augment(*match_in[v], seen)) {
        match_in[v] = u;
        return true;
      }
    }
    return false;
  };
  for (Vertex u = 0; u < n; ++u) {
    std::vector<bool> seen(n, false);
    augment(u, seen);
  }
  std::vector<std::optional<Vertex>> succ(n);
  for (Vertex v = 0; v < n; ++v) {
    if (match_in[v]) succ[*match_in[v]] = v;
  }
  return succ;
}

std::vector<VertexSet> cover_cycles(const std::vector<std::optional<Vertex>>& succ) {
  const std::size_t n = succ.size();
  std::vector<bool> done(n, false);
  std::vector<VertexSet> cycles;
  for (Vertex s = 0; s < n; ++s) {
    if (done[s]) continue;
    VertexSet walk;
    std::optional<Vertex> at = s;
    while (at && !done[*at] && std::find(walk.begin(), walk.end(), *at) == walk.end()) {
      walk.push_back(*at);
      at = succ[*at];
    }
    if (at && *at == s) cycles.push_back(walk);
    for (Vertex v : walk) done[v] = true;
  }
  return cycles;
}

}  // namespace

NashResult compute_nash(const Digraph& d, const KernelFunction& w, const NashOptions& options) {
  if (auto check = verify_strong_kernel(d, w); !check) {
    throw Error(ErrorKind::InvalidInput, "input is not a strong fractional kernel: " + check.diagnostic);
  }
  auto validation = validate_3kernel_instance(d, options.cycle_cap);
  if (!validation.problems.empty()) {
    throw Error(ErrorKind::InvalidInput, "not a 3-kernel instance: " + validation.problems.front().message);
  }
  if (validation.inconclusive) {
    throw Error(ErrorKind::InvalidInput, "proper-cycle enumeration inconclusive at cap " +
                                             std::to_string(options.cycle_cap));
  }

  NashResult result;
  result.cover_cycles = cover_cycles(max_cycle_cover(d));

  // Contract every homogeneous proper cycle. Cycles of the cover that are
  // proper are among these; proper cycles the cover routed around are taken
  // from the enumeration.
  std::set<VertexSet> supers;
  for (const auto& c : result.cover_cycles) {
    if (c.size() >= 3 && is_homogeneous(d, c)) {
      bool proper = true;
      for (std::size_t p = 0; p < c.size(); ++p) proper = proper && d.irreversible(c[p], c[(p + 1) % c.size()]);
      if (proper) supers.insert(c);
    }
  }
  for (auto c : validation.proper_cycles) supers.insert(c);
  for (auto c : supers) {
    std::sort(c.begin(), c.end());
    result.super_nodes.push_back(c);
  }
  std::sort(result.super_nodes.begin(), result.super_nodes.end());
  result.super_nodes.erase(std::unique(result.super_nodes.begin(), result.super_nodes.end()),
                           result.super_nodes.end());

  // The reduction loop can fire on a node that is over-covered in one
  // closure while tight in another, so a Nash input would be moved (or even
  // broken). Nash inputs are returned untouched.
  if (verify_nash(d, w)) {
    result.f = w;
    return result;
  }

  // Contracted graph: one node per super node or remaining vertex, ordered
  // by smallest member id; parallel arcs merged, inner arcs dropped.
  const std::size_t n = d.size();
  std::vector<VertexSet> members;
  {
    std::vector<bool> taken(n, false);
    for (const auto& s : result.super_nodes) {
      for (Vertex v : s) taken[v] = true;
      members.push_back(s);
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!taken[v]) members.push_back({v});
    }
    std::sort(members.begin(), members.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  }
  std::vector<Vertex> group(n);
  for (Vertex g = 0; g < members.size(); ++g) {
    for (Vertex v : members[g]) group[v] = g;
  }
  std::set<Arc> merged;
  for (auto [u, v] : d.arcs()) {
    if (group[u] != group[v]) merged.insert({group[u], group[v]});
  }
  std::vector<std::string> labels;
  for (const auto& g : members) {
    std::string label;
    for (Vertex v : g) label += (label.empty() ? "" : "+") + d.label(v);
    labels.push_back(label);
  }
  const Digraph contracted(labels, std::vector<Arc>(merged.begin(), merged.end()));

  // A super node's weight is the inverse of the expansion rule below.
  KernelFunction cw(members.size());
  for (Vertex g = 0; g < members.size(); ++g) {
    if (members[g].size() == 1) {
      cw[g] = w[members[g].front()];
    } else {
      Rational total = 0;
      for (Vertex v : members[g]) total += w[v];
      cw[g] = 2 * total / static_cast<long>(members[g].size());
    }
  }

  auto closure_sum = [&](Vertex v) {
    Rational s = 0;
    for (Vertex u : contracted.in_closure(v)) s += cw[u];
    return s;
  };

  for (;;) {
    std::optional<Vertex> over;
    Rational delta;
    for (Vertex v = 0; v < contracted.size() && !over; ++v) {
      if (sgn(cw[v]) <= 0) continue;
      Rational s = closure_sum(v);
      if (s > 1) {
        over = v;
        delta = s - 1;
      }
    }
    if (!over) break;
    if (result.iterations++ >= options.iteration_cap) {
      throw Error(ErrorKind::IterationCap, "slack reduction did not settle within " +
                                               std::to_string(options.iteration_cap) + " iterations");
    }
    const Vertex v = *over;
    cw[v] -= std::min(delta, cw[v]);
    for (Vertex out : contracted.out_neighbors(v)) {
      Rational s = closure_sum(out);
      if (s < 1) cw[out] += 1 - s;
    }
  }

  result.f.assign(n, Rational(0));
  for (Vertex g = 0; g < members.size(); ++g) {
    for (Vertex v : members[g]) result.f[v] = members[g].size() == 1 ? cw[g] : cw[g] / 2;
  }

  if (auto check = verify_fractional_kernel(d, result.f); !check) {
    throw Error(ErrorKind::Unrepairable, "output is not a fractional kernel: " + check.diagnostic);
  }
  if (auto check = verify_nash(d, result.f); !check) {
    throw Error(ErrorKind::Unrepairable, "output is not Nash: " + check.diagnostic);
  }
  return result;
}

}  // namespace scarf::kernels
