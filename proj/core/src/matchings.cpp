#include "scarf/matchings.hpp"

#include <algorithm>

#include "scarf/error.hpp"

namespace scarf::matchings {

namespace {

std::string edge_label(const HypergraphPrefSystem& h, EdgeId e) {
  std::string out = "{";
  for (std::size_t p = 0; p < h.edges[e].size(); ++p) {
    if (p) out += ",";
    out += h.labels[h.edges[e][p]];
  }
  return out + "}";
}

}  // namespace

bool HypergraphPrefSystem::contains(EdgeId e, Vertex v) const {
  const auto& edge = edges.at(e);
  return std::find(edge.begin(), edge.end(), v) != edge.end();
}

std::size_t HypergraphPrefSystem::preference(Vertex v, EdgeId e) const {
  const auto& order = orders.at(v);
  auto it = std::find(order.begin(), order.end(), e);
  if (it == order.end()) throw Error(ErrorKind::InvalidInput, "edge not ranked by its vertex");
  return static_cast<std::size_t>(it - order.begin()) + 1;
}

void validate(const HypergraphPrefSystem& h) {
  const std::size_t nv = h.vertex_count();
  if (h.orders.size() != nv) throw Error(ErrorKind::InvalidInput, "one order per vertex required");
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto& edge = h.edges[e];
    if (edge.empty()) throw Error(ErrorKind::InvalidInput, "edge " + std::to_string(e + 1) + " is empty");
    for (std::size_t p = 0; p < edge.size(); ++p) {
      if (edge[p] >= nv) throw Error(ErrorKind::InvalidInput, "edge references an unknown vertex");
      for (std::size_t q = 0; q < p; ++q) {
        if (edge[p] == edge[q]) throw Error(ErrorKind::InvalidInput, "edge repeats a vertex");
      }
    }
  }
  for (Vertex v = 0; v < nv; ++v) {
    std::vector<EdgeId> expected;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (h.contains(e, v)) expected.push_back(e);
    }
    std::vector<EdgeId> given = h.orders[v];
    std::sort(given.begin(), given.end());
    if (given != expected) {
      throw Error(ErrorKind::InvalidInput, "order at " + h.labels[v] + " must rank exactly the edges containing it");
    }
  }
}

MatchingReduction reduce_to_scarf(const HypergraphPrefSystem& h) {
  if (h.edge_count() == 0 || h.vertex_count() == 0) {
    throw Error(ErrorKind::EmptyInstance, "hypergraph has no edges");
  }
  validate(h);
  const std::size_t m = h.vertex_count();
  const std::size_t ne = h.edge_count();

  MatchingReduction out;
  ScarfInstance& inst = out.instance;
  inst.m = m;
  inst.n = m + ne;
  inst.B = Matrix(m, inst.n);
  inst.C = Matrix(m, inst.n);
  inst.b.assign(m, Rational(1));
  for (Vertex v = 0; v < m; ++v) out.map.slack_cols.push_back(v);
  for (EdgeId e = 0; e < ne; ++e) out.map.edge_cols.push_back(m + e);

  for (Vertex v = 0; v < m; ++v) {
    inst.B(v, v) = 1;
    for (Vertex u = 0; u < m; ++u) {
      inst.C(v, u) = (u == v) ? Rational(-1) : Rational(static_cast<long>(2 * ne + u + 1));
    }
    for (EdgeId e = 0; e < ne; ++e) {
      if (h.contains(e, v)) {
        inst.B(v, m + e) = 1;
        inst.C(v, m + e) = static_cast<long>(h.preference(v, e));
      } else {
        inst.C(v, m + e) = static_cast<long>(ne + e + 1);
      }
    }
  }
  return out;
}

FractionalMatching extract_matching(const ScarfSolution& sol, const MatchingReductionMap& map) {
  FractionalMatching w;
  for (Column c : map.edge_cols) w.push_back(sol.alpha.at(c));
  return w;
}

VerifyResult verify_stable_matching(const HypergraphPrefSystem& h, const FractionalMatching& w) {
  if (w.size() != h.edge_count()) return VerifyResult::fail("one weight per edge required");
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (sgn(w[e]) < 0) return VerifyResult::fail("negative weight on edge " + edge_label(h, e));
  }
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    Rational load = 0;
    for (EdgeId e : h.orders[v]) load += w[e];
    if (load > 1) return VerifyResult::fail("vertex " + h.labels[v] + " overloaded (" + to_string(load) + ")");
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    bool stable = false;
    for (Vertex v : h.edges[e]) {
      const std::size_t rank_e = h.preference(v, e);
      Rational upper = 0;
      for (EdgeId g : h.orders[v]) {
        if (h.preference(v, g) >= rank_e) upper += w[g];
      }
      if (upper == 1) {
        stable = true;
        break;
      }
    }
    if (!stable) return VerifyResult::fail("edge " + edge_label(h, e) + " unstable");
  }
  return VerifyResult::pass();
}

FractionalMatching solve_stable_matching(const HypergraphPrefSystem& h, const SolveOptions& options) {
  auto reduction = reduce_to_scarf(h);
  auto result = solve(reduction.instance, options);
  auto w = extract_matching(result.solution, reduction.map);
  if (auto check = verify_stable_matching(h, w); !check) {
    throw Error(ErrorKind::LemmaViolation, "reduced solution is not a stable matching: " + check.diagnostic);
  }
  return w;
}

std::vector<EdgeId> blocking_edges(const HypergraphPrefSystem& h, const std::vector<bool>& matched) {
  std::vector<EdgeId> out;
  auto held = [&](Vertex v) -> std::size_t {
    for (EdgeId g : h.orders[v]) {
      if (matched[g]) return h.preference(v, g);
    }
    return 0;
  };
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (matched[e] || h.edges[e].size() != 2) continue;
    const bool blocks = std::all_of(h.edges[e].begin(), h.edges[e].end(),
                                    [&](Vertex v) { return h.preference(v, e) > held(v); });
    if (blocks) out.push_back(e);
  }
  return out;
}

}  // namespace scarf::matchings
