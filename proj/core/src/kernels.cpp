#include "scarf/kernels.hpp"

#include <algorithm>
#include <functional>

#include "scarf/error.hpp"

namespace scarf::kernels {

namespace {

// Bron-Kerbosch with pivoting over the underlying undirected graph.
class CliqueSearch {
 public:
  CliqueSearch(const Digraph& d, CliqueLimit limit) : d_(d), limit_(limit) {}

  std::vector<VertexSet> run(VertexSet candidates) {
    VertexSet current;
    expand(current, std::move(candidates), {});
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void expand(VertexSet& current, VertexSet p, VertexSet x) {
    if (limit_.max_size && current.size() > *limit_.max_size) {
      throw Error(ErrorKind::CliqueTooLarge,
                  "clique of size " + std::to_string(current.size()) + " exceeds the limit of " +
                      std::to_string(*limit_.max_size));
    }
    if (p.empty() && x.empty()) {
      if (found_.size() >= limit_.enumeration_cap) {
        throw Error(ErrorKind::CapExceeded, "maximal clique enumeration cap reached");
      }
      VertexSet clique = current;
      std::sort(clique.begin(), clique.end());
      found_.push_back(std::move(clique));
      return;
    }
    // Pivot: the vertex of P u X with the most neighbors in P.
    Vertex pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const VertexSet* side : {&p, &x}) {
      for (Vertex u : *side) {
        std::size_t cnt = std::count_if(p.begin(), p.end(), [&](Vertex w) { return d_.adjacent(u, w); });
        if (cnt > best) {
          best = cnt;
          pivot = u;
        }
      }
    }
    VertexSet branch;
    for (Vertex v : p) {
      if (!d_.adjacent(pivot, v)) branch.push_back(v);
    }
    for (Vertex v : branch) {
      VertexSet np, nx;
      for (Vertex u : p) {
        if (d_.adjacent(u, v)) np.push_back(u);
      }
      for (Vertex u : x) {
        if (d_.adjacent(u, v)) nx.push_back(u);
      }
      current.push_back(v);
      expand(current, std::move(np), std::move(nx));
      current.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  const Digraph& d_;
  CliqueLimit limit_;
  std::vector<VertexSet> found_;
};

// Linear order of a clique in which an irreversible arc v->u places u before
// v; among the vertices whose pointed-at members are all placed, the smallest
// id goes first. Empty result means the irreversible arcs contain a cycle.
VertexSet clique_order(const Digraph& d, const VertexSet& clique) {
  VertexSet order;
  std::vector<bool> placed(clique.size(), false);
  while (order.size() < clique.size()) {
    std::optional<std::size_t> pick;
    for (std::size_t a = 0; a < clique.size() && !pick; ++a) {
      if (placed[a]) continue;
      bool ready = true;
      for (std::size_t b = 0; b < clique.size() && ready; ++b) {
        if (!placed[b] && b != a && d.irreversible(clique[a], clique[b])) ready = false;
      }
      if (ready) pick = a;
    }
    if (!pick) return {};
    placed[*pick] = true;
    order.push_back(clique[*pick]);
  }
  return order;
}

std::string fmt(const Rational& q) { return to_string(q); }

std::string set_label(const Digraph& d, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (p) out += ",";
    out += d.label(s[p]);
  }
  return out + "}";
}

Rational sum_over(const KernelFunction& f, const VertexSet& s) {
  Rational total = 0;
  for (Vertex v : s) total += f[v];
  return total;
}

VerifyResult check_shape(const Digraph& d, const KernelFunction& f) {
  if (f.size() != d.size()) return VerifyResult::fail("kernel function must cover every vertex");
  for (Vertex v = 0; v < d.size(); ++v) {
    if (sgn(f[v]) < 0) return VerifyResult::fail("negative weight at " + d.label(v));
  }
  return VerifyResult::pass();
}

VerifyResult check_independence(const Digraph& d, const KernelFunction& f) {
  for (const auto& clique : maximal_cliques(d)) {
    Rational s = sum_over(f, clique);
    if (s > 1) {
      return VerifyResult::fail("independence fails on clique " + set_label(d, clique) + " (sum " + fmt(s) + ")");
    }
  }
  return VerifyResult::pass();
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Digraph& d, CliqueLimit limit) {
  VertexSet all(d.size());
  for (Vertex v = 0; v < d.size(); ++v) all[v] = v;
  return CliqueSearch(d, limit).run(std::move(all));
}

std::vector<VertexSet> maximal_cliques_within(const Digraph& d, const VertexSet& within, std::size_t cap) {
  return CliqueSearch(d, CliqueLimit{std::nullopt, cap}).run(within);
}

bool is_clique_acyclic(const Digraph& d) {
  for (const auto& clique : maximal_cliques(d)) {
    if (clique_order(d, clique).empty() && !clique.empty()) return false;
  }
  return true;
}

CycleEnumeration enumerate_proper_cycles(const Digraph& d, std::size_t cap) {
  CycleEnumeration out;
  const std::size_t n = d.size();
  std::uint64_t budget = static_cast<std::uint64_t>(cap) * 100 + 1000;
  VertexSet path;
  std::vector<bool> on_path(n, false);

  // Cycles are reported from their smallest vertex, visiting larger ones only.
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex at) {
    if (out.truncated) return;
    if (budget-- == 0) {
      out.truncated = true;
      return;
    }
    for (Vertex next : d.out_neighbors(at)) {
      if (!d.irreversible(at, next)) continue;
      if (next == start) {
        if (out.cycles.size() >= cap) {
          out.truncated = true;
          return;
        }
        out.cycles.push_back(path);
      } else if (next > start && !on_path[next]) {
        on_path[next] = true;
        path.push_back(next);
        dfs(start, next);
        path.pop_back();
        on_path[next] = false;
      }
      if (out.truncated) return;
    }
  };
  for (Vertex s = 0; s < n && !out.truncated; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  return out;
}

bool is_homogeneous(const Digraph& d, const VertexSet& cycle) {
  auto inside = [&](Vertex v) { return std::find(cycle.begin(), cycle.end(), v) != cycle.end(); };
  for (Vertex u = 0; u < d.size(); ++u) {
    if (inside(u)) continue;
    bool points_at_any = std::any_of(cycle.begin(), cycle.end(), [&](Vertex v) { return d.has_arc(u, v); });
    bool points_at_all = std::all_of(cycle.begin(), cycle.end(), [&](Vertex v) { return d.has_arc(u, v); });
    if (points_at_any && !points_at_all) return false;
  }
  return true;
}

KernelValidation validate_3kernel_instance(const Digraph& d, std::size_t cycle_cap) {
  KernelValidation report;
  try {
    maximal_cliques(d, CliqueLimit{3, kDefaultCliqueCap});
  } catch (const Error& e) {
    report.problems.push_back({"clique-size", e.what()});
  }
  if (!is_clique_acyclic(d)) {
    report.problems.push_back({"clique-acyclic", "a clique contains a proper cycle"});
  }

  auto cycles = enumerate_proper_cycles(d, cycle_cap);
  report.inconclusive = cycles.truncated;
  report.proper_cycles = cycles.cycles;
  for (std::size_t a = 0; a < cycles.cycles.size(); ++a) {
    const auto& ca = cycles.cycles[a];
    if (!is_homogeneous(d, ca)) {
      report.problems.push_back({"homogeneous", "proper cycle " + set_label(d, ca) + " is not homogeneous"});
    }
    for (std::size_t b = 0; b < a; ++b) {
      const auto& cb = cycles.cycles[b];
      bool shared = std::any_of(ca.begin(), ca.end(), [&](Vertex v) {
        return std::find(cb.begin(), cb.end(), v) != cb.end();
      });
      if (shared) {
        report.problems.push_back({"node-disjoint", "proper cycles " + set_label(d, cb) + " and " +
                                                        set_label(d, ca) + " share a node"});
      }
    }
  }
  return report;
}

KernelReduction reduce_to_scarf(const Digraph& d) {
  if (d.size() == 0) throw Error(ErrorKind::EmptyInstance, "digraph has no vertices");
  const auto cliques = maximal_cliques(d);

  std::vector<VertexSet> orders;
  orders.reserve(cliques.size());
  for (const auto& clique : cliques) {
    auto order = clique_order(d, clique);
    if (order.empty()) {
      throw Error(ErrorKind::NotCliqueAcyclic, "clique " + set_label(d, clique) + " contains a proper cycle");
    }
    orders.push_back(std::move(order));
  }

  const std::size_t nv = d.size();
  const std::size_t m = cliques.size();
  const std::size_t n = m + nv;

  KernelReduction out;
  ScarfInstance& inst = out.instance;
  inst.m = m;
  inst.n = n;
  inst.B = Matrix(m, n);
  inst.C = Matrix(m, n);
  inst.b.assign(m, Rational(1));

  KernelReductionMap& map = out.map;
  map.clique_rows = cliques;
  for (std::size_t i = 0; i < m; ++i) map.slack_cols.push_back(i);
  for (Vertex v = 0; v < nv; ++v) map.vertex_cols.push_back(m + v);

  for (std::size_t i = 0; i < m; ++i) {
    inst.B(i, i) = 1;
    for (std::size_t l = 0; l < m; ++l) {
      inst.C(i, l) = (l == i) ? Rational(-1) : Rational(static_cast<long>(2 * nv + m + l + 1));
    }
    for (Vertex v = 0; v < nv; ++v) {
      inst.C(i, m + v) = static_cast<long>(nv + v + 1);
    }
    for (std::size_t pos = 0; pos < orders[i].size(); ++pos) {
      const Vertex v = orders[i][pos];
      inst.B(i, m + v) = 1;
      inst.C(i, m + v) = static_cast<long>(pos + 1);
    }
  }
  return out;
}

KernelFunction extract_kernel(const ScarfSolution& sol, const KernelReductionMap& map) {
  KernelFunction f;
  f.reserve(map.vertex_cols.size());
  for (Column c : map.vertex_cols) f.push_back(sol.alpha.at(c));
  return f;
}

VerifyResult verify_fractional_kernel(const Digraph& d, const KernelFunction& f) {
  if (auto r = check_shape(d, f); !r) return r;
  if (auto r = check_independence(d, f); !r) return r;
  for (Vertex v = 0; v < d.size(); ++v) {
    Rational s = sum_over(f, d.in_closure(v));
    if (s < 1) return VerifyResult::fail("domination fails at " + d.label(v) + " (sum " + fmt(s) + ")");
  }
  return VerifyResult::pass();
}

VerifyResult verify_strong_kernel(const Digraph& d, const KernelFunction& f) {
  if (auto r = check_shape(d, f); !r) return r;
  if (auto r = check_independence(d, f); !r) return r;
  for (Vertex v = 0; v < d.size(); ++v) {
    // With f >= 0 the best clique inside I(v) is a maximal one.
    bool dominated = false;
    for (const auto& clique : maximal_cliques_within(d, d.in_closure(v))) {
      if (sum_over(f, clique) >= 1) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return VerifyResult::fail("strong domination fails at " + d.label(v));
  }
  return VerifyResult::pass();
}

VerifyResult verify_nash(const Digraph& d, const KernelFunction& f) {
  if (auto r = verify_fractional_kernel(d, f); !r) return r;
  std::vector<bool> tight(d.size());
  for (Vertex v = 0; v < d.size(); ++v) tight[v] = sum_over(f, d.in_closure(v)) == 1;
  for (Vertex v = 0; v < d.size(); ++v) {
    if (sgn(f[v]) == 0) continue;
    bool pinned = false;
    for (Vertex w = 0; w < d.size() && !pinned; ++w) {
      const auto& closure = d.in_closure(w);
      pinned = tight[w] && std::binary_search(closure.begin(), closure.end(), v);
    }
    if (!pinned) {
      return VerifyResult::fail("not Nash: " + d.label(v) + " can lower its weight " + fmt(f[v]));
    }
  }
  return VerifyResult::pass();
}

KernelFunction solve_strong_kernel(const Digraph& d, const SolveOptions& options) {
  if (!is_clique_acyclic(d)) throw Error(ErrorKind::NotCliqueAcyclic, "digraph is not clique-acyclic");
  auto reduction = reduce_to_scarf(d);
  auto result = solve(reduction.instance, options);
  auto f = extract_kernel(result.solution, reduction.map);
  if (auto check = verify_strong_kernel(d, f); !check) {
    throw Error(ErrorKind::LemmaViolation, "reduced solution is not a strong kernel: " + check.diagnostic);
  }
  return f;
}

}  // namespace scarf::kernels
