#include "scarf/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "scarf/error.hpp"

namespace scarf::oracle {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded,
                "oracle enumeration needs n <= " + std::to_string(cap) + " (n=" + std::to_string(n) + ")");
  }
}

// Gauss-Jordan on [B_J | b | I] so both the basic solution and B_J^-1 come
// out of one elimination. Returns false if B_J is singular.
bool eliminate(const ColumnSet& J, const ScarfInstance& inst, std::vector<std::vector<Rational>>& rows) {
  const std::size_t m = inst.m;
  rows.assign(m, std::vector<Rational>(2 * m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < m; ++p) rows[i][p] = inst.B(i, J[p]);
    rows[i][m] = inst.b[i];
    rows[i][m + 1 + i] = 1;
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && rows[piv][col] == 0) ++piv;
    if (piv == m) return false;
    std::swap(rows[piv], rows[col]);
    const Rational scale = rows[col][col];
    for (auto& v : rows[col]) v /= scale;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= f * rows[col][c];
    }
  }
  return true;
}

bool feasible(const ColumnSet& J, const ScarfInstance& inst, Feasibility mode) {
  std::vector<std::vector<Rational>> rows;
  if (!eliminate(J, inst, rows)) return false;
  const std::size_t m = inst.m;
  for (std::size_t r = 0; r < m; ++r) {
    if (mode == Feasibility::Plain) {
      if (sgn(rows[r][m]) < 0) return false;
      continue;
    }
    // First nonzero of (x_r, inverse row r) must be positive.
    for (std::size_t c = m; c <= 2 * m; ++c) {
      int s = sgn(rows[r][c]);
      if (s < 0) return false;
      if (s > 0) break;
    }
  }
  return true;
}

bool subordinating(const ColumnSet& J, const CanonicalScarf& canon) {
  for (Column k = 0; k < canon.n(); ++k) {
    bool covered = false;
    for (std::size_t i = 0; i < canon.m() && !covered; ++i) {
      covered = std::all_of(J.begin(), J.end(), [&](Column j) { return canon.rank(i, k) <= canon.rank(i, j); });
    }
    if (!covered) return false;
  }
  return true;
}

std::string set_label(const ColumnSet& cols) {
  std::string s = "{";
  for (std::size_t p = 0; p < cols.size(); ++p) {
    if (p) s += ",";
    s += std::to_string(cols[p] + 1);
  }
  return s + "}";
}

}  // namespace

std::vector<ColumnSet> enumerate_feasible_bases(const ScarfInstance& inst, Feasibility mode, std::size_t cap) {
  check_cap(inst.n, cap);
  std::vector<ColumnSet> out;
  for_each_subset(inst.n, inst.m, [&](const ColumnSet& J) {
    if (feasible(J, inst, mode)) out.push_back(J);
  });
  return out;
}

std::vector<ColumnSet> enumerate_subordinating_of_size(const CanonicalScarf& canon, std::size_t size,
                                                       std::size_t cap) {
  check_cap(canon.n(), cap);
  std::vector<ColumnSet> out;
  for_each_subset(canon.n(), size, [&](const ColumnSet& J) {
    if (subordinating(J, canon)) out.push_back(J);
  });
  return out;
}

std::vector<ColumnSet> enumerate_subordinating(const CanonicalScarf& canon, std::size_t cap) {
  return enumerate_subordinating_of_size(canon, canon.m(), cap);
}

PathGraph build_path_graph(const ScarfInstance& inst, std::size_t cap) {
  check_cap(inst.n, cap);
  const CanonicalScarf canon(inst);
  const std::size_t m = inst.m;
  PathGraph g;

  for (const auto& F : enumerate_feasible_bases(inst, Feasibility::Lexicographic, cap)) {
    if (F.front() == 0) g.f_side.push_back(F);
  }
  for (const auto& S : enumerate_subordinating(canon, cap)) {
    if (S.front() != 0) g.s_side.push_back(S);
  }

  std::map<ColumnSet, std::size_t> s_lookup;
  for (std::size_t s = 0; s < g.s_side.size(); ++s) s_lookup[g.s_side[s]] = s;

  g.f_degree.assign(g.f_side.size(), 0);
  g.s_degree.assign(g.s_side.size(), 0);
  g.f_terminal.assign(g.f_side.size(), false);
  g.s_terminal.assign(g.s_side.size(), false);

  ColumnSet slack(m);
  for (Column c = 0; c < m; ++c) slack[c] = c;

  for (std::size_t f = 0; f < g.f_side.size(); ++f) {
    const ColumnSet& F = g.f_side[f];
    if (F == slack) g.slack_index = f;
    g.f_terminal[f] = subordinating(F, canon);
    // Neighbors: S = F - {1} + t for t not in F.
    ColumnSet K(F.begin() + 1, F.end());
    for (Column t = 1; t < inst.n; ++t) {
      if (std::binary_search(F.begin(), F.end(), t)) continue;
      ColumnSet S = K;
      S.insert(std::upper_bound(S.begin(), S.end(), t), t);
      auto it = s_lookup.find(S);
      if (it == s_lookup.end()) continue;
      g.edges.emplace_back(f, it->second);
      ++g.f_degree[f];
      ++g.s_degree[it->second];
    }
  }
  {
    std::vector<ColumnSet> feasible_all = enumerate_feasible_bases(inst, Feasibility::Lexicographic, cap);
    for (std::size_t s = 0; s < g.s_side.size(); ++s) {
      g.s_terminal[s] = std::binary_search(feasible_all.begin(), feasible_all.end(), g.s_side[s]);
    }
  }

  if (g.f_side.empty() || g.f_side[g.slack_index] != slack) {
    g.audit.push_back("[m] missing from the F side");
    return g;
  }

  auto check_degree = [&](bool s_side, std::size_t idx) {
    const std::size_t deg = s_side ? g.s_degree[idx] : g.f_degree[idx];
    const bool terminal = s_side ? g.s_terminal[idx] : g.f_terminal[idx];
    const std::string name = set_label(s_side ? g.s_side[idx] : g.f_side[idx]);
    if (!s_side && idx == g.slack_index) {
      if (terminal) g.audit.push_back("[m] is subordinating");
      if (deg != 1) g.audit.push_back("[m] has degree " + std::to_string(deg));
    } else if (terminal) {
      if (deg != 1) g.audit.push_back("terminal " + name + " has degree " + std::to_string(deg));
    } else if (deg != 0 && deg != 2) {
      g.audit.push_back(name + " has degree " + std::to_string(deg));
    }
  };
  for (std::size_t f = 0; f < g.f_side.size(); ++f) check_degree(false, f);
  for (std::size_t s = 0; s < g.s_side.size(); ++s) check_degree(true, s);

  // Trace the component of [m].
  std::vector<std::vector<std::size_t>> f_adj(g.f_side.size()), s_adj(g.s_side.size());
  for (auto [f, s] : g.edges) {
    f_adj[f].push_back(s);
    s_adj[s].push_back(f);
  }
  std::vector<bool> f_seen(g.f_side.size()), s_seen(g.s_side.size());
  std::pair<bool, std::size_t> at{false, g.slack_index};
  for (;;) {
    g.slack_component.push_back(at);
    (at.first ? s_seen : f_seen)[at.second] = true;
    const auto& adj = at.first ? s_adj[at.second] : f_adj[at.second];
    std::optional<std::size_t> next;
    for (std::size_t nb : adj) {
      if (!(at.first ? f_seen : s_seen)[nb]) {
        if (next) {
          g.audit.push_back("[m]-component branches");
          break;
        }
        next = nb;
      }
    }
    if (!next) break;
    at = {!at.first, *next};
  }
  const auto [end_s, end_idx] = g.slack_component.back();
  if (g.slack_component.size() < 2) {
    g.audit.push_back("[m] is isolated");
  } else if (!(end_s ? g.s_terminal[end_idx] : g.f_terminal[end_idx])) {
    g.audit.push_back("[m]-path ends at a non-terminal vertex");
  }
  for (std::size_t k = 0; k + 1 < g.slack_component.size(); ++k) {
    const auto [is_s, idx] = g.slack_component[k];
    if (k > 0 && (is_s ? g.s_terminal[idx] : g.f_terminal[idx])) {
      g.audit.push_back("terminal vertex in the interior of the [m]-path");
    }
  }
  return g;
}

std::string to_dot(const PathGraph& g) {
  std::string out = "graph scarf_path {\n";
  auto node = [](char side, std::size_t idx) { return std::string(1, side) + std::to_string(idx); };
  for (std::size_t f = 0; f < g.f_side.size(); ++f) {
    out += "  " + node('F', f) + " [label=\"" + set_label(g.f_side[f]) + "\", shape=box";
    if (f == g.slack_index) out += ", style=bold";
    if (g.f_terminal[f]) out += ", peripheries=2";
    out += "];\n";
  }
  for (std::size_t s = 0; s < g.s_side.size(); ++s) {
    out += "  " + node('S', s) + " [label=\"" + set_label(g.s_side[s]) + "\", shape=ellipse";
    if (g.s_terminal[s]) out += ", peripheries=2";
    out += "];\n";
  }
  for (auto [f, s] : g.edges) out += "  " + node('F', f) + " -- " + node('S', s) + ";\n";
  out += "}\n";
  return out;
}

std::vector<ScarfSolution> brute_solve(const ScarfInstance& inst, std::size_t cap) {
  check_cap(inst.n, cap);
  const CanonicalScarf canon(inst);
  std::vector<ScarfSolution> out;
  for (const auto& J : enumerate_subordinating(canon, cap)) {
    std::vector<std::vector<Rational>> rows;
    if (!eliminate(J, inst, rows)) continue;
    ScarfSolution sol;
    sol.J = J;
    sol.alpha.assign(inst.n, Rational(0));
    bool nonneg = true;
    for (std::size_t p = 0; p < inst.m; ++p) {
      nonneg = nonneg && sgn(rows[p][inst.m]) >= 0;
      sol.alpha[J[p]] = rows[p][inst.m];
    }
    if (!nonneg) continue;
    // Smallest row at which each column is weakly subordinated under C.
    sol.witness.assign(inst.n, 0);
    for (Column k = 0; k < inst.n; ++k) {
      std::size_t i = 0;
      while (i < inst.m && !std::all_of(J.begin(), J.end(), [&](Column j) { return inst.C(i, k) <= inst.C(i, j); })) ++i;
      sol.witness[k] = i;
    }
    if (auto check = verify_solution(inst, sol); !check) {
      throw Error(ErrorKind::LemmaViolation, "brute-force solution " + set_label(J) + " fails verification: " + check.diagnostic);
    }
    out.push_back(std::move(sol));
  }
  return out;
}

}  // namespace scarf::oracle
