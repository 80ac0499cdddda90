#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "reference.hpp"
#include "scarf/error.hpp"
#include "scarf/fspp.hpp"
#include "scarf/generators.hpp"
#include "scarf/kernels.hpp"
#include "scarf/matchings.hpp"
#include "scarf/oracle.hpp"

using namespace scarf;

namespace {

ColumnSet sorted(ColumnSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

bool inside_slack_block(const ColumnSet& k, std::size_t m) {
  return std::all_of(k.begin(), k.end(), [&](Column c) { return c < m; });
}

matchings::HypergraphPrefSystem random_hypergraph(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  matchings::HypergraphPrefSystem h;
  const std::size_t nv = 2 + rng() % 5;
  for (std::size_t v = 0; v < nv; ++v) h.labels.push_back("v" + std::to_string(v));
  std::set<std::vector<std::size_t>> edges;
  const std::size_t target = 1 + rng() % 7;
  for (std::size_t t = 0; t < 4 * target && edges.size() < target; ++t) {
    std::vector<std::size_t> e;
    for (std::size_t v = 0; v < nv; ++v) {
      if (rng() % 3 == 0) e.push_back(v);
    }
    if (e.empty() || e.size() > 3) continue;
    edges.insert(e);
  }
  if (edges.empty()) edges.insert({0, 1});
  h.edges.assign(edges.begin(), edges.end());
  h.orders.assign(nv, {});
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    for (auto v : h.edges[e]) h.orders[v].push_back(e);
  }
  for (auto& o : h.orders) std::shuffle(o.begin(), o.end(), rng);
  return h;
}

}  // namespace

TEST_CASE("solver agrees with both oracles") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto inst = fx::random_instance(seed, 5, 10);
    CAPTURE(seed);
    auto result = solve(inst);
    CHECK(verify_solution(inst, result.solution));
    CHECK(ref::scarf_solution_ok(inst, result.solution.J, result.solution.alpha));

    std::vector<ColumnSet> brute;
    for (const auto& s : oracle::brute_solve(inst)) brute.push_back(s.J);
    CHECK(std::find(brute.begin(), brute.end(), result.solution.J) != brute.end());

    // the rank-based oracle only refines ties, so it finds a subset of the weak solutions
    auto weak = ref::all_solutions(inst);
    for (const auto& J : brute) CHECK(std::find(weak.begin(), weak.end(), J) != weak.end());
  }
}

TEST_CASE("walk is simple") {
  SolveOptions opt;
  opt.record_trace = true;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto inst = fx::random_instance(seed, 5, 10);
    auto r = solve(inst, opt);
    std::set<std::pair<int, ColumnSet>> seen;
    for (const auto& v : r.trace) CHECK(seen.insert({static_cast<int>(v.mode), v.columns}).second);
    CHECK(r.pivots + 1 == r.trace.size());
  }
}

TEST_CASE("pivot reversibility") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto inst = fx::random_instance(seed, 4, 8);
    for (auto& b : inst.b) b = b + Rational(1, 7 + static_cast<long>(seed));  // push b off degenerate cones
    for (const auto& J : oracle::enumerate_feasible_bases(inst)) {
      auto F = *solve_basis(J, inst);
      for (Column k = 0; k < inst.n; ++k) {
        if (std::find(J.begin(), J.end(), k) != J.end()) continue;
        PivotResult p;
        try {
          p = cardinal_pivot(F, k, inst);
        } catch (const Error&) {
          continue;
        }
        bool nondegenerate = std::all_of(p.basis.x.begin(), p.basis.x.end(), [](const Rational& x) { return x > 0; }) &&
                             std::all_of(F.x.begin(), F.x.end(), [](const Rational& x) { return x > 0; });
        if (!nondegenerate) continue;
        auto back = cardinal_pivot(p.basis, p.leaving, inst);
        CHECK(back.leaving == k);
        CHECK(sorted(back.basis.columns) == J);
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("ordinal extension counts match enumeration") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto inst = fx::random_instance(seed, 4, 9);
    if (inst.m < 2) continue;
    auto canon = canonicalize(inst);
    auto full = oracle::enumerate_subordinating(canon);
    for (const auto& K : oracle::enumerate_subordinating_of_size(canon, inst.m - 1)) {
      auto ext = ordinal_extensions(K, canon);
      CHECK(ext.size() == (inside_slack_block(K, inst.m) ? 1u : 2u));
      std::size_t from_enum = 0;
      for (const auto& S : full) {
        from_enum += std::includes(S.begin(), S.end(), K.begin(), K.end());
      }
      CHECK(from_enum == ext.size());
    }
  }
}

TEST_CASE("canonical subordination is sound") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto inst = fx::random_instance(seed, 4, 8);
    auto canon = canonicalize(inst);
    for (std::size_t k = 1; k <= inst.m; ++k) {
      oracle::for_each_subset(inst.n, k, [&](const ColumnSet& J) {
        if (is_subordinating(J, canon)) CHECK(is_weakly_subordinating(J, inst));
      });
    }
    // monotone: subsets of subordinating sets stay subordinating
    for (const auto& S : oracle::enumerate_subordinating(canon)) {
      for (std::size_t drop = 0; drop < S.size(); ++drop) {
        ColumnSet sub = S;
        sub.erase(sub.begin() + static_cast<long>(drop));
        CHECK(is_subordinating(sub, canon));
      }
    }
  }
}

TEST_CASE("path graph audit") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto inst = fx::random_instance(seed, 4, 9);
    auto g = oracle::build_path_graph(inst);
    CAPTURE(seed);
    CHECK(g.audit.empty());
    for (std::size_t i = 0; i < g.f_side.size(); ++i) CHECK(g.f_degree[i] <= 2);
    for (std::size_t i = 0; i < g.s_side.size(); ++i) CHECK(g.s_degree[i] <= 2);
    // the walk visits exactly the [m]-component, in order
    SolveOptions opt;
    opt.record_trace = true;
    auto r = solve(inst, opt);
    REQUIRE(r.trace.size() == g.slack_component.size());
    for (std::size_t t = 0; t < r.trace.size(); ++t) {
      const auto [is_s, idx] = g.slack_component[t];
      CHECK((r.trace[t].mode == WalkMode::AtSubordinating) == is_s);
      CHECK(r.trace[t].columns == (is_s ? g.s_side[idx] : g.f_side[idx]));
    }
  }
}

TEST_CASE("kernel reduction round trip") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto d = gen::clique_acyclic_digraph(1 + seed % 8, 0.4 + 0.05 * (seed % 7), 0.3, seed);
    CAPTURE(seed);
    auto red = kernels::reduce_to_scarf(d);
    CHECK(validate_instance(red.instance).empty());
    auto f = kernels::solve_strong_kernel(d);
    CHECK(kernels::verify_strong_kernel(d, f));
    CHECK(ref::strong_kernel(d, f));
    // verifier agrees with the reference on perturbed weightings too
    auto g = f;
    g[seed % g.size()] += Rational(1, 3);
    CHECK(static_cast<bool>(kernels::verify_fractional_kernel(d, g)) == ref::fractional_kernel(d, g));
    CHECK(static_cast<bool>(kernels::verify_strong_kernel(d, g)) == ref::strong_kernel(d, g));
    CHECK(static_cast<bool>(kernels::verify_nash(d, f)) == ref::nash(d, f));
  }
}

TEST_CASE("clique enumeration matches brute force") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto d = gen::clique_acyclic_digraph(1 + seed % 9, 0.5, 0.5, seed);
    std::set<std::uint32_t> mine;
    for (const auto& c : kernels::maximal_cliques(d)) {
      std::uint32_t mask = 0;
      for (auto v : c) mask |= 1u << v;
      mine.insert(mask);
    }
    auto theirs = ref::maximal_cliques(d);
    CHECK(mine == std::set<std::uint32_t>(theirs.begin(), theirs.end()));
  }
}

TEST_CASE("compute_nash is idempotent on its outputs") {
  std::size_t repaired = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto d = gen::clique_acyclic_digraph(2 + seed % 6, 0.5, 0.2, seed);
    if (!kernels::validate_3kernel_instance(d).ok()) continue;
    auto w = kernels::solve_strong_kernel(d);
    try {
      auto once = kernels::compute_nash(d, w);
      CHECK(ref::nash(d, once.f));
      if (!kernels::verify_strong_kernel(d, once.f)) continue;
      auto twice = kernels::compute_nash(d, once.f);
      CHECK(twice.f == once.f);
      ++repaired;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Unrepairable);
    }
  }
  CHECK(repaired > 0);
}

TEST_CASE("matching reduction round trip") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto h = random_hypergraph(seed);
    CAPTURE(seed);
    auto red = matchings::reduce_to_scarf(h);
    CHECK(validate_instance(red.instance).empty());
    auto w = matchings::solve_stable_matching(h);
    CHECK(matchings::verify_stable_matching(h, w));
    CHECK(ref::stable_matching(h, w));
    const bool graph = std::all_of(h.edges.begin(), h.edges.end(), [](const auto& e) { return e.size() == 2; });
    const bool integral = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0 || x == 1; });
    if (graph && integral) {
      std::vector<bool> matched;
      for (const auto& x : w) matched.push_back(x == 1);
      CHECK(matchings::blocking_edges(h, matched).empty());
    }
  }
}

TEST_CASE("eps-stable is monotone in eps") {
  const std::vector<Rational> eps = {0, Rational(1, 10), Rational(1, 4), Rational(1, 2), 1};
  for (const auto& d : {fx::two_cycle(), fx::single_arc(), fx::path_uvw()}) {
    auto red = fspp::digraph_to_fspp(d);
    ref::for_each_weighting(red.instance, 4, [&](const fspp::FsppWeights& w) {
      bool before = false;
      for (const auto& e : eps) {
        const bool now = static_cast<bool>(fspp::verify_eps_stable(red.instance, w, e));
        if (before) CHECK(now);
        before = now;
      }
      const bool exact = static_cast<bool>(fspp::verify_stable(red.instance, w));
      CHECK(exact == ref::fspp_stable(red.instance, w));
      CHECK(exact == static_cast<bool>(fspp::verify_eps_stable(red.instance, w, 0)));
      CHECK(exact == static_cast<bool>(fspp::verify_eps_solution(red.instance, w, 0)));
      return true;
    });
  }
}

TEST_CASE("compute_nash repairs every non-Nash strong kernel on small digraphs") {
  // all digraphs on 2..4 vertices passing the 3-kernel checks, weights on a grid of halves
  std::size_t repaired = 0;
  const auto values = ref::grid(2);
  for (std::size_t k = 2; k <= 4; ++k) {
    for (const auto& d : ref::all_digraphs(k)) {
      if (!kernels::validate_3kernel_instance(d).ok()) continue;
      kernels::KernelFunction f(k);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i < k) {
          for (const auto& x : values) {
            f[i] = x;
            rec(i + 1);
          }
          return;
        }
        if (!ref::strong_kernel(d, f)) return;
        auto r = kernels::compute_nash(d, f);
        CHECK(ref::nash(d, r.f));
        if (ref::nash(d, f)) {
          CHECK(r.f == f);
        } else {
          ++repaired;
        }
      };
      rec(0);
    }
  }
  CHECK(repaired > 0);
}
