// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <unistd.h>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "reference.hpp"
#include "scarf/bench.hpp"
#include "scarf/error.hpp"
#include "scarf/fspp.hpp"
#include "scarf/generators.hpp"
#include "scarf/io.hpp"
#include "scarf/kernels.hpp"
#include "scarf/matchings.hpp"
#include "scarf/oracle.hpp"

using namespace scarf;

namespace {

// Pinned thresholds.
constexpr std::size_t kOracleSuite = 200;       // criteria 1, 2
constexpr std::size_t kOracleMaxM = 5;
constexpr std::size_t kOracleMaxN = 10;
constexpr double kOracleSeconds = 60.0;
constexpr std::size_t kAuditSuite = 50;         // criteria 3, 4
constexpr std::size_t kAuditMaxM = 4;
constexpr std::size_t kAuditMaxN = 9;
constexpr std::size_t kKernelSuite = 100;       // criterion 6
constexpr std::size_t kKernelMaxV = 10;
constexpr double kKernelSeconds = 120.0;
constexpr std::size_t kNashSuite = 30;          // criterion 9
constexpr std::size_t kFsppPairs = 20;          // criterion 11
constexpr std::size_t kFsppMaxVertices = 3;     // criterion 12
constexpr std::size_t kFsppMaxDen = 4;
constexpr double kFsppSeconds = 60.0;
constexpr std::uint64_t kSeedBase = 20'000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void line(int id, bool pass, const std::string& name, const std::string& detail) {
  std::printf("criterion %2d [%s] %s: %s\n", id, pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s);
  return buf;
}

ScarfInstance oracle_instance(std::size_t i) { return fx::random_instance(kSeedBase + i, kOracleMaxM, kOracleMaxN); }
ScarfInstance audit_instance(std::size_t i) { return fx::random_instance(kSeedBase + 1000 + i, kAuditMaxM, kAuditMaxN); }

// Digraphs for criterion 6: clique-acyclic, max clique <= 3, |V| <= 10.
std::vector<kernels::Digraph> kernel_suite() {
  std::vector<kernels::Digraph> out;
  for (std::uint64_t seed = kSeedBase; out.size() < kKernelSuite; ++seed) {
    const std::size_t nv = 1 + seed % kKernelMaxV;
    auto d = gen::clique_acyclic_digraph(nv, 0.15 + 0.05 * static_cast<double>(seed % 6), 0.3, seed);
    try {
      kernels::maximal_cliques(d, {3, kernels::kDefaultCliqueCap});
    } catch (const Error&) {
      continue;
    }
    out.push_back(std::move(d));
  }
  return out;
}

// Criterion 9: (digraph, starting strong kernel) pairs on instances that pass
// validate_3kernel_instance. Half start from the solver's output; the other
// half are strong kernels on a grid of halves that are not Nash, found by
// scanning all digraphs on 2..4 vertices.
std::vector<std::pair<kernels::Digraph, kernels::KernelFunction>> nash_suite() {
  std::vector<std::pair<kernels::Digraph, kernels::KernelFunction>> out;
  const std::size_t half = kNashSuite / 2;
  for (const auto& d : {fx::path_uvw(), fx::c5(), fx::two_cycle(), fx::single_arc()}) {
    out.emplace_back(d, kernels::solve_strong_kernel(d));
  }
  for (std::uint64_t seed = kSeedBase; out.size() < half; ++seed) {
    auto d = gen::clique_acyclic_digraph(2 + seed % 7, 0.35, 0.25, seed);
    if (kernels::validate_3kernel_instance(d).ok()) out.emplace_back(d, kernels::solve_strong_kernel(d));
  }
  const auto values = ref::grid(2);
  for (std::size_t k = 2; k <= 4 && out.size() < kNashSuite; ++k) {
    for (const auto& d : ref::all_digraphs(k)) {
      if (out.size() == kNashSuite) break;
      if (!kernels::validate_3kernel_instance(d).ok()) continue;
      kernels::KernelFunction f(k);
      std::function<bool(std::size_t)> pick = [&](std::size_t i) {
        if (i == k) return ref::strong_kernel(d, f) && !ref::nash(d, f);
        for (const auto& x : values) {
          f[i] = x;
          if (pick(i + 1)) return true;
        }
        return false;
      };
      if (pick(0)) out.emplace_back(d, f);
    }
  }
  return out;
}

void criteria_1_2() {
  const auto start = Clock::now();
  std::size_t in_set = 0, nonempty = 0;
  for (std::size_t i = 0; i < kOracleSuite; ++i) {
    auto inst = oracle_instance(i);
    auto all = oracle::brute_solve(inst);
    if (!all.empty()) ++nonempty;
    try {
      auto J = solve(inst).solution.J;
      if (std::any_of(all.begin(), all.end(), [&](const ScarfSolution& s) { return s.J == J; })) ++in_set;
    } catch (const Error&) {
    }
  }
  const double t = seconds_since(start);
  line(1, in_set == kOracleSuite && t < kOracleSeconds, "oracle equivalence",
       std::to_string(in_set) + "/" + std::to_string(kOracleSuite) + " solver outputs in the brute-force set, " + fmt(t) +
           " s (limit " + fmt(kOracleSeconds) + " s)");
  line(2, nonempty == kOracleSuite, "existence",
       std::to_string(nonempty) + "/" + std::to_string(kOracleSuite) + " instances with a nonempty brute-force set");
}

void criteria_3_4() {
  std::size_t sets = 0, bad_counts = 0;
  std::size_t graphs_ok = 0;
  std::string first_problem;
  for (std::size_t i = 0; i < kAuditSuite; ++i) {
    auto inst = audit_instance(i);
    auto canon = canonicalize(inst);
    for (const auto& K : oracle::enumerate_subordinating_of_size(canon, inst.m - 1)) {
      ++sets;
      const bool in_slack = std::all_of(K.begin(), K.end(), [&](Column c) { return c < inst.m; });
      try {
        auto ext = ordinal_extensions(K, canon);
        if (ext.size() != (in_slack ? 1u : 2u)) ++bad_counts;
      } catch (const Error&) {
        ++bad_counts;
      }
    }
    auto g = oracle::build_path_graph(inst);
    bool ok = g.audit.empty() && g.f_degree[g.slack_index] == 1;
    for (std::size_t f = 0; f < g.f_side.size(); ++f) {
      if (!g.f_terminal[f] && f != g.slack_index) ok &= g.f_degree[f] == 0 || g.f_degree[f] == 2;
    }
    for (std::size_t s = 0; s < g.s_side.size(); ++s) {
      if (!g.s_terminal[s]) ok &= g.s_degree[s] == 0 || g.s_degree[s] == 2;
    }
    // the [m]-component is a simple path ending at a subordinating feasible basis
    std::set<std::pair<bool, std::size_t>> seen(g.slack_component.begin(), g.slack_component.end());
    ok &= seen.size() == g.slack_component.size() && g.slack_component.size() >= 2;
    if (ok) {
      auto [is_s, idx] = g.slack_component.back();
      ColumnSet end = is_s ? g.s_side[idx] : g.f_side[idx];
      ok &= is_subordinating(end, canon).has_value() && solve_basis(end, inst).has_value();
    }
    if (ok) {
      ++graphs_ok;
    } else if (first_problem.empty()) {
      first_problem = " (first failure: instance " + std::to_string(i) + (g.audit.empty() ? "" : ", " + g.audit.front()) + ")";
    }
  }
  line(3, bad_counts == 0, "ordinal extension audit",
       std::to_string(sets) + " subordinating (m-1)-sets over " + std::to_string(kAuditSuite) + " instances, " +
           std::to_string(bad_counts) + " violations");
  line(4, graphs_ok == kAuditSuite, "path-graph structure",
       std::to_string(graphs_ok) + "/" + std::to_string(kAuditSuite) + " graphs pass the degree and path audit" + first_problem);
}

void criterion_5() {
  auto r = solve(fx::ex1());
  const bool ok = r.solution.J == fx::cols({1, 3}) && r.solution.alpha == fx::q({"1", "0", "1"}) && r.pivots == 2;
  line(5, ok, "EX1 fixture",
       "J=" + std::string(r.solution.J == fx::cols({1, 3}) ? "{1,3}" : "other") + ", alpha=(" +
           to_string(r.solution.alpha[0]) + "," + to_string(r.solution.alpha[1]) + "," + to_string(r.solution.alpha[2]) +
           "), pivots=" + std::to_string(r.pivots));
}

void criterion_6() {
  const auto start = Clock::now();
  auto suite = kernel_suite();
  std::size_t ok = 0;
  for (const auto& d : suite) {
    try {
      if (kernels::verify_strong_kernel(d, kernels::solve_strong_kernel(d))) ++ok;
    } catch (const Error&) {
    }
  }
  const double t = seconds_since(start);
  line(6, ok == kKernelSuite && t < kKernelSeconds, "kernel round trip",
       std::to_string(ok) + "/" + std::to_string(kKernelSuite) + " strong kernels verified, " + fmt(t) + " s (limit " +
           fmt(kKernelSeconds) + " s)");
}

void criterion_7() {
  auto f = kernels::solve_strong_kernel(fx::c5());
  const bool ok = std::all_of(f.begin(), f.end(), [](const Rational& x) { return x == Rational(1, 2); });
  std::string values;
  for (const auto& x : f) values += (values.empty() ? "" : ",") + to_string(x);
  line(7, ok, "C5 fixture", "f=(" + values + ")");
}

void criterion_8() {
  bool ok = true;
  std::string detail;
  for (const auto& [name, inst] : {std::pair{"degenerate b=(1,1)", fx::ex1_degenerate()}, std::pair{"ties in C", fx::ex1_ties()}}) {
    try {
      auto r = solve(inst);
      auto v = verify_solution(inst, r.solution);
      ok &= v.ok;
      detail += std::string(detail.empty() ? "" : "; ") + name + (v.ok ? " verified" : " rejected: " + v.diagnostic);
    } catch (const Error& e) {
      ok = false;
      detail += std::string(detail.empty() ? "" : "; ") + name + " raised " + e.what();
    }
  }
  auto ties = canonicalize(fx::ex1_ties());
  detail += "; " + std::to_string(ties.tiebreak_log().size()) + " rank tie-breaks";
  line(8, ok, "degeneracy", detail);
}

void criterion_9() {
  auto suite = nash_suite();
  std::size_t returned = 0, verified = 0, unrepairable = 0, already = 0, identity = 0;
  for (const auto& [d, w] : suite) {
    const bool was_nash = static_cast<bool>(kernels::verify_nash(d, w));
    already += was_nash;
    try {
      auto r = kernels::compute_nash(d, w);
      ++returned;
      if (kernels::verify_fractional_kernel(d, r.f) && kernels::verify_nash(d, r.f)) ++verified;
      if (was_nash && r.f == w) ++identity;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Unrepairable) ++unrepairable;
    }
  }
  const bool ok = suite.size() == kNashSuite && verified == returned && identity == already;
  line(9, ok, "compute Nash",
       std::to_string(suite.size()) + " instances (" + std::to_string(suite.size() - already) + " not yet Nash): " +
           std::to_string(verified) + "/" + std::to_string(returned) + " returned outputs verified, " +
           std::to_string(unrepairable) + " unrepairable, identity on " + std::to_string(identity) + "/" +
           std::to_string(already) + " already-Nash inputs");
}

void criterion_10() {
  auto run = [](const matchings::HypergraphPrefSystem& h) {
    auto red = matchings::reduce_to_scarf(h);
    auto sol = solve(red.instance).solution;
    auto w = matchings::extract_matching(sol, red.map);
    return std::make_pair(w, static_cast<bool>(matchings::verify_stable_matching(h, w)));
  };
  auto [a, va] = run(fx::single_edge());
  auto [b, vb] = run(fx::cyclic_triangle());
  auto [c, vc] = run(fx::marriage_2x2());
  const bool ok = va && vb && vc && a == fx::q({"1"}) && b == fx::q({"1/2", "1/2", "1/2"}) &&
                  c == fx::q({"1", "0", "0", "1"});
  line(10, ok, "matchings",
       std::string("single edge ") + (va && a == fx::q({"1"}) ? "w=1" : "wrong") + ", cyclic triangle " +
           (vb && b == fx::q({"1/2", "1/2", "1/2"}) ? "w=1/2" : "wrong") + ", 2x2 marriage " +
           (vc && c == fx::q({"1", "0", "0", "1"}) ? "w=(1,0,0,1)" : "wrong"));
}

void criterion_11() {
  // 20 (instance, w) pairs: the two hand-derived 2-cycle weightings, then
  // six evenly spaced grid points from each of three small reductions.
  std::vector<std::pair<fspp::FsppInstance, fspp::FsppWeights>> corpus = {
      {fx::fspp_two_cycle(), fx::two_cycle_weights("0", "1", "1", "0")},
      {fx::fspp_two_cycle(), fx::two_cycle_weights("1/2", "1/2", "1/2", "1/2")}};
  for (const auto& d : {fx::two_cycle(), fx::single_arc(), fx::path_uvw()}) {
    auto inst = fspp::digraph_to_fspp(d).instance;
    std::vector<fspp::FsppWeights> all;
    ref::for_each_weighting(inst, 2, [&](const fspp::FsppWeights& w) {
      all.push_back(w);
      return true;
    });
    for (std::size_t t = 0; t < 6; ++t) corpus.emplace_back(inst, all[t * all.size() / 6]);
  }
  std::size_t agree = 0, stable = 0;
  for (const auto& [inst, w] : corpus) {
    const bool exact = static_cast<bool>(fspp::verify_stable(inst, w));
    stable += exact;
    agree += exact == static_cast<bool>(fspp::verify_eps_solution(inst, w, 0)) &&
             exact == static_cast<bool>(fspp::verify_eps_stable(inst, w, 0)) && exact == ref::fspp_stable(inst, w);
  }
  const auto inst = fx::fspp_two_cycle();
  const bool accepts_a = static_cast<bool>(fspp::verify_stable(inst, fx::two_cycle_weights("0", "1", "1", "0")));
  const bool accepts_b = static_cast<bool>(fspp::verify_stable(inst, fx::two_cycle_weights("1/2", "1/2", "1/2", "1/2")));
  auto rej = fspp::verify_stable(inst, fx::two_cycle_weights("1", "0", "0", "0"));
  const bool rejects = !rej.ok && rej.diagnostic.find("(v, Q=vud)") != std::string::npos;
  const bool ok = agree == corpus.size() && corpus.size() == kFsppPairs && accepts_a && accepts_b && rejects;
  line(11, ok, "FSPP verifiers",
       std::to_string(agree) + "/" + std::to_string(corpus.size()) + " pairs agree at eps=0 (" + std::to_string(stable) +
           " stable); 2-cycle: {uvd:1,vd:1} " + (accepts_a ? "accepted" : "rejected") + ", uniform 1/2 " +
           (accepts_b ? "accepted" : "rejected") + ", {ud:1} " + (rejects ? "rejected at (v, Q=vud)" : "not rejected as expected"));
}

void criterion_12() {
  const auto start = Clock::now();
  std::size_t digraphs = 0, with_stable = 0, weightings = 0, counterexamples = 0;
  for (std::size_t k = 1; k <= kFsppMaxVertices; ++k) {
    for (const auto& d : ref::all_digraphs(k)) {
      if (!kernels::is_clique_acyclic(d)) continue;
      ++digraphs;
      auto red = fspp::digraph_to_fspp(d);
      auto found = ref::stable_weightings(red.instance, kFsppMaxDen);
      with_stable += !found.empty();
      for (const auto& w : found) {
        ++weightings;
        auto f = fspp::fspp_solution_to_kernel(w, red.map);
        if (!kernels::verify_fractional_kernel(d, f) || !kernels::verify_nash(d, f)) ++counterexamples;
      }
    }
  }
  const double t = seconds_since(start);
  line(12, counterexamples == 0 && t < kFsppSeconds, "FSPP to kernel consistency",
       std::to_string(weightings) + " stable weightings over " + std::to_string(digraphs) + " clique-acyclic digraphs (" +
           std::to_string(with_stable) + " with a grid solution), " + std::to_string(counterexamples) +
           " counterexamples, " + fmt(t) + " s (limit " + fmt(kFsppSeconds) + " s)");
}

// Everything the suite computes, serialized.
std::string transcript() {
  std::ostringstream out;
  for (std::size_t i = 0; i < 40; ++i) {
    auto inst = oracle_instance(i);
    out << io::write_scarf_instance(inst) << io::write_scarf_solution(solve(inst).solution);
  }
  for (std::size_t i = 0; i < 20; ++i) {
    auto d = gen::clique_acyclic_digraph(1 + i % kKernelMaxV, 0.4, 0.3, kSeedBase + i);
    out << io::write_digraph(d) << io::write_kernel(d, kernels::solve_strong_kernel(d));
  }
  const auto dir = std::filesystem::temp_directory_path() / ("scarfkit_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < 10; ++i) {
    io::write_text((dir / ("i" + std::to_string(i) + ".json")).string(), io::write_scarf_instance(audit_instance(i)));
  }
  BenchConfig config;
  config.timing = false;
  config.jobs = 4;
  out << to_csv(bench(dir.string(), config));
  std::filesystem::remove_all(dir);
  return out.str();
}

void criterion_13() {
  const auto a = transcript();
  const auto b = transcript();
  line(13, a == b && !a.empty(), "determinism",
       std::to_string(a.size()) + " bytes per run, " + (a == b ? "identical" : "different"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> steps = {criteria_1_2, criteria_3_4, criterion_5, criterion_6, criterion_7,
                                                   criterion_8,  criterion_9,  criterion_10, criterion_11, criterion_12,
                                                   criterion_13};
  for (const auto& step : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      std::printf("criterion    [FAIL] unexpected exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
