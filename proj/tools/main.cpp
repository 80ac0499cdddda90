// scarf: command-line front end. Exit codes: 0 ok, 1 verification failed,
// 2 invalid input, 3 internal failure.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scarf/bench.hpp"
#include "scarf/error.hpp"
#include "scarf/fspp.hpp"
#include "scarf/generators.hpp"
#include "scarf/io.hpp"
#include "scarf/kernels.hpp"
#include "scarf/matchings.hpp"
#include "scarf/oracle.hpp"
#include "scarf/solver.hpp"

namespace {

using namespace scarf;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

struct Common {
  std::string output = "-";
  std::uint64_t step_cap = 0;  // 0 = default
  bool assume_bounded = false;
  std::size_t column_cap = oracle::kDefaultColumnCap;
  std::size_t cycle_cap = kernels::kDefaultCycleCap;
  std::uint64_t iteration_cap = 100'000;
  bool trace = false;

  SolveOptions solve() const {
    SolveOptions o;
    if (step_cap > 0) o.step_cap = step_cap;
    o.assume_bounded = assume_bounded;
    o.record_trace = trace;
    return o;
  }
};

int report(const VerifyResult& r) {
  if (r.ok) {
    std::cerr << "ok\n";
    return kOk;
  }
  std::cerr << r.diagnostic << "\n";
  return kRejected;
}

std::string columns_json(const ColumnSet& cols) {
  nlohmann::json arr = nlohmann::json::array();
  for (Column c : cols) arr.push_back(c + 1);
  return arr.dump();
}

void print_trace(const SolveResult& result) {
  for (const auto& v : result.trace) {
    std::cerr << (v.mode == WalkMode::AtBasis ? "F " : "S ") << columns_json(v.columns) << "\n";
  }
}

fspp::ArcOrientation orientation_of(const std::string& s) {
  return s == "out" ? fspp::ArcOrientation::OutNeighbor : fspp::ArcOrientation::InNeighbor;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Scarf-lemma solver with kernel, matching and stable-paths reductions"};
  app.name("scarf");
  app.require_subcommand(1);
  Common opt;

  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", opt.output, "Output file ('-' = stdout)"); };
  auto add_solve = [&](CLI::App* cmd) {
    cmd->add_option("--step-cap", opt.step_cap, "Pivot cap (default 4*C(n,m), at most 1e7)")->check(CLI::PositiveNumber);
    cmd->add_flag("--assume-bounded", opt.assume_bounded, "Skip the boundedness surrogate check");
    cmd->add_flag("--trace", opt.trace, "Print the walk to stderr");
  };

  std::string in1, in2;
  std::function<int()> action;

  // scarf solve|verify
  auto* scarf_cmd = app.add_subcommand("scarf", "Scarf instances")->require_subcommand(1);
  {
    auto* c = scarf_cmd->add_subcommand("solve", "Solve an instance");
    c->add_option("instance", in1)->required();
    add_output(c);
    add_solve(c);
    c->callback([&] {
      action = [&] {
        auto inst = io::parse_scarf_instance(io::read_text(in1));
        auto result = solve(inst, opt.solve());
        if (opt.trace) print_trace(result);
        std::cerr << "pivots " << result.pivots << " (cardinal " << result.cardinal_pivots << ", ordinal "
                  << result.ordinal_pivots << ")\n";
        io::write_text(opt.output, io::write_scarf_solution(result.solution));
        return kOk;
      };
    });
    auto* v = scarf_cmd->add_subcommand("verify", "Check a solution");
    v->add_option("instance", in1)->required();
    v->add_option("solution", in2)->required();
    v->callback([&] {
      action = [&] {
        auto inst = io::parse_scarf_instance(io::read_text(in1));
        auto sol = io::parse_scarf_solution(io::read_text(in2));
        return report(verify_solution(inst, sol));
      };
    });
  }

  // kernel solve|verify|nash
  auto* kernel_cmd = app.add_subcommand("kernel", "Fractional kernels of clique-acyclic digraphs")->require_subcommand(1);
  {
    auto* c = kernel_cmd->add_subcommand("solve", "Strong fractional kernel via the Scarf reduction");
    c->add_option("digraph", in1)->required();
    add_output(c);
    add_solve(c);
    c->callback([&] {
      action = [&] {
        auto d = io::parse_digraph(io::read_text(in1));
        io::write_text(opt.output, io::write_kernel(d, kernels::solve_strong_kernel(d, opt.solve())));
        return kOk;
      };
    });
    static std::string mode = "strong";
    auto* v = kernel_cmd->add_subcommand("verify", "Check a kernel");
    v->add_option("digraph", in1)->required();
    v->add_option("kernel", in2)->required();
    v->add_option("--mode", mode, "fractional, strong or nash")
        ->check(CLI::IsMember({"fractional", "strong", "nash"}));
    v->callback([&] {
      action = [&] {
        auto d = io::parse_digraph(io::read_text(in1));
        auto f = io::parse_kernel(io::read_text(in2), d);
        if (mode == "fractional") return report(kernels::verify_fractional_kernel(d, f));
        if (mode == "nash") return report(kernels::verify_nash(d, f));
        return report(kernels::verify_strong_kernel(d, f));
      };
    });
    auto* n = kernel_cmd->add_subcommand("nash", "Repair a strong kernel into a Nash kernel");
    n->add_option("digraph", in1)->required();
    n->add_option("kernel", in2, "Starting kernel (solved from the digraph when omitted)");
    n->add_option("--cycle-cap", opt.cycle_cap)->check(CLI::PositiveNumber);
    n->add_option("--iteration-cap", opt.iteration_cap)->check(CLI::PositiveNumber);
    add_output(n);
    add_solve(n);
    n->callback([&] {
      action = [&] {
        auto d = io::parse_digraph(io::read_text(in1));
        auto w = in2.empty() ? kernels::solve_strong_kernel(d, opt.solve()) : io::parse_kernel(io::read_text(in2), d);
        kernels::NashOptions nopt;
        nopt.cycle_cap = opt.cycle_cap;
        nopt.iteration_cap = opt.iteration_cap;
        auto result = kernels::compute_nash(d, w, nopt);
        std::cerr << "iterations " << result.iterations << ", contracted cycles " << result.super_nodes.size() << "\n";
        io::write_text(opt.output, io::write_kernel(d, result.f));
        return kOk;
      };
    });
  }

  // matching solve|verify
  auto* matching_cmd = app.add_subcommand("matching", "Stable fractional matchings")->require_subcommand(1);
  {
    auto* c = matching_cmd->add_subcommand("solve", "Stable fractional matching via the Scarf reduction");
    c->add_option("hypergraph", in1)->required();
    add_output(c);
    add_solve(c);
    c->callback([&] {
      action = [&] {
        auto h = io::parse_hypergraph(io::read_text(in1));
        io::write_text(opt.output, io::write_matching(matchings::solve_stable_matching(h, opt.solve())));
        return kOk;
      };
    });
    auto* v = matching_cmd->add_subcommand("verify", "Check a fractional matching");
    v->add_option("hypergraph", in1)->required();
    v->add_option("matching", in2)->required();
    v->callback([&] {
      action = [&] {
        auto h = io::parse_hypergraph(io::read_text(in1));
        return report(matchings::verify_stable_matching(h, io::parse_matching(io::read_text(in2), h)));
      };
    });
  }

  // fspp verify|reduce|map
  static std::string fspp_mode = "stable";
  static std::string eps_text = "0";
  static std::string orientation = "in";
  auto* fspp_cmd = app.add_subcommand("fspp", "Fractional stable paths")->require_subcommand(1);
  {
    auto* v = fspp_cmd->add_subcommand("verify", "Check path weights");
    v->add_option("instance", in1)->required();
    v->add_option("weights", in2)->required();
    v->add_option("--mode", fspp_mode, "feasible, stable, eps-solution or eps-stable")
        ->check(CLI::IsMember({"feasible", "stable", "eps-solution", "eps-stable"}));
    v->add_option("--eps", eps_text, "Nonnegative rational for the eps modes");
    v->callback([&] {
      action = [&] {
        auto inst = io::parse_fspp(io::read_text(in1));
        auto w = io::parse_fspp_weights(io::read_text(in2), inst);
        const Rational eps = parse_rational(eps_text);
        if (sgn(eps) < 0) throw Error(ErrorKind::InvalidInput, "eps must be nonnegative");
        if (fspp_mode == "feasible") return report(fspp::verify_feasible(inst, w));
        if (fspp_mode == "eps-solution") return report(fspp::verify_eps_solution(inst, w, eps));
        if (fspp_mode == "eps-stable") return report(fspp::verify_eps_stable(inst, w, eps));
        return report(fspp::verify_stable(inst, w));
      };
    });
    auto* r = fspp_cmd->add_subcommand("reduce", "Stable-paths instance of a digraph");
    r->add_option("digraph", in1)->required();
    r->add_option("--orientation", orientation, "in (default) or out")->check(CLI::IsMember({"in", "out"}));
    add_output(r);
    r->callback([&] {
      action = [&] {
        auto d = io::parse_digraph(io::read_text(in1));
        io::write_text(opt.output, io::write_fspp(fspp::digraph_to_fspp(d, orientation_of(orientation)).instance));
        return kOk;
      };
    });
    auto* m = fspp_cmd->add_subcommand("map", "Kernel f(v) = w(vd) from stable-path weights");
    m->add_option("digraph", in1)->required();
    m->add_option("weights", in2)->required();
    m->add_option("--orientation", orientation, "in (default) or out")->check(CLI::IsMember({"in", "out"}));
    add_output(m);
    m->callback([&] {
      action = [&] {
        auto d = io::parse_digraph(io::read_text(in1));
        auto red = fspp::digraph_to_fspp(d, orientation_of(orientation));
        auto w = io::parse_fspp_weights(io::read_text(in2), red.instance);
        io::write_text(opt.output, io::write_kernel(d, fspp::fspp_solution_to_kernel(w, red.map)));
        return kOk;
      };
    });
  }

  // reduce ...
  auto* reduce_cmd = app.add_subcommand("reduce", "Emit reduced instances")->require_subcommand(1);
  {
    auto* a = reduce_cmd->add_subcommand("digraph-to-scarf", "Clique rows, vertex columns");
    a->add_option("digraph", in1)->required();
    add_output(a);
    a->callback([&] {
      action = [&] {
        auto d = io::parse_digraph(io::read_text(in1));
        io::write_text(opt.output, io::write_scarf_instance(kernels::reduce_to_scarf(d).instance));
        return kOk;
      };
    });
    auto* b = reduce_cmd->add_subcommand("digraph-to-fspp", "Destination plus two-hop paths");
    b->add_option("digraph", in1)->required();
    b->add_option("--orientation", orientation, "in (default) or out")->check(CLI::IsMember({"in", "out"}));
    add_output(b);
    b->callback([&] {
      action = [&] {
        auto d = io::parse_digraph(io::read_text(in1));
        io::write_text(opt.output, io::write_fspp(fspp::digraph_to_fspp(d, orientation_of(orientation)).instance));
        return kOk;
      };
    });
    auto* c = reduce_cmd->add_subcommand("hypergraph-to-scarf", "Vertex rows, edge columns");
    c->add_option("hypergraph", in1)->required();
    add_output(c);
    c->callback([&] {
      action = [&] {
        auto h = io::parse_hypergraph(io::read_text(in1));
        io::write_text(opt.output, io::write_scarf_instance(matchings::reduce_to_scarf(h).instance));
        return kOk;
      };
    });
  }

  // oracle enumerate|path-graph|brute-solve
  static std::string what = "feasible";
  static bool lexicographic = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force enumeration for small instances")->require_subcommand(1);
  {
    auto* e = oracle_cmd->add_subcommand("enumerate", "List feasible bases or subordinating sets");
    e->add_option("instance", in1)->required();
    e->add_option("--what", what, "feasible or subordinating")->check(CLI::IsMember({"feasible", "subordinating"}));
    e->add_flag("--lexicographic", lexicographic, "Perturbed feasibility");
    e->add_option("--cap", opt.column_cap, "Maximum column count")->check(CLI::PositiveNumber);
    add_output(e);
    e->callback([&] {
      action = [&] {
        auto inst = io::parse_scarf_instance(io::read_text(in1));
        require_valid(inst, true);
        auto sets = what == "feasible"
                        ? oracle::enumerate_feasible_bases(
                              inst, lexicographic ? oracle::Feasibility::Lexicographic : oracle::Feasibility::Plain,
                              opt.column_cap)
                        : oracle::enumerate_subordinating(canonicalize(inst), opt.column_cap);
        std::string text;
        for (const auto& s : sets) text += columns_json(s) + "\n";
        io::write_text(opt.output, text);
        return kOk;
      };
    });
    auto* p = oracle_cmd->add_subcommand("path-graph", "DOT rendering of the alternating path graph");
    p->add_option("instance", in1)->required();
    p->add_option("--cap", opt.column_cap, "Maximum column count")->check(CLI::PositiveNumber);
    add_output(p);
    p->callback([&] {
      action = [&] {
        auto inst = io::parse_scarf_instance(io::read_text(in1));
        require_valid(inst, true);
        auto graph = oracle::build_path_graph(inst, opt.column_cap);
        for (const auto& a : graph.audit) std::cerr << a << "\n";
        io::write_text(opt.output, oracle::to_dot(graph));
        return graph.audit.empty() ? kOk : kRejected;
      };
    });
    auto* b = oracle_cmd->add_subcommand("brute-solve", "Every solution by exhaustive search");
    b->add_option("instance", in1)->required();
    b->add_option("--cap", opt.column_cap, "Maximum column count")->check(CLI::PositiveNumber);
    add_output(b);
    b->callback([&] {
      action = [&] {
        auto inst = io::parse_scarf_instance(io::read_text(in1));
        require_valid(inst, true);
        auto all = oracle::brute_solve(inst, opt.column_cap);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& s : all) arr.push_back(nlohmann::ordered_json::parse(io::write_scarf_solution(s)));
        io::write_text(opt.output, arr.dump(2) + "\n");
        std::cerr << all.size() << " solution(s)\n";
        return kOk;
      };
    });
  }

  // gen scarf|digraph|cycle
  static std::size_t gm = 2, gn = 3, nv = 5, k = 5;
  static std::uint64_t seed = 1;
  static double arc_prob = 0.5, rev_prob = 0.3;
  auto* gen_cmd = app.add_subcommand("gen", "Seeded instance generators")->require_subcommand(1);
  {
    auto* s = gen_cmd->add_subcommand("scarf", "Random instance with B = [I | nonnegative]");
    s->add_option("-m", gm, "Rows")->check(CLI::PositiveNumber);
    s->add_option("-n", gn, "Columns")->check(CLI::PositiveNumber);
    s->add_option("--seed", seed);
    add_output(s);
    s->callback([&] {
      action = [&] {
        io::write_text(opt.output, io::write_scarf_instance(gen::random_scarf(gm, gn, seed)));
        return kOk;
      };
    });
    auto* d = gen_cmd->add_subcommand("digraph", "Random clique-acyclic digraph");
    d->add_option("--vertices", nv)->check(CLI::PositiveNumber);
    d->add_option("--arc-prob", arc_prob)->check(CLI::Range(0.0, 1.0));
    d->add_option("--rev-prob", rev_prob)->check(CLI::Range(0.0, 1.0));
    d->add_option("--seed", seed);
    add_output(d);
    d->callback([&] {
      action = [&] {
        io::write_text(opt.output, io::write_digraph(gen::clique_acyclic_digraph(nv, arc_prob, rev_prob, seed)));
        return kOk;
      };
    });
    auto* c = gen_cmd->add_subcommand("cycle", "Directed cycle 1 -> 2 -> ... -> k -> 1");
    c->add_option("-k", k)->check(CLI::Range(2, 1 << 20));
    add_output(c);
    c->callback([&] {
      action = [&] {
        io::write_text(opt.output, io::write_digraph(gen::directed_cycle(k)));
        return kOk;
      };
    });
  }

  // bench
  static unsigned jobs = 1;
  static bool no_timing = false;
  {
    auto* b = app.add_subcommand("bench", "Solve a corpus directory and print CSV");
    b->add_option("corpus", in1)->required();
    b->add_option("-j,--jobs", jobs)->check(CLI::PositiveNumber);
    b->add_flag("--no-timing", no_timing, "Report wall_ms as 0 for byte-stable output");
    add_output(b);
    add_solve(b);
    b->callback([&] {
      action = [&] {
        BenchConfig config;
        config.solve = opt.solve();
        config.solve.record_trace = false;
        config.jobs = jobs;
        config.timing = !no_timing;
        io::write_text(opt.output, to_csv(bench(in1, config)));
        return kOk;
      };
    });
  }

  // `scarf solve x.json` reads naturally when the binary is called scarf.
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && (args[0] == "solve" || args[0] == "verify")) args.insert(args.begin(), "scarf");
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.is_internal() ? kInternal : kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
