#include "scarf/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <filesystem>
#include <sstream>
#include <thread>

#include "scarf/error.hpp"
#include "scarf/io.hpp"
#include "scarf/kernels.hpp"
#include "scarf/matchings.hpp"

namespace scarf {

namespace {

namespace fs = std::filesystem;

struct Prepared {
  ScarfInstance inst;
  std::function<bool(const ScarfSolution&)> check;
};

Prepared prepare(const std::string& text, const SolveOptions& options) {
  switch (io::detect(text)) {
    case io::DocumentKind::ScarfInstance: {
      auto inst = io::parse_scarf_instance(text);
      require_valid(inst, options.assume_bounded);
      Prepared p{inst, nullptr};
      p.check = [inst](const ScarfSolution& s) { return verify_solution(inst, s).ok; };
      return p;
    }
    case io::DocumentKind::Digraph: {
      auto d = io::parse_digraph(text);
      auto red = kernels::reduce_to_scarf(d);
      Prepared p{red.instance, nullptr};
      p.check = [d, map = red.map](const ScarfSolution& s) {
        return kernels::verify_strong_kernel(d, kernels::extract_kernel(s, map)).ok;
      };
      return p;
    }
    case io::DocumentKind::Hypergraph: {
      auto h = io::parse_hypergraph(text);
      auto red = matchings::reduce_to_scarf(h);
      Prepared p{red.instance, nullptr};
      p.check = [h, map = red.map](const ScarfSolution& s) {
        return matchings::verify_stable_matching(h, matchings::extract_matching(s, map)).ok;
      };
      return p;
    }
    default:
      throw Error(ErrorKind::InvalidInput, "not a Scarf instance, digraph or hypergraph");
  }
}

BenchRecord run_one(const fs::path& file, const BenchConfig& config) {
  BenchRecord rec;
  rec.id = file.filename().string();
  const auto start = std::chrono::steady_clock::now();
  try {
    auto prepared = prepare(io::read_text(file.string()), config.solve);
    rec.m = prepared.inst.m;
    rec.n = prepared.inst.n;
    auto result = solve(prepared.inst, config.solve);
    rec.pivots = result.pivots;
    rec.outcome = prepared.check(result.solution) ? "verified" : "unverified";
  } catch (const Error& e) {
    rec.outcome = "error:" + std::string(to_string(e.kind()));
  }
  if (config.timing) {
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

}  // namespace

std::vector<BenchRecord> bench(const std::string& corpus_dir, const BenchConfig& config) {
  if (!fs::is_directory(corpus_dir)) throw Error(ErrorKind::InvalidInput, "not a directory: " + corpus_dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

  std::vector<BenchRecord> records(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) records[i] = run_one(files[i], config);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return records;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "id,m,n,pivots,wall_ms,outcome\n";
  for (const auto& r : records) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
    out << r.id << ',' << r.m << ',' << r.n << ',' << r.pivots << ',' << ms << ',' << r.outcome << '\n';
  }
  return out.str();
}

}  // namespace scarf
