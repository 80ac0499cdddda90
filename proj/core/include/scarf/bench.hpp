#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scarf/solver.hpp"

namespace scarf {

struct BenchRecord {
  std::string id;        // file name within the corpus
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t pivots = 0;
  double wall_ms = 0;
  std::string outcome;   // "verified", "unverified" or "error:<kind>"
};

struct BenchConfig {
  SolveOptions solve;
  unsigned jobs = 1;
  bool timing = true;    // when false wall_ms is reported as 0
};

/// Solves every *.json file in `corpus_dir` (Scarf instances directly,
/// digraphs through the kernel reduction, hypergraphs through the matching
/// reduction). Records come back sorted by id whatever the job count.
std::vector<BenchRecord> bench(const std::string& corpus_dir, const BenchConfig& config = {});

/// CSV with header id,m,n,pivots,wall_ms,outcome.
std::string to_csv(const std::vector<BenchRecord>& records);

}  // namespace scarf
