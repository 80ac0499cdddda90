#include "scarf/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "scarf/error.hpp"

namespace scarf::gen {

namespace {

// mt19937_64's output sequence is fixed by the standard; the distributions
// are not, so sampling is done by hand to keep files byte-identical across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  long in_range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

ScarfInstance random_scarf(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m < 1 || m >= n) {
    throw Error(ErrorKind::InvalidInput, "random_scarf needs 1 <= m < n (m=" + std::to_string(m) +
                                             ", n=" + std::to_string(n) + ")");
  }
  Rng rng(seed);
  ScarfInstance inst;
  inst.m = m;
  inst.n = n;
  inst.B = Matrix(m, n);
  inst.C = Matrix(m, n);
  inst.b.resize(m);

  for (std::size_t i = 0; i < m; ++i) inst.B(i, i) = 1;
  for (std::size_t k = m; k < n; ++k) {
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i) {
      long v = rng.chance(0.5) ? 0 : rng.in_range(1, 3);
      inst.B(i, k) = v;
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) inst.B(rng.below(m), k) = rng.in_range(1, 3);
  }
  for (std::size_t i = 0; i < m; ++i) inst.b[i] = rng.in_range(0, 4);

  for (std::size_t i = 0; i < m; ++i) {
    long lo = 8, hi = 1;
    for (std::size_t k = m; k < n; ++k) {
      long v = rng.in_range(1, 8);
      inst.C(i, k) = v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    inst.C(i, i) = rng.in_range(0, lo);
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) inst.C(i, j) = rng.in_range(hi, 12);
    }
  }
  return inst;
}

kernels::Digraph clique_acyclic_digraph(std::size_t nv, double arc_prob, double rev_prob, std::uint64_t seed) {
  if (nv < 1) throw Error(ErrorKind::InvalidInput, "digraph needs at least one vertex");
  if (!(arc_prob >= 0 && arc_prob <= 1 && rev_prob >= 0 && rev_prob <= 1)) {
    throw Error(ErrorKind::InvalidInput, "probabilities must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<kernels::Vertex> order(nv);
  std::iota(order.begin(), order.end(), kernels::Vertex{0});
  for (std::size_t i = nv; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::vector<kernels::Arc> arcs;
  for (std::size_t a = 0; a < nv; ++a) {
    for (std::size_t b = a + 1; b < nv; ++b) {
      if (!rng.chance(arc_prob)) continue;
      arcs.emplace_back(order[a], order[b]);
      if (rng.chance(rev_prob)) arcs.emplace_back(order[b], order[a]);
    }
  }
  return kernels::Digraph::with_size(nv, std::move(arcs));
}

kernels::Digraph directed_cycle(std::size_t k) {
  if (k < 2) throw Error(ErrorKind::InvalidInput, "directed cycle needs k >= 2");
  std::vector<kernels::Arc> arcs;
  for (std::size_t i = 0; i < k; ++i) arcs.emplace_back(i, (i + 1) % k);
  return kernels::Digraph::with_size(k, std::move(arcs));
}

}  // namespace scarf::gen
