#include "fixtures.hpp"

#include <random>

#include "scarf/generators.hpp"

namespace fx {

using namespace scarf;

ScarfInstance make_instance(const std::vector<std::vector<long>>& B, const std::vector<long>& b,
                            const std::vector<std::vector<long>>& C) {
  auto conv = [](const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return Matrix::from_rows(out);
  };
  ScarfInstance inst;
  inst.m = B.size();
  inst.n = B.front().size();
  inst.B = conv(B);
  inst.b.assign(b.begin(), b.end());
  inst.C = conv(C);
  return inst;
}

ScarfInstance ex1() { return make_instance({{1, 0, 1}, {0, 1, 1}}, {2, 1}, {{0, 9, 5}, {9, 0, 5}}); }
ScarfInstance ex1_degenerate() { return make_instance({{1, 0, 1}, {0, 1, 1}}, {1, 1}, {{0, 9, 5}, {9, 0, 5}}); }
ScarfInstance ex1_ties() { return make_instance({{1, 0, 1}, {0, 1, 1}}, {2, 1}, {{0, 5, 5}, {5, 0, 5}}); }

ColumnSet cols(std::initializer_list<std::size_t> one_based) {
  ColumnSet out;
  for (auto c : one_based) out.push_back(c - 1);
  return out;
}

std::vector<Rational> q(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(parse_rational(v));
  return out;
}

kernels::Digraph digraph(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& arcs) {
  auto index = [&](const std::string& l) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == l) return i;
    }
    throw std::invalid_argument(l);
  };
  std::vector<kernels::Arc> out;
  for (const auto& [a, b] : arcs) out.emplace_back(index(a), index(b));
  return kernels::Digraph(labels, out);
}

kernels::Digraph c5() { return gen::directed_cycle(5); }
kernels::Digraph single_arc() { return digraph({"u", "v"}, {{"u", "v"}}); }
kernels::Digraph two_cycle() { return digraph({"u", "v"}, {{"u", "v"}, {"v", "u"}}); }
kernels::Digraph triangle() { return digraph({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}, {"w", "u"}}); }
kernels::Digraph path_uvw() { return digraph({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}); }

matchings::HypergraphPrefSystem single_edge() {
  matchings::HypergraphPrefSystem h;
  h.labels = {"u", "v"};
  h.edges = {{0, 1}};
  h.orders = {{0}, {0}};
  return h;
}

matchings::HypergraphPrefSystem cyclic_triangle() {
  // edges 0={a,b}, 1={b,c}, 2={c,a}; each vertex prefers the edge to its successor.
  matchings::HypergraphPrefSystem h;
  h.labels = {"a", "b", "c"};
  h.edges = {{0, 1}, {1, 2}, {0, 2}};
  h.orders = {{2, 0}, {0, 1}, {1, 2}};
  return h;
}

matchings::HypergraphPrefSystem marriage_2x2() {
  // men m1, m2; women w1, w2; m1-w1 and m2-w2 are mutual first choices.
  matchings::HypergraphPrefSystem h;
  h.labels = {"m1", "m2", "w1", "w2"};
  h.edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  h.orders = {{1, 0}, {2, 3}, {2, 0}, {1, 3}};
  return h;
}

fspp::FsppInstance fspp_two_cycle() {
  const fspp::Node u = 0, v = 1, d = 2;
  std::vector<std::vector<fspp::PermittedPath>> paths(3);
  paths[u] = {{{u, d}, 1}, {{u, v, d}, 2}};
  paths[v] = {{{v, d}, 1}, {{v, u, d}, 2}};
  return fspp::FsppInstance({"u", "v", "d"}, d, {{u, v}, {u, d}, {v, d}}, paths);
}

fspp::FsppWeights two_cycle_weights(const char* ud, const char* uvd, const char* vd, const char* vud) {
  return {{parse_rational(ud), parse_rational(uvd)}, {parse_rational(vd), parse_rational(vud)}, {}};
}

ScarfInstance random_instance(std::uint64_t seed, std::size_t max_m, std::size_t max_n) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 7);
  const std::size_t m = 1 + rng() % max_m;
  const std::size_t n = m + 1 + rng() % (max_n - m);
  return gen::random_scarf(m, n, seed);
}

}  // namespace fx
