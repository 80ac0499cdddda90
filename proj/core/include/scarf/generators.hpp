#pragma once

#include <cstddef>
#include <cstdint>

#include "scarf/digraph.hpp"
#include "scarf/instance.hpp"

namespace scarf::gen {

/// B = [I | random nonnegative integer columns, none zero], b random in
/// 0..4 (zeros make degenerate pairs), C random small integers clamped to the
/// row hypothesis (ties are common). Requires 1 <= m < n.
ScarfInstance random_scarf(std::size_t m, std::size_t n, std::uint64_t seed);

/// Random vertex order; each forward pair becomes an arc with probability
/// arc_prob and an included arc gains its reverse with probability rev_prob.
/// All irreversible arcs follow the order, so the result is clique-acyclic.
kernels::Digraph clique_acyclic_digraph(std::size_t nv, double arc_prob, double rev_prob, std::uint64_t seed);

/// Vertices 1..k, arcs i -> i+1 mod k. Requires k >= 2.
kernels::Digraph directed_cycle(std::size_t k);

}  // namespace scarf::gen
