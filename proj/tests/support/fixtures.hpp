#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scarf/fspp.hpp"
#include "scarf/kernels.hpp"
#include "scarf/matchings.hpp"
#include "scarf/solver.hpp"

namespace fx {

using scarf::Rational;

scarf::ScarfInstance make_instance(const std::vector<std::vector<long>>& B, const std::vector<long>& b,
                                   const std::vector<std::vector<long>>& C);

/// m=2, n=3, B=[[1,0,1],[0,1,1]], b=(2,1), C=[[0,9,5],[9,0,5]].
scarf::ScarfInstance ex1();
/// EX1 with b=(1,1): the slack basis and {1,3} tie in the ratio test.
scarf::ScarfInstance ex1_degenerate();
/// EX1 with C=[[0,5,5],[5,0,5]]: column 3 ties a foreign slack in each row.
scarf::ScarfInstance ex1_ties();

/// 1-based column list to 0-based ColumnSet.
scarf::ColumnSet cols(std::initializer_list<std::size_t> one_based);

std::vector<Rational> q(std::initializer_list<const char*> values);

scarf::kernels::Digraph digraph(const std::vector<std::string>& labels,
                                const std::vector<std::pair<std::string, std::string>>& arcs);
scarf::kernels::Digraph c5();
scarf::kernels::Digraph single_arc();   // u -> v
scarf::kernels::Digraph two_cycle();    // u <-> v
scarf::kernels::Digraph triangle();     // u -> v -> w -> u
scarf::kernels::Digraph path_uvw();     // u -> v -> w

scarf::matchings::HypergraphPrefSystem single_edge();
scarf::matchings::HypergraphPrefSystem cyclic_triangle();
scarf::matchings::HypergraphPrefSystem marriage_2x2();

/// Nodes u, v, d; P^u = {ud (1), uvd (2)}, P^v = {vd (1), vud (2)}.
scarf::fspp::FsppInstance fspp_two_cycle();
/// Weights on fspp_two_cycle given as (ud, uvd, vd, vud).
scarf::fspp::FsppWeights two_cycle_weights(const char* ud, const char* uvd, const char* vd, const char* vud);

/// Seeded random valid instance with m <= max_m and n <= max_n.
scarf::ScarfInstance random_instance(std::uint64_t seed, std::size_t max_m, std::size_t max_n);

}  // namespace fx
