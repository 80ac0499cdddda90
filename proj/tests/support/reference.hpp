#pragma once

// Definition-level reference checks used only by the tests. None of these
// call the library's verifiers, canonicalization or pivots.

#include <cstdint>
#include <functional>
#include <vector>

#include "scarf/fspp.hpp"
#include "scarf/kernels.hpp"
#include "scarf/matchings.hpp"
#include "scarf/solver.hpp"

namespace ref {

using scarf::Rational;

/// |J| = m, alpha >= 0 supported on J, B alpha = b, and every column k has a
/// row i with c_ik <= c_ij for all j in J.
bool scarf_solution_ok(const scarf::ScarfInstance& inst, const scarf::ColumnSet& J,
                       const std::vector<Rational>& alpha);

/// Exhaustive: every m-subset that is a feasible basis (plain) and weakly
/// subordinating under the original C.
std::vector<scarf::ColumnSet> all_solutions(const scarf::ScarfInstance& inst);

/// Vertex subsets (as bitmasks) that are cliques of the underlying graph.
std::vector<std::uint32_t> maximal_cliques(const scarf::kernels::Digraph& d);
bool clique_acyclic(const scarf::kernels::Digraph& d);

/// I(v) as a bitmask: v plus every u with (u, v) an arc.
std::uint32_t in_closure(const scarf::kernels::Digraph& d, std::size_t v);

bool fractional_kernel(const scarf::kernels::Digraph& d, const scarf::kernels::KernelFunction& f);
bool strong_kernel(const scarf::kernels::Digraph& d, const scarf::kernels::KernelFunction& f);
bool nash(const scarf::kernels::Digraph& d, const scarf::kernels::KernelFunction& f);

bool stable_matching(const scarf::matchings::HypergraphPrefSystem& h, const scarf::matchings::FractionalMatching& w);

bool fspp_feasible(const scarf::fspp::FsppInstance& inst, const scarf::fspp::FsppWeights& w);
bool fspp_stable(const scarf::fspp::FsppInstance& inst, const scarf::fspp::FsppWeights& w);

/// Rationals p/q in [0, 1] with q <= max_den, ascending, no repeats.
std::vector<Rational> grid(std::size_t max_den);

/// Calls `visit` on every weight vector whose entries come from grid(max_den)
/// and whose per-node totals are at most 1, in a fixed order. Returns false
/// from `visit` to stop early.
void for_each_weighting(const scarf::fspp::FsppInstance& inst, std::size_t max_den,
                        const std::function<bool(const scarf::fspp::FsppWeights&)>& visit);

/// All stable weightings found by the grid search.
std::vector<scarf::fspp::FsppWeights> stable_weightings(const scarf::fspp::FsppInstance& inst, std::size_t max_den);

/// Every digraph on k labelled vertices "1".."k" (all arc subsets).
std::vector<scarf::kernels::Digraph> all_digraphs(std::size_t k);

}  // namespace ref
