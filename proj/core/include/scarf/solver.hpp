#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scarf/instance.hpp"

namespace scarf {

/// witness[k] is the row at which column k is subordinated.
using Witness = std::vector<std::size_t>;

/// Outcome of a verifier: a flag plus the first failure found.
struct VerifyResult {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
  static VerifyResult pass() { return {}; }
  static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
};

/// Returns a witness for every column iff J is subordinating under the ranks:
/// column k is covered at the smallest row i with R[i][k] <= min_{j in J} R[i][j].
std::optional<Witness> is_subordinating(std::span<const Column> J, const CanonicalScarf& canon);

/// Same check against the original C with weak inequalities.
std::optional<Witness> is_weakly_subordinating(std::span<const Column> J, const ScarfInstance& inst);

struct FeasibleBasis {
  ColumnSet columns;          // ordered; x[p] belongs to columns[p]
  std::vector<Rational> x;

  friend bool operator==(const FeasibleBasis&, const FeasibleBasis&) = default;
};

/// Exact solution of B_J x = b when B_J is invertible and x >= 0.
std::optional<FeasibleBasis> solve_basis(std::span<const Column> J, const ScarfInstance& inst);

struct PivotResult {
  Column leaving;
  FeasibleBasis basis;
};

/// Brings `entering` into the basis. The leaving column is chosen by the
/// lexicographic ratio test on (x_r, row r of B_J^-1) / d_r over rows with a
/// positive direction component d_r, which makes it unique even when b is
/// degenerate. The new basis keeps the old column order with `entering` in
/// the leaving column's slot.
///
/// Throws Error(UnboundedDirection) when no component of the direction is
/// positive.
PivotResult cardinal_pivot(const FeasibleBasis& basis, Column entering, const ScarfInstance& inst);

/// All j outside K such that K + j is subordinating, ascending. There must be
/// exactly two, or exactly one when K lies inside the slack block; any other
/// count throws Error(LemmaViolation).
ColumnSet ordinal_extensions(std::span<const Column> K, const CanonicalScarf& canon);

struct ScarfSolution {
  ColumnSet J;                 // ascending
  std::vector<Rational> alpha; // length n, zero off J
  Witness witness;             // against the original C

  friend bool operator==(const ScarfSolution&, const ScarfSolution&) = default;
};

enum class WalkMode { AtBasis, AtSubordinating };

struct WalkVertex {
  WalkMode mode;
  ColumnSet columns;  // ascending

  friend bool operator==(const WalkVertex&, const WalkVertex&) = default;
};

struct SolveOptions {
  std::optional<std::uint64_t> step_cap;  // default_step_cap(m, n) when unset
  bool assume_bounded = false;
  bool record_trace = false;
};

struct SolveResult {
  ScarfSolution solution;
  std::uint64_t pivots = 0;           // edges of the path graph traversed
  std::uint64_t cardinal_pivots = 0;
  std::uint64_t ordinal_pivots = 0;
  std::vector<WalkVertex> trace;      // filled when record_trace is set
};

/// 4 * (n choose m), saturating at 10^7.
std::uint64_t default_step_cap(std::size_t m, std::size_t n);

/// Follows the alternating path from the slack basis [m] to a set that is
/// both a feasible basis and subordinating.
SolveResult solve(const ScarfInstance& inst, const SolveOptions& options = {});

/// Checks |J| = m, alpha >= 0, support within J, B alpha = b exactly, and that
/// every column is weakly J-subordinated under the original C.
VerifyResult verify_solution(const ScarfInstance& inst, const ScarfSolution& sol);

}  // namespace scarf
