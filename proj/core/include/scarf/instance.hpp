#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "scarf/rational.hpp"

namespace scarf {

/// Column index, 0-based. Files and diagnostics use 1-based numbering.
using Column = std::size_t;
using ColumnSet = std::vector<Column>;

/// Input to Scarf's lemma: B = [I | *], b >= 0, and a preference matrix C
/// whose rows satisfy c_ii <= c_ik <= c_ij for j <= m, j != i, k > m.
struct ScarfInstance {
  std::size_t m = 0;
  std::size_t n = 0;
  Matrix B;
  std::vector<Rational> b;
  Matrix C;

  bool is_slack(Column col) const noexcept { return col < m; }

  friend bool operator==(const ScarfInstance&, const ScarfInstance&) = default;
};

struct Violation {
  std::string code;
  std::string message;
};

using ValidationReport = std::vector<Violation>;

/// Lists every violated hypothesis. With `assume_bounded` the B >= 0 /
/// no-zero-column surrogate for boundedness is skipped.
ValidationReport validate_instance(const ScarfInstance& inst, bool assume_bounded = false);

/// Throws Error(InvalidInput) carrying the first violations when the report
/// is nonempty.
void require_valid(const ScarfInstance& inst, bool assume_bounded = false);

struct TieBreak {
  std::size_t row;
  Column first;   // ranked lower
  Column second;  // ranked higher
};

/// The instance with C replaced by strict per-row ranks 1..n.
///
/// Ties in a row of C are broken as: the row's own slack first, then
/// non-slack columns by ascending index, then foreign slacks by ascending
/// index. This keeps the row hypothesis intact and only refines C, so any
/// set that is subordinating under the ranks is subordinating under C.
class CanonicalScarf {
 public:
  explicit CanonicalScarf(ScarfInstance base);

  const ScarfInstance& base() const noexcept { return base_; }
  std::size_t m() const noexcept { return base_.m; }
  std::size_t n() const noexcept { return base_.n; }

  std::uint32_t rank(std::size_t row, Column col) const { return ranks_[row * base_.n + col]; }
  const std::vector<TieBreak>& tiebreak_log() const noexcept { return ties_; }

 private:
  ScarfInstance base_;
  std::vector<std::uint32_t> ranks_;
  std::vector<TieBreak> ties_;
};

inline CanonicalScarf canonicalize(const ScarfInstance& inst) { return CanonicalScarf(inst); }

}  // namespace scarf
