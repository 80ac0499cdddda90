#include "scarf/solver.hpp"

#include <algorithm>
#include <limits>

#include "scarf/error.hpp"

namespace scarf {

namespace {

constexpr std::uint64_t kStepCapCeiling = 10'000'000;

std::string col_name(Column c) { return std::to_string(c + 1); }

std::string set_name(std::span<const Column> cols) {
  std::string s = "{";
  for (std::size_t p = 0; p < cols.size(); ++p) {
    if (p) s += ",";
    s += col_name(cols[p]);
  }
  return s + "}";
}

Matrix basis_matrix(std::span<const Column> J, const ScarfInstance& inst) {
  Matrix out(inst.m, J.size());
  for (std::size_t i = 0; i < inst.m; ++i) {
    for (std::size_t p = 0; p < J.size(); ++p) out(i, p) = inst.B(i, J[p]);
  }
  return out;
}

void check_columns(std::span<const Column> J, std::size_t n) {
  for (Column c : J) {
    if (c >= n) throw Error(ErrorKind::InvalidInput, "column " + col_name(c) + " out of range");
  }
}

ColumnSet sorted_with(std::span<const Column> K, Column extra) {
  ColumnSet out(K.begin(), K.end());
  out.push_back(extra);
  std::sort(out.begin(), out.end());
  return out;
}

ColumnSet sorted_without(std::span<const Column> F, Column removed) {
  ColumnSet out;
  out.reserve(F.size());
  for (Column c : F) {
    if (c != removed) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<Witness> is_subordinating(std::span<const Column> J, const CanonicalScarf& canon) {
  const std::size_t m = canon.m();
  const std::size_t n = canon.n();
  check_columns(J, n);

  std::vector<std::uint32_t> row_min(m, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < m; ++i) {
    for (Column j : J) row_min[i] = std::min(row_min[i], canon.rank(i, j));
  }
  Witness witness(n);
  for (Column k = 0; k < n; ++k) {
    std::size_t i = 0;
    while (i < m && canon.rank(i, k) > row_min[i]) ++i;
    if (i == m) return std::nullopt;
    witness[k] = i;
  }
  return witness;
}

std::optional<Witness> is_weakly_subordinating(std::span<const Column> J, const ScarfInstance& inst) {
  check_columns(J, inst.n);
  Witness witness(inst.n);
  for (Column k = 0; k < inst.n; ++k) {
    bool found = false;
    for (std::size_t i = 0; i < inst.m && !found; ++i) {
      found = std::all_of(J.begin(), J.end(), [&](Column j) { return inst.C(i, k) <= inst.C(i, j); });
      if (found) witness[k] = i;
    }
    if (!found) return std::nullopt;
  }
  return witness;
}

std::optional<FeasibleBasis> solve_basis(std::span<const Column> J, const ScarfInstance& inst) {
  if (J.size() != inst.m) {
    throw Error(ErrorKind::InvalidInput, "basis must have exactly m columns");
  }
  check_columns(J, inst.n);
  Matrix inverse;
  if (!invert(basis_matrix(J, inst), inverse)) return std::nullopt;

  FeasibleBasis out{ColumnSet(J.begin(), J.end()), std::vector<Rational>(inst.m)};
  for (std::size_t r = 0; r < inst.m; ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < inst.m; ++c) sum += inverse(r, c) * inst.b[c];
    if (sgn(sum) < 0) return std::nullopt;
    out.x[r] = sum;
  }
  return out;
}

PivotResult cardinal_pivot(const FeasibleBasis& basis, Column entering, const ScarfInstance& inst) {
  const std::size_t m = inst.m;
  if (basis.columns.size() != m || basis.x.size() != m) {
    throw Error(ErrorKind::InvalidInput, "basis must have exactly m columns");
  }
  check_columns(basis.columns, inst.n);
  check_columns(std::span<const Column>(&entering, 1), inst.n);
  if (std::find(basis.columns.begin(), basis.columns.end(), entering) != basis.columns.end()) {
    throw Error(ErrorKind::InvalidInput, "entering column " + col_name(entering) + " already basic");
  }

  Matrix inverse;
  if (!invert(basis_matrix(basis.columns, inst), inverse)) {
    throw Error(ErrorKind::InvalidInput, "basis " + set_name(basis.columns) + " is singular");
  }

  std::vector<Rational> direction(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) direction[r] += inverse(r, c) * inst.B(c, entering);
  }

  // Lexicographic ratio test: compare (x_r, inverse row r) / d_r.
  auto lex_less = [&](std::size_t a, std::size_t b) {
    int c = cmp(basis.x[a] * direction[b], basis.x[b] * direction[a]);
    for (std::size_t t = 0; c == 0 && t < m; ++t) {
      c = cmp(inverse(a, t) * direction[b], inverse(b, t) * direction[a]);
    }
    return c < 0;
  };

  std::optional<std::size_t> leave_pos;
  for (std::size_t r = 0; r < m; ++r) {
    if (sgn(direction[r]) <= 0) continue;
    if (!leave_pos || lex_less(r, *leave_pos)) leave_pos = r;
  }
  if (!leave_pos) {
    throw Error(ErrorKind::UnboundedDirection,
                "column " + col_name(entering) + " has no positive direction component; "
                "{alpha >= 0 : B alpha = b} is unbounded");
  }

  const std::size_t r = *leave_pos;
  const Rational theta = basis.x[r] / direction[r];
  PivotResult out{basis.columns[r], basis};
  for (std::size_t p = 0; p < m; ++p) out.basis.x[p] -= theta * direction[p];
  out.basis.x[r] = theta;
  out.basis.columns[r] = entering;
  return out;
}

ColumnSet ordinal_extensions(std::span<const Column> K, const CanonicalScarf& canon) {
  const std::size_t m = canon.m();
  if (K.size() + 1 != m) {
    throw Error(ErrorKind::InvalidInput, "ordinal pivot needs a set of size m-1");
  }
  if (!is_subordinating(K, canon)) {
    throw Error(ErrorKind::InvalidInput, set_name(K) + " is not subordinating");
  }

  ColumnSet extensions;
  ColumnSet candidate(K.begin(), K.end());
  candidate.push_back(0);
  for (Column j = 0; j < canon.n(); ++j) {
    if (std::find(K.begin(), K.end(), j) != K.end()) continue;
    candidate.back() = j;
    if (is_subordinating(candidate, canon)) extensions.push_back(j);
  }

  const bool inside_slacks = std::all_of(K.begin(), K.end(), [&](Column c) { return c < m; });
  const std::size_t expected = inside_slacks ? 1 : 2;
  if (extensions.size() != expected) {
    throw Error(ErrorKind::LemmaViolation,
                set_name(K) + " has " + std::to_string(extensions.size()) +
                    " subordinating extensions, expected " + std::to_string(expected));
  }
  return extensions;
}

std::uint64_t default_step_cap(std::size_t m, std::size_t n) {
  // (n choose m) built incrementally; every prefix product is itself a
  // binomial coefficient, so the division is exact. binom stays below
  // ceiling / 4 before each multiply, so 64 bits are enough.
  std::uint64_t binom = 1;
  const std::size_t k = std::min(m, n - std::min(m, n));
  for (std::size_t t = 1; t <= k; ++t) {
    binom = binom * static_cast<std::uint64_t>(n - k + t) / t;
    if (binom * 4 >= kStepCapCeiling) return kStepCapCeiling;
  }
  return binom * 4;
}

SolveResult solve(const ScarfInstance& inst, const SolveOptions& options) {
  require_valid(inst, options.assume_bounded);
  const CanonicalScarf canon(inst);
  const std::size_t m = inst.m;
  const std::uint64_t cap = options.step_cap.value_or(default_step_cap(m, inst.n));

  SolveResult result;
  auto advance = [&] {
    if (++result.pivots > cap) {
      throw Error(ErrorKind::StepLimitExceeded, "walk exceeded " + std::to_string(cap) + " steps");
    }
  };
  auto record = [&](WalkMode mode, std::span<const Column> cols) {
    if (!options.record_trace) return;
    ColumnSet sorted(cols.begin(), cols.end());
    std::sort(sorted.begin(), sorted.end());
    result.trace.push_back({mode, std::move(sorted)});
  };

  FeasibleBasis F;
  for (Column c = 0; c < m; ++c) F.columns.push_back(c);
  F.x = inst.b;
  record(WalkMode::AtBasis, F.columns);

  // [m] has exactly one neighbor: drop column 1 and extend.
  ColumnSet K = sorted_without(F.columns, 0);
  ColumnSet ext = ordinal_extensions(K, canon);
  ++result.ordinal_pivots;
  if (ext.front() == 0) {
    throw Error(ErrorKind::LemmaViolation, "[m] reported as subordinating");
  }
  Column entering = ext.front();
  ColumnSet S = sorted_with(K, entering);
  advance();
  record(WalkMode::AtSubordinating, S);

  ColumnSet J;
  for (;;) {
    // At S, whose neighbor F satisfies F \ S = {1} and S \ F = {entering}.
    PivotResult pivot = cardinal_pivot(F, entering, inst);
    ++result.cardinal_pivots;
    if (pivot.leaving == 0) {
      F = std::move(pivot.basis);
      J = S;
      break;
    }
    F = std::move(pivot.basis);
    advance();
    record(WalkMode::AtBasis, F.columns);

    // At F: of the two extensions of F \ {1}, one leads back to S.
    K = sorted_without(F.columns, 0);
    ext = ordinal_extensions(K, canon);
    ++result.ordinal_pivots;
    auto forward = std::find_if(ext.begin(), ext.end(), [&](Column c) { return c != pivot.leaving; });
    if (ext.size() != 2 || forward == ext.end() ||
        std::find(ext.begin(), ext.end(), pivot.leaving) == ext.end()) {
      throw Error(ErrorKind::LemmaViolation, "walk lost its predecessor at " + set_name(F.columns));
    }
    if (*forward == 0) {
      J = sorted_with(K, 0);
      break;
    }
    entering = *forward;
    S = sorted_with(K, entering);
    advance();
    record(WalkMode::AtSubordinating, S);
  }

  ScarfSolution& sol = result.solution;
  sol.J = J;
  sol.alpha.assign(inst.n, Rational(0));
  for (std::size_t p = 0; p < m; ++p) sol.alpha[F.columns[p]] = F.x[p];
  auto witness = is_weakly_subordinating(sol.J, inst);
  if (!witness) {
    throw Error(ErrorKind::LemmaViolation, "terminal set " + set_name(sol.J) +
                                               " is not subordinating under the original C");
  }
  sol.witness = std::move(*witness);
  return result;
}

VerifyResult verify_solution(const ScarfInstance& inst, const ScarfSolution& sol) {
  const std::size_t m = inst.m;
  const std::size_t n = inst.n;
  if (sol.J.size() != m) {
    return VerifyResult::fail("|J| = " + std::to_string(sol.J.size()) + ", expected " + std::to_string(m));
  }
  for (std::size_t p = 0; p < sol.J.size(); ++p) {
    if (sol.J[p] >= n) return VerifyResult::fail("column " + col_name(sol.J[p]) + " out of range");
    for (std::size_t q = 0; q < p; ++q) {
      if (sol.J[p] == sol.J[q]) return VerifyResult::fail("column " + col_name(sol.J[p]) + " repeated in J");
    }
  }
  if (sol.alpha.size() != n) return VerifyResult::fail("alpha must have length n");
  for (Column k = 0; k < n; ++k) {
    if (sgn(sol.alpha[k]) < 0) return VerifyResult::fail("alpha negative at column " + col_name(k));
    if (sgn(sol.alpha[k]) != 0 && std::find(sol.J.begin(), sol.J.end(), k) == sol.J.end()) {
      return VerifyResult::fail("alpha nonzero outside J at column " + col_name(k));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational sum = 0;
    for (Column k = 0; k < n; ++k) sum += inst.B(i, k) * sol.alpha[k];
    if (sum != inst.b[i]) return VerifyResult::fail("Bα ≠ b at row " + std::to_string(i + 1));
  }
  for (Column k = 0; k < n; ++k) {
    bool covered = false;
    for (std::size_t i = 0; i < m && !covered; ++i) {
      covered = std::all_of(sol.J.begin(), sol.J.end(), [&](Column j) { return inst.C(i, k) <= inst.C(i, j); });
    }
    if (!covered) return VerifyResult::fail("column " + col_name(k) + " unsubordinated");
  }
  if (!sol.witness.empty()) {
    if (sol.witness.size() != n) return VerifyResult::fail("witness must cover all n columns");
    for (Column k = 0; k < n; ++k) {
      const std::size_t i = sol.witness[k];
      if (i >= m || !std::all_of(sol.J.begin(), sol.J.end(), [&](Column j) { return inst.C(i, k) <= inst.C(i, j); })) {
        return VerifyResult::fail("witness row for column " + col_name(k) + " is wrong");
      }
    }
  }
  return VerifyResult::pass();
}

}  // namespace scarf
