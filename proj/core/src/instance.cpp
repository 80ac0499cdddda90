#include "scarf/instance.hpp"

#include <algorithm>
#include <numeric>

#include "scarf/error.hpp"

namespace scarf {

namespace {

std::string cell(std::size_t row, std::size_t col) {
  return "(row " + std::to_string(row + 1) + ", col " + std::to_string(col + 1) + ")";
}

}  // namespace

ValidationReport validate_instance(const ScarfInstance& inst, bool assume_bounded) {
  ValidationReport report;
  const std::size_t m = inst.m;
  const std::size_t n = inst.n;

  if (m == 0) report.push_back({"m", "m must be positive"});
  if (m >= n) report.push_back({"m<n", "m < n violated (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")"});
  if (inst.B.rows() != m || inst.B.cols() != n || inst.C.rows() != m || inst.C.cols() != n ||
      inst.b.size() != m) {
    report.push_back({"shape", "B and C must be m x n and b of length m"});
    return report;
  }
  if (m == 0) return report;

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (inst.B(i, j) != (i == j ? 1 : 0)) {
        report.push_back({"identity", "B identity block violated at " + cell(i, j)});
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(inst.b[i]) < 0) {
      report.push_back({"b>=0", "b not nonnegative at row " + std::to_string(i + 1)});
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = m; k < n; ++k) {
      if (inst.C(i, i) > inst.C(i, k)) {
        report.push_back({"C-order", "C row-ordering hypothesis at " + cell(i, k) +
                                         ": own slack exceeds column"});
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        if (inst.C(i, k) > inst.C(i, j)) {
          report.push_back({"C-order", "C row-ordering hypothesis at " + cell(i, k) +
                                           ": exceeds foreign slack col " + std::to_string(j + 1)});
        }
      }
    }
  }

  if (!assume_bounded) {
    for (std::size_t k = 0; k < n; ++k) {
      bool nonzero = false;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(inst.B(i, k)) < 0) {
          report.push_back({"bounded", "boundedness surrogate: negative B entry at " + cell(i, k)});
        }
        if (sgn(inst.B(i, k)) != 0) nonzero = true;
      }
      if (!nonzero) {
        report.push_back({"bounded", "boundedness surrogate: B column " + std::to_string(k + 1) +
                                         " is all zero"});
      }
    }
  }
  return report;
}

void require_valid(const ScarfInstance& inst, bool assume_bounded) {
  auto report = validate_instance(inst, assume_bounded);
  if (report.empty()) return;
  std::string what = "invalid Scarf instance: " + report.front().message;
  if (report.size() > 1) what += " (+" + std::to_string(report.size() - 1) + " more)";
  throw Error(ErrorKind::InvalidInput, what);
}

CanonicalScarf::CanonicalScarf(ScarfInstance base) : base_(std::move(base)) {
  const std::size_t m = base_.m;
  const std::size_t n = base_.n;
  ranks_.assign(m * n, 0);

  std::vector<Column> order(n);
  for (std::size_t i = 0; i < m; ++i) {
    // 0 = own slack, 1 = non-slack, 2 = foreign slack
    auto tier = [&](Column c) { return c == i ? 0 : (c >= m ? 1 : 2); };
    std::iota(order.begin(), order.end(), Column{0});
    std::sort(order.begin(), order.end(), [&](Column a, Column b) {
      int cmpv = cmp(base_.C(i, a), base_.C(i, b));
      if (cmpv != 0) return cmpv < 0;
      if (tier(a) != tier(b)) return tier(a) < tier(b);
      return a < b;
    });
    for (std::size_t pos = 0; pos < n; ++pos) {
      ranks_[i * n + order[pos]] = static_cast<std::uint32_t>(pos + 1);
      if (pos > 0 && base_.C(i, order[pos - 1]) == base_.C(i, order[pos])) {
        ties_.push_back({i, order[pos - 1], order[pos]});
      }
    }
  }
}

}  // namespace scarf
