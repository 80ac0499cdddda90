#include "scarf/rational.hpp"

#include <cctype>

#include "scarf/error.hpp"

namespace scarf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::EmptyInstance: return "EmptyInstance";
    case ErrorKind::NotCliqueAcyclic: return "NotCliqueAcyclic";
    case ErrorKind::CliqueTooLarge: return "CliqueTooLarge";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::UnboundedDirection: return "UnboundedDirection";
    case ErrorKind::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::Unrepairable: return "Unrepairable";
    case ErrorKind::IterationCap: return "IterationCap";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  // mpq_class::get_str already prints lowest terms with a positive
  // denominator and omits "/1", provided the value is canonical.
  Rational q(value);
  q.canonicalize();
  return q.get_str();
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  Matrix out(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != out.cols()) {
      throw Error(ErrorKind::InvalidInput, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = rows[r][c];
  }
  return out;
}

bool invert(const Matrix& a, Matrix& out) {
  const std::size_t n = a.rows();
  if (a.cols() != n) return false;
  Matrix work = a;
  out = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(out(pivot, c), out(col, c));
      }
    }
    const Rational inv = 1 / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= inv;
      out(col, c) *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      const Rational factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        out(r, c) -= factor * out(col, c);
      }
    }
  }
  return true;
}

}  // namespace scarf
