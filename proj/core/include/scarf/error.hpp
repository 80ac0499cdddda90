#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scarf {

enum class ErrorKind {
  InvalidInput,
  EmptyInstance,
  NotCliqueAcyclic,
  CliqueTooLarge,
  CapExceeded,
  UnboundedDirection,
  StepLimitExceeded,
  LemmaViolation,
  Unrepairable,
  IterationCap,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures that indicate a bug or a broken theoretical guarantee
  /// rather than bad user input.
  bool is_internal() const noexcept {
    return kind_ == ErrorKind::StepLimitExceeded ||
           kind_ == ErrorKind::LemmaViolation ||
           kind_ == ErrorKind::Unrepairable ||
           kind_ == ErrorKind::IterationCap;
  }

 private:
  ErrorKind kind_;
};

}  // namespace scarf
