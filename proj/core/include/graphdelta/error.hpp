#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphdelta {

enum class Errc {
  InvalidOrder,
  SelfLoop,
  BadVertex,
  EmptySelection,
  FormatError,
  NotConnected,
  Degenerate,
  AdjacentPair,
  SamePair,
  InvalidQuery,
  OutOfTheoremRange,
  NotRealizable,
  ConstructionMismatch,
  UniverseTooLarge,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace graphdelta
