#ifndef KRES_ERRORS_HPP
#define KRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kres {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorCode {
  UnsupportedType,     // unknown root-datum label
  BadIndex,            // simple-reflection index out of range
  NotDominant,         // operation requires a dominant weight
  UnknownPair,         // name not in the catalog
  CorruptCatalog,      // catalog entry failed validation
  TruncationTooSmall,  // graded computation not stabilized at the requested degree
  WrongSide,           // class/parameter tagged with the wrong side
  NotSplit,            // operation requires a split pair
  UnsupportedPair,     // operation not available for this pair
  UsageError,          // malformed input (CLI-level)
  Internal             // broken invariant; always a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// For conditions that can only arise from a bug, never from bad input.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::Internal, std::string("internal error: ") + what);
}

}  // namespace kres

#endif
