#ifndef TANGLEKIT_ERROR_HPP
#define TANGLEKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tanglekit {

enum class Errc {
  NotAMatching,
  Crossing,
  DecorationNotExposed,
  OddNodeTotal,
  IndexOutOfRange,
  UnknownArc,
  FaceMismatch,
  NotBlobLike,
  DecoratedInputForTL,
  KindMismatch,
  IllegalLetter,
  NotInBasis,
  ConditionFailed,
  NotReduced,
  NotPlainTL,
  NotBlobDiagram,
  NotSymmetric,
  CorruptTable,
  NotInvertible,
};

const char* to_string(Errc c);

/// Every contract violation in the library throws this; `code()` identifies
/// which precondition failed.
class TangleError : public std::runtime_error {
 public:
  TangleError(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw TangleError(code, what);
}

}  // namespace tanglekit

#endif
