#pragma once

#include <stdexcept>
#include <string>

namespace detrig {

enum class Errc {
  ContextMismatch,
  DivisionByZero,
  InexactDivision,
  ZeroCoordinate,
  DimensionMismatch,
  InvalidArgument,
  RankDeficient,
  NotObservable,
  GenericityViolation,
  DegenerateIndices,
  NoWitnessBasis,
  PathInconsistency,
  NotRecoverable,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace detrig
