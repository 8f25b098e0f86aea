#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

// Error kinds mirror the failure modes of the public operations; the CLI
// maps ParseError/IoError/BadUsage to exit code 2 and everything else to 1.
enum class Errc {
  FactorOne,
  NegativeFactor,
  LengthMismatch,
  AmbientMismatch,
  IllDefinedMap,
  IllDefinedBracket,
  InfiniteGroup,
  BudgetExceeded,
  NotPrime,
  NotLeftLeibniz,
  NotAnIdeal,
  NotAutomorphism,
  ClosureStepLimit,
  BadParameters,
  PresentationMismatch,
  ParseError,
  IoError,
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

} // namespace leibniz
