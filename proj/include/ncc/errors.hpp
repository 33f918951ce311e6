#pragma once

#include <stdexcept>
#include <string>

namespace ncc {

// Error taxonomy shared by all modules; the CLI maps these to structured
// JSON verdicts with status "error".
enum class Err {
  RankDeficient,
  PrecisionExhausted,
  NotContained,
  UnsupportedField,
  SplitFailure,
  NotSemisimple,
  NotSplit,
  LengthMismatch,
  NotCentral,
  NotInvertible,
  NotHereditary,
  NotStable,
  ClosureCheckFailed,
  InconsistentRank,
  BadParameters,
  NonRationalPoint,
  ParseError,
  Internal,
};

const char* err_name(Err e);

class NccError : public std::runtime_error {
 public:
  NccError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw NccError(code, msg);
}

inline void require(bool cond, Err code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace ncc
