#pragma once

#include <stdexcept>
#include <string>

namespace serre {

enum class ErrorKind {
  LengthMismatch,
  ParamMismatch,
  OddNiveau,
  NotASerreWeight,
  NonSemisimpleInput,
  RamifiedField,
  PreconditionViolated,
  InvalidWitness,
  NotALift,
  SingularGenerator,
  CapExceeded,
  CharMismatch,
  UnsupportedSpec,
  ParseError,
  Overflow,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace serre
