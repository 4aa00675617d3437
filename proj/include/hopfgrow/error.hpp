#pragma once

#include <stdexcept>
#include <string>

namespace hopfgrow {

// Exit-code classes used by the command line tool.
enum class ErrorKind {
  Usage,        // malformed input, unknown names, bad parameters
  Hypothesis,   // a precondition of a computation does not hold
  Consistency,  // two independent computations disagree
  Resource,     // a configured ceiling was hit
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return 1;
    case ErrorKind::Hypothesis:
    case ErrorKind::Consistency: return 2;
    case ErrorKind::Resource: return 3;
  }
  return 1;
}

}  // namespace hopfgrow
