#pragma once

#include <stdexcept>
#include <string>

namespace tweetsent {

/// Broad failure category. The CLI maps these onto process exit codes.
enum class ErrorKind {
  Usage,      // bad invocation, missing predecessor artifact
  Io,         // unreadable / unwritable stream
  Schema,     // CSV header does not carry a required column
  Config,     // invalid configuration value or empty derived structure
  Data,       // malformed or semantically invalid input data
  Numeric,    // training diverged or produced non-finite values
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace tweetsent
