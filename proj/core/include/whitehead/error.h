#ifndef WHITEHEAD_ERROR_H_
#define WHITEHEAD_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace whitehead {

// Failure categories surfaced by the library. The command-line tool maps
// these onto exit codes, so keep the set small and stable.
enum class ErrorKind {
  kParse,         // malformed word / automorphism / table text
  kRank,          // rank mismatch or letter outside the declared rank
  kDomain,        // precondition violated (e.g. rank-2-only operation)
  kCapExceeded,   // enumeration or closure cap reached
  kConvergence,   // iterative method failed to converge
  kIo,            // file system problems
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace whitehead

#endif  // WHITEHEAD_ERROR_H_
