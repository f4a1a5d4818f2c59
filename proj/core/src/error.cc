#include "whitehead/error.h"

namespace whitehead {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return "parse";
    case ErrorKind::kRank:
      return "rank";
    case ErrorKind::kDomain:
      return "domain";
    case ErrorKind::kCapExceeded:
      return "cap";
    case ErrorKind::kConvergence:
      return "convergence";
    case ErrorKind::kIo:
      return "io";
  }
  return "unknown";
}

}  // namespace whitehead
