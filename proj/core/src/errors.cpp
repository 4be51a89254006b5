#include "isoendo/errors.hpp"

namespace isoendo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::BadModuli: return "BadModuli";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadKernel: return "BadKernel";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::BadChain: return "BadChain";
    case ErrorKind::ModulusSplit: return "ModulusSplit";
    case ErrorKind::IntegrityFailure: return "IntegrityFailure";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::Budget: return "Budget";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NotAVertex: return "NotAVertex";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace isoendo
