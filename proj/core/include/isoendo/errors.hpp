#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoendo {

enum class ErrorKind {
  DivisionByZero,
  NotASquare,
  BadModuli,
  Unsupported,
  TooLarge,
  BadKernel,
  BadInput,
  BadChain,
  ModulusSplit,
  IntegrityFailure,
  NotRealizable,
  RankDeficient,
  Budget,
  NotFound,
  NotAVertex,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace isoendo
