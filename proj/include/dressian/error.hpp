#pragma once

#include <stdexcept>
#include <string>

namespace dressian {

enum class ErrorCode {
  NotAMatroid,
  EmptyBases,
  WrongCardinality,
  InvalidParameters,
  NoEdges,
  UnknownName,
  EverythingRemoved,
  MalformedInput,
  ImpossiblePattern,
  NotValuated,
  HasLoops,
  AllInfiniteColumnSet,
  MalformedTree,
  NotMatroidal,
  NotABasis,
  NotParallel,
  BudgetExceeded,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dressian
