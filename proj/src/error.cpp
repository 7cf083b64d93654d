#include "dressian/error.hpp"

namespace dressian {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAMatroid: return "NotAMatroid";
    case ErrorCode::EmptyBases: return "EmptyBases";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::EverythingRemoved: return "EverythingRemoved";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::ImpossiblePattern: return "ImpossiblePattern";
    case ErrorCode::NotValuated: return "NotValuated";
    case ErrorCode::HasLoops: return "HasLoops";
    case ErrorCode::AllInfiniteColumnSet: return "AllInfiniteColumnSet";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::NotMatroidal: return "NotMatroidal";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace dressian
