#pragma once

#include <stdexcept>
#include <string>

namespace equicount {

// Every recoverable failure in the library throws Error with one of these
// codes. InternalError marks invariant breakage (a bug), not bad input;
// callers other than tests should never catch it.
enum class ErrorCode {
  NotAPermutation,
  OrderCapExceeded,
  UnknownName,
  NotASubgroup,
  InvalidAction,
  NotInImage,
  GroupMismatch,
  NotAHomomorphism,
  AbelianOnly,
  NonIntegralRank,
  UnknownModel,
  WrongGroup,
  InvalidCellStructure,
  MixedCarriers,
  InvalidPointSplit,
  InvalidBaseLocus,
  MissingLineIndex,
  AssemblyMismatch,
  BadInput,
  InternalError,
};

constexpr const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::AbelianOnly: return "AbelianOnly";
    case ErrorCode::NonIntegralRank: return "NonIntegralRank";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::WrongGroup: return "WrongGroup";
    case ErrorCode::InvalidCellStructure: return "InvalidCellStructure";
    case ErrorCode::MixedCarriers: return "MixedCarriers";
    case ErrorCode::InvalidPointSplit: return "InvalidPointSplit";
    case ErrorCode::InvalidBaseLocus: return "InvalidBaseLocus";
    case ErrorCode::MissingLineIndex: return "MissingLineIndex";
    case ErrorCode::AssemblyMismatch: return "AssemblyMismatch";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Invariant check for conditions that only a library bug can violate.
inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InternalError, "internal error: " + what);
}

}  // namespace equicount
