#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hspec {

enum class ErrorCode {
  IndexOutOfRange,
  ConflictingOrbitValues,
  NonFiniteValue,
  DimensionMismatch,
  EmptyIndexSet,
  BadArity,
  BadArgument,
  RemovesAllVertices,
  UnknownEdge,
  OddOrderForBipartite,
  NegativeEntry,
  OddOrder,
  NoConvergence,
  DimensionTooLarge,
  NoRoot,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hspec
