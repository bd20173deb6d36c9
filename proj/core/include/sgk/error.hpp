#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgk {

// Stable error codes. The CLI prints the name and maps every code to exit 1.
enum class ErrorCode {
  // perm_core
  SyntaxError,
  RepeatedPoint,
  PointOutOfRange,
  InvalidPermutation,
  DegreeMismatch,
  CapExceeded,
  NotTransitive,
  NotInGroup,
  // subgroups
  NotASubgroup,
  DomainTooLarge,
  SubgroupEnumerationCapExceeded,
  InvalidPartition,
  InvalidArgument,
  // graph_core
  InvalidGraph,
  NotSubgraph,
  // coset_graphs
  LoopConnector,
  NotInverseClosed,
  SpecInvariantViolated,
  NotInvolution,
  InsideSubgroup,
  NotSelfPaired,
  DiagonalOrbital,
  NotSymmetric,
  NoFlippingInvolution,
  // quotients
  NotInvariant,
  NotQuotientArc,
  TrivialQuotient,
  NotNested,
  DegenerateQuotient,
  // designs
  InvalidDesign,
  NotUniformBlocks,
  NotUniformPoints,
  NotAutomorphism,
  DegenerateDesign,
  NotPolarity,
  NotFlagTransitive,
  // constructions
  TwistNotHomomorphism,
  InverseSymmetryViolated,
  NotCompatible,
  IncompleteChain,
  InvalidChain,
  ValencyTooSmall,
  NoStrictChain,
  DegenerateInvolution,
  NotSemidirect,
  NotSelfPairedOrbital,
  // io
  IoError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace sgk
