#include "sgk/error.hpp"

namespace sgk {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::RepeatedPoint: return "RepeatedPoint";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::DomainTooLarge: return "DomainTooLarge";
    case ErrorCode::SubgroupEnumerationCapExceeded: return "SubgroupEnumerationCapExceeded";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NotSubgraph: return "NotSubgraph";
    case ErrorCode::LoopConnector: return "LoopConnector";
    case ErrorCode::NotInverseClosed: return "NotInverseClosed";
    case ErrorCode::SpecInvariantViolated: return "SpecInvariantViolated";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::InsideSubgroup: return "InsideSubgroup";
    case ErrorCode::NotSelfPaired: return "NotSelfPaired";
    case ErrorCode::DiagonalOrbital: return "DiagonalOrbital";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoFlippingInvolution: return "NoFlippingInvolution";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotQuotientArc: return "NotQuotientArc";
    case ErrorCode::TrivialQuotient: return "TrivialQuotient";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::DegenerateQuotient: return "DegenerateQuotient";
    case ErrorCode::InvalidDesign: return "InvalidDesign";
    case ErrorCode::NotUniformBlocks: return "NotUniformBlocks";
    case ErrorCode::NotUniformPoints: return "NotUniformPoints";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::DegenerateDesign: return "DegenerateDesign";
    case ErrorCode::NotPolarity: return "NotPolarity";
    case ErrorCode::NotFlagTransitive: return "NotFlagTransitive";
    case ErrorCode::TwistNotHomomorphism: return "TwistNotHomomorphism";
    case ErrorCode::InverseSymmetryViolated: return "InverseSymmetryViolated";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::IncompleteChain: return "IncompleteChain";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::ValencyTooSmall: return "ValencyTooSmall";
    case ErrorCode::NoStrictChain: return "NoStrictChain";
    case ErrorCode::DegenerateInvolution: return "DegenerateInvolution";
    case ErrorCode::NotSemidirect: return "NotSemidirect";
    case ErrorCode::NotSelfPairedOrbital: return "NotSelfPairedOrbital";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace sgk
