#include "dimerknot/error.hpp"

namespace dimerknot {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::StrandMismatch: return "StrandMismatch";
    case ErrorCode::ZeroExponent: return "ZeroExponent";
    case ErrorCode::DisconnectedLink: return "DisconnectedLink";
    case ErrorCode::ColoringContradiction: return "ColoringContradiction";
    case ErrorCode::UnbalancedGraph: return "UnbalancedGraph";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroAssignment: return "ZeroAssignment";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnsupportedWord: return "UnsupportedWord";
    case ErrorCode::BarredLetter: return "BarredLetter";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace dimerknot
