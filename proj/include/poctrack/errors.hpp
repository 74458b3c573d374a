#pragma once

#include <stdexcept>
#include <string>

namespace poctrack {

// Root of every error thrown by this library. Catching poctrack::Error is
// enough to intercept anything that is not a std::logic_error style bug.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// pocset construction
struct CycleError : Error { using Error::Error; };
struct InvolutionError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct DegenerateError : Error { using Error::Error; };

// size guards; caps are configuration, never silent truncation
struct CapacityError : Error { using Error::Error; };

// cube complex queries
struct NotAVertexError : Error { using Error::Error; };

// interval machinery
struct MixedIntervalError : Error { using Error::Error; };
struct NotAdjacentError : Error { using Error::Error; };
struct MaximalError : Error { using Error::Error; };

// sequence machinery
struct LengthError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
// Raised when a verified construction emits something that fails its own
// postcondition check. Seeing this means either the input check let a bad
// instance through or the construction itself is wrong; it is never expected
// on instances that satisfy the documented preconditions.
struct LemmaViolationError : Error { using Error::Error; };

// 2-complexes, drawings, tracks
struct ComplexError : Error { using Error::Error; };
struct DistinctEdgeError : Error { using Error::Error; };
struct SharedEndpointError : Error { using Error::Error; };
struct MatchingError : Error { using Error::Error; };
struct ParityConflictError : Error { using Error::Error; };
struct SingleClassError : Error { using Error::Error; };
struct SimplyConnectedRequiredError : Error { using Error::Error; };
struct ParallelTracksError : Error { using Error::Error; };

// text formats
struct ParseError : Error { using Error::Error; };

}  // namespace poctrack
