#pragma once

#include <stdexcept>

namespace scalefv {

/// Base class for everything thrown by this library.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument and configuration problems.
struct InvalidDomainError : SolverError { using SolverError::SolverError; };
struct IncompatibleGridsError : SolverError { using SolverError::SolverError; };
struct LengthMismatchError : SolverError { using SolverError::SolverError; };
struct MeshMismatchError : SolverError { using SolverError::SolverError; };
struct WrongModelError : SolverError { using SolverError::SolverError; };
struct UnknownModelError : SolverError { using SolverError::SolverError; };
struct ZeroDirectError : SolverError { using SolverError::SolverError; };
struct IoError : SolverError { using SolverError::SolverError; };

// Numerical failures detected while solving.
struct DegenerateSpeedError : SolverError { using SolverError::SolverError; };
struct DegenerateNormError : SolverError { using SolverError::SolverError; };
struct NonfiniteStateError : SolverError { using SolverError::SolverError; };

}  // namespace scalefv
