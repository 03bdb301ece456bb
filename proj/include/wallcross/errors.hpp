#pragma once

#include <stdexcept>
#include <string>

namespace wallcross {

// Input/validation problems: the datum itself is unusable. CLI exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaError : ValidationError {
  using ValidationError::ValidationError;
};
struct NonRationalNumber : ValidationError {
  using ValidationError::ValidationError;
};
struct LawrencePairingError : ValidationError {
  using ValidationError::ValidationError;
};
struct NonGenericTheta : ValidationError {
  using ValidationError::ValidationError;
};

// Well-formed input, but the requested computation is not defined for it.
// CLI exit code 3.
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SameChamber : ComputationError {
  using ComputationError::ComputationError;
};
struct NotAdjacent : ComputationError {
  using ComputationError::ComputationError;
};
struct NotSurjective : ComputationError {
  using ComputationError::ComputationError;
};
struct DegenerateCrossing : ComputationError {
  using ComputationError::ComputationError;
};
struct OrbifoldUnsupported : ComputationError {
  using ComputationError::ComputationError;
};
struct SectorMismatch : ComputationError {
  using ComputationError::ComputationError;
};
struct SideMismatch : ComputationError {
  using ComputationError::ComputationError;
};

}  // namespace wallcross
