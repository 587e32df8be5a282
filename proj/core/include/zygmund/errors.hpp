#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zygmund {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Cantor-type constructions need pieces*ratio <= 1.
class OverlappingPieces : public Error {
 public:
  using Error::Error;
};

// An operation received a kernel of the wrong kind (mollifier vs wavelet).
class KindError : public Error {
 public:
  using Error::Error;
};

// A grid is too coarse to resolve the requested stencil or construction.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

// A kernel construction failed (e.g. singular moment system).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// A runtime contract was violated (e.g. non-periodizable input to a DFT op).
class ContractError : public Error {
 public:
  using Error::Error;
};

// A scaling function failed admissibility requirements.
class ScalingError : public Error {
 public:
  using Error::Error;
};

// Requested scales fall below the resolution floor of the signal grid.
// Carries the rejected scales and the admissible prefix of the request.
class ScaleFloorError : public Error {
 public:
  ScaleFloorError(const std::string& msg, std::vector<double> offending,
                  std::vector<double> admissible)
      : Error(msg),
        offending_(std::move(offending)),
        admissible_(std::move(admissible)) {}

  const std::vector<double>& offending_scales() const { return offending_; }
  const std::vector<double>& admissible_prefix() const { return admissible_; }

 private:
  std::vector<double> offending_;
  std::vector<double> admissible_;
};

}  // namespace zygmund
