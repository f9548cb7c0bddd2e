#pragma once

#include <stdexcept>
#include <string>

namespace ccsym {

/// Broad failure category, used by the command-line front end to pick an
/// exit code.
enum class ErrorKind {
  Input,      // bad configuration, group, or request
  Numerical,  // invariance, clustering, or convergence failure
  Io,         // unreadable input or unwritable output
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define CCSYM_DEFINE_ERROR(Name, Kind)                          \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what)                      \
        : Error(ErrorKind::Kind, std::string(#Name ": ") + what) {} \
  };

// Configurations
CCSYM_DEFINE_ERROR(CollisionError, Input)
CCSYM_DEFINE_ERROR(NonPositiveMass, Input)
CCSYM_DEFINE_ERROR(NotCentered, Input)
CCSYM_DEFINE_ERROR(NotCentral, Input)

// Groups and representations
CCSYM_DEFINE_ERROR(InvalidOrder, Input)
CCSYM_DEFINE_ERROR(InvalidGroup, Input)
CCSYM_DEFINE_ERROR(UnsupportedGroup, Input)
CCSYM_DEFINE_ERROR(InvalidAction, Input)
CCSYM_DEFINE_ERROR(NotSymmetric, Input)
CCSYM_DEFINE_ERROR(AmbiguousMatch, Input)
CCSYM_DEFINE_ERROR(DimensionMismatch, Input)
CCSYM_DEFINE_ERROR(NonIntegerMultiplicity, Numerical)
CCSYM_DEFINE_ERROR(NotClassFunction, Numerical)

// Spectral analysis
CCSYM_DEFINE_ERROR(NotInvariant, Numerical)
CCSYM_DEFINE_ERROR(ClusteringFailure, Numerical)
CCSYM_DEFINE_ERROR(UnderdeterminedSystem, Numerical)
CCSYM_DEFINE_ERROR(ConvergenceFailure, Numerical)

// Stability
CCSYM_DEFINE_ERROR(MixedMassOrbit, Numerical)
CCSYM_DEFINE_ERROR(AsymmetricSpectrum, Numerical)

// Front end
CCSYM_DEFINE_ERROR(InputError, Input)
CCSYM_DEFINE_ERROR(IoError, Io)

#undef CCSYM_DEFINE_ERROR

}  // namespace ccsym
