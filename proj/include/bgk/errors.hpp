//========================================================================================
// bgk1d: conservative semi-Lagrangian solver for the 1D BGK kinetic equation
// Copyright(C) 2026 bgk1d contributors
// Licensed under the 3-clause BSD License, see LICENSE file for details
//========================================================================================
//! \file errors.hpp
//  \brief error taxonomy shared by all modules
//
// Three families map onto the CLI exit codes: ConfigError -> 2, NumericalError -> 3,
// IoError -> 4. Numerical failures always carry enough context (cell index, step,
// iteration count) to locate the offending solve.

#ifndef BGK_ERRORS_HPP_
#define BGK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bgk {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

class UnknownKeyError : public ConfigError {
 public:
  explicit UnknownKeyError(const std::string &key)
      : ConfigError("unknown config key: " + key) {}
};

class TypeMismatchError : public ConfigError {
 public:
  TypeMismatchError(const std::string &key, const std::string &detail)
      : ConfigError("bad value for key '" + key + "': " + detail) {}
};

class PairingViolationError : public ConfigError {
 public:
  explicit PairingViolationError(const std::string &msg) : ConfigError(msg) {}
};

class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string &msg) : std::runtime_error(msg) {}
};

class NewtonDivergedError : public NumericalError {
 public:
  explicit NewtonDivergedError(const std::string &msg) : NumericalError(msg) {}
};

class SingularJacobianError : public NumericalError {
 public:
  explicit SingularJacobianError(const std::string &msg) : NumericalError(msg) {}
};

class RankDeficientGridError : public NumericalError {
 public:
  explicit RankDeficientGridError(const std::string &msg) : NumericalError(msg) {}
};

class NonpositiveStateError : public NumericalError {
 public:
  explicit NonpositiveStateError(const std::string &msg) : NumericalError(msg) {}
};

class NonFiniteValueError : public NumericalError {
 public:
  explicit NonFiniteValueError(const std::string &msg) : NumericalError(msg) {}
};

class StencilOutOfDomainError : public NumericalError {
 public:
  explicit StencilOutOfDomainError(const std::string &msg) : NumericalError(msg) {}
};

class VacuumFormedError : public NumericalError {
 public:
  explicit VacuumFormedError(const std::string &msg) : NumericalError(msg) {}
};

class DegenerateGammaError : public NumericalError {
 public:
  explicit DegenerateGammaError(const std::string &msg) : NumericalError(msg) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace bgk

#endif  // BGK_ERRORS_HPP_
