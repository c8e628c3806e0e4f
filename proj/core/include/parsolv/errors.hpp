// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <stdexcept>
#include <string>

namespace parsolv {

/// Base class for all parsolv errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-range user input (bad Cartan matrix, bad subset,
/// unreadable realization file, ...). Maps to CLI exit code 2.
class InputError : public Error {
 public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

/// An internal consistency check failed while building a value that is
/// supposed to be correct by construction (Jacobi violation, singular
/// dual-basis system, ...). Never returned silently.
class ConstructionError : public Error {
 public:
  explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

/// A documented operation precondition does not hold (non-nilpotent input
/// to the nilpotent Ricci formula, non-Iwasawa input to the Wolter route).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

}  // namespace parsolv
