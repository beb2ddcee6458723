#pragma once

#include <stdexcept>
#include <string>

namespace gapspec {

// Input lies outside an operation's mathematical domain (wrong branch,
// edge-guard violation, pole at omega_perp, malformed string spacing, ...).
// Mapped to CLI exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested physical regime does not support the state (carrying
// rapidity of the wrong sign, omega12 outside the gap, composite-soliton
// regimes, ...).  Mapped to CLI exit code 2.
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested state needs frequencies outside the allowed window (l beyond
// the supported bound, corrections leaving the trusted radius, ...).
class WindowError : public RegimeError {
 public:
  using RegimeError::RegimeError;
};

// A bracketed search found no root in the edge-guarded window.
class NoRootError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iteration failed to reach its tolerance; the message carries the last
// iterate and residuals.  Mapped to CLI exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration file or flags.  Mapped to CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gapspec
