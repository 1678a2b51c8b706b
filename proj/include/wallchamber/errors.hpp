#pragma once

#include <stdexcept>
#include <string>

namespace wallchamber {

// Error classes map one-to-one onto the CLI exit codes (2, 3, 4).

/// Malformed textual input: quiver files, vector literals, flags.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A well-formed request that violates an operation's precondition
/// (zero dimension vector, length mismatch, non-Dynkin quiver, ...).
class PreconditionError : public std::runtime_error {
  public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A consistency check inside the engine failed. Never expected on valid input.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace wallchamber
