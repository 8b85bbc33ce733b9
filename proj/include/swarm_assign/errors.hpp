#pragma once

#include <stdexcept>
#include <string>

namespace swarm_assign {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid configuration values (flag combos, config fields, generator knobs).
struct ConfigError : Error {
  using Error::Error;
};

/// Malformed instance/config text; message names the offending record.
struct ParseError : Error {
  using Error::Error;
};

/// Instance exceeds a hard enumeration guard.
struct SizeError : Error {
  using Error::Error;
};

/// A protocol broke the synchronous-round rules (bad recipient, divergence).
struct ProtocolError : Error {
  using Error::Error;
};

/// Operation mathematically undefined on this input (e.g. min over no targets).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace swarm_assign
