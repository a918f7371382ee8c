#pragma once

#include <stdexcept>
#include <string>

namespace cliquesim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid serialized document (state, config).
struct ParseError : Error {
  using Error::Error;
};

/// Invalid experiment configuration (unknown kind, bad predicate name, ...).
struct ConfigError : Error {
  using Error::Error;
};

/// Invalid churn event (duplicate join id, leave of an unknown node, ...).
struct EventError : Error {
  using Error::Error;
};

}  // namespace cliquesim
