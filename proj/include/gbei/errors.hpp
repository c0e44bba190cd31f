#pragma once

#include <stdexcept>
#include <string>

namespace gbei {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured desk-scale cap (vertex count, generator count, subset scan
// size, ...) would be exceeded. CLI exit code 3.
struct CapExceeded : Error {
  using Error::Error;
};

// A wall-clock limit was hit (Groebner basis runs). CLI exit code 3.
struct TimeoutError : Error {
  using Error::Error;
};

struct DisconnectedInput : Error {
  using Error::Error;
};

struct CompleteInput : Error {
  using Error::Error;
};

struct NotConnected : Error {
  using Error::Error;
};

struct NotACutset : Error {
  using Error::Error;
};

struct NotSquarefree : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// An internal theorem-level consistency check failed; always a bug worth
// surfacing loudly. CLI exit code 4.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace gbei
