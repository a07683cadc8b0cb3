#pragma once

#include <stdexcept>
#include <string>

namespace za {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// make_group rejected its order list (empty, an order < 2, or overflow).
struct InvalidGroupError : Error {
  using Error::Error;
};

// Bad user-supplied parameters (Kasami variants, CLI values, domains).
struct ParameterError : Error {
  using Error::Error;
};

// A code has a weight-1 codeword; its coset graph would carry loops.
struct DegenerateCodeError : Error {
  using Error::Error;
};

// A structural invariant failed (not bipartite, disconnected, bad colouring,
// parity not constant on cosets, ...).
struct StructureError : Error {
  using Error::Error;
};

// A coset enumeration or search exceeded a hard size cap.
struct SizeError : Error {
  using Error::Error;
};

// Distance-regularity verification failed; (u, v) is the witness pair.
struct VerificationError : Error {
  VerificationError(const std::string& what, int u_, int v_)
      : Error(what), u(u_), v(v_) {}
  int u = -1;
  int v = -1;
};

// The supplied group action is not by automorphisms / not regular.
struct ActionError : Error {
  using Error::Error;
};

// An intersection array is not realizable (non-integral or non-positive
// shell sizes, ordering violations, theta1^2 <= 0).
struct InfeasibleArrayError : Error {
  using Error::Error;
};

}  // namespace za
