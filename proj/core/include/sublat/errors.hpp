#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sublat {

/// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ill-formed input data: tables out of range, order axioms broken, bad JSON.
struct ValidationError : Error {
  using Error::Error;
};

/// A configured size cap was exceeded (carriers, filter posets, search depth).
struct CapExceeded : Error {
  using Error::Error;
};

/// Some E_ab = {d in D : d /\ a <= b} has no greatest element.
struct NoMaximumError : Error {
  int a, b;
  NoMaximumError(int a_, int b_)
      : Error("E_ab has no maximum at a=" + std::to_string(a_) +
              ", b=" + std::to_string(b_)),
        a(a_),
        b(b_) {}
};

/// The relation a <= b iff a->b = top is not a partial order.
struct NotAnOrderError : Error {
  std::string reason;        // which law broke: reflexivity (I), antisymmetry (A), transitivity (B)
  std::vector<int> witness;  // elements exhibiting the failure
  NotAnOrderError(std::string reason_, std::vector<int> witness_)
      : Error("natural order fails " + reason_), reason(std::move(reason_)), witness(std::move(witness_)) {}
};

}  // namespace sublat
