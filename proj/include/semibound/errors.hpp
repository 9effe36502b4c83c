// Copyright (c) 2026 The semibound authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace semibound {

/// Base class for all domain errors thrown by this library. The CLI maps
/// any Error to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -- construction errors ------------------------------------------------

struct EmptyGenerators : Error {
  EmptyGenerators() : Error("generator list is empty") {}
};

struct GcdNotOne : Error {
  long long gcd;
  explicit GcdNotOne(long long g)
      : Error("generators have gcd " + std::to_string(g) +
              " != 1, complement would be infinite"),
        gcd(g) {}
};

struct NotClosed : Error {
  long long a, b;
  NotClosed(long long a_, long long b_)
      : Error("set is not closed under addition: " + std::to_string(a_) +
              " + " + std::to_string(b_) + " = " + std::to_string(a_ + b_) +
              " is a gap"),
        a(a_),
        b(b_) {}
};

struct DegenerateInterval : Error {
  DegenerateInterval(long long i, long long j)
      : Error("interval [" + std::to_string(i) + "," + std::to_string(j) +
              "] generates multiples of " + std::to_string(i) +
              " only (infinite complement)") {}
};

struct EmptyCoefficients : Error {
  EmptyCoefficients() : Error("inductive coefficient lists are empty") {}
};

struct InvalidArgument : Error {
  using Error::Error;
};

// -- query errors -------------------------------------------------------

struct NotAMember : Error {
  long long value;
  explicit NotAMember(long long x)
      : Error(std::to_string(x) + " is a gap, enumeration index undefined"),
        value(x) {}
};

struct LatticeViolation : Error {
  using Error::Error;
};

struct NotAcute : Error {
  NotAcute() : Error("semigroup is not acute") {}
};

struct OrdinaryInput : Error {
  OrdinaryInput() : Error("semigroup is ordinary; the last nu-decrease does not exist") {}
};

struct EmptySet : Error {
  using Error::Error;
};

// -- reconstruction errors ----------------------------------------------

struct PrefixTooShort : Error {
  using Error::Error;
};

struct InconsistentSequence : Error {
  using Error::Error;
};

// -- enumeration / verification errors ----------------------------------

struct CeilingExceeded : Error {
  CeilingExceeded(long long requested, long long ceiling)
      : Error("genus bound " + std::to_string(requested) +
              " exceeds configured ceiling " + std::to_string(ceiling)) {}
};

// -- finite-field / code errors ------------------------------------------

struct UnsupportedDegree : Error {
  explicit UnsupportedDegree(int e)
      : Error("GF(2^" + std::to_string(e) + ") not supported (need 1 <= e <= 16)") {}
};

struct UnsupportedQ : Error {
  explicit UnsupportedQ(long long q)
      : Error("Hermitian curve over GF(q^2) supported for q in {2,4}, got q=" +
              std::to_string(q)) {}
};

struct UnsupportedParams : Error {
  UnsupportedParams(long long q, long long r)
      : Error("norm-trace curve supported for (q,r) in {(2,2),(2,3),(4,2)}, got (" +
              std::to_string(q) + "," + std::to_string(r) + ")") {}
};

struct IndexBeyondProfile : Error {
  using Error::Error;
};

}  // namespace semibound
