#pragma once

#include <stdexcept>
#include <string>

namespace hallforge {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: cycle notation, group files, map expressions.
class ParseError : public Error {
public:
  using Error::Error;
};

// Element enumeration would exceed the configured bound.
class OrderTooLarge : public Error {
public:
  using Error::Error;
};

// A construction would need a permutation domain larger than the degree cap.
class DegreeCapExceeded : public Error {
public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
public:
  using Error::Error;
};

class SubgroupNotInvariant : public Error {
public:
  using Error::Error;
};

// A precondition on the input maps does not hold (commutation, power, invariance).
class HypothesisFailed : public Error {
public:
  using Error::Error;
};

// An embedding fails to intertwine the given automorphism tuples.
class NotEquivariant : public Error {
public:
  using Error::Error;
};

class DepthTooLarge : public Error {
public:
  using Error::Error;
};

} // namespace hallforge
