#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqds {

// Nodes are dense integer ids in [0, n). kNone marks a missing link
// (absent parent, ungrouped node, null list pointer, ...).
using NodeId = std::int32_t;
inline constexpr NodeId kNone = -1;

// Colors are opaque 64-bit labels.
using Color = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedTree : public Error {
 public:
  using Error::Error;
};

class InvalidH : public Error {
 public:
  using Error::Error;
};

class DisjointnessViolation : public Error {
 public:
  using Error::Error;
};

class NotAdjacent : public Error {
 public:
  using Error::Error;
};

class NotEndpoint : public Error {
 public:
  using Error::Error;
};

class SameList : public Error {
 public:
  using Error::Error;
};

// Input-file problem, carries the 1-based line it was found on.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Every structure counts "elementary steps": one per parent/link
// dereference, per hash-table operation and per identifier-chain hop.
// The asymptotic claims are tested as concrete bounds on these counters.
using StepCount = std::uint64_t;

}  // namespace sqds
