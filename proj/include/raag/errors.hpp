#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raag {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed; `offset` is the byte offset of `token`.
struct ParseError : Error {
  ParseError(const std::string& what, std::string token, std::size_t offset)
      : Error(what + " (token \"" + token + "\" at byte " + std::to_string(offset) + ")"),
        token(std::move(token)),
        offset(offset) {}
  std::string token;
  std::size_t offset;
};

struct UnknownVertex : Error {
  using Error::Error;
};

struct GraphMismatch : Error {
  using Error::Error;
};

struct GroupMismatch : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

/// The candidate permutation maps an edge of the defining graph to a non-edge.
struct AdjacencyViolation : Error {
  using Error::Error;
};

struct NoSuchTile : Error {
  using Error::Error;
};

/// A tile removal was requested whose 0-beads are not at the stack ends.
/// Indicates a caller bug: genuine bottom/top tiles are never blocked.
struct BlockedTile : Error {
  using Error::Error;
};

struct NotCyclicallyReduced : Error {
  using Error::Error;
};

struct NotNonSplit : Error {
  using Error::Error;
};

struct NotInversionAut : Error {
  using Error::Error;
};

/// A search exceeded its configured node budget (twisted class-set closure).
struct ResourceExhausted : Error {
  using Error::Error;
};

/// An enumeration exceeded its configured budget (growth tables).
struct BudgetExceeded : Error {
  using Error::Error;
};

/// An oracle was asked for inputs beyond its documented bounds.
struct BoundExceeded : Error {
  using Error::Error;
};

}  // namespace raag
