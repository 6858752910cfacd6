#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ddg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation on a caller-supplied argument.
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// Malformed input file; `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// A distance query hit a vertex that is not reachable.
class DisconnectedError : public Error {
public:
  explicit DisconnectedError(std::uint32_t witness)
      : Error("graph is disconnected (infinite diameter): vertex " +
              std::to_string(witness) + " is unreached"),
        witness_(witness) {}
  std::uint32_t witness() const { return witness_; }

private:
  std::uint32_t witness_;
};

class GroupError : public Error {
public:
  using Error::Error;
};

/// Requested graph is larger than the explicit-build cap.
class SizeError : public Error {
public:
  using Error::Error;
};

/// Connection set generates a proper subgroup.
class GenerationError : public Error {
public:
  GenerationError(std::uint64_t reached, std::uint64_t order)
      : Error("generators do not generate the group: reached " +
              std::to_string(reached) + " of " + std::to_string(order)),
        reached_(reached) {}
  std::uint64_t reached() const { return reached_; }

private:
  std::uint64_t reached_;
};

class PairingError : public Error {
public:
  using Error::Error;
};

class ConstructionError : public Error {
public:
  using Error::Error;
};

} // namespace ddg
