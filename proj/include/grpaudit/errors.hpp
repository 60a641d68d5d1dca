#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grpaudit {

/// Raised when an operation would exceed one of the configured caps.
/// Operations refuse instead of returning an approximate answer.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap, std::uint64_t limit, std::uint64_t requested)
      : std::runtime_error("too large: " + cap + " cap " + std::to_string(limit) +
                           " exceeded (requested " + std::to_string(requested) + ")"),
        cap_(std::move(cap)),
        limit_(limit),
        requested_(requested) {}

  const std::string& cap() const { return cap_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t requested() const { return requested_; }

 private:
  std::string cap_;
  std::uint64_t limit_;
  std::uint64_t requested_;
};

/// Malformed input text (generator files, manifests, configs).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on the mathematical input does not hold
/// (degree mismatch, non-normal subgroup, x not a p-element, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace grpaudit

namespace grpaudit {

/// A corpus manifest or generator file cannot be loaded, or a constructed
/// group fails its declared order.
class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace grpaudit
