#pragma once

#include <stdexcept>
#include <string>

namespace bei {

// Malformed input: bad vertex index, unparsable graph6 or edge list.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input exceeds a hard size limit (n > 64, too many cutset candidates, ...).
class SizeLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A block handed to check_setup is not a chain of cycles.
class NotAChain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computed record breaks one of the implications
// strongly unmixed => accessible, s2 => accessible, accessible => unmixed.
class TheoremContradiction : public std::logic_error {
 public:
  TheoremContradiction(const std::string& what, std::string graph6, std::string witness)
      : std::logic_error(what + " [graph6 " + graph6 + ", witness " + witness + "]"),
        graph6_(std::move(graph6)),
        witness_(std::move(witness)) {}

  const std::string& graph6() const { return graph6_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string graph6_;
  std::string witness_;
};

}  // namespace bei
