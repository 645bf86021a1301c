#pragma once

#include <stdexcept>
#include <string>

namespace rootspace {

/// Shape, family or name mismatch in a call. Always a caller bug.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical identity that must hold exactly did not.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Eigenvalue search did not account for the full dimension.
class SpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weyl enumeration refused because the group is larger than the cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace rootspace
