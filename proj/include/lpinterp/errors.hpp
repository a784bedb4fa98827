#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpinterp {

// Malformed input: bad text, unknown labels, violated construction invariants.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// API misuse: an element from another lattice, arity mismatch, etc.
class UsageError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// A configured enumeration cap would be exceeded.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}
  std::uint64_t required() const noexcept { return required_; }

private:
  std::uint64_t required_;
};

}  // namespace lpinterp
