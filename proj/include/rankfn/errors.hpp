#pragma once

#include <stdexcept>
#include <string>

namespace rankfn {

// Bad caller input: malformed structures, out-of-range vertices, wrong class.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (host size, type budget, enumeration size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Illegal move in the rank game; the message lists the legal moves.
class MoveError : public InputError {
 public:
  explicit MoveError(const std::string& what) : InputError(what) {}
};

}  // namespace rankfn
