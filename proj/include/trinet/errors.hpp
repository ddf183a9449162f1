#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trinet {

// Syntax failure in a rule, option table, or graph file; carries the offset
// (character position or line number, depending on the parser) where it
// occurred.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class BadTable : public std::runtime_error {
 public:
  explicit BadTable(const std::string& msg) : std::runtime_error(msg) {}
};

class NotATriangle : public std::runtime_error {
 public:
  explicit NotATriangle(const std::string& msg) : std::runtime_error(msg) {}
};

class DegenerateExternal : public std::runtime_error {
 public:
  explicit DegenerateExternal(const std::string& msg) : std::runtime_error(msg) {}
};

class ColorMismatch : public std::runtime_error {
 public:
  explicit ColorMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

class SameEdge : public std::runtime_error {
 public:
  explicit SameEdge(const std::string& msg) : std::runtime_error(msg) {}
};

class WouldSelfLoop : public std::runtime_error {
 public:
  explicit WouldSelfLoop(const std::string& msg) : std::runtime_error(msg) {}
};

class TooLarge : public std::runtime_error {
 public:
  explicit TooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

class TooSmall : public std::runtime_error {
 public:
  explicit TooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace trinet
