#ifndef CPK_ERROR_HPP
#define CPK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpk {

/// Input violates a documented precondition (bad vertex, disconnected graph, ...).
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to run on a graph larger than its bound.
class size_limit_exceeded : public std::length_error {
 public:
  size_limit_exceeded(const std::string& what, int n, int limit)
      : std::length_error(what + ": n=" + std::to_string(n) +
                          " exceeds limit " + std::to_string(limit)),
        n_(n),
        limit_(limit) {}

  int n() const noexcept { return n_; }
  int limit() const noexcept { return limit_; }

 private:
  int n_;
  int limit_;
};

/// Malformed text input. `offset` is the byte (graph6) or line (text formats)
/// where the problem was detected.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cpk

#endif  // CPK_ERROR_HPP
