#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qweyl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleAtEvaluationPoint : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DescriptorMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidContext : public Error {
 public:
  using Error::Error;
};

/// Parse failure with the byte offset and the set of tokens that would have been accepted.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& what)
      : Error(what), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace qweyl
