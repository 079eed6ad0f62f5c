#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace catprop {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& found);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Modal (Type 5) forms are recognized but never compiled.
class UnsupportedForm : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class DuplicateCommitment : public Error {
 public:
  using Error::Error;
};

class NotRepresentable : public Error {
 public:
  using Error::Error;
};

class Unclassifiable : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyUniverse : public Error {
 public:
  using Error::Error;
};

class NotCellConstant : public Error {
 public:
  using Error::Error;
};

/// An anchor formula does not pick out exactly one partition cell.
class AnchorMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace catprop
