#pragma once

#include <stdexcept>
#include <string>

namespace twonil {

/// Operands live on different n.
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or subword expansion would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain (e.g. a
/// non-upper-triangular label where only upper ones are meaningful).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace twonil
