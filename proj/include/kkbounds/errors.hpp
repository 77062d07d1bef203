#pragma once

#include <stdexcept>
#include <string>

namespace kkbounds {

// Invalid parameters (dimension, degree, index ranges).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Malformed textual input: rationals, JSON documents, potential specs.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAntipodalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverlapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfiniteEnergyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact identity that must hold by construction failed; this is a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kkbounds
