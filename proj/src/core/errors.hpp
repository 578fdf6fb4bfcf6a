// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <stdexcept>
#include <string>

namespace mco {

// Error taxonomy mirrored one-to-one by the C API status codes, so the
// translation layer can classify by type instead of message parsing.

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed argument: bad profile length, non-positive physical quantity,
// unknown enum string, unknown config key.
class InvalidArgumentError : public Error {
public:
  using Error::Error;
};

// Index out of range (user id, slot index, row/column access).
class OutOfRangeError : public Error {
public:
  using Error::Error;
};

// Scenario fails the homogeneity check required by closed-form routines.
class NotHomogeneousError : public Error {
public:
  using Error::Error;
};

// Problem size exceeds a documented cap (exhaustive enumeration, exact
// optimum scan).
class CapacityError : public Error {
public:
  using Error::Error;
};

// Input text is not valid JSON or misses required fields.
class ParseError : public Error {
public:
  using Error::Error;
};

// Filesystem failure while reading or writing artifacts.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace mco
