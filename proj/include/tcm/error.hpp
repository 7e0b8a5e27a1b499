#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidGroup : public Error {
public:
  using Error::Error;
};

class BaseMismatch : public Error {
public:
  BaseMismatch() : Error("operands live over different base groups") {}
};

class NotInvertible : public Error {
public:
  using Error::Error;
};

class NotAUnit : public Error {
public:
  NotAUnit() : Error("constant coefficient is not invertible") {}
};

class NotAdditive : public Error {
public:
  using Error::Error;
};

class AssociativityViolation : public Error {
public:
  AssociativityViolation(std::uint32_t x, std::uint32_t y, std::uint32_t z)
      : Error("associativity fails at (" + std::to_string(x) + ", " + std::to_string(y) + ", " +
              std::to_string(z) + ")"),
        x(x), y(y), z(z) {}
  std::uint32_t x, y, z;
};

class IdentityViolation : public Error {
public:
  explicit IdentityViolation(std::uint32_t x)
      : Error("identity law fails at " + std::to_string(x)), x(x) {}
  std::uint32_t x;
};

class InvalidMachine : public Error {
public:
  using Error::Error;
};

class DepthTooLarge : public Error {
public:
  using Error::Error;
};

class NegativePosition : public Error {
public:
  explicit NegativePosition(std::int64_t position)
      : Error("lamp at negative position " + std::to_string(position)), position(position) {}
  std::int64_t position;
};

class EmptyConfig : public Error {
public:
  EmptyConfig() : Error("lamp configuration is empty") {}
};

/// A requested enumeration exceeds its configured cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// Malformed external input (machine files, group specs, lamp literals).
class FormatError : public Error {
public:
  using Error::Error;
};

} // namespace tcm
