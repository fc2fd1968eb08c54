#pragma once

#include <stdexcept>
#include <string>

namespace bettimap {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the domain of a routine (bad parameter, singular fibre, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure could not certify its result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bettimap
