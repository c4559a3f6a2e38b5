#pragma once

#include <stdexcept>
#include <string>

namespace qhb {

// Base class for every failure this library reports. Messages name the
// violated precondition or invariant so a CLI can surface them verbatim.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A point lies outside (or too close to the boundary of) the requested chart.
class ChartExcluded : public Error {
public:
  using Error::Error;
};

// Two fiber states were combined that live over different charts or classes.
class ChartMismatch : public Error {
public:
  using Error::Error;
};

class UnsupportedPicardClass : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class QuadratureFailure : public Error {
public:
  using Error::Error;
};

class StepFailure : public Error {
public:
  using Error::Error;
};

class PathDiscontinuous : public Error {
public:
  using Error::Error;
};

}  // namespace qhb
