#ifndef CIRCFOREST_ERRORS_HPP
#define CIRCFOREST_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace circforest {

// Error taxonomy mirrors the CLI exit codes: bad input (2), numeric
// failure such as exhausted precision or stalled factorization (3),
// and internal inconsistencies that indicate a library bug (4).

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace circforest

#endif
