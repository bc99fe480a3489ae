#pragma once

#include <stdexcept>
#include <string>

namespace arcdiag {

// Values match the arcdiag_status codes of the C API.
enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  OutOfRange = 3,
  ResourceLimit = 4,
  InvalidDiagram = 5,
  WrongFamily = 6,
  WrongParity = 7,
  NotSymmetric = 8,
  Io = 9,
  Precision = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arcdiag
