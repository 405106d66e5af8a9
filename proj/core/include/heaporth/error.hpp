#pragma once

#include <stdexcept>
#include <string>

namespace heaporth {

enum class ErrorKind {
  kIndex,
  kDegree,
  kNonExpandable,
  kRange,
  kDegenerateSpec,
  kSingularHankel,
  kUnsupported,
  kDomain,
  kNotInImage,
  kBijectionViolation,
  kAccuracy,
  kNumeric,
  kParse,
  kEnumerationLimit,
};

const char* error_kind_name(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace heaporth
