#pragma once

#include <stdexcept>
#include <string>

namespace fedstdp {

// Error taxonomy. Every throwing operation documents which of these it uses;
// absence of a value (e.g. a missing class block) is modelled as a normal
// return, never as an exception.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error { using Error::Error; };     // invalid configuration values
struct ArgumentError : Error { using Error::Error; };   // bad call arguments (empty data, k > n, ...)
struct ShapeError : Error { using Error::Error; };      // dimension mismatches
struct FormatError : Error { using Error::Error; };     // malformed file or wire contents
struct IoError : Error { using Error::Error; };         // filesystem failures, short reads
struct PartitionError : Error { using Error::Error; };  // infeasible partition plans
struct MergeError : Error { using Error::Error; };      // incompatible weight blocks
struct OwnershipError : Error { using Error::Error; };  // class with no known owner
struct ProtocolError : Error { using Error::Error; };   // framing / message violations

}  // namespace fedstdp
