#pragma once

#include <stdexcept>
#include <string>

namespace trilink {

// Malformed external input (braid-word text, sequence files).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition does not hold (non-pure braid, mismatched strand
// counts, index out of range, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class not_commuting_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

// A move does not match the word it is applied to.
class move_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Replayed endpoints do not match what the caller declared.
class endpoint_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace trilink
