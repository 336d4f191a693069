#pragma once

#include <stdexcept>
#include <string>

namespace polymat {

/// Malformed argument, file, or precondition violation. CLI exit code 2.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented size limit was exceeded. CLI exit code 3.
class size_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation outside the supported fragment (e.g. lifting a non-prime base field).
class unsupported_error : public input_error {
 public:
  using input_error::input_error;
};

/// A checked mathematical postcondition failed to hold on concrete data.
/// CLI exit code 1.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustiveness assumption broken; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polymat
