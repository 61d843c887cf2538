#pragma once

#include <stdexcept>
#include <string>

namespace tdim {

/// A search was asked to run on an instance larger than its configured cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or command input.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace tdim
