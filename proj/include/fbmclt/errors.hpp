#pragma once

#include <stdexcept>
#include <string>

namespace fbmclt {

// Bad user input: unparseable config, missing keys, invalid values. CLI exit 1.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameters outside the validity regime of the requested quantity,
// with a message naming the violated inequality. CLI exit 2.
class regime_error : public std::runtime_error {
 public:
  explicit regime_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal numerical failure (non-convergence, factorization breakdown).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fbmclt
