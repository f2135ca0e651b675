#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kco {

// Index of a point inside a Dataset. Valid ids are [0, n).
using PointId = std::uint32_t;

inline constexpr PointId kNoPoint = static_cast<PointId>(-1);

// A caller broke an operation's preconditions (bad id, bad parameter range).
class contract_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation refused to run past its resource guard (e.g. C(n,k) too large).
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail_contract(const std::string& msg) {
  throw contract_error(msg);
}

[[noreturn]] inline void fail_guard(const std::string& msg) {
  throw guard_error(msg);
}

}  // namespace kco

#define KCO_REQUIRE(cond, msg)            \
  do {                                    \
    if (!(cond)) ::kco::fail_contract(msg); \
  } while (0)
