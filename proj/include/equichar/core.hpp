#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace equichar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

// Element, point and generator indices are dense 32-bit integers.
using Index = std::uint32_t;

/// Caller passed something that does not satisfy an operation's precondition.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration budget would be exceeded.
class ResourceError : public std::runtime_error {
public:
  ResourceError(const std::string& what, std::uint64_t size, std::uint64_t limit)
      : std::runtime_error(what + ": size " + std::to_string(size) + " exceeds limit " +
                           std::to_string(limit)),
        size_(size), limit_(limit) {}

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t limit() const noexcept { return limit_; }

private:
  std::uint64_t size_;
  std::uint64_t limit_;
};

/// An internal consistency check failed. Never expected on valid inputs.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct Budget {
  std::uint64_t max_subgroup_lattice_order = 1024;
  std::uint64_t max_subgroup_count = 50000;
  std::uint64_t max_points = 1000000;
  std::uint64_t max_wreath_order_k1 = 400000;
  std::uint64_t max_wreath_order_k2 = 50000;
  std::uint64_t max_tuple_classes = 2000000;
  std::uint64_t max_configurations = 2000000;
};

inline const Budget& default_budget() {
  static const Budget b{};
  return b;
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw UsageError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InvariantViolation(msg);
}

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace equichar
