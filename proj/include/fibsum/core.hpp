#pragma once

/**
 * @file core.hpp
 * @brief Shared vocabulary types: the wide integer, checked sequence
 *        indices and the +/- sign of a two-term sum.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibsum {

/// Arbitrary-precision signed integer. Every value in the library is exact.
using WideInt = boost::multiprecision::cpp_int;

/// Signed sequence index with |value| <= 2^31 - 1.
///
/// Construction from an out-of-range integer throws std::out_of_range; the
/// conversion is implicit so that `fib(12)` reads naturally.
class Index {
 public:
  static constexpr std::int64_t max_magnitude = 2147483647;

  constexpr Index(std::int64_t value) : value_(value) {  // NOLINT(google-explicit-constructor)
    if (value > max_magnitude || value < -max_magnitude) {
      throw std::out_of_range("sequence index " + std::to_string(value) +
                              " outside [-(2^31-1), 2^31-1]");
    }
  }

  [[nodiscard]] constexpr std::int64_t value() const noexcept { return value_; }
  [[nodiscard]] constexpr std::uint64_t magnitude() const noexcept {
    return static_cast<std::uint64_t>(value_ < 0 ? -value_ : value_);
  }
  [[nodiscard]] constexpr bool negative() const noexcept { return value_ < 0; }

  constexpr auto operator<=>(const Index&) const = default;

 private:
  std::int64_t value_;
};

/// The sign joining the two terms of F_n +/- F_m.
enum class Sign : int { plus = 1, minus = -1 };

[[nodiscard]] constexpr int as_int(Sign s) noexcept { return static_cast<int>(s); }
[[nodiscard]] constexpr char as_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }
[[nodiscard]] constexpr Sign flip(Sign s) noexcept {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}
[[nodiscard]] constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::plus : Sign::minus;
}

/// Parses "+" or "-". Throws std::invalid_argument otherwise.
inline Sign parse_sign(const std::string& text) {
  if (text == "+") return Sign::plus;
  if (text == "-") return Sign::minus;
  throw std::invalid_argument("sign must be '+' or '-', got '" + text + "'");
}

/// Which of the two sequences a value is drawn from.
enum class SequenceKind { fib, lucas };

[[nodiscard]] constexpr const char* name_of(SequenceKind k) noexcept {
  return k == SequenceKind::fib ? "fib" : "lucas";
}

}  // namespace fibsum
