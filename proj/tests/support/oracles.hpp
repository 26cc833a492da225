#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's fast paths: sequences come from the plain two-term
// recurrence (run backwards for negative indices), perfect powers from an
// exhaustive table, and gcds from Euclid on the wide values.

#include "fibsum/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace fibsum::oracle {

/// Values X_{-bound} .. X_{bound} of the recurrence X_{k+2} = X_{k+1} + X_k
/// seeded with X_0, X_1 (bound >= 1), stored at offset `bound`.
class SignedSequence {
 public:
  SignedSequence(WideInt x0, WideInt x1, std::int64_t bound) : bound_(bound) {
    values_.resize(static_cast<std::size_t>(2 * bound + 1));
    values_[at(0)] = std::move(x0);
    values_[at(1)] = std::move(x1);
    for (std::int64_t k = 2; k <= bound; ++k) values_[at(k)] = values_[at(k - 1)] + values_[at(k - 2)];
    for (std::int64_t k = -1; k >= -bound; --k) values_[at(k)] = values_[at(k + 2)] - values_[at(k + 1)];
  }

  [[nodiscard]] const WideInt& operator[](std::int64_t k) const { return values_[at(k)]; }
  [[nodiscard]] std::int64_t bound() const { return bound_; }

 private:
  [[nodiscard]] std::size_t at(std::int64_t k) const { return static_cast<std::size_t>(k + bound_); }

  std::int64_t bound_;
  std::vector<WideInt> values_;
};

inline SignedSequence fibonacci(std::int64_t bound) { return {0, 1, bound}; }
inline SignedSequence lucas(std::int64_t bound) { return {2, 1, bound}; }

/// Maximal exponent of every x <= limit by enumerating y^e with
/// 2 <= y <= max_base, 2 <= e <= max_exp. Unlisted x have exponent 1.
class SmallPowerTable {
 public:
  SmallPowerTable(std::uint64_t limit, std::uint64_t max_base, unsigned max_exp)
      : exponent_(limit + 1, 1), base_(limit + 1) {
    for (std::uint64_t x = 0; x <= limit; ++x) base_[x] = x;
    for (std::uint64_t y = 2; y <= max_base; ++y) {
      std::uint64_t v = y;
      for (unsigned e = 2; e <= max_exp; ++e) {
        if (v > limit / y) break;
        v *= y;
        if (e > exponent_[v]) {
          exponent_[v] = e;
          base_[v] = y;
        }
      }
    }
  }

  [[nodiscard]] unsigned exponent(std::uint64_t x) const { return exponent_[x]; }
  [[nodiscard]] std::uint64_t base(std::uint64_t x) const { return base_[x]; }
  [[nodiscard]] std::uint64_t limit() const { return exponent_.size() - 1; }

 private:
  std::vector<unsigned> exponent_;
  std::vector<std::uint64_t> base_;
};

inline WideInt euclid_gcd(WideInt a, WideInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    WideInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline WideInt ipow(WideInt base, unsigned e) {
  WideInt result = 1;
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

}  // namespace fibsum::oracle
