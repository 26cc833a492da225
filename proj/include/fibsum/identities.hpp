#pragma once

/**
 * @file identities.hpp
 * @brief Sum-to-product factorisation of F_n +/- F_m, gcd laws for
 *        Fibonacci and Lucas numbers, and the doubling / tripling identities.
 */

#include "fibsum/core.hpp"
#include "fibsum/sequence.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <variant>

namespace fibsum {

// ---------------------------------------------------------------------------
// Sign/index normalisation

/// F_n + sign*F_m == outer * (F_high + inner*F_low) with high >= low >= 0.
struct NormalizedPair {
  std::int64_t high = 0;
  std::int64_t low = 0;
  Sign inner = Sign::plus;
  Sign outer = Sign::plus;
};

/// Rewrites a signed-index pair with the reflection F_{-k} = (-1)^{k+1} F_k.
inline NormalizedPair normalize_pair(Index n, Index m, Sign sign) {
  auto reflect = [](Index i) {
    return (i.negative() && i.magnitude() % 2 == 0) ? Sign::minus : Sign::plus;
  };
  auto a = static_cast<std::int64_t>(n.magnitude());
  auto b = static_cast<std::int64_t>(m.magnitude());
  Sign ca = reflect(n);
  Sign cb = sign * reflect(m);
  if (a < b) {
    std::swap(a, b);
    std::swap(ca, cb);
  }
  return {a, b, ca * cb, ca};
}

// ---------------------------------------------------------------------------
// Sum factorisation

enum class FactorBranch {
  same_class_mod4,     // n = m (mod 4)
  shifted_class_mod4,  // n = m + 2 (mod 4)
};

struct FactorizationResult {
  Sign epsilon = Sign::plus;
  std::int64_t N = 0;  // (n + epsilon*m) / 2
  std::int64_t M = 0;  // (n - epsilon*m) / 2
  FactorBranch branch = FactorBranch::same_class_mod4;
};

class ParityMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// F_n + sign*F_m = F_N * L_M for n >= m >= 0 of equal parity.
///
/// sign +: epsilon = +1 when n = m (mod 4), -1 when n = m + 2 (mod 4);
/// sign -: the two branches swap. The product is re-evaluated exactly and
/// compared before returning.
inline FactorizationResult sum_factorization(Index n, Index m, Sign sign) {
  if (m.negative() || n < m) {
    throw std::invalid_argument("sum_factorization requires n >= m >= 0; normalize first");
  }
  const std::int64_t nv = n.value();
  const std::int64_t mv = m.value();
  if ((nv - mv) % 2 != 0) {
    throw ParityMismatch("no sum factorisation for indices of opposite parity");
  }
  const bool same_class = (nv - mv) % 4 == 0;
  const Sign epsilon = (same_class == (sign == Sign::plus)) ? Sign::plus : Sign::minus;

  FactorizationResult result;
  result.epsilon = epsilon;
  result.N = (nv + as_int(epsilon) * mv) / 2;
  result.M = (nv - as_int(epsilon) * mv) / 2;
  result.branch = same_class ? FactorBranch::same_class_mod4 : FactorBranch::shifted_class_mod4;

  const WideInt lhs = fib(n) + as_int(sign) * fib(m);
  if (fib(result.N) * lucas(result.M) != lhs) {
    throw std::logic_error("sum factorisation postcondition violated");
  }
  return result;
}

// ---------------------------------------------------------------------------
// gcd laws

enum class GcdKind { fib_fib, lucas_lucas, fib_lucas };

/// The gcd is one of {1, 2}, not pinned down further.
struct UnitOrTwo {
  static constexpr std::array<int, 2> candidates{1, 2};
  friend bool operator==(UnitOrTwo, UnitOrTwo) = default;
};

struct GcdPrediction {
  GcdKind kind = GcdKind::fib_fib;
  std::variant<WideInt, UnitOrTwo> value;

  [[nodiscard]] bool determinate() const { return std::holds_alternative<WideInt>(value); }
  /// Whether an observed gcd is consistent with the prediction.
  [[nodiscard]] bool admits(const WideInt& g) const {
    if (const auto* d = std::get_if<WideInt>(&value)) return *d == g;
    return g == 1 || g == 2;
  }
};

/// Predicted gcd of the pair (X_n, Y_m) selected by `kind`, n, m >= 1.
/// With d = gcd(n, m), a = v2(n), b = v2(m):
///   gcd(F_n, F_m) = F_d;
///   gcd(L_n, L_m) = L_d if a == b, else 1 or 2;
///   gcd(F_n, L_m) = L_d if a > b, else 1 or 2.
inline GcdPrediction gcd_predict(GcdKind kind, Index n, Index m) {
  if (n.value() < 1 || m.value() < 1) {
    throw std::invalid_argument("gcd_predict requires positive indices");
  }
  const auto nu = n.magnitude();
  const auto mu = m.magnitude();
  const auto d = static_cast<std::int64_t>(std::gcd(nu, mu));
  const int a = std::countr_zero(nu);
  const int b = std::countr_zero(mu);

  switch (kind) {
    case GcdKind::fib_fib:
      return {kind, fib(d)};
    case GcdKind::lucas_lucas:
      if (a == b) return {kind, lucas(d)};
      return {kind, UnitOrTwo{}};
    case GcdKind::fib_lucas:
      if (a > b) return {kind, lucas(d)};
      return {kind, UnitOrTwo{}};
  }
  throw std::invalid_argument("unknown gcd kind");
}

// ---------------------------------------------------------------------------
// Doubling and tripling

/// F_{2n} == F_n * L_n.
inline bool check_doubling(Index n) {
  return fib(2 * n.value()) == fib(n) * lucas(n);
}

/// L_{3n} == L_n * (L_n^2 - 3*(-1)^n).
inline bool check_tripling(Index n) {
  const WideInt ln = lucas(n);
  const int parity_sign = n.magnitude() % 2 == 0 ? 1 : -1;
  return lucas(3 * n.value()) == ln * (ln * ln - 3 * parity_sign);
}

}  // namespace fibsum
