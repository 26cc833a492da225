#pragma once

/**
 * @file sequence.hpp
 * @brief Exact and modular Fibonacci / Lucas numbers at signed indices.
 *
 * One fast-doubling kernel serves both the exact and the modular paths; it
 * is parameterised by a small "ring" policy supplying add/sub/mul. From the
 * pair (F_k, F_{k+1}) the doubling step is
 *
 *   F_{2k}   = F_k (2 F_{k+1} - F_k)
 *   F_{2k+1} = F_k^2 + F_{k+1}^2
 *
 * and L_k = 2 F_{k+1} - F_k. Negative indices are handled by a reflection
 * layer above the nonnegative kernel:
 *
 *   F_{-k} = (-1)^{k+1} F_k,   L_{-k} = (-1)^k L_k.
 */

#include "fibsum/core.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fibsum {

namespace detail {

struct ExactRing {
  using value_type = WideInt;
  [[nodiscard]] value_type zero() const { return 0; }
  [[nodiscard]] value_type one() const { return 1; }
  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
  [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
};

// Residues in [0, modulus) for moduli below 2^63; products go through 128 bits.
struct U64ModRing {
  using value_type = std::uint64_t;
  std::uint64_t modulus;

  [[nodiscard]] value_type zero() const { return 0; }
  [[nodiscard]] value_type one() const { return 1 % modulus; }
  [[nodiscard]] value_type add(value_type a, value_type b) const {
    const value_type s = a + b;
    return s >= modulus ? s - modulus : s;
  }
  [[nodiscard]] value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : a + (modulus - b);
  }
  [[nodiscard]] value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % modulus);
  }
  [[nodiscard]] value_type neg(value_type a) const { return a == 0 ? 0 : modulus - a; }
};

struct WideModRing {
  using value_type = WideInt;
  WideInt modulus;

  [[nodiscard]] value_type zero() const { return 0; }
  [[nodiscard]] value_type one() const { return 1; }
  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const {
    value_type s = a + b;
    if (s >= modulus) s -= modulus;
    return s;
  }
  [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const {
    return a >= b ? value_type(a - b) : value_type(a + modulus - b);
  }
  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const {
    return a * b % modulus;
  }
  [[nodiscard]] value_type neg(const value_type& a) const {
    return a == 0 ? value_type(0) : value_type(modulus - a);
  }
};

/// (F_k, F_{k+1}) in the given ring, k >= 0.
template <class Ring>
std::pair<typename Ring::value_type, typename Ring::value_type> doubling_pair(std::uint64_t k,
                                                                             const Ring& ring) {
  auto a = ring.zero();  // F_j
  auto b = ring.one();   // F_{j+1}
  for (int bit = std::bit_width(k) - 1; bit >= 0; --bit) {
    auto even = ring.mul(a, ring.sub(ring.add(b, b), a));
    auto odd = ring.add(ring.mul(a, a), ring.mul(b, b));
    if ((k >> bit) & 1U) {
      a = odd;
      b = ring.add(even, odd);
    } else {
      a = std::move(even);
      b = std::move(odd);
    }
  }
  return {std::move(a), std::move(b)};
}

template <class Ring>
typename Ring::value_type fib_in(Index n, const Ring& ring) {
  auto value = doubling_pair(n.magnitude(), ring).first;
  if (n.negative() && n.magnitude() % 2 == 0) return ring.neg(value);
  return value;
}

template <class Ring>
typename Ring::value_type lucas_in(Index n, const Ring& ring) {
  auto [f, f_next] = doubling_pair(n.magnitude(), ring);
  auto value = ring.sub(ring.add(f_next, f_next), f);
  if (n.negative() && n.magnitude() % 2 == 1) return ring.neg(value);
  return value;
}

inline void require_modulus(const WideInt& modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
}

inline constexpr std::uint64_t narrow_modulus_limit = std::uint64_t{1} << 63;

}  // namespace detail

/// Returns (F_n, F_{n+1}) for n >= 0.
inline std::pair<WideInt, WideInt> fib_pair(Index n) {
  if (n.negative()) throw std::invalid_argument("fib_pair requires a nonnegative index");
  return detail::doubling_pair(n.magnitude(), detail::ExactRing{});
}

/// Exact Fibonacci number at a signed index.
inline WideInt fib(Index n) { return detail::fib_in(n, detail::ExactRing{}); }

/// Exact Lucas number at a signed index.
inline WideInt lucas(Index n) { return detail::lucas_in(n, detail::ExactRing{}); }

/// Least nonnegative residue of F_n modulo a machine-word modulus (>= 2, < 2^63).
inline std::uint64_t fib_mod(Index n, std::uint64_t modulus) {
  if (modulus < 2 || modulus >= detail::narrow_modulus_limit) {
    throw std::invalid_argument("machine-word modulus must lie in [2, 2^63)");
  }
  return detail::fib_in(n, detail::U64ModRing{modulus});
}

inline std::uint64_t lucas_mod(Index n, std::uint64_t modulus) {
  if (modulus < 2 || modulus >= detail::narrow_modulus_limit) {
    throw std::invalid_argument("machine-word modulus must lie in [2, 2^63)");
  }
  return detail::lucas_in(n, detail::U64ModRing{modulus});
}

/// Least nonnegative residue of F_n modulo an arbitrary modulus >= 2.
/// The full Fibonacci number is never materialised.
inline WideInt fib_mod(Index n, const WideInt& modulus) {
  detail::require_modulus(modulus);
  if (modulus < detail::narrow_modulus_limit) {
    return fib_mod(n, modulus.convert_to<std::uint64_t>());
  }
  return detail::fib_in(n, detail::WideModRing{modulus});
}

inline WideInt lucas_mod(Index n, const WideInt& modulus) {
  detail::require_modulus(modulus);
  if (modulus < detail::narrow_modulus_limit) {
    return lucas_mod(n, modulus.convert_to<std::uint64_t>());
  }
  return detail::lucas_in(n, detail::WideModRing{modulus});
}

/// F_0 .. F_count-1 built by the two-term recurrence, for callers that scan
/// consecutive indices.
inline std::vector<WideInt> fib_table(std::size_t count) {
  std::vector<WideInt> table;
  table.reserve(count);
  WideInt a = 0;
  WideInt b = 1;
  for (std::size_t i = 0; i < count; ++i) {
    table.push_back(a);
    WideInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return table;
}

}  // namespace fibsum
