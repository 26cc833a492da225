#pragma once

/**
 * @file known_results.hpp
 * @brief Published classification sets that the finite scans are diffed
 *        against. Kept as plain data so verdicts compare against the
 *        literature rather than against other code paths.
 */

#include "fibsum/core.hpp"

#include <array>
#include <cstdint>
#include <utility>

namespace fibsum::known {

// X_n = 2^s * y^b (b >= 2, n >= 1)
inline constexpr std::array<std::int64_t, 5> fib_2_power_indices{1, 2, 3, 6, 12};
inline constexpr std::array<std::int64_t, 3> lucas_2_power_indices{1, 3, 6};
// X_n = 3^s * y^b (b >= 2, n >= 1)
inline constexpr std::array<std::int64_t, 5> fib_3_power_indices{1, 2, 4, 6, 12};
inline constexpr std::array<std::int64_t, 3> lucas_3_power_indices{1, 2, 3};

// (v, u) with u | v, u < v and F_v / F_u a square.
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 4> fib_square_ratios{
    {{12, 1}, {12, 2}, {2, 1}, {6, 3}}};
// (v, u) with u | v, v / u odd, u < v and L_v / L_u a square.
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 1> lucas_square_ratios{
    {{3, 1}}};

// (N, M) with F_N * L_M = 2^s * y^p, p >= 2.
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 19> fib_lucas_power_pairs{{
    {1, 1}, {1, 3}, {1, 6}, {2, 1}, {2, 3}, {2, 6}, {3, 1}, {3, 3}, {3, 6}, {4, 2},
    {4, 6}, {6, 1}, {6, 3}, {6, 6}, {12, 1}, {12, 2}, {12, 3}, {12, 6}, {24, 12},
}};

/// Every parity-matched solution has max(|n|, |m|) at most this.
inline constexpr std::int64_t theorem_index_cap = 36;

/// 107 divides L_18 exactly once; 107^2 | L_n requires 18*107 | n.
inline constexpr std::uint64_t obstruction_prime = 107;
inline constexpr std::int64_t obstruction_index = 18;
inline constexpr std::int64_t obstruction_period = 18 * 107;

/// One row of the published table of F_n +/- F_m = y^p, 0 <= m <= n <= 1000,
/// in maximal-exponent form. p == 0 marks a value of 0 or 1.
struct PublishedRow {
  Sign sign;
  std::int64_t n;
  std::int64_t m;
  std::uint64_t y;
  std::uint64_t p;
  std::uint64_t value;

  [[nodiscard]] constexpr bool degenerate() const { return p == 0; }
};

inline constexpr std::array<PublishedRow, 18> plus_table{{
    {Sign::plus, 0, 0, 0, 0, 0},
    {Sign::plus, 1, 0, 1, 0, 1},
    {Sign::plus, 2, 0, 1, 0, 1},
    {Sign::plus, 3, 3, 2, 2, 4},
    {Sign::plus, 4, 1, 2, 2, 4},
    {Sign::plus, 4, 2, 2, 2, 4},
    {Sign::plus, 5, 4, 2, 3, 8},
    {Sign::plus, 6, 0, 2, 3, 8},
    {Sign::plus, 6, 1, 3, 2, 9},
    {Sign::plus, 6, 2, 3, 2, 9},
    {Sign::plus, 6, 6, 2, 4, 16},
    {Sign::plus, 7, 4, 2, 4, 16},
    {Sign::plus, 9, 3, 6, 2, 36},
    {Sign::plus, 11, 10, 12, 2, 144},
    {Sign::plus, 12, 0, 12, 2, 144},
    {Sign::plus, 16, 7, 10, 3, 1000},
    {Sign::plus, 17, 4, 40, 2, 1600},
    {Sign::plus, 36, 12, 3864, 2, 14930496},
}};

/// Minus rows, excluding the diagonal family F_n - F_n = 0 which is listed
/// once symbolically.
inline constexpr std::array<PublishedRow, 20> minus_table{{
    {Sign::minus, 1, 0, 1, 0, 1},
    {Sign::minus, 2, 0, 1, 0, 1},
    {Sign::minus, 2, 1, 0, 0, 0},
    {Sign::minus, 3, 1, 1, 0, 1},
    {Sign::minus, 3, 2, 1, 0, 1},
    {Sign::minus, 4, 3, 1, 0, 1},
    {Sign::minus, 5, 1, 2, 2, 4},
    {Sign::minus, 5, 2, 2, 2, 4},
    {Sign::minus, 6, 0, 2, 3, 8},
    {Sign::minus, 7, 5, 2, 3, 8},
    {Sign::minus, 8, 5, 2, 4, 16},
    {Sign::minus, 8, 7, 2, 3, 8},
    {Sign::minus, 9, 3, 2, 5, 32},
    {Sign::minus, 11, 6, 3, 4, 81},
    {Sign::minus, 12, 0, 12, 2, 144},
    {Sign::minus, 13, 6, 15, 2, 225},
    {Sign::minus, 13, 11, 12, 2, 144},
    {Sign::minus, 14, 9, 7, 3, 343},
    {Sign::minus, 14, 13, 12, 2, 144},
    {Sign::minus, 15, 9, 24, 2, 576},
}};

/// Largest index searched when the tables above were compiled.
inline constexpr std::int64_t published_search_bound = 1000;

}  // namespace fibsum::known
