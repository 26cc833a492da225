#pragma once

/**
 * @file power.hpp
 * @brief Integer k-th roots, perfect-power classification and q-adic
 *        valuation on wide integers.
 *
 * Perfect-power detection runs over the trial primes p <= log2(x). Before
 * extracting a root for a trial prime p, the value is checked to be a p-th
 * power residue modulo up to twelve auxiliary primes q = 1 (mod p), q < 10^5
 * (r is a p-th power residue mod q iff r = 0 or r^((q-1)/p) = 1 mod q). A
 * true p-th power always survives the check, so the filter only discards
 * work. Exponents found are multiplied together, and the base keeps being
 * reduced, so the result carries the maximal exponent.
 */

#include "fibsum/core.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fibsum {

/// Primes strictly below `limit`, ascending (sieve of Eratosthenes).
inline std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 3) return primes;
  std::vector<bool> composite(limit, false);
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

inline bool is_small_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

/// Number of bits needed to write x (0 for x == 0).
inline std::uint64_t bit_length(const WideInt& x) {
  return x == 0 ? 0 : boost::multiprecision::msb(x) + 1;
}

// ---------------------------------------------------------------------------
// iroot

struct RootResult {
  WideInt root;
  bool exact = false;
};

/// floor(x^(1/k)) by integer Newton iteration from above.
inline RootResult iroot(const WideInt& x, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("iroot: exponent must be >= 1");
  if (x < 0) throw std::domain_error("iroot: negative radicand");
  if (k == 1 || x < 2) return {x, true};

  const std::uint64_t bits = bit_length(x);
  if (k >= bits) return {1, false};  // 2^k > x >= 2

  const auto km1 = static_cast<unsigned>(k - 1);
  WideInt r = WideInt(1) << static_cast<unsigned>((bits + k - 1) / k);
  for (;;) {
    WideInt next = (km1 * r + x / boost::multiprecision::pow(r, km1)) / k;
    if (next >= r) break;
    r = std::move(next);
  }
  const bool exact = boost::multiprecision::pow(r, static_cast<unsigned>(k)) == x;
  return {std::move(r), exact};
}

// ---------------------------------------------------------------------------
// Prefilter

/// Immutable table of trial primes and their auxiliary residue moduli.
class PrefilterTable {
 public:
  static constexpr std::uint32_t max_trial_prime = 8191;
  static constexpr std::uint32_t aux_limit = 100000;
  static constexpr std::size_t aux_per_prime = 12;

  struct Aux {
    std::uint32_t q;
    std::uint32_t power;  // (q - 1) / p
    std::uint32_t slot;   // dense id of q across the whole table
  };

  struct Trial {
    std::uint32_t p;
    std::vector<Aux> aux;
  };

  static const PrefilterTable& instance() {
    static const PrefilterTable table;
    return table;
  }

  [[nodiscard]] std::span<const Trial> trials() const { return trials_; }
  /// Auxiliary modulus for each slot.
  [[nodiscard]] std::span<const std::uint32_t> slot_moduli() const { return slot_moduli_; }
  /// Number of slots used by trial primes p <= max_p.
  [[nodiscard]] std::size_t slots_for(std::uint64_t max_p) const {
    std::size_t count = 0;
    for (const auto& t : trials_) {
      if (t.p > max_p) break;
      for (const auto& a : t.aux) count = std::max<std::size_t>(count, a.slot + 1);
    }
    return count;
  }

  /// True unless some auxiliary prime proves `residue_of` is not a p-th power.
  /// `residue_of(slot, q)` must return x mod q.
  template <class ResidueFn>
  [[nodiscard]] static bool admits(const Trial& trial, ResidueFn&& residue_of) {
    for (const auto& a : trial.aux) {
      const std::uint64_t r = residue_of(a.slot, a.q);
      if (r == 0) continue;
      if (pow_mod(r, a.power, a.q) != 1) return false;
    }
    return true;
  }

 private:
  PrefilterTable() {
    const auto aux_primes = primes_below(aux_limit);
    std::vector<bool> is_prime(aux_limit, false);
    for (auto q : aux_primes) is_prime[q] = true;
    std::vector<std::uint32_t> slot_of(aux_limit, UINT32_MAX);

    for (auto p : primes_below(max_trial_prime + 1)) {
      Trial trial{p, {}};
      for (std::uint64_t q = std::uint64_t{p} + 1;
           q < aux_limit && trial.aux.size() < aux_per_prime; q += p) {
        if (!is_prime[q]) continue;
        if (slot_of[q] == UINT32_MAX) {
          slot_of[q] = static_cast<std::uint32_t>(slot_moduli_.size());
          slot_moduli_.push_back(static_cast<std::uint32_t>(q));
        }
        trial.aux.push_back({static_cast<std::uint32_t>(q),
                             static_cast<std::uint32_t>((q - 1) / p), slot_of[q]});
      }
      trials_.push_back(std::move(trial));
    }
  }

  static std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (e != 0) {
      if (e & 1U) result = result * base % m;
      base = base * base % m;
      e >>= 1;
    }
    return result;
  }

  std::vector<Trial> trials_;
  std::vector<std::uint32_t> slot_moduli_;
};

// ---------------------------------------------------------------------------
// Perfect powers

/// x = base^max_exponent with the largest possible exponent.
/// For x in {0, 1} the record is degenerate: base = x, max_exponent = 1, and
/// every exponent is admissible.
struct PowerRepr {
  WideInt base;
  std::uint64_t max_exponent = 1;
  bool degenerate = false;

  /// x = y^p for some p >= 2 (or x is 0 or 1).
  [[nodiscard]] bool is_perfect_power() const { return degenerate || max_exponent >= 2; }
  /// Whether x = y^p for this particular p >= 2.
  [[nodiscard]] bool admits_exponent(std::uint64_t p) const {
    return degenerate || (p >= 2 && max_exponent % p == 0);
  }
  friend bool operator==(const PowerRepr&, const PowerRepr&) = default;
};

namespace detail {

inline std::uint64_t residue_u32(const WideInt& x, std::uint32_t q) {
  return boost::multiprecision::integer_modulus(x, q);
}

inline std::vector<std::uint32_t> trial_primes_beyond_table(std::uint64_t max_p) {
  std::vector<std::uint32_t> extra;
  if (max_p <= PrefilterTable::max_trial_prime) return extra;
  for (auto p : primes_below(static_cast<std::uint32_t>(max_p + 1))) {
    if (p > PrefilterTable::max_trial_prime) extra.push_back(p);
  }
  return extra;
}

}  // namespace detail

/// Perfect-power classification with a caller-supplied residue source for the
/// top-level value. `residue_of(slot, q)` must return x mod q; once a root has
/// been peeled off, residues of the reduced base are computed directly.
template <class ResidueFn>
PowerRepr perfect_power_with(const WideInt& x, ResidueFn&& residue_of) {
  if (x < 0) throw std::domain_error("perfect_power: negative input");
  if (x < 2) return {x, 1, true};

  WideInt base = x;
  std::uint64_t exponent = 1;
  bool reduced = false;
  auto direct = [&base](std::uint32_t, std::uint32_t q) { return detail::residue_u32(base, q); };

  for (const auto& trial : PrefilterTable::instance().trials()) {
    for (;;) {
      if (trial.p >= bit_length(base)) break;  // p <= floor(log2(base))
      const bool maybe = reduced ? PrefilterTable::admits(trial, direct)
                                 : PrefilterTable::admits(trial, residue_of);
      if (!maybe) break;
      auto root = iroot(base, trial.p);
      if (!root.exact) break;
      base = std::move(root.root);
      exponent *= trial.p;
      reduced = true;
    }
    if (trial.p >= bit_length(base)) break;
  }
  // Values wider than the table: remaining trial primes run unfiltered.
  for (auto p : detail::trial_primes_beyond_table(bit_length(base) - 1)) {
    for (;;) {
      if (p >= bit_length(base)) break;
      auto root = iroot(base, p);
      if (!root.exact) break;
      base = std::move(root.root);
      exponent *= p;
    }
  }
  return {std::move(base), exponent, false};
}

/// Canonical maximal-exponent form of x >= 0.
inline PowerRepr perfect_power(const WideInt& x) {
  return perfect_power_with(
      x, [&x](std::uint32_t, std::uint32_t q) { return detail::residue_u32(x, q); });
}

// ---------------------------------------------------------------------------
// Valuations

struct Valuation {
  std::uint64_t exponent = 0;  // s
  WideInt rest;                // x / q^s, not divisible by q
};

/// x = q^s * rest with q not dividing rest. x must be >= 1 and q prime.
inline Valuation padic_val(const WideInt& x, std::uint64_t q) {
  if (x <= 0) throw std::domain_error("padic_val: valuation of a nonpositive value");
  if (!is_small_prime(q)) throw std::invalid_argument("padic_val: modulus is not prime");
  if (q == 2) {
    const auto s = boost::multiprecision::lsb(x);
    return {s, x >> s};
  }
  Valuation v{0, x};
  WideInt quotient;
  WideInt remainder;
  for (;;) {
    boost::multiprecision::divide_qr(v.rest, WideInt(q), quotient, remainder);
    if (remainder != 0) break;
    v.rest.swap(quotient);
    ++v.exponent;
  }
  return v;
}

/// x = q^s * core with q not dividing core, plus the classification of core.
struct StrippedPower {
  std::uint64_t q = 2;
  std::uint64_t s = 0;
  WideInt core;
  PowerRepr core_repr;

  /// x = q^s * y^b has a solution with b >= 2.
  [[nodiscard]] bool admits_power() const {
    return core == 1 || core_repr.max_exponent >= 2;
  }
};

inline StrippedPower stripped_power_test(const WideInt& x, std::uint64_t q) {
  if (q != 2 && q != 3) throw std::invalid_argument("stripped_power_test: q must be 2 or 3");
  auto v = padic_val(x, q);
  auto repr = perfect_power(v.rest);
  return {q, v.exponent, std::move(v.rest), std::move(repr)};
}

}  // namespace fibsum
