#pragma once

/**
 * @file search.hpp
 * @brief Exhaustive search for F_n +/- F_m = y^p over 0 <= m <= n <= max_n.
 */

#include "fibsum/core.hpp"
#include "fibsum/parallel.hpp"
#include "fibsum/power.hpp"
#include "fibsum/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace fibsum {

/// Classifies F_high + inner*F_low for 0 <= low <= high <= max_index.
///
/// Holds F_0..F_max and, for every auxiliary prefilter modulus that can be
/// needed at this size, the residues F_k mod q. The prefilter for a pair is
/// then answered from two table lookups instead of a wide division.
class PairClassifier {
 public:
  struct Outcome {
    WideInt value;
    PowerRepr repr;
  };

  explicit PairClassifier(std::int64_t max_index)
      : max_index_(max_index), fib_(fib_table(table_size(max_index))) {
    const auto& table = PrefilterTable::instance();
    // |F_h +/- F_l| <= 2*F_max, so trial primes never exceed its bit length.
    const std::uint64_t bits = bit_length(2 * fib_.back()) + 1;
    slots_ = table.slots_for(bits);
    const auto moduli = table.slot_moduli();
    const std::size_t stride = fib_.size();
    residues_.resize(slots_ * stride);
    for (std::size_t s = 0; s < slots_; ++s) {
      const std::uint32_t q = moduli[s];
      std::uint32_t a = 0;
      std::uint32_t b = 1;
      for (std::size_t k = 0; k < stride; ++k) {
        residues_[s * stride + k] = a;
        const std::uint32_t next = (a + b) % q;
        a = b;
        b = next;
      }
    }
  }

  [[nodiscard]] std::int64_t max_index() const { return max_index_; }
  [[nodiscard]] const std::vector<WideInt>& fib_values() const { return fib_; }

  /// Requires 0 <= low <= high <= max_index, so the value is nonnegative.
  [[nodiscard]] Outcome classify(std::int64_t high, std::int64_t low, Sign inner) const {
    if (low < 0 || low > high || high > max_index_) {
      throw std::out_of_range("pair outside the classifier's table");
    }
    const auto h = static_cast<std::size_t>(high);
    const auto l = static_cast<std::size_t>(low);
    WideInt value = inner == Sign::plus ? WideInt(fib_[h] + fib_[l]) : WideInt(fib_[h] - fib_[l]);
    const std::size_t stride = fib_.size();
    auto residue_of = [&](std::uint32_t slot, std::uint32_t q) -> std::uint64_t {
      if (slot >= slots_) return detail::residue_u32(value, q);
      const std::uint64_t a = residues_[slot * stride + h];
      const std::uint64_t b = residues_[slot * stride + l];
      return inner == Sign::plus ? (a + b) % q : (a + q - b) % q;
    };
    PowerRepr repr = perfect_power_with(value, residue_of);
    return {std::move(value), std::move(repr)};
  }

 private:
  static std::size_t table_size(std::int64_t max_index) {
    if (max_index < 0) throw std::invalid_argument("max index must be >= 0");
    return static_cast<std::size_t>(max_index) + 1;
  }

  std::int64_t max_index_;
  std::vector<WideInt> fib_;
  std::size_t slots_ = 0;
  std::vector<std::uint32_t> residues_;
};

// ---------------------------------------------------------------------------

enum class Parity { any, same, mixed };
enum class OutputFormat { jsonl, csv, table };

struct SearchConfig {
  std::int64_t max_n = 1000;
  bool plus = true;
  bool minus = true;
  Parity parity = Parity::any;
  bool include_degenerate = true;
  std::size_t workers = 1;
  OutputFormat format = OutputFormat::jsonl;

  void validate() const {
    if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
    if (max_n > Index::max_magnitude) throw std::invalid_argument("max_n exceeds the index range");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (!plus && !minus) throw std::invalid_argument("at least one sign must be selected");
  }

  [[nodiscard]] bool accepts_parity(std::int64_t n, std::int64_t m) const {
    const bool same = (n - m) % 2 == 0;
    switch (parity) {
      case Parity::any: return true;
      case Parity::same: return same;
      case Parity::mixed: return !same;
    }
    return true;
  }
};

/// One solution of F_n + sign*F_m = y^p with n >= m >= 0.
///
/// Non-degenerate rows carry the maximal exponent p >= 2 and y >= 2. Rows
/// with value 0 or 1 are degenerate: y = value and p = 0, meaning every
/// p >= 2 works. The diagonal family F_n - F_n = 0 is a single record with
/// `diagonal_family` set; its n and m are symbolic and left at 0.
struct SolutionRecord {
  Sign sign = Sign::plus;
  std::int64_t n = 0;
  std::int64_t m = 0;
  WideInt value;
  WideInt y;
  std::uint64_t p = 0;
  bool degenerate = false;
  bool diagonal_family = false;

  [[nodiscard]] auto sort_key() const {
    return std::tuple(sign == Sign::plus ? 0 : 1, diagonal_family ? 0 : 1, n, m);
  }
  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

inline SolutionRecord diagonal_zero_family() {
  SolutionRecord r;
  r.sign = Sign::minus;
  r.value = 0;
  r.y = 0;
  r.p = 0;
  r.degenerate = true;
  r.diagonal_family = true;
  return r;
}

/// Scans every pair allowed by `config` and returns the solutions sorted by
/// (sign, n, m), "+" first. The output does not depend on config.workers.
inline std::vector<SolutionRecord> search(const SearchConfig& config) {
  config.validate();
  const PairClassifier classifier(config.max_n);

  std::vector<Sign> signs;
  if (config.plus) signs.push_back(Sign::plus);
  if (config.minus) signs.push_back(Sign::minus);

  auto records = run_striped(config.workers, [&](std::size_t stripe, std::size_t stripes) {
    std::vector<SolutionRecord> found;
    for (auto n = static_cast<std::int64_t>(stripe); n <= config.max_n;
         n += static_cast<std::int64_t>(stripes)) {
      for (std::int64_t m = 0; m <= n; ++m) {
        if (!config.accepts_parity(n, m)) continue;
        for (Sign sign : signs) {
          if (sign == Sign::minus && n == m) continue;  // diagonal family
          auto outcome = classifier.classify(n, m, sign);
          if (!outcome.repr.is_perfect_power()) continue;
          if (outcome.repr.degenerate && !config.include_degenerate) continue;
          SolutionRecord r;
          r.sign = sign;
          r.n = n;
          r.m = m;
          r.degenerate = outcome.repr.degenerate;
          r.y = outcome.repr.base;
          r.p = r.degenerate ? 0 : outcome.repr.max_exponent;
          r.value = std::move(outcome.value);
          found.push_back(std::move(r));
        }
      }
    }
    return found;
  });

  if (config.minus && config.include_degenerate && config.parity != Parity::mixed) {
    records.push_back(diagonal_zero_family());
  }
  std::sort(records.begin(), records.end(),
            [](const SolutionRecord& a, const SolutionRecord& b) {
              return a.sort_key() < b.sort_key();
            });
  return records;
}

}  // namespace fibsum
