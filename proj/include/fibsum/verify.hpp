#pragma once

/**
 * @file verify.hpp
 * @brief Finite-range verification of the classification results.
 *
 * Every engine scans a bounded index range, collects the witnesses that
 * satisfy the predicate under test and diffs them against the published set
 * in known_results.hpp. A report passes only when the two sets agree exactly
 * and every auxiliary check holds; an extra or a missing witness is a
 * failure.
 */

#include "fibsum/core.hpp"
#include "fibsum/identities.hpp"
#include "fibsum/known_results.hpp"
#include "fibsum/parallel.hpp"
#include "fibsum/power.hpp"
#include "fibsum/search.hpp"
#include "fibsum/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibsum {

enum class TheoremId { powers2, powers3, ratio_squares, fnlm, l18, theorem1 };

inline const char* name_of(TheoremId id) {
  switch (id) {
    case TheoremId::powers2: return "powers2";
    case TheoremId::powers3: return "powers3";
    case TheoremId::ratio_squares: return "ratio-squares";
    case TheoremId::fnlm: return "fnlm";
    case TheoremId::l18: return "l18";
    case TheoremId::theorem1: return "theorem1";
  }
  return "unknown";
}

/// An index tuple, optionally tagged ("F"/"L" for the sequence, "+"/"-" for
/// the sign of a sum).
struct Witness {
  std::string tag;
  std::vector<std::int64_t> indices;

  auto operator<=>(const Witness&) const = default;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  TheoremId theorem_id = TheoremId::powers2;
  std::vector<std::int64_t> bounds;
  std::vector<Witness> witnesses;
  std::vector<Witness> expected;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> notes;
  bool pass = false;

  /// Sorts and deduplicates both sets, then settles the verdict.
  void finalize() {
    for (auto* set : {&witnesses, &expected}) {
      std::sort(set->begin(), set->end());
      set->erase(std::unique(set->begin(), set->end()), set->end());
    }
    pass = witnesses == expected &&
           std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  /// Witnesses present in one set but not the other.
  [[nodiscard]] std::vector<Witness> unexpected() const {
    std::vector<Witness> out;
    std::set_difference(witnesses.begin(), witnesses.end(), expected.begin(), expected.end(),
                        std::back_inserter(out));
    return out;
  }
  [[nodiscard]] std::vector<Witness> missing() const {
    std::vector<Witness> out;
    std::set_difference(expected.begin(), expected.end(), witnesses.begin(), witnesses.end(),
                        std::back_inserter(out));
    return out;
  }
};

/// The requested bound cannot contain the published set.
class BoundTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_bound(std::int64_t bound, std::int64_t minimum, const char* what) {
  if (bound < minimum) {
    throw BoundTooSmall(std::string(what) + ": bound " + std::to_string(bound) +
                        " cannot contain the expected set (need >= " + std::to_string(minimum) +
                        ")");
  }
}

inline const char* tag_of(SequenceKind kind) { return kind == SequenceKind::fib ? "F" : "L"; }

inline WideInt term(SequenceKind kind, std::int64_t n) {
  return kind == SequenceKind::fib ? fib(n) : lucas(n);
}

inline bool contains_pair(std::span<const std::pair<std::int64_t, std::int64_t>> set,
                          std::int64_t a, std::int64_t b) {
  return std::find(set.begin(), set.end(), std::pair{a, b}) != set.end();
}

inline VerificationReport merge(TheoremId id, VerificationReport a, const VerificationReport& b) {
  a.theorem_id = id;
  a.witnesses.insert(a.witnesses.end(), b.witnesses.begin(), b.witnesses.end());
  a.expected.insert(a.expected.end(), b.expected.begin(), b.expected.end());
  a.checks.insert(a.checks.end(), b.checks.begin(), b.checks.end());
  a.notes.insert(a.notes.end(), b.notes.begin(), b.notes.end());
  a.finalize();
  return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// X_n = q^s * y^b

/// Scans 1 <= n <= bound for X_n = q^s * y^b with b >= 2 (X = F or L).
inline VerificationReport verify_power_class(std::uint64_t q, SequenceKind kind,
                                             std::int64_t bound, std::size_t workers = 1) {
  detail::require_bound(bound, 12, "verify_power_class");
  std::span<const std::int64_t> published;
  if (q == 2) {
    published = kind == SequenceKind::fib ? std::span<const std::int64_t>(known::fib_2_power_indices)
                                          : std::span<const std::int64_t>(known::lucas_2_power_indices);
  } else if (q == 3) {
    published = kind == SequenceKind::fib ? std::span<const std::int64_t>(known::fib_3_power_indices)
                                          : std::span<const std::int64_t>(known::lucas_3_power_indices);
  } else {
    throw std::invalid_argument("verify_power_class: q must be 2 or 3");
  }

  VerificationReport report;
  report.theorem_id = q == 2 ? TheoremId::powers2 : TheoremId::powers3;
  report.bounds = {bound};
  const std::string tag = detail::tag_of(kind);
  for (auto n : published) report.expected.push_back({tag, {n}});

  report.witnesses = run_striped(workers, [&](std::size_t stripe, std::size_t stripes) {
    std::vector<Witness> found;
    for (auto n = static_cast<std::int64_t>(stripe) + 1; n <= bound;
         n += static_cast<std::int64_t>(stripes)) {
      if (stripped_power_test(detail::term(kind, n), q).admits_power()) {
        found.push_back({tag, {n}});
      }
    }
    return found;
  });
  report.finalize();
  return report;
}

/// Both sequences for one prime q, as a single report.
inline VerificationReport verify_powers(std::uint64_t q, std::int64_t bound,
                                        std::size_t workers = 1) {
  auto f = verify_power_class(q, SequenceKind::fib, bound, workers);
  auto l = verify_power_class(q, SequenceKind::lucas, bound, workers);
  return detail::merge(f.theorem_id, std::move(f), l);
}

// ---------------------------------------------------------------------------
// Square ratios

/// fib:   u | v, u < v <= bound, F_v / F_u a square.
/// lucas: u | v, v / u odd, u < v <= bound, L_v / L_u a square.
inline VerificationReport verify_ratio_squares(SequenceKind kind, std::int64_t bound,
                                               std::size_t workers = 1) {
  detail::require_bound(bound, 12, "verify_ratio_squares");
  VerificationReport report;
  report.theorem_id = TheoremId::ratio_squares;
  report.bounds = {bound};
  const std::string tag = detail::tag_of(kind);
  if (kind == SequenceKind::fib) {
    for (auto [v, u] : known::fib_square_ratios) report.expected.push_back({tag, {v, u}});
  } else {
    for (auto [v, u] : known::lucas_square_ratios) report.expected.push_back({tag, {v, u}});
  }

  report.witnesses = run_striped(workers, [&](std::size_t stripe, std::size_t stripes) {
    std::vector<Witness> found;
    for (auto v = static_cast<std::int64_t>(stripe) + 1; v <= bound;
         v += static_cast<std::int64_t>(stripes)) {
      const WideInt top = detail::term(kind, v);
      for (std::int64_t u = 1; u < v; ++u) {
        if (v % u != 0) continue;
        if (kind == SequenceKind::lucas && (v / u) % 2 == 0) continue;
        WideInt quotient;
        WideInt remainder;
        boost::multiprecision::divide_qr(top, detail::term(kind, u), quotient, remainder);
        if (remainder != 0) {
          throw std::logic_error("divisibility X_u | X_v failed for " + std::to_string(u) + " | " +
                                 std::to_string(v));
        }
        if (iroot(quotient, 2).exact) found.push_back({tag, {v, u}});
      }
    }
    return found;
  });
  report.finalize();
  return report;
}

inline VerificationReport verify_ratio_squares_all(std::int64_t bound, std::size_t workers = 1) {
  auto f = verify_ratio_squares(SequenceKind::fib, bound, workers);
  auto l = verify_ratio_squares(SequenceKind::lucas, bound, workers);
  return detail::merge(TheoremId::ratio_squares, std::move(f), l);
}

// ---------------------------------------------------------------------------
// F_N * L_M = 2^s * y^p

inline VerificationReport enumerate_fnlm(std::int64_t bound_n, std::int64_t bound_m,
                                         std::size_t workers = 1) {
  detail::require_bound(bound_n, 24, "enumerate_fnlm (N)");
  detail::require_bound(bound_m, 12, "enumerate_fnlm (M)");
  VerificationReport report;
  report.theorem_id = TheoremId::fnlm;
  report.bounds = {bound_n, bound_m};
  for (auto [n, m] : known::fib_lucas_power_pairs) report.expected.push_back({"", {n, m}});

  std::vector<WideInt> lucas_values;
  lucas_values.reserve(static_cast<std::size_t>(bound_m) + 1);
  for (std::int64_t m = 0; m <= bound_m; ++m) lucas_values.push_back(lucas(m));

  report.witnesses = run_striped(workers, [&](std::size_t stripe, std::size_t stripes) {
    std::vector<Witness> found;
    for (auto n = static_cast<std::int64_t>(stripe) + 1; n <= bound_n;
         n += static_cast<std::int64_t>(stripes)) {
      const WideInt fn = fib(n);
      for (std::int64_t m = 1; m <= bound_m; ++m) {
        if (stripped_power_test(fn * lucas_values[static_cast<std::size_t>(m)], 2).admits_power()) {
          found.push_back({"", {n, m}});
        }
      }
    }
    return found;
  });
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// 107 || L_18 and 107^2 | L_n only when 18*107 | n

inline VerificationReport check_107(std::int64_t bound, std::size_t workers = 1) {
  detail::require_bound(bound, known::obstruction_period, "check_107");
  constexpr std::uint64_t p = known::obstruction_prime;
  constexpr std::uint64_t p2 = p * p;

  VerificationReport report;
  report.theorem_id = TheoremId::l18;
  report.bounds = {bound};

  const std::uint64_t l18 = lucas_mod(known::obstruction_index, p2);
  report.checks.push_back({"107 divides L_18 exactly once", l18 % p == 0 && l18 != 0,
                           "L_18 mod 107^2 = " + std::to_string(l18)});

  // Violations: 107^2 | L_n with 18*107 not dividing n. Expected: none.
  report.witnesses = run_striped(workers, [&](std::size_t stripe, std::size_t stripes) {
    std::vector<Witness> found;
    for (auto n = static_cast<std::int64_t>(stripe) + 1; n <= bound;
         n += static_cast<std::int64_t>(stripes)) {
      if (n % known::obstruction_period == 0) continue;
      if (lucas_mod(n, p2) == 0) found.push_back({"", {n}});
    }
    return found;
  });
  report.notes.emplace_back("L_1926 mod 107^2",
                            std::to_string(lucas_mod(known::obstruction_period, p2)));
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// Parity-matched sums

/// Scans all |n|, |m| <= bound with n = m (mod 2) and both signs.
///
/// Witnesses: every non-degenerate hit (|value| a perfect power >= 2) with
/// n >= m >= 0, plus every hit anywhere with max(|n|, |m|) > 36 (zero values
/// only when |n| != |m|). Expected: the parity-matched non-degenerate rows of
/// the published tables. Each canonical hit with n > m > 0 or m = 0 is also
/// pushed through the sum factorisation, and its (N, M) must be one of the
/// published F_N * L_M pairs.
inline VerificationReport verify_theorem1(std::int64_t bound, std::size_t workers = 1) {
  detail::require_bound(bound, 40, "verify_theorem1");
  VerificationReport report;
  report.theorem_id = TheoremId::theorem1;
  report.bounds = {bound};

  auto add_expected = [&](const auto& table) {
    for (const auto& row : table) {
      if (row.degenerate() || (row.n - row.m) % 2 != 0) continue;
      report.expected.push_back({std::string(1, as_char(row.sign)), {row.n, row.m}});
    }
  };
  add_expected(known::plus_table);
  add_expected(known::minus_table);

  // hit[inner][high][low] for 0 <= low <= high <= bound, same parity.
  enum class Kind : std::uint8_t { none, zero, unit, power };
  const PairClassifier classifier(bound);
  const auto width = static_cast<std::size_t>(bound) + 1;
  auto slot = [width](Sign inner, std::int64_t h, std::int64_t l) {
    return ((inner == Sign::plus ? 0 : 1) * width + static_cast<std::size_t>(h)) * width +
           static_cast<std::size_t>(l);
  };
  std::vector<Kind> kinds(2 * width * width, Kind::none);
  struct Cell {
    std::size_t at;
    Kind kind;
  };
  auto cells = run_striped(workers, [&](std::size_t stripe, std::size_t stripes) {
    std::vector<Cell> out;
    for (auto h = static_cast<std::int64_t>(stripe); h <= bound;
         h += static_cast<std::int64_t>(stripes)) {
      for (std::int64_t l = h % 2; l <= h; l += 2) {
        for (Sign inner : {Sign::plus, Sign::minus}) {
          auto outcome = classifier.classify(h, l, inner);
          Kind k = Kind::none;
          if (outcome.value == 0) {
            k = Kind::zero;
          } else if (outcome.value == 1) {
            k = Kind::unit;
          } else if (outcome.repr.max_exponent >= 2) {
            k = Kind::power;
          }
          if (k != Kind::none) out.push_back({slot(inner, h, l), k});
        }
      }
    }
    return out;
  });
  for (const auto& c : cells) kinds[c.at] = c.kind;

  std::size_t hits = 0;
  std::int64_t largest = 0;
  std::vector<std::string> descent_failures;
  for (std::int64_t n = -bound; n <= bound; ++n) {
    for (std::int64_t m = -bound; m <= bound; ++m) {
      if ((n - m) % 2 != 0) continue;
      for (Sign sign : {Sign::plus, Sign::minus}) {
        const auto np = normalize_pair(n, m, sign);
        const Kind k = kinds[slot(np.inner, np.high, np.low)];
        if (k == Kind::none || k == Kind::unit) continue;
        const std::int64_t reach = std::max(std::abs(n), std::abs(m));
        const std::string tag(1, as_char(sign));
        if (k == Kind::zero) {
          if (std::abs(n) != std::abs(m) && reach > known::theorem_index_cap) {
            report.witnesses.push_back({tag, {n, m}});
          }
          continue;
        }
        ++hits;
        if (reach > known::theorem_index_cap) {
          report.witnesses.push_back({tag, {n, m}});
          continue;
        }
        if (n < m || m < 0) continue;
        report.witnesses.push_back({tag, {n, m}});
        largest = std::max(largest, n);
        const auto f = sum_factorization(n, m, sign);
        if (f.N >= 1 && f.M >= 1 &&
            !detail::contains_pair(known::fib_lucas_power_pairs, f.N, f.M)) {
          descent_failures.push_back(tag + "(" + std::to_string(n) + "," + std::to_string(m) +
                                     ")->(" + std::to_string(f.N) + "," + std::to_string(f.M) +
                                     ")");
        }
      }
    }
  }

  std::string failures;
  for (const auto& f : descent_failures) failures += (failures.empty() ? "" : " ") + f;
  report.checks.push_back({"descent lands in the F_N*L_M classification", descent_failures.empty(),
                           failures.empty() ? "all canonical hits factor into published pairs"
                                            : failures});
  report.notes.emplace_back("signed perfect-power hits", std::to_string(hits));
  report.notes.emplace_back("largest canonical n", std::to_string(largest));
  report.finalize();
  return report;
}

}  // namespace fibsum
