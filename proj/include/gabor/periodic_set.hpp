#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gabor {

/// Floor modulo: result always in [0, n) for n > 0.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t n) noexcept {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

constexpr std::int64_t div_floor(std::int64_t a, std::int64_t n) noexcept {
  return (a - mod_floor(a, n)) / n;
}

constexpr std::int64_t div_ceil(std::int64_t a, std::int64_t n) noexcept {
  return -div_floor(-a, n);
}

/// An N-periodic subset of the integers, stored by its residues mod N.
///
/// Residues are the canonical form: inputs are reduced, deduplicated and
/// sorted, so two sets with the same period compare equal iff they contain
/// the same integers.
class PeriodicSet {
 public:
  /// The whole integer line (period 1, residue 0).
  PeriodicSet() = default;

  static PeriodicSet make(std::int64_t period, std::span<const std::int64_t> residues);
  static PeriodicSet make(std::int64_t period, std::initializer_list<std::int64_t> residues) {
    return make(period, std::span<const std::int64_t>(residues.begin(), residues.size()));
  }
  static PeriodicSet integers() { return PeriodicSet{}; }

  std::int64_t period() const noexcept { return period_; }
  const std::vector<std::int64_t>& residues() const noexcept { return residues_; }

  bool contains(std::int64_t j) const noexcept;

  /// card(S ∩ {0, ..., K-1}).
  std::int64_t truncation_cardinality(std::int64_t K) const;

  /// Re-express the same set with a period that is a multiple of the current one.
  PeriodicSet with_period(std::int64_t new_period) const;

  /// True when every integer belongs to the set.
  bool is_integers() const noexcept {
    return static_cast<std::int64_t>(residues_.size()) == period_;
  }

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

 private:
  PeriodicSet(std::int64_t period, std::vector<std::int64_t> residues)
      : period_(period), residues_(std::move(residues)) {}

  std::int64_t period_ = 1;
  std::vector<std::int64_t> residues_{0};
};

}  // namespace gabor
