#include "gabor/periodic_set.hpp"

#include <algorithm>
#include <string>

#include "gabor/error.hpp"

namespace gabor {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSet: return "InvalidSet";
    case ErrorKind::InvalidWindow: return "InvalidWindow";
    case ErrorKind::InvalidAtom: return "InvalidAtom";
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::ImaginaryResidue: return "ImaginaryResidue";
    case ErrorKind::FormDisagreement: return "FormDisagreement";
    case ErrorKind::SupportTooWide: return "SupportTooWide";
    case ErrorKind::SingularDiagonal: return "SingularDiagonal";
    case ErrorKind::DensityViolation: return "DensityViolation";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::UnsupportedSet: return "UnsupportedSet";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

PeriodicSet PeriodicSet::make(std::int64_t period, std::span<const std::int64_t> residues) {
  if (period < 1) {
    throw Error(ErrorKind::InvalidSet, "period must be positive, got " + std::to_string(period));
  }
  if (residues.empty()) {
    throw Error(ErrorKind::InvalidSet, "residue list is empty");
  }
  std::vector<std::int64_t> reduced;
  reduced.reserve(residues.size());
  for (auto r : residues) reduced.push_back(mod_floor(r, period));
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  return PeriodicSet(period, std::move(reduced));
}

bool PeriodicSet::contains(std::int64_t j) const noexcept {
  return std::binary_search(residues_.begin(), residues_.end(), mod_floor(j, period_));
}

std::int64_t PeriodicSet::truncation_cardinality(std::int64_t K) const {
  if (K < 1) throw Error(ErrorKind::InvalidSet, "truncation length must be positive");
  const std::int64_t full = K / period_;
  const std::int64_t rest = K % period_;
  const auto partial = std::lower_bound(residues_.begin(), residues_.end(), rest) - residues_.begin();
  return full * static_cast<std::int64_t>(residues_.size()) + partial;
}

PeriodicSet PeriodicSet::with_period(std::int64_t new_period) const {
  if (new_period < 1 || new_period % period_ != 0) {
    throw Error(ErrorKind::ParameterMismatch,
                "set period " + std::to_string(period_) + " does not divide " +
                    std::to_string(new_period));
  }
  std::vector<std::int64_t> out;
  out.reserve(residues_.size() * static_cast<std::size_t>(new_period / period_));
  for (std::int64_t base = 0; base < new_period; base += period_) {
    for (auto r : residues_) out.push_back(base + r);
  }
  return PeriodicSet(new_period, std::move(out));
}

}  // namespace gabor
