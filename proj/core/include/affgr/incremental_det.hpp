#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "affgr/matrix.hpp"

namespace affgr {

/// Determinant valuation built one column at a time.
///
/// Columns are polynomial vectors (valuation >= 0). The state keeps a row
/// transform G over the valuation ring, truncated modulo t^limit, such that
/// G times the pushed columns is upper triangular. Each push returns the
/// valuation of the new pivot; the determinant valuation of a full set of n
/// columns is the sum of these, exact whenever the sum is below `limit`.
/// Copies are cheap enough to snapshot per search depth.
class IncrementalDet {
 public:
  IncrementalDet(const Field& f, std::size_t n, std::int64_t limit);

  std::size_t size() const { return pushed_; }
  std::int64_t limit() const { return limit_; }
  /// Sum of pivot valuations so far.
  std::int64_t valuation() const { return valuation_; }
  /// Leading coefficient of the determinant of the pushed columns; valid once
  /// n columns are pushed and valuation() < limit().
  FieldElem leading_coefficient() const { return pivot_lc_ / transform_lc_; }

  /// Returns the pivot valuation, or nullopt if the column is dependent on the
  /// previous ones modulo t^limit (the state is then unspecified).
  std::optional<std::int64_t> push(std::span<const LaurentPoly> column);

 private:
  std::size_t n_;
  std::int64_t limit_;
  std::size_t pushed_ = 0;
  std::int64_t valuation_ = 0;
  PolyMatrix g_;
  FieldElem pivot_lc_;
  FieldElem transform_lc_;
};

}  // namespace affgr
