#include "affgr/incremental_det.hpp"

#include <cassert>

namespace affgr {

IncrementalDet::IncrementalDet(const Field& f, std::size_t n, std::int64_t limit)
    : n_(n), limit_(limit), g_(identity_poly(f, n)), pivot_lc_(f.one()), transform_lc_(f.one()) {}

std::optional<std::int64_t> IncrementalDet::push(std::span<const LaurentPoly> column) {
  assert(column.size() == n_ && pushed_ < n_);
  const std::size_t s = pushed_;
  const Field& f = g_(0, 0).field();
  std::vector<LaurentPoly> w(n_, LaurentPoly(f));
  std::size_t pivot = n_;
  ExtInt best = ExtInt::infinity();
  for (std::size_t r = s; r < n_; ++r) {
    LaurentPoly acc(f);
    for (std::size_t c = 0; c < n_; ++c) {
      if (!column[c].is_zero() && !g_(r, c).is_zero()) acc += mul_trunc(g_(r, c), column[c], limit_);
    }
    if (acc.valuation() < best) {
      best = acc.valuation();
      pivot = r;
    }
    w[r] = std::move(acc);
  }
  if (pivot == n_) return std::nullopt;
  if (pivot != s) {
    g_.swap_rows(pivot, s);
    std::swap(w[pivot], w[s]);
    transform_lc_ = -transform_lc_;
  }
  const std::int64_t v = best.value();
  const LaurentPoly unit = w[s].shifted(-v);
  pivot_lc_ *= unit.lowest_coeff();
  for (std::size_t r = s + 1; r < n_; ++r) {
    if (w[r].is_zero()) continue;
    const LaurentPoly q = w[r].shifted(-v);
    for (std::size_t c = 0; c < n_; ++c) g_(r, c) = fma_trunc(unit, g_(r, c), q, g_(s, c), limit_);
    transform_lc_ *= unit.lowest_coeff();
  }
  ++pushed_;
  valuation_ += v;
  return v;
}

}  // namespace affgr
