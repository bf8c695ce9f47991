#include "affgr/detval.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "affgr/errors.hpp"
#include "affgr/incremental_det.hpp"
#include "affgr/metric.hpp"

namespace affgr {

namespace {

using Column = std::vector<LaurentPoly>;

// Canonical columns of every lattice, multiplied by a common t^shift so that
// all entries are polynomials.
struct ShiftedColumns {
  std::vector<std::vector<Column>> cols;
  std::int64_t shift = 0;
  std::int64_t max_degree = 0;
};

ShiftedColumns shifted_columns(std::span<const Lattice> lattices) {
  ShiftedColumns out;
  ExtInt lo = ExtInt::infinity();
  for (const auto& l : lattices) {
    const auto& b = l.canonical_basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) lo = std::min(lo, b(r, c).valuation());
    }
  }
  out.shift = -lo.value();
  for (const auto& l : lattices) {
    std::vector<Column> cs;
    for (std::size_t c = 0; c < l.rank(); ++c) {
      Column col = l.column(c);
      for (auto& e : col) {
        e = e.shifted(out.shift);
        if (!e.is_zero()) out.max_degree = std::max(out.max_degree, e.degree());
      }
      cs.push_back(std::move(col));
    }
    out.cols.push_back(std::move(cs));
  }
  return out;
}

class SelectionSearch {
 public:
  SelectionSearch(std::span<const std::size_t> idx, const ShiftedColumns& sc, const Field& f, std::size_t n)
      : idx_(idx), sc_(sc), chosen_(idx.size()) {
    limit_ = checked_add(checked_mul(static_cast<std::int64_t>(n), sc.max_degree), 1);
    best_ = limit_;
    IncrementalDet start(f, n, limit_);
    descend(0, 0, start);
  }

  bool found() const { return best_ < limit_; }
  std::int64_t best_valuation() const { return best_; }
  const std::vector<std::vector<std::size_t>>& selection() const { return best_sel_; }

 private:
  void descend(std::size_t lattice, std::size_t next, const IncrementalDet& det) {
    while (lattice < idx_.size() && chosen_[lattice].size() == idx_[lattice]) {
      ++lattice;
      next = 0;
    }
    if (lattice == idx_.size()) {
      if (det.valuation() < best_) {
        best_ = det.valuation();
        best_sel_ = chosen_;
      }
      return;
    }
    const std::size_t need = idx_[lattice] - chosen_[lattice].size();
    const auto& cols = sc_.cols[lattice];
    for (std::size_t c = next; c + need <= cols.size(); ++c) {
      IncrementalDet child = det;
      const auto pivot = child.push(cols[c]);
      if (!pivot || child.valuation() >= best_) continue;
      chosen_[lattice].push_back(c);
      descend(lattice, c + 1, child);
      chosen_[lattice].pop_back();
    }
  }

  std::span<const std::size_t> idx_;
  const ShiftedColumns& sc_;
  std::int64_t limit_ = 0;
  std::int64_t best_ = 0;
  std::vector<std::vector<std::size_t>> chosen_;
  std::vector<std::vector<std::size_t>> best_sel_;
};

}  // namespace

void validate_indices(std::span<const std::size_t> idx, std::span<const Lattice> lattices) {
  if (idx.size() != lattices.size()) throw IndexError("index vector length differs from lattice count");
  if (lattices.empty()) throw IndexError("no lattices given");
  const std::size_t n = lattices.front().rank();
  for (const auto& l : lattices) {
    if (l.rank() != n) throw std::invalid_argument("lattices of different rank");
    if (!(l.field() == lattices.front().field())) throw DomainError("lattices over different fields");
  }
  if (std::accumulate(idx.begin(), idx.end(), std::size_t{0}) != n) {
    throw IndexError("indices must sum to the rank");
  }
}

MultiFResult multi_f_detail(std::span<const std::size_t> idx, std::span<const Lattice> lattices) {
  validate_indices(idx, lattices);
  const std::size_t n = lattices.front().rank();
  const ShiftedColumns sc = shifted_columns(lattices);
  SelectionSearch search(idx, sc, lattices.front().field(), n);
  if (!search.found()) throw std::logic_error("multi_f: no nonsingular selection");
  MultiFResult r;
  r.value = checked_sub(checked_mul(static_cast<std::int64_t>(n), sc.shift), search.best_valuation());
  r.selection = search.selection();
  return r;
}

std::int64_t multi_f(std::span<const std::size_t> idx, std::span<const Lattice> lattices) {
  return multi_f_detail(idx, lattices).value;
}

std::int64_t multi_f_exhaustive(std::span<const std::size_t> idx, std::span<const Lattice> lattices) {
  validate_indices(idx, lattices);
  const std::size_t n = lattices.front().rank();
  const Field f = lattices.front().field();
  std::vector<std::vector<std::size_t>> pick(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    pick[j].resize(idx[j]);
    std::iota(pick[j].begin(), pick[j].end(), std::size_t{0});
  }
  ExtInt best = ExtInt::infinity();
  while (true) {
    ScalarMatrix m(n, n, ValuedScalar::zero(f));
    std::size_t c = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      for (std::size_t col : pick[j]) {
        for (std::size_t r = 0; r < n; ++r) m(r, c) = ValuedScalar(lattices[j].canonical_basis()(r, col));
        ++c;
      }
    }
    best = std::min(best, determinant(m).valuation());
    // Advance the mixed-radix combination counter.
    std::size_t j = idx.size();
    bool advanced = false;
    while (j-- > 0 && !advanced) {
      auto& p = pick[j];
      const std::size_t k = p.size();
      std::size_t i = k;
      while (i > 0 && p[i - 1] == n - k + i - 1) --i;
      if (i > 0) {
        ++p[i - 1];
        for (std::size_t t = i; t < k; ++t) p[t] = p[t - 1] + 1;
        advanced = true;
      } else {
        std::iota(p.begin(), p.end(), std::size_t{0});
      }
    }
    if (!advanced) break;
  }
  if (best.is_infinite()) throw std::logic_error("multi_f: no nonsingular selection");
  return -best.value();
}

std::int64_t star_cost(std::span<const std::size_t> idx, std::span<const Lattice> lattices, const Lattice& p) {
  validate_indices(idx, lattices);
  const std::size_t n = p.rank();
  std::int64_t total = 0;
  for (std::size_t j = 0; j < idx.size(); ++j) total = checked_add(total, binary_f(idx[j], n - idx[j], lattices[j], p));
  const auto k = static_cast<std::int64_t>(idx.size());
  return checked_sub(total, checked_mul(k - 1, p.unary_f()));
}

EdgeReduction edge_reduction(std::size_t i, std::size_t j, const Lattice& l, const Lattice& m) {
  if (i + j != l.rank()) throw IndexError("edge reduction requires i + j = n");
  EdgeReduction r;
  const std::vector<Lattice> two{l, m};
  const std::vector<Lattice> three{l, m, l};
  const std::vector<std::size_t> idx2{i, j};
  const std::vector<std::size_t> idx3{i, j, 0};
  r.multi = multi_f(idx2, two);
  r.padded = multi_f(idx3, three);
  r.binary = binary_f(i, j, l, m);
  r.paired = checked_add(pair(WeightVector::fundamental(l.rank(), j), distance(l, m)), l.unary_f());
  r.holds = r.multi == r.padded && r.multi == r.binary && r.multi == r.paired;
  return r;
}

}  // namespace affgr
