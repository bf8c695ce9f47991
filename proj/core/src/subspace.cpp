#include "affgr/subspace.hpp"

#include <stdexcept>

namespace affgr {

std::vector<std::size_t> rref(std::vector<FieldVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const FieldElem inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElem factor = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

Subspace Subspace::zero(const Field& f, std::size_t n) { return Subspace(f, n); }

Subspace Subspace::full(const Field& f, std::size_t n) {
  Subspace s(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    FieldVector v(n, f.zero());
    v[i] = f.one();
    s.rows_.push_back(std::move(v));
  }
  return s;
}

Subspace Subspace::span(const Field& f, std::size_t n, std::span<const FieldVector> vectors) {
  Subspace s(f, n);
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("vector length differs from ambient dimension");
    s.rows_.push_back(v);
  }
  rref(s.rows_, n);
  return s;
}

bool Subspace::contains(const FieldVector& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length differs from ambient dimension");
  FieldVector w = v;
  for (const auto& row : rows_) {
    std::size_t c = 0;
    while (row[c].is_zero()) ++c;
    if (w[c].is_zero()) continue;
    const FieldElem factor = w[c];
    for (std::size_t j = c; j < n_; ++j) w[j] -= factor * row[j];
  }
  for (const auto& x : w) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Subspace::includes(const Subspace& other) const {
  for (const auto& v : other.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspaces of different ambient dimension");
  std::vector<FieldVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspaces of different ambient dimension");
  // Zassenhaus: row-reduce [a | a ; b | 0]; rows with zero left half carry
  // the intersection in their right half.
  const std::size_t n = a.ambient();
  const Field& f = a.field();
  std::vector<FieldVector> rows;
  for (const auto& v : a.basis()) {
    FieldVector r(v);
    r.insert(r.end(), v.begin(), v.end());
    rows.push_back(std::move(r));
  }
  for (const auto& v : b.basis()) {
    FieldVector r(v);
    r.resize(2 * n, f.zero());
    rows.push_back(std::move(r));
  }
  rref(rows, 2 * n);
  std::vector<FieldVector> inter;
  for (const auto& r : rows) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = r[j].is_zero();
    if (left_zero) inter.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
  }
  return Subspace::span(f, n, inter);
}

std::size_t rank_of(const Field& f, std::size_t n, std::span<const FieldVector> vectors) {
  return Subspace::span(f, n, vectors).dim();
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  os << "Subspace(n=" << s.ambient() << ")[";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    os << (i ? "; " : "") << '(';
    for (std::size_t j = 0; j < s.ambient(); ++j) os << (j ? ", " : "") << s.basis()[i][j];
    os << ')';
  }
  return os << ']';
}

}  // namespace affgr
