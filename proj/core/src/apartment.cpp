#include "affgr/apartment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "affgr/errors.hpp"

namespace affgr {

namespace {

void require_square(const IntMatrix& c) {
  for (const auto& row : c) {
    if (row.size() != c.size()) throw std::invalid_argument("assignment matrix must be square");
  }
}

}  // namespace

AssignmentResult kuhn_munkres(const IntMatrix& c) {
  require_square(c);
  const std::size_t n = c.size();
  AssignmentResult r;
  if (n == 0) return r;
  // Minimum-cost assignment on -c with potentials u, v (u_i + v_j <= -c_ij),
  // 1-based with a virtual column 0.
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = checked_sub(checked_sub(-c[i0 - 1][j - 1], u[i0]), v[j]);
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  r.sigma.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) r.sigma[p[j] - 1] = j - 1;
  r.a.resize(n);
  r.b.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.a[i] = -u[i + 1];
  for (std::size_t j = 0; j < n; ++j) r.b[j] = -v[j + 1];
  const std::int64_t shift = *std::min_element(r.b.begin(), r.b.end());
  for (auto& x : r.b) x -= shift;
  for (auto& x : r.a) x += shift;
  for (std::size_t i = 0; i < n; ++i) r.value = checked_add(r.value, c[i][r.sigma[i]]);
  return r;
}

bool certificate_valid(const IntMatrix& c, const AssignmentResult& r) {
  const std::size_t n = c.size();
  if (r.sigma.size() != n || r.a.size() != n || r.b.size() != n) return false;
  std::vector<bool> seen(n, false);
  std::int64_t primal = 0, dual = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (r.sigma[i] >= n || seen[r.sigma[i]]) return false;
    seen[r.sigma[i]] = true;
    primal += c[i][r.sigma[i]];
    dual += r.a[i] + r.b[i];
    if (r.a[i] + r.b[r.sigma[i]] != c[i][r.sigma[i]]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (r.a[i] + r.b[j] < c[i][j]) return false;
    }
  }
  return primal == r.value && dual == r.value;
}

Apartment::Apartment(ScalarMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() == 0 || basis_.rows() != basis_.cols()) throw RankError("apartment basis must be square");
  const ExtInt v = determinant(basis_).valuation();
  if (v.is_infinite()) throw RankError("apartment basis is singular");
  det_valuation_ = v.value();
}

Apartment Apartment::standard(const Field& f, std::size_t n) { return Apartment(identity_scalar(f, n)); }

Lattice Apartment::lattice(std::span<const std::int64_t> c) const {
  if (c.size() != rank()) throw std::invalid_argument("exponent vector length differs from rank");
  ScalarMatrix cols = basis_;
  const Field f = basis_(0, 0).field();
  for (std::size_t m = 0; m < rank(); ++m) {
    const ValuedScalar factor = ValuedScalar::monomial(f.one(), checked_sub(0, c[m]));
    for (std::size_t r = 0; r < rank(); ++r) cols(r, m) *= factor;
  }
  return Lattice::from_columns(cols);
}

ApartmentValue apartment_value(const Apartment& a, std::span<const ApartmentPoint> points,
                               std::span<const std::size_t> idx) {
  if (points.size() != idx.size()) throw IndexError("index vector length differs from point count");
  if (std::accumulate(idx.begin(), idx.end(), std::size_t{0}) != a.rank()) {
    throw IndexError("indices must sum to the rank");
  }
  ApartmentValue out;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != a.rank()) throw std::invalid_argument("exponent vector length differs from rank");
    for (std::size_t copy = 0; copy < idx[j]; ++copy) out.replicated.push_back(points[j]);
  }
  out.assignment = kuhn_munkres(out.replicated);
  out.value = checked_sub(out.assignment.value, a.det_valuation());
  return out;
}

std::int64_t apartment_multi_f(const Apartment& a, std::span<const ApartmentPoint> points,
                               std::span<const std::size_t> idx) {
  return apartment_value(a, points, idx).value;
}

ApartmentWitness apartment_witness(const Apartment& a, std::span<const ApartmentPoint> points,
                                   std::span<const std::size_t> idx) {
  ApartmentValue v = apartment_value(a, points, idx);
  return ApartmentWitness{a.lattice(v.assignment.b), v.value, std::move(v.assignment)};
}

}  // namespace affgr
