#include "affgr/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace affgr {

std::int64_t InstanceRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

bool InstanceRng::coin(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

FieldElem InstanceRng::element(const Field& f, bool nonzero) {
  if (f.is_prime()) {
    const auto p = static_cast<std::int64_t>(f.modulus());
    return f.from_int(nonzero ? uniform(1, p - 1) : uniform(0, p - 1));
  }
  std::int64_t v = 0;
  do {
    v = uniform(-3, 3);
  } while (nonzero && v == 0);
  return f.from_int(v);
}

LaurentPoly InstanceRng::poly(const Field& f, std::int64_t lo, std::int64_t hi, double density) {
  std::vector<LaurentPoly::Term> terms;
  for (std::int64_t e = lo; e <= hi; ++e) {
    if (coin(density)) terms.push_back({e, element(f, true)});
  }
  return LaurentPoly(f, std::move(terms));
}

PolyMatrix InstanceRng::unimodular(const Field& f, std::size_t n, std::int64_t max_degree) {
  PolyMatrix lower = identity_poly(f, n);
  PolyMatrix upper = identity_poly(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    lower(i, i) = LaurentPoly::constant(element(f, true));
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = poly(f, 0, max_degree, 0.4);
      upper(j, i) = poly(f, 0, max_degree, 0.4);
    }
  }
  PolyMatrix g = lower * upper;
  for (std::size_t i = n; i > 1; --i) g.swap_columns(i - 1, static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1)));
  return g;
}

Lattice InstanceRng::lattice(const Field& f, std::size_t n, std::int64_t lo, std::int64_t hi, double density) {
  while (true) {
    PolyMatrix m(n, n, LaurentPoly(f));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = poly(f, lo, hi, density);
    }
    if (determinant_leading(m).valuation.is_finite()) return Lattice::from_columns(m);
  }
}

Lattice InstanceRng::unimodular_lattice(const Field& f, std::size_t n, std::int64_t lo, std::int64_t hi,
                                        std::int64_t degree) {
  PolyMatrix g = unimodular(f, n, degree);
  for (std::size_t c = 0; c < n; ++c) {
    const std::int64_t e = uniform(lo, hi);
    for (std::size_t r = 0; r < n; ++r) g(r, c) = g(r, c).shifted(e);
  }
  return Lattice::from_columns(g);
}

Subspace InstanceRng::subspace(const Field& f, std::size_t n, std::size_t dim) {
  while (true) {
    std::vector<FieldVector> vecs;
    for (std::size_t i = 0; i < dim; ++i) {
      FieldVector v;
      for (std::size_t j = 0; j < n; ++j) v.push_back(coin(0.6) ? element(f, true) : f.zero());
      vecs.push_back(std::move(v));
    }
    Subspace s = Subspace::span(f, n, vecs);
    if (s.dim() == dim) return s;
  }
}

Lattice close_lattice_from(const Subspace& u) {
  const Field& f = u.field();
  const std::size_t n = u.ambient();
  PolyMatrix gens(n, n + u.dim(), LaurentPoly(f));
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = LaurentPoly::constant(f.one());
  for (std::size_t c = 0; c < u.dim(); ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      if (!u.basis()[c][r].is_zero()) gens(r, n + c) = LaurentPoly::monomial(u.basis()[c][r], -1);
    }
  }
  return Lattice::from_generators(gens, 0);
}

Lattice InstanceRng::close_lattice(const Field& f, std::size_t n) {
  const auto dim = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n)));
  return close_lattice_from(subspace(f, n, dim));
}

Apartment InstanceRng::apartment(const Field& f, std::size_t n, std::int64_t max_degree) {
  return Apartment(to_scalar(unimodular(f, n, max_degree)));
}

ApartmentPoint InstanceRng::point(std::size_t n, std::int64_t lo, std::int64_t hi) {
  ApartmentPoint c(n);
  for (auto& x : c) x = uniform(lo, hi);
  return c;
}

std::vector<std::size_t> InstanceRng::indices(std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx(k, 0);
  if (k == 0) return idx;
  for (std::size_t u = 0; u < n; ++u) ++idx[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(k) - 1))];
  return idx;
}

}  // namespace affgr
