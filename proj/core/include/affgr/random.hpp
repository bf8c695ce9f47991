#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "affgr/apartment.hpp"
#include "affgr/lattice.hpp"
#include "affgr/subspace.hpp"

namespace affgr {

/// Seeded source of random instances. Draws use mt19937_64 with modular
/// reduction so sequences are identical on every platform.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(double p = 0.5);
  /// Nonzero with the given probability; rational draws are small integers.
  FieldElem element(const Field& f, bool nonzero = false);
  /// Laurent polynomial with exponents in [lo, hi], each present with probability density.
  LaurentPoly poly(const Field& f, std::int64_t lo, std::int64_t hi, double density = 0.5);
  /// Matrix over the valuation ring with constant nonzero determinant.
  PolyMatrix unimodular(const Field& f, std::size_t n, std::int64_t max_degree);
  /// Lattice with Laurent generators of exponents in [lo, hi].
  Lattice lattice(const Field& f, std::size_t n, std::int64_t lo, std::int64_t hi, double density = 0.5);
  /// Lattice g * diag(t^{c}) with g unimodular and c in [lo, hi].
  Lattice unimodular_lattice(const Field& f, std::size_t n, std::int64_t lo, std::int64_t hi, std::int64_t degree);
  Subspace subspace(const Field& f, std::size_t n, std::size_t dim);
  /// E + t^{-1}(lift of a random subspace): a lattice between E and t^{-1}E.
  Lattice close_lattice(const Field& f, std::size_t n);
  Apartment apartment(const Field& f, std::size_t n, std::int64_t max_degree);
  ApartmentPoint point(std::size_t n, std::int64_t lo, std::int64_t hi);
  /// Random composition of n into k nonnegative parts.
  std::vector<std::size_t> indices(std::size_t n, std::size_t k);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Lattice generated by the span of t^{-1}E-representatives of a subspace, plus E.
Lattice close_lattice_from(const Subspace& u);

}  // namespace affgr
