#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "affgr/lattice.hpp"

namespace affgr {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Maximal transversal with integer dual potentials: a_i + b_j >= c_ij, with
/// equality on the chosen transversal, normalized so that min b_j = 0.
struct AssignmentResult {
  std::vector<std::size_t> sigma;  ///< row i is matched to column sigma[i]
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  std::int64_t value = 0;
};

AssignmentResult kuhn_munkres(const IntMatrix& c);
/// Feasibility, primal = dual, and complementary slackness.
bool certificate_valid(const IntMatrix& c, const AssignmentResult& r);

/// A frame x_1..x_n of K^n.
class Apartment {
 public:
  /// Throws RankError if the columns are dependent.
  explicit Apartment(ScalarMatrix basis);
  static Apartment standard(const Field& f, std::size_t n);

  std::size_t rank() const { return basis_.rows(); }
  const ScalarMatrix& basis() const { return basis_; }
  std::int64_t det_valuation() const { return det_valuation_; }
  /// <t^{-c_1} x_1, ..., t^{-c_n} x_n>.
  Lattice lattice(std::span<const std::int64_t> c) const;

 private:
  ScalarMatrix basis_;
  std::int64_t det_valuation_ = 0;
};

/// Exponents c with L = <t^{-c_m} x_m>.
using ApartmentPoint = std::vector<std::int64_t>;

struct ApartmentValue {
  std::int64_t value = 0;
  IntMatrix replicated;  ///< row per unit of index, holding that lattice's exponents
  AssignmentResult assignment;
};

ApartmentValue apartment_value(const Apartment& a, std::span<const ApartmentPoint> points,
                               std::span<const std::size_t> idx);
std::int64_t apartment_multi_f(const Apartment& a, std::span<const ApartmentPoint> points,
                               std::span<const std::size_t> idx);

struct ApartmentWitness {
  Lattice witness;
  std::int64_t value = 0;
  AssignmentResult assignment;
};

/// P = <t^{-b_1} x_1, ..., t^{-b_n} x_n> from the dual potentials.
ApartmentWitness apartment_witness(const Apartment& a, std::span<const ApartmentPoint> points,
                                   std::span<const std::size_t> idx);

}  // namespace affgr
