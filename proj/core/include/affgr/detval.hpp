#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "affgr/lattice.hpp"

namespace affgr {

/// (i_1, ..., i_k), nonnegative with sum n.
using IndexVector = std::vector<std::size_t>;

struct MultiFResult {
  std::int64_t value = 0;
  /// selection[j] lists the canonical-basis columns of lattice j used by a
  /// maximizing determinant (the first one found in lexicographic order).
  std::vector<std::vector<std::size_t>> selection;
};

/// Maximum of -val det over i_j vectors from each L_j. The maximum is
/// attained on subsets of the canonical bases, which are searched with
/// branch and bound on partial pivot valuations.
MultiFResult multi_f_detail(std::span<const std::size_t> idx, std::span<const Lattice> lattices);
std::int64_t multi_f(std::span<const std::size_t> idx, std::span<const Lattice> lattices);

/// Reference implementation: exact determinant of every basis-subset
/// selection. Exponential; intended for tests.
std::int64_t multi_f_exhaustive(std::span<const std::size_t> idx, std::span<const Lattice> lattices);

/// sum_j binary_f(i_j, n - i_j, L_j, P) - (k-1) unary_f(P).
std::int64_t star_cost(std::span<const std::size_t> idx, std::span<const Lattice> lattices, const Lattice& p);

struct EdgeReduction {
  bool holds = false;
  std::int64_t multi = 0;      ///< multi_f((i,j), (L,M))
  std::int64_t padded = 0;     ///< multi_f((i,j,0), (L,M,L))
  std::int64_t binary = 0;     ///< binary_f(i,j,L,M)
  std::int64_t paired = 0;     ///< <omega_j, d(L,M)> + unary_f(L)
};

EdgeReduction edge_reduction(std::size_t i, std::size_t j, const Lattice& l, const Lattice& m);
inline bool edge_reduction_check(std::size_t i, std::size_t j, const Lattice& l, const Lattice& m) {
  return edge_reduction(i, j, l, m).holds;
}

/// Throws IndexError unless idx matches the lattices and sums to their rank.
void validate_indices(std::span<const std::size_t> idx, std::span<const Lattice> lattices);

}  // namespace affgr
