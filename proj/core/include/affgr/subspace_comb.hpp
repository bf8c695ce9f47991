#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "affgr/subspace.hpp"

namespace affgr {

/// Maximum number of distinct representatives, at most one per set, via
/// bipartite matching. For r <= 12 the subset formula is evaluated too and
/// must agree.
std::size_t konig_set_max(std::span<const std::vector<std::int64_t>> sets);
/// min over I of |union_{i in I} S_i| + r - |I|, by enumeration.
std::size_t konig_set_formula(std::span<const std::vector<std::int64_t>> sets);

/// min over I of dim(sum_{i in I} V_i) + r - |I|. Exact for r <= 20.
std::size_t konig_linear_value(std::span<const Subspace> subspaces);

/// Minimizing index set of the expression above; ties go to the smallest
/// set, then the lexicographically first.
std::vector<std::size_t> konig_minimizing_set(std::span<const Subspace> subspaces);

struct Representative {
  std::size_t index = 0;  ///< position in the input list
  FieldVector vector;
};

/// Linearly independent representatives, at most one per subspace, as many
/// as konig_linear_value.
std::vector<Representative> konig_linear_witness(std::span<const Subspace> subspaces);

/// True iff dim(sum_{i in I} V_i) >= |I| for every I.
bool moshonkin_check(std::span<const Subspace> subspaces);

/// konig_linear_value of U1 repeated i times, U2 j times, U3 k times.
std::size_t multiset_g(const Subspace& u1, const Subspace& u2, const Subspace& u3, std::size_t i, std::size_t j,
                       std::size_t k);

}  // namespace affgr
