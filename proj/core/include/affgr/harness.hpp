#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affgr/detval.hpp"
#include "affgr/lattice.hpp"
#include "affgr/metric.hpp"

namespace affgr {

enum class Strategy { close, apartment, enumerate, random };

const char* strategy_name(Strategy s);
/// Throws std::invalid_argument for an unknown label.
Strategy parse_strategy(std::string_view label);

enum class Status { verified, inconclusive };

const char* status_name(Status s);

struct Candidate {
  Lattice lattice;
  std::int64_t cost = 0;
};

struct ConjectureReport {
  std::int64_t lhs = 0;
  Status status = Status::inconclusive;
  /// Cheapest candidate seen (the first one on ties).
  std::optional<Candidate> best_candidate;
  std::vector<Candidate> candidates;
  std::size_t candidates_examined = 0;
  Strategy strategy = Strategy::enumerate;
  std::uint64_t seed = 0;
  /// Why a strategy abstained, empty otherwise.
  std::string note;

  /// The best candidate when verified.
  std::optional<Lattice> witness() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Cap on the number of candidates examined.
  std::size_t budget = 100000;
  std::size_t threads = 1;
  /// Extra frames for the apartment strategy (ordered bases, one per column).
  std::vector<ScalarMatrix> frames;
};

/// Searches for a lattice P with star_cost(idx, lattices, P) = multi_f(idx, lattices).
/// Throws IndexError when idx does not fit the lattices; every other failure
/// to find a witness is reported as inconclusive.
ConjectureReport verify_star(std::span<const std::size_t> idx, std::span<const Lattice> lattices, Strategy strategy,
                             const VerifyOptions& options = {});

/// Leaves are 0-based. Leaves in p_leaves hang off the internal node P, the
/// rest off Q.
class NetworkShape {
 public:
  static NetworkShape star(std::size_t k);
  /// Two internal nodes with the given leaves at P; the P-Q edge carries the
  /// sum of their indices on the P side.
  static NetworkShape two_node(std::size_t k, std::vector<std::size_t> p_leaves);
  /// (12)(34): leaves 1, 2 at P.
  static NetworkShape pairs_12_34() { return two_node(4, {0, 1}); }
  /// (41)(23): leaves 4, 1 at P.
  static NetworkShape pairs_41_23() { return two_node(4, {3, 0}); }

  bool is_star() const { return star_; }
  std::size_t leaves() const { return k_; }
  const std::vector<std::size_t>& p_leaves() const { return p_; }
  const std::vector<std::size_t>& q_leaves() const { return q_; }

 private:
  NetworkShape(bool star, std::size_t k, std::vector<std::size_t> p, std::vector<std::size_t> q)
      : star_(star), k_(k), p_(std::move(p)), q_(std::move(q)) {}

  bool star_ = true;
  std::size_t k_ = 0;
  std::vector<std::size_t> p_;
  std::vector<std::size_t> q_;
};

/// Leaf terms at P and Q, the P-Q edge term, minus 2 unary_f(P) and 2 unary_f(Q).
std::int64_t two_node_cost(std::span<const std::size_t> idx, std::span<const Lattice> lattices,
                           const NetworkShape& shape, const Lattice& p, const Lattice& q);

enum class Sl4Shape {
  /// L1 (weight 2) and L2 (weight 1) at P; L3 (weight 2) and L4 (weight 3) at Q.
  a,
  /// L4 (weight 3) and L1 (weight 2) at P; L2 (weight 1) and L3 (weight 2) at Q.
  b,
};

std::int64_t sl4_network_cost(std::span<const Lattice> lattices, Sl4Shape shape, const Lattice& p,
                              const Lattice& q);

/// Tropicalization of the network invariant matching the shape: the maximum
/// of -val over basis vectors of
///   a: sum_a (-1)^a det(u1, u2, v, x_a) det(x_b, x_c, w1, w2)
///   b: sum_a (-1)^a det(v, w1, w2, x_a) det(x_b, x_c, u1, u2)
/// with u from L1, v from L2, w from L3, x from L4. Empty when the invariant
/// vanishes identically.
std::optional<std::int64_t> sl4_network_valuation(std::span<const Lattice> lattices, Sl4Shape shape);

/// Lattice generated by t^{-lambda_m} v_m for the ordered basis v.
ScalarMatrix scale_basis(const ScalarMatrix& basis, const DominantCoweight& lambda);
std::vector<Lattice> scale_config(std::span<const ScalarMatrix> bases, std::span<const DominantCoweight> lambda);

struct AsymptoticResult {
  bool verified = false;           ///< verified at the last scheduled step
  std::optional<std::size_t> first_verified_step;
  std::vector<bool> step_verified;
};

/// For each step, scales the triple by its coweights and runs verify_star
/// for every (i, j, k) with the apartment strategy (the scaled bases are
/// offered as frames), falling back to enumeration over a prime field.
AsymptoticResult asymptotic_run(std::span<const ScalarMatrix> bases,
                                std::span<const std::vector<DominantCoweight>> schedule,
                                const VerifyOptions& options = {});
bool asymptotic_check(std::span<const ScalarMatrix> bases, std::span<const std::vector<DominantCoweight>> schedule,
                      const VerifyOptions& options = {});

struct PositivityFailure {
  std::size_t p = 0, q = 0, r = 0;
  IndexVector idx;
  std::string reason;
};

/// Rational field only (UnsupportedModeError otherwise).
std::optional<PositivityFailure> positivity_failure(std::span<const ScalarMatrix> bases);
bool positivity_check(std::span<const ScalarMatrix> bases);

}  // namespace affgr
