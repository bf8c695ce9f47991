#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "affgr/lattice.hpp"
#include "affgr/subspace.hpp"

namespace affgr {

struct SubspaceTriple {
  Subspace u1;
  Subspace u2;
  Subspace u3;
};

/// Images of L, M, N in t^{-1}E/E = F^n. Requires E <= L, M, N <= t^{-1}E
/// (RangeError otherwise).
SubspaceTriple extract_triple(const Lattice& l, const Lattice& m, const Lattice& n);

/// Multiplicities of the nine injective indecomposable three-subspace
/// systems. Primes are spelled 1 and 2: a1 is A', a2 is A''.
struct QuiverMultiplicities {
  std::size_t a = 0, a1 = 0, a2 = 0;
  std::size_t b = 0, b1 = 0, b2 = 0;
  std::size_t c = 0, d = 0, s = 0;

  friend bool operator==(const QuiverMultiplicities&, const QuiverMultiplicities&) = default;
};

QuiverMultiplicities decompose(const SubspaceTriple& t);

struct FlowEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t capacity = 0;
};

/// Source, one vertex per indecomposable type present (capacities scaled by
/// multiplicity), the three U-vertices, and the sink.
struct FlowNetwork {
  std::size_t vertex_count = 0;
  std::size_t source = 0;
  std::size_t sink = 0;
  std::vector<std::string> labels;
  std::vector<FlowEdge> edges;
};

FlowNetwork build_network(const QuiverMultiplicities& m, std::size_t i, std::size_t j, std::size_t k);
std::int64_t max_flow(const FlowNetwork& net);

/// The eight cut capacities, in the order i+j+k, j+k+dim U1, i+k+dim U2,
/// i+j+dim U3, k+dim(U1+U2), j+dim(U1+U3), i+dim(U2+U3), dim(U1+U2+U3).
std::array<std::int64_t, 8> cut_terms(const SubspaceTriple& t, std::size_t i, std::size_t j, std::size_t k);
std::int64_t min_formula(const SubspaceTriple& t, std::size_t i, std::size_t j, std::size_t k);

/// tE, L, M, N, L+M, L+N, M+N, L+M+N; the k-th candidate answers the k-th cut term.
std::array<Lattice, 8> close_candidates(const Lattice& l, const Lattice& m, const Lattice& n);
const char* close_candidate_name(std::size_t index);

struct CloseWitness {
  Lattice witness;
  std::int64_t value = 0;
  std::size_t candidate_index = 0;
  std::array<std::int64_t, 8> cuts{};
  std::array<std::int64_t, 8> costs{};
  QuiverMultiplicities multiplicities;
};

/// Witness lattice among the eight candidates, chosen by the first minimal
/// cut term; its star cost equals the ternary valuation.
CloseWitness close_witness(const Lattice& l, const Lattice& m, const Lattice& n, std::size_t i, std::size_t j,
                           std::size_t k);

}  // namespace affgr
