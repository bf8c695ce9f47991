#include <gtest/gtest.h>

#include "affgr/closecase.hpp"
#include "affgr/detval.hpp"
#include "affgr/errors.hpp"
#include "affgr/random.hpp"
#include "affgr/subspace_comb.hpp"
#include "builders.hpp"
#include "enumerate.hpp"

namespace affgr {
namespace {

using testing::diag;

const Field Q = Field::rational();
const Field F2 = Field::prime(2);

FieldVector vec(const Field& f, std::initializer_list<std::int64_t> xs) {
  FieldVector v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

Subspace line(const Field& f, std::initializer_list<std::int64_t> xs) {
  const std::vector<FieldVector> g{vec(f, xs)};
  return Subspace::span(f, xs.size(), g);
}

TEST(Closecase, ExtractTriple) {
  const Lattice e = Lattice::standard(Q, 3);
  const SubspaceTriple t0 = extract_triple(e, e, e);
  EXPECT_EQ(t0.u1.dim() + t0.u2.dim() + t0.u3.dim(), 0u);
  const Lattice l = diag(Q, {-1, 0, 0});
  EXPECT_EQ(extract_triple(l, e, e).u1, line(Q, {1, 0, 0}));
  const Lattice l2 = close_lattice_from(line(Q, {1, 1, 0}));
  EXPECT_EQ(extract_triple(l2, e, e).u1, line(Q, {1, 1, 0}));
  EXPECT_THROW(extract_triple(diag(Q, {-2, 0, 0}), e, e), RangeError);
  EXPECT_THROW(extract_triple(diag(Q, {1, 0, 0}), e, e), RangeError);
}

TEST(Closecase, DecomposeExamples) {
  const SubspaceTriple d{line(Q, {1, 0}), line(Q, {0, 1}), line(Q, {1, 1})};
  QuiverMultiplicities want;
  want.d = 1;
  EXPECT_EQ(decompose(d), want);
  const Subspace x = line(Q, {1, 0, 0});
  QuiverMultiplicities c;
  c.c = 1;
  c.s = 2;
  EXPECT_EQ(decompose({x, x, x}), c);
  const Subspace z = Subspace::zero(Q, 4);
  QuiverMultiplicities s;
  s.s = 4;
  EXPECT_EQ(decompose({z, z, z}), s);
}

TEST(Closecase, NetworkExamples) {
  QuiverMultiplicities only_s;
  only_s.s = 3;
  EXPECT_EQ(max_flow(build_network(only_s, 1, 1, 1)), 0);
  QuiverMultiplicities d;
  d.d = 1;
  EXPECT_EQ(max_flow(build_network(d, 1, 1, 0)), 2);
  QuiverMultiplicities c;
  c.c = 1;
  c.s = 2;
  EXPECT_EQ(max_flow(build_network(c, 1, 1, 1)), 1);
}

TEST(Closecase, MinFormulaAndWitnessExamples) {
  const Subspace x = line(Q, {1, 0, 0});
  EXPECT_EQ(min_formula({x, x, x}, 1, 1, 1), 1);
  const SubspaceTriple distinct{line(Q, {1, 0, 0}), line(Q, {0, 1, 0}), line(Q, {0, 0, 1})};
  EXPECT_EQ(min_formula(distinct, 1, 1, 1), 3);
  const Subspace z = Subspace::zero(Q, 3);
  EXPECT_EQ(min_formula({z, z, z}, 1, 1, 1), 0);

  const Lattice same = diag(Q, {-1, 0, 0});
  const CloseWitness w1 = close_witness(same, same, same, 1, 1, 1);
  EXPECT_EQ(w1.value, 1);
  EXPECT_EQ(w1.witness, same);
  EXPECT_EQ(close_candidate_name(w1.candidate_index), std::string("L+M+N"));
  EXPECT_EQ(w1.costs[w1.candidate_index], 1);

  const CloseWitness w2 = close_witness(diag(Q, {-1, 0, 0}), diag(Q, {0, -1, 0}), diag(Q, {0, 0, -1}), 1, 1, 1);
  EXPECT_EQ(w2.value, 3);
  EXPECT_EQ(w2.witness, Lattice::standard(Q, 3).scaled(1));

  const Lattice e = Lattice::standard(Q, 3);
  EXPECT_EQ(close_witness(e, e, e, 1, 1, 1).value, 0);
}

void expect_three_way(const Lattice& l, const Lattice& m, const Lattice& n, std::size_t i, std::size_t j,
                      std::size_t k) {
  const SubspaceTriple t = extract_triple(l, m, n);
  const QuiverMultiplicities q = decompose(t);
  const std::vector<Lattice> ls{l, m, n};
  const std::vector<std::size_t> idx{i, j, k};
  const std::int64_t value = multi_f(idx, ls);
  EXPECT_EQ(min_formula(t, i, j, k), value);
  EXPECT_EQ(max_flow(build_network(q, i, j, k)), value);
  EXPECT_EQ(static_cast<std::int64_t>(multiset_g(t.u1, t.u2, t.u3, i, j, k)), value);
  const CloseWitness w = close_witness(l, m, n, i, j, k);
  EXPECT_EQ(w.value, value);
  EXPECT_EQ(star_cost(idx, ls, w.witness), value);
  for (auto c : w.costs) EXPECT_GE(c, value);
}

void expect_table_identities(const SubspaceTriple& t) {
  const QuiverMultiplicities q = decompose(t);
  EXPECT_EQ(t.u1.dim(), q.a + q.b + q.b1 + q.c + q.d);
  EXPECT_EQ(t.u2.dim(), q.a1 + q.b + q.b2 + q.c + q.d);
  EXPECT_EQ(t.u3.dim(), q.a2 + q.b1 + q.b2 + q.c + q.d);
  EXPECT_EQ(t.u1.ambient(), q.a + q.a1 + q.a2 + q.b + q.b1 + q.b2 + q.c + 2 * q.d + q.s);
  EXPECT_EQ(intersect(t.u1, t.u2).dim(), q.b + q.c);
  EXPECT_EQ(intersect(t.u1, t.u3).dim(), q.b1 + q.c);
  EXPECT_EQ(intersect(t.u2, t.u3).dim(), q.b2 + q.c);
  EXPECT_EQ(sum(sum(t.u1, t.u2), t.u3).dim(), q.a + q.a1 + q.a2 + q.b + q.b1 + q.b2 + q.c + 2 * q.d);
  EXPECT_EQ(sum(t.u1, t.u2).dim(), q.a + q.a1 + q.b + q.b1 + q.b2 + q.c + 2 * q.d);
}

TEST(Closecase, ExhaustiveOverF2InDimensionTwo) {
  const auto subspaces = testing::all_subspaces(F2, 2);
  ASSERT_EQ(subspaces.size(), 5u);
  for (const auto& a : subspaces) {
    for (const auto& b : subspaces) {
      for (const auto& c : subspaces) {
        expect_table_identities({a, b, c});
        for (std::size_t i = 0; i <= 2; ++i) {
          for (std::size_t j = 0; i + j <= 2; ++j) {
            expect_three_way(close_lattice_from(a), close_lattice_from(b), close_lattice_from(c), i, j, 2 - i - j);
          }
        }
      }
    }
  }
}

TEST(Closecase, MinFormulaIsSymmetric) {
  InstanceRng rng(41);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t n = 3 + static_cast<std::size_t>(rng.uniform(0, 1));
    const SubspaceTriple t{rng.subspace(Q, n, static_cast<std::size_t>(rng.uniform(0, 3))),
                           rng.subspace(Q, n, static_cast<std::size_t>(rng.uniform(0, 3))),
                           rng.subspace(Q, n, static_cast<std::size_t>(rng.uniform(0, 3)))};
    const auto idx = rng.indices(n, 3);
    const std::int64_t v = min_formula(t, idx[0], idx[1], idx[2]);
    EXPECT_EQ(min_formula({t.u2, t.u1, t.u3}, idx[1], idx[0], idx[2]), v);
    EXPECT_EQ(min_formula({t.u3, t.u2, t.u1}, idx[2], idx[1], idx[0]), v);
    EXPECT_EQ(min_formula({t.u2, t.u3, t.u1}, idx[1], idx[2], idx[0]), v);
    expect_table_identities(t);
  }
}

TEST(Closecase, RandomRationalTriples) {
  InstanceRng rng(42);
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 2));
    const auto idx = rng.indices(n, 3);
    expect_three_way(rng.close_lattice(Q, n), rng.close_lattice(Q, n), rng.close_lattice(Q, n), idx[0], idx[1],
                     idx[2]);
  }
}

}  // namespace
}  // namespace affgr
