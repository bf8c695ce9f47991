#include <gtest/gtest.h>

#include "affgr/errors.hpp"
#include "affgr/harness.hpp"
#include "affgr/io.hpp"
#include "affgr/random.hpp"
#include "builders.hpp"

namespace affgr {
namespace {

using testing::add;
using testing::diag;
using testing::mono;
using testing::unit;

const Field Q = Field::rational();
const Field F2 = Field::prime(2);

ScalarMatrix basis_of(const std::vector<std::vector<LaurentPoly>>& cols) {
  return to_scalar(PolyMatrix::from_columns(cols));
}

void expect_one_direction(const ConjectureReport& r) {
  EXPECT_EQ(r.candidates.size(), r.candidates_examined);
  for (const auto& c : r.candidates) EXPECT_GE(c.cost, r.lhs);
}

TEST(Harness, CloseSameLine) {
  const Lattice l = diag(Q, {-1, 0, 0});
  const std::vector<Lattice> t{l, l, l};
  const IndexVector idx{1, 1, 1};
  const ConjectureReport r = verify_star(idx, t, Strategy::close);
  EXPECT_EQ(r.lhs, 1);
  ASSERT_EQ(r.status, Status::verified);
  EXPECT_EQ(*r.witness(), sum(std::span<const Lattice>(t)));
  expect_one_direction(r);
}

TEST(Harness, CloseAfterTranslation) {
  InstanceRng rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const ScalarMatrix g = to_scalar(rng.unimodular(Q, n, 2));
    std::vector<Lattice> t;
    for (int j = 0; j < 3; ++j) t.push_back(rng.close_lattice(Q, n).transformed(g).scaled(trial % 3 - 1));
    const IndexVector idx = rng.indices(n, 3);
    const ConjectureReport r = verify_star(idx, t, Strategy::close);
    EXPECT_EQ(r.status, Status::verified) << trial;
    EXPECT_EQ(r.lhs, multi_f_exhaustive(idx, t));
    expect_one_direction(r);
  }
}

TEST(Harness, CloseAbstainsOnFarTriple) {
  const std::vector<Lattice> t{diag(Q, {-2, 0}), Lattice::standard(Q, 2), Lattice::standard(Q, 2)};
  const IndexVector idx{1, 1, 0};
  const ConjectureReport r = verify_star(idx, t, Strategy::close);
  EXPECT_EQ(r.status, Status::inconclusive);
  EXPECT_EQ(r.candidates_examined, 0u);
  EXPECT_FALSE(r.note.empty());
}

TEST(Harness, ApartmentInstance) {
  // Diagonal in the standard frame; the witness sits at the transversal potentials.
  const std::vector<Lattice> t{diag(Q, {-1, 0, 0}), diag(Q, {0, -1, 0}), diag(Q, {0, 0, 0})};
  const IndexVector idx{1, 1, 1};
  const ConjectureReport r = verify_star(idx, t, Strategy::apartment);
  EXPECT_EQ(r.lhs, 2);
  ASSERT_EQ(r.status, Status::verified);
  EXPECT_EQ(*r.witness(), Lattice::standard(Q, 3));
}

TEST(Harness, ApartmentInRandomFrame) {
  InstanceRng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Apartment a = rng.apartment(Q, n, 2);
    std::vector<Lattice> t;
    for (int j = 0; j < 3; ++j) t.push_back(a.lattice(rng.point(n, -3, 3)));
    const IndexVector idx = rng.indices(n, 3);
    // Without the frame the search is best effort; it may abstain but never errs.
    const ConjectureReport blind = verify_star(idx, t, Strategy::apartment);
    expect_one_direction(blind);
    VerifyOptions opts;
    opts.frames.push_back(a.basis());
    const ConjectureReport r = verify_star(idx, t, Strategy::apartment, opts);
    EXPECT_EQ(r.status, Status::verified) << trial;
  }
}

TEST(Harness, EnumerateSl2) {
  InstanceRng rng(13);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Lattice> t;
    for (int j = 0; j < 3; ++j) t.push_back(rng.lattice(F2, 2, -2, 2));
    const IndexVector idx = rng.indices(2, 3);
    const ConjectureReport r = verify_star(idx, t, Strategy::enumerate);
    EXPECT_EQ(r.status, Status::verified) << trial;
    EXPECT_EQ(star_cost(idx, t, *r.witness()), r.lhs);
    expect_one_direction(r);
  }
}

TEST(Harness, EnumerateStaysInsideTheBox) {
  InstanceRng rng(14);
  std::vector<Lattice> t;
  for (int j = 0; j < 3; ++j) t.push_back(rng.lattice(F2, 2, -1, 1));
  const IndexVector idx{2, 0, 0};
  VerifyOptions opts;
  opts.budget = 50;
  const ConjectureReport r = verify_star(idx, t, Strategy::enumerate, opts);
  const Lattice lo = intersect(std::span<const Lattice>(t));
  const Lattice hi = sum(std::span<const Lattice>(t));
  EXPECT_LE(r.candidates_examined, 50u);
  for (const auto& c : r.candidates) {
    EXPECT_TRUE(c.lattice.includes(lo));
    EXPECT_TRUE(hi.includes(c.lattice));
  }
}

TEST(Harness, EnumerateAbstainsOverRationals) {
  const std::vector<Lattice> t(3, Lattice::standard(Q, 2));
  const IndexVector idx{1, 1, 0};
  const ConjectureReport r = verify_star(idx, t, Strategy::enumerate);
  EXPECT_EQ(r.status, Status::inconclusive);
  EXPECT_FALSE(r.note.empty());
}

TEST(Harness, EmptyBudgetIsInconclusive) {
  const std::vector<Lattice> t(3, Lattice::standard(F2, 2));
  const IndexVector idx{1, 1, 0};
  VerifyOptions opts;
  opts.budget = 0;
  for (Strategy s : {Strategy::close, Strategy::apartment, Strategy::enumerate, Strategy::random}) {
    const ConjectureReport r = verify_star(idx, t, s, opts);
    EXPECT_EQ(r.status, Status::inconclusive) << strategy_name(s);
    EXPECT_EQ(r.candidates_examined, 0u);
  }
}

TEST(Harness, BadIndicesThrow) {
  const std::vector<Lattice> t(3, Lattice::standard(Q, 2));
  const IndexVector idx{1, 1, 1};
  EXPECT_THROW(verify_star(idx, t, Strategy::close), IndexError);
}

TEST(Harness, RandomIsDeterministic) {
  InstanceRng rng(15);
  std::vector<Lattice> t;
  for (int j = 0; j < 3; ++j) t.push_back(rng.lattice(F2, 3, -1, 1));
  const IndexVector idx{1, 1, 1};
  VerifyOptions opts;
  opts.seed = 99;
  opts.budget = 200;
  const auto a = io::encode(verify_star(idx, t, Strategy::random, opts)).dump();
  const auto b = io::encode(verify_star(idx, t, Strategy::random, opts)).dump();
  opts.threads = 3;
  const auto c = io::encode(verify_star(idx, t, Strategy::random, opts)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Harness, ThreadsDoNotChangeEnumeration) {
  InstanceRng rng(16);
  std::vector<Lattice> t;
  for (int j = 0; j < 3; ++j) t.push_back(rng.lattice(F2, 2, -2, 2));
  const IndexVector idx{1, 0, 1};
  VerifyOptions one;
  VerifyOptions many;
  many.threads = 4;
  EXPECT_EQ(io::encode(verify_star(idx, t, Strategy::enumerate, one)).dump(),
            io::encode(verify_star(idx, t, Strategy::enumerate, many)).dump());
}

TEST(NetworkShape, Validation) {
  EXPECT_THROW(NetworkShape::two_node(4, {0, 4}), std::invalid_argument);
  EXPECT_THROW(NetworkShape::two_node(4, {1, 1}), std::invalid_argument);
  EXPECT_THROW(NetworkShape::two_node(2, {0, 1}), std::invalid_argument);
  const NetworkShape s = NetworkShape::pairs_41_23();
  EXPECT_EQ(s.p_leaves(), (std::vector<std::size_t>{3, 0}));
  EXPECT_EQ(s.q_leaves(), (std::vector<std::size_t>{1, 2}));
}

TEST(TwoNode, Examples) {
  const std::vector<Lattice> e(4, Lattice::standard(Q, 4));
  const IndexVector ones{1, 1, 1, 1};
  EXPECT_EQ(two_node_cost(ones, e, NetworkShape::pairs_12_34(), e[0], e[0]), 0);
  // Lattice m gets t^{-1} on axis m; P = Q = tE. Each leaf term is -2, the
  // middle term -4, and the corrections add 16.
  std::vector<Lattice> axes;
  for (std::size_t m = 0; m < 4; ++m) {
    std::vector<std::int64_t> ex(4, 0);
    ex[m] = -1;
    axes.push_back(diag(Q, ex));
  }
  const Lattice te = Lattice::standard(Q, 4).scaled(1);
  EXPECT_EQ(two_node_cost(ones, axes, NetworkShape::pairs_12_34(), te, te), 4);
  EXPECT_EQ(two_node_cost(ones, axes, NetworkShape::pairs_41_23(), te, te), 4);
  EXPECT_EQ(star_cost(ones, axes, te), 4);
}

TEST(TwoNode, CoincidentNodesGiveTheStar) {
  InstanceRng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Field f = trial % 2 ? Q : F2;
    const std::size_t n = 2 + trial % 3;
    std::vector<Lattice> t;
    for (int j = 0; j < 4; ++j) t.push_back(rng.lattice(f, n, -2, 2));
    const Lattice p = rng.lattice(f, n, -2, 2);
    const IndexVector idx = rng.indices(n, 4);
    const std::int64_t star = star_cost(idx, t, p);
    EXPECT_EQ(two_node_cost(idx, t, NetworkShape::pairs_12_34(), p, p), star);
    EXPECT_EQ(two_node_cost(idx, t, NetworkShape::pairs_41_23(), p, p), star);
    const Lattice q = rng.lattice(f, n, -2, 2);
    EXPECT_GE(two_node_cost(idx, t, NetworkShape::pairs_12_34(), p, q), multi_f(idx, t));
  }
}

TEST(TwoNode, SymmetricInstance) {
  // Invariant under the relabeling 1<->2, 3<->4 composed with a cyclic shift.
  const Lattice a = diag(Q, {-1, 0, 2, 0});
  const Lattice b = diag(Q, {0, -1, 0, 1});
  const std::vector<Lattice> t{a, b, a, b};
  const IndexVector idx{1, 1, 1, 1};
  InstanceRng rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    const Lattice p = rng.lattice(Q, 4, -1, 1);
    const Lattice q = rng.lattice(Q, 4, -1, 1);
    EXPECT_EQ(two_node_cost(idx, t, NetworkShape::pairs_12_34(), p, q),
              two_node_cost(idx, t, NetworkShape::pairs_41_23(), q, p));
  }
}

TEST(Sl4, Examples) {
  const Lattice e = Lattice::standard(Q, 4);
  const std::vector<Lattice> all_e(4, e);
  EXPECT_EQ(sl4_network_cost(all_e, Sl4Shape::a, e, e), 0);
  EXPECT_EQ(sl4_network_cost(all_e, Sl4Shape::b, e, e), 0);
  EXPECT_EQ(sl4_network_valuation(all_e, Sl4Shape::a), 0);
  EXPECT_EQ(sl4_network_valuation(all_e, Sl4Shape::b), 0);
  // f22(L1, E) = 1 and f31(L4, E) = 2; everything else vanishes.
  const std::vector<Lattice> d{diag(Q, {-1, 0, 0, 0}), e, e, diag(Q, {0, 0, 0, -2})};
  EXPECT_EQ(sl4_network_cost(d, Sl4Shape::a, e, e), 3);
  EXPECT_EQ(sl4_network_cost(d, Sl4Shape::b, e, e), 3);
  EXPECT_THROW(sl4_network_cost(std::vector<Lattice>(4, Lattice::standard(Q, 3)), Sl4Shape::a,
                                Lattice::standard(Q, 3), Lattice::standard(Q, 3)),
               IndexError);
}

// -val of the invariant at arbitrary lattice vectors never exceeds the maximum
// over basis vectors.
TEST(Sl4, ValuationDominatesRandomVectors) {
  InstanceRng rng(19);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Lattice> t;
    for (int j = 0; j < 4; ++j) t.push_back(rng.lattice(F2, 4, -1, 1));
    const auto best = sl4_network_valuation(t, Sl4Shape::a);
    auto vec_in = [&](const Lattice& l) {
      std::vector<LaurentPoly> v(4, LaurentPoly(F2));
      for (std::size_t c = 0; c < 4; ++c) {
        const LaurentPoly coef = rng.poly(F2, 0, 2);
        const auto col = l.column(c);
        for (std::size_t r = 0; r < 4; ++r) v[r] += coef * col[r];
      }
      return v;
    };
    for (int s = 0; s < 5; ++s) {
      const auto u1 = vec_in(t[0]), u2 = vec_in(t[0]), v = vec_in(t[1]), w1 = vec_in(t[2]), w2 = vec_in(t[2]);
      const std::array<std::vector<LaurentPoly>, 3> x{vec_in(t[3]), vec_in(t[3]), vec_in(t[3])};
      LaurentPoly acc(F2);
      for (std::size_t a = 0; a < 3; ++a) {
        const auto& xb = x[a == 0 ? 1 : 0];
        const auto& xc = x[a == 2 ? 1 : 2];
        const ValuedScalar d1 = determinant(basis_of({u1, u2, v, x[a]}));
        const ValuedScalar d2 = determinant(basis_of({xb, xc, w1, w2}));
        acc += (d1 * d2).num();  // F2: signs are irrelevant
      }
      if (acc.is_zero()) continue;
      ASSERT_TRUE(best.has_value());
      EXPECT_LE(-acc.valuation().value(), *best);
    }
  }
}

TEST(Sl4, ShapesBoundTheInvariants) {
  InstanceRng rng(20);
  for (int trial = 0; trial < 6; ++trial) {
    const Field f = trial % 2 ? Q : F2;
    std::vector<Lattice> t;
    for (int j = 0; j < 4; ++j) t.push_back(rng.lattice(f, 4, -1, 1));
    const Lattice p = rng.lattice(f, 4, -1, 1);
    const Lattice q = rng.lattice(f, 4, -1, 1);
    if (auto va = sl4_network_valuation(t, Sl4Shape::a)) EXPECT_GE(sl4_network_cost(t, Sl4Shape::a, p, q), *va);
    if (auto vb = sl4_network_valuation(t, Sl4Shape::b)) EXPECT_GE(sl4_network_cost(t, Sl4Shape::b, p, q), *vb);
  }
}

TEST(ScaleConfig, Basics) {
  InstanceRng rng(21);
  const ScalarMatrix b = to_scalar(rng.unimodular(Q, 3, 2));
  const Lattice x = Lattice::from_columns(b);
  const std::vector<ScalarMatrix> bases{b};
  EXPECT_EQ(scale_config(bases, std::vector<DominantCoweight>{{0, 0, 0}})[0], x);
  EXPECT_EQ(scale_config(bases, std::vector<DominantCoweight>{{2, 2, 2}})[0], scale(x, -2));
  const ScalarMatrix e = identity_scalar(Q, 2);
  const std::vector<ScalarMatrix> pair{e, to_scalar(rng.unimodular(Q, 2, 2))};
  const auto far = scale_config(pair, std::vector<DominantCoweight>{{8, 0}, {0, 0}});
  EXPECT_EQ(distance(far[1], far[0]), (DominantCoweight{8, 0}));
  EXPECT_THROW(DominantCoweight({0, 1}), std::invalid_argument);
}

TEST(Asymptotic, Examples) {
  const std::vector<ScalarMatrix> same(3, identity_scalar(Q, 2));
  const std::vector<std::vector<DominantCoweight>> zero{{{0, 0}, {0, 0}, {0, 0}}};
  EXPECT_TRUE(asymptotic_check(same, zero));

  InstanceRng rng(22);
  std::vector<ScalarMatrix> sl2;
  for (int j = 0; j < 3; ++j) sl2.push_back(rng.lattice(F2, 2, -1, 1).basis());
  std::vector<std::vector<DominantCoweight>> grow;
  for (std::int64_t s = 0; s <= 5; ++s) grow.push_back({{s, 0}, {0, 0}, {s, s}});
  EXPECT_TRUE(asymptotic_check(sl2, grow));

  const Apartment a = rng.apartment(Q, 3, 2);
  std::vector<ScalarMatrix> frame(3, a.basis());
  std::vector<std::vector<DominantCoweight>> big{{{8, 4, 0}, {6, 6, 1}, {3, 0, 0}}};
  const AsymptoticResult res = asymptotic_run(frame, big);
  EXPECT_TRUE(res.verified);
  EXPECT_EQ(res.first_verified_step, std::optional<std::size_t>(0));
}

TEST(Positivity, Examples) {
  const std::vector<LaurentPoly> e1 = unit(Q, 2, 0), e2 = unit(Q, 2, 1);
  const std::vector<LaurentPoly> s1 = unit(Q, 2, 0, -1), s2 = unit(Q, 2, 1, -1);
  auto neg = [](std::vector<LaurentPoly> v) {
    for (auto& x : v) x = -x;
    return v;
  };
  // E, <t^-1 e1, e2>, t^-1 E with bases ordered so every leading determinant
  // is a positive monomial of the right valuation.
  std::vector<ScalarMatrix> bases{basis_of({neg(e2), e1}), basis_of({s1, e2}), basis_of({add(s1, s2), s2})};
  EXPECT_TRUE(positivity_check(bases));
  bases[1] = basis_of({neg(s1), e2});
  const auto fail = positivity_failure(bases);
  ASSERT_TRUE(fail.has_value());
  EXPECT_EQ(fail->reason, "leading coefficient is not positive");
  // Ordering e1 first in E kills the (1,1,0) determinant.
  bases[1] = basis_of({s1, e2});
  bases[0] = basis_of({e1, e2});
  EXPECT_FALSE(positivity_check(bases));
  EXPECT_TRUE(positivity_check(std::vector<ScalarMatrix>(2, identity_scalar(Q, 2))));
  EXPECT_THROW(positivity_check(std::vector<ScalarMatrix>(3, identity_scalar(F2, 2))), UnsupportedModeError);
}

}  // namespace
}  // namespace affgr
