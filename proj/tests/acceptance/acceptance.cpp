// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is an
// exact integer equality or inequality; each criterion also has a wall-clock
// limit. Usage: acceptance [criterion-number ...]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "affgr/apartment.hpp"
#include "affgr/closecase.hpp"
#include "affgr/detval.hpp"
#include "affgr/harness.hpp"
#include "affgr/metric.hpp"
#include "affgr/random.hpp"
#include "affgr/subspace_comb.hpp"
#include "enumerate.hpp"
#include "f2_oracle.hpp"

namespace affgr {
namespace {

const Field Q = Field::rational();
const Field F2 = Field::prime(2);

struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what();
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

std::vector<IndexVector> compositions(std::size_t n, std::size_t parts) {
  std::vector<IndexVector> out;
  IndexVector cur(parts, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == parts) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, n);
  return out;
}

std::string idx_text(const IndexVector& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "(") << idx[i];
  os << ")";
  return os.str();
}

void binary_proposition(Outcome& out) {
  InstanceRng rng(1001);
  for (int trial = 0; trial < 300; ++trial) {
    const Field f = trial % 2 ? Q : F2;
    const std::size_t n = 2 + trial % 3;
    const std::array<Lattice, 2> pair{rng.lattice(f, n, 0, 3), rng.lattice(f, n, 0, 3)};
    for (std::size_t i = 0; i <= n; ++i) {
      const IndexVector idx{i, n - i};
      const std::int64_t got = binary_f(i, n - i, pair[0], pair[1]);
      const std::int64_t want = multi_f_exhaustive(idx, pair);
      out.expect(got == want, [&] { return "trial " + std::to_string(trial) + " idx " + idx_text(idx); });
    }
  }
}

void check_close_triple(Outcome& out, const Lattice& l, const Lattice& m, const Lattice& nn, const IndexVector& idx,
                        const std::string& label) {
  const std::array<Lattice, 3> t{l, m, nn};
  const SubspaceTriple s = extract_triple(l, m, nn);
  const std::int64_t value = multi_f(idx, t);
  const std::int64_t formula = min_formula(s, idx[0], idx[1], idx[2]);
  const std::int64_t flow = max_flow(build_network(decompose(s), idx[0], idx[1], idx[2]));
  const CloseWitness w = close_witness(l, m, nn, idx[0], idx[1], idx[2]);
  const std::int64_t cost = star_cost(idx, t, w.witness);
  // The witness must come from the case analysis, not from the fallback scan.
  const auto first_min = static_cast<std::size_t>(std::min_element(w.cuts.begin(), w.cuts.end()) - w.cuts.begin());
  out.expect(value == formula && formula == flow && cost == value && w.candidate_index == first_min, [&] {
    std::ostringstream os;
    os << label << " idx " << idx_text(idx) << ": multi_f " << value << ", formula " << formula << ", flow " << flow
       << ", witness cost " << cost;
    return os.str();
  });
}

void close_exhaustive(Outcome& out) {
  for (std::size_t n : {2u, 3u}) {
    const auto subs = testing::all_subspaces(F2, n);
    std::vector<Lattice> lifted;
    for (const auto& s : subs) lifted.push_back(close_lattice_from(s));
    const auto all_idx = compositions(n, 3);
    for (std::size_t a = 0; a < subs.size(); ++a) {
      for (std::size_t b = 0; b < subs.size(); ++b) {
        for (std::size_t c = 0; c < subs.size(); ++c) {
          for (const auto& idx : all_idx) {
            check_close_triple(out, lifted[a], lifted[b], lifted[c], idx,
                               "n=" + std::to_string(n) + " triple " + std::to_string(a) + "," + std::to_string(b) +
                                   "," + std::to_string(c));
          }
        }
      }
    }
  }
}

void close_random(Outcome& out) {
  InstanceRng rng(1003);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Lattice l = rng.close_lattice(Q, n), m = rng.close_lattice(Q, n), nn = rng.close_lattice(Q, n);
    check_close_triple(out, l, m, nn, rng.indices(n, 3), "trial " + std::to_string(trial));
  }
}

void apartments(Outcome& out) {
  InstanceRng rng(1004);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const std::size_t k = 1 + (trial / 5) % 5;
    const Field f = trial % 3 == 0 ? F2 : Q;
    const Apartment a = rng.apartment(f, n, 2);
    std::vector<ApartmentPoint> points;
    std::vector<Lattice> lattices;
    for (std::size_t j = 0; j < k; ++j) {
      points.push_back(rng.point(n, -5, 5));
      lattices.push_back(a.lattice(points.back()));
    }
    const IndexVector idx = rng.indices(n, k);
    const ApartmentWitness w = apartment_witness(a, points, idx);
    const ApartmentValue v = apartment_value(a, points, idx);
    const std::int64_t value = multi_f(idx, lattices);
    const std::int64_t cost = star_cost(idx, lattices, w.witness);
    const bool cert = certificate_valid(v.replicated, w.assignment);
    out.expect(cert && cost == value && w.value == value, [&] {
      std::ostringstream os;
      os << "trial " << trial << " n=" << n << " k=" << k << ": multi_f " << value << ", apartment " << w.value
         << ", witness cost " << cost << ", certificate " << (cert ? "ok" : "bad");
      return os.str();
    });
  }
}

bool representatives_valid(const std::vector<Subspace>& spaces, const std::vector<Representative>& reps) {
  std::set<std::size_t> used;
  std::vector<FieldVector> vecs;
  for (const auto& r : reps) {
    if (r.index >= spaces.size() || !used.insert(r.index).second) return false;
    if (!spaces[r.index].contains(r.vector)) return false;
    vecs.push_back(r.vector);
  }
  return rank_of(F2, spaces.front().ambient(), vecs) == vecs.size();
}

void konig(Outcome& out) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto subs = testing::all_subspaces(F2, n);
    for (std::size_t r = 1; r <= 4; ++r) {
      // Nondecreasing index tuples: every multiset of r subspaces.
      std::vector<std::size_t> pick(r, 0);
      while (true) {
        std::vector<Subspace> spaces;
        for (auto p : pick) spaces.push_back(subs[p]);
        const std::size_t value = konig_linear_value(spaces);
        const std::size_t oracle = testing::max_independent_representatives(spaces);
        const auto reps = konig_linear_witness(spaces);
        const bool mosh = moshonkin_check(spaces);
        out.expect(value == oracle && reps.size() == value && representatives_valid(spaces, reps) &&
                       mosh == (value == r),
                   [&] {
                     std::ostringstream os;
                     os << "n=" << n << " r=" << r << ": value " << value << ", oracle " << oracle << ", witness "
                        << reps.size();
                     return os.str();
                   });
        std::size_t pos = r;
        while (pos > 0 && pick[pos - 1] + 1 == subs.size()) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t q = pos; q < r; ++q) pick[q] = pick[pos - 1];
      }
    }
  }
}

void sl2(Outcome& out) {
  InstanceRng rng(1006);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Lattice> t;
    for (int j = 0; j < 3; ++j) t.push_back(rng.lattice(F2, 2, -3, 3));
    // A single nonzero index makes every P optimal, so only the split ones are used.
    IndexVector idx{1, 1, 1};
    idx[static_cast<std::size_t>(trial % 3)] = 0;
    const ConjectureReport r = verify_star(idx, t, Strategy::enumerate);
    out.expect(r.status == Status::verified, [&] {
      return "trial " + std::to_string(trial) + " idx " + idx_text(idx) + ": inconclusive after " +
             std::to_string(r.candidates_examined) + " candidates";
    });
  }
}

void one_direction(Outcome& out) {
  InstanceRng rng(1007);
  for (int trial = 0; trial < 500; ++trial) {
    const Field f = trial % 2 ? Q : F2;
    const std::size_t n = 2 + trial % 3;
    std::vector<Lattice> t;
    for (int j = 0; j < 3; ++j) t.push_back(rng.lattice(f, n, -2, 2));
    const Lattice p = rng.lattice(f, n, -2, 2);
    const IndexVector idx = rng.indices(n, 3);
    const std::int64_t lhs = multi_f(idx, t);
    const std::int64_t rhs = star_cost(idx, t, p);
    out.expect(lhs <= rhs, [&] {
      return "trial " + std::to_string(trial) + ": multi_f " + std::to_string(lhs) + " > star cost " +
             std::to_string(rhs);
    });
  }
}

DominantCoweight random_coweight(InstanceRng& rng, std::size_t n, std::int64_t hi) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = rng.uniform(0, hi);
  std::sort(v.rbegin(), v.rend());
  return DominantCoweight(v);
}

void asymptotic(Outcome& out) {
  InstanceRng rng(1008);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const Field f = trial % 2 ? Q : F2;
    const Apartment a = rng.apartment(f, n, 2);
    std::vector<ScalarMatrix> bases;
    for (int j = 0; j < 3; ++j) bases.push_back(a.lattice(rng.point(n, -2, 2)).basis());
    // Ordered bases adapted to the frame: x_m scaled into each lattice.
    for (auto& b : bases) {
      const Lattice l = Lattice::from_columns(b);
      const Lattice local = Lattice::from_columns(inverse(a.basis()) * l.basis());
      b = a.basis();
      for (std::size_t m = 0; m < n; ++m) {
        const ValuedScalar s = ValuedScalar::monomial(f.one(), local.pivot_exponent(m));
        for (std::size_t r = 0; r < n; ++r) b(r, m) = b(r, m) * s;
      }
    }
    std::vector<DominantCoweight> target;
    for (int j = 0; j < 3; ++j) target.push_back(random_coweight(rng, n, 8));
    std::vector<std::vector<DominantCoweight>> schedule;
    for (std::int64_t s = 0; s <= 4; ++s) {
      std::vector<DominantCoweight> step;
      for (const auto& lam : target) {
        std::vector<std::int64_t> v;
        for (auto x : lam.values()) v.push_back(x * s / 4);
        step.emplace_back(v);
      }
      schedule.push_back(std::move(step));
    }
    const AsymptoticResult r = asymptotic_run(bases, schedule);
    out.expect(r.verified, [&] { return "trial " + std::to_string(trial) + " not verified at the last step"; });
  }
}

void metric(Outcome& out) {
  InstanceRng rng(1009);
  for (int trial = 0; trial < 300; ++trial) {
    const Field f = trial % 2 ? Q : F2;
    const std::size_t n = 2 + trial % 3;
    const Lattice l = rng.lattice(f, n, -2, 2), m = rng.lattice(f, n, -2, 2), nn = rng.lattice(f, n, -2, 2);
    const DominantCoweight lm = distance(l, m), ml = distance(m, l), mn = distance(m, nn), ln = distance(l, nn);
    out.expect(ml == lm.reversed_negated(), [&] { return "antisymmetry, trial " + std::to_string(trial); });
    out.expect(lm.total() == m.unary_f() - l.unary_f(), [&] { return "additivity, trial " + std::to_string(trial); });
    out.expect(dominance_leq(ln, lm + mn), [&] { return "triangle, trial " + std::to_string(trial); });
    PolyMatrix g = rng.unimodular(f, n, 2);
    std::vector<std::int64_t> shift(n, 0);
    for (std::size_t c = 0; c + 1 < n; ++c) {
      shift[c] = rng.uniform(-2, 2);
      shift[n - 1] -= shift[c];
    }
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < n; ++r) g(r, c) = g(r, c).shifted(shift[c]);
    }
    const ScalarMatrix gs = to_scalar(g);
    out.expect(distance(l.transformed(gs), m.transformed(gs)) == lm,
               [&] { return "translation, trial " + std::to_string(trial); });
  }
}

void network(Outcome& out) {
  InstanceRng rng(1010);
  for (int trial = 0; trial < 100; ++trial) {
    const Field f = trial % 2 ? Q : F2;
    std::vector<Lattice> t;
    for (int j = 0; j < 4; ++j) t.push_back(rng.lattice(f, 4, -1, 1));
    const Lattice p = rng.lattice(f, 4, -1, 1);
    const Lattice q = rng.lattice(f, 4, -1, 1);
    const IndexVector idx = rng.indices(4, 4);
    const std::int64_t star = star_cost(idx, t, p);
    const std::int64_t s1 = two_node_cost(idx, t, NetworkShape::pairs_12_34(), p, p);
    const std::int64_t s2 = two_node_cost(idx, t, NetworkShape::pairs_41_23(), p, p);
    out.expect(s1 == star && s2 == star, [&] {
      return "trial " + std::to_string(trial) + ": star " + std::to_string(star) + ", two-node " +
             std::to_string(s1) + "/" + std::to_string(s2);
    });
    for (Sl4Shape shape : {Sl4Shape::a, Sl4Shape::b}) {
      const auto bound = sl4_network_valuation(t, shape);
      const std::int64_t cost = sl4_network_cost(t, shape, p, q);
      out.expect(!bound || cost >= *bound, [&] {
        return "trial " + std::to_string(trial) + " shape " + (shape == Sl4Shape::a ? "a" : "b") + ": cost " +
               std::to_string(cost) + " < " + std::to_string(*bound);
      });
    }
  }
}

}  // namespace
}  // namespace affgr

int main(int argc, char** argv) {
  using namespace affgr;
  const std::vector<Criterion> all{
      {1, "binary_f equals the brute-force oracle", 60, binary_proposition},
      {2, "close case, exhaustive over F2", 120, close_exhaustive},
      {3, "close case, random over Q", 120, close_random},
      {4, "apartment witness and certificate", 120, apartments},
      {5, "linear Konig, exhaustive over F2", 60, konig},
      {6, "SL2 enumeration always verifies", 120, sl2},
      {7, "one-direction inequality", 120, one_direction},
      {8, "asymptotic scaling verifies", 120, asymptotic},
      {9, "metric properties", 120, metric},
      {10, "two-node and SL4 network consistency", 120, network},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(out);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && out.failures == 0 && secs <= c.limit_seconds;
    failed += pass ? 0 : 1;
    std::printf("%s  [%2d] %-42s checks=%zu failures=%zu time=%.2fs limit=%.0fs", pass ? "PASS" : "FAIL", c.id,
                c.name, out.checks, out.failures, secs, c.limit_seconds);
    if (!error.empty()) std::printf("  exception: %s", error.c_str());
    if (out.failures) std::printf("  first: %s", out.first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
