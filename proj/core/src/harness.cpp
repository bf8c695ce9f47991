#include "affgr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "affgr/apartment.hpp"
#include "affgr/closecase.hpp"
#include "affgr/errors.hpp"
#include "affgr/random.hpp"

namespace affgr {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::close: return "close";
    case Strategy::apartment: return "apartment";
    case Strategy::enumerate: return "enumerate";
    case Strategy::random: return "random";
  }
  return "?";
}

Strategy parse_strategy(std::string_view label) {
  if (label == "close") return Strategy::close;
  if (label == "apartment") return Strategy::apartment;
  if (label == "enumerate") return Strategy::enumerate;
  if (label == "random") return Strategy::random;
  throw std::invalid_argument("unknown strategy: " + std::string(label));
}

const char* status_name(Status s) { return s == Status::verified ? "verified" : "inconclusive"; }

std::optional<Lattice> ConjectureReport::witness() const {
  if (status != Status::verified || !best_candidate) return std::nullopt;
  return best_candidate->lattice;
}

namespace {

// Evaluates fn(0..count-1) on up to `threads` workers; results keep their order.
template <class Fn>
std::vector<std::int64_t> parallel_map(std::size_t count, std::size_t threads, Fn fn) {
  std::vector<std::int64_t> out(count);
  const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

class Collector {
 public:
  Collector(ConjectureReport& r, std::size_t budget) : r_(r), budget_(budget) {}

  bool done() const { return r_.status == Status::verified || r_.candidates_examined >= budget_; }
  std::size_t remaining() const { return budget_ - std::min(budget_, r_.candidates_examined); }

  void add(Lattice lattice, std::int64_t cost) {
    if (cost < r_.lhs) throw std::logic_error("candidate cost below the determinantal valuation");
    ++r_.candidates_examined;
    if (!r_.best_candidate || cost < r_.best_candidate->cost) r_.best_candidate = Candidate{lattice, cost};
    if (cost == r_.lhs) r_.status = Status::verified;
    r_.candidates.push_back(Candidate{std::move(lattice), cost});
  }

  // Costs the batch in parallel and records it in order, stopping at the
  // first witness or when the budget runs out.
  void add_batch(std::vector<Lattice> batch, std::span<const std::size_t> idx, std::span<const Lattice> lattices,
                 std::size_t threads) {
    if (batch.size() > remaining()) batch.erase(batch.begin() + static_cast<std::ptrdiff_t>(remaining()), batch.end());
    const auto costs =
        parallel_map(batch.size(), threads, [&](std::size_t i) { return star_cost(idx, lattices, batch[i]); });
    for (std::size_t i = 0; i < batch.size() && !done(); ++i) add(std::move(batch[i]), costs[i]);
  }

 private:
  ConjectureReport& r_;
  std::size_t budget_;
};

void run_close(std::span<const std::size_t> idx, std::span<const Lattice> lattices, Collector& out,
               ConjectureReport& report) {
  if (lattices.size() != 3) {
    report.note = "close strategy needs exactly three lattices";
    return;
  }
  const Lattice lo = intersect(lattices);
  const Lattice hi = sum(lattices);
  if (!lo.includes(hi.scaled(1))) {
    report.note = "triple is not close after any translation";
    return;
  }
  const ScalarMatrix h = lo.basis();
  const ScalarMatrix g = inverse(h);
  const Lattice l = lattices[0].transformed(g);
  const Lattice m = lattices[1].transformed(g);
  const Lattice n = lattices[2].transformed(g);
  const CloseWitness cw = close_witness(l, m, n, idx[0], idx[1], idx[2]);
  const auto cands = close_candidates(l, m, n);
  std::vector<std::size_t> order{cw.candidate_index};
  for (std::size_t c = 0; c < cands.size(); ++c) {
    if (c != cw.candidate_index) order.push_back(c);
  }
  for (std::size_t c : order) {
    if (out.remaining() == 0) break;
    Lattice back = cands[c].transformed(h);
    const std::int64_t cost = star_cost(idx, lattices, back);
    out.add(std::move(back), cost);
  }
}

// Exponents c with L = <t^{-c_m} x_m> when L is diagonal in the frame.
std::optional<ApartmentPoint> point_in_frame(const ScalarMatrix& frame_inverse, const Lattice& l) {
  const Lattice local = Lattice::from_columns(frame_inverse * l.basis());
  if (!local.is_diagonal()) return std::nullopt;
  ApartmentPoint c(local.rank());
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = -local.pivot_exponent(m);
  return c;
}

std::vector<ScalarMatrix> candidate_frames(std::span<const Lattice> lattices, const VerifyOptions& options) {
  std::vector<ScalarMatrix> frames = options.frames;
  frames.push_back(identity_scalar(lattices[0].field(), lattices[0].rank()));
  for (const auto& l : lattices) frames.push_back(l.basis());
  for (std::size_t a = 0; a < lattices.size(); ++a) {
    const ScalarMatrix ba = lattices[a].basis();
    const ScalarMatrix ba_inv = inverse(ba);
    for (std::size_t b = a + 1; b < lattices.size(); ++b) {
      const SmithForm sf = smith_form(ba_inv * lattices[b].basis());
      frames.push_back(ba * sf.row_inverse);
    }
  }
  return frames;
}

void run_apartment(std::span<const std::size_t> idx, std::span<const Lattice> lattices, const VerifyOptions& options,
                   Collector& out, ConjectureReport& report) {
  if (out.remaining() == 0) return;
  for (const ScalarMatrix& frame : candidate_frames(lattices, options)) {
    ScalarMatrix frame_inv;
    try {
      frame_inv = inverse(frame);
    } catch (const RankError&) {
      continue;
    }
    std::vector<ApartmentPoint> points;
    for (const auto& l : lattices) {
      auto c = point_in_frame(frame_inv, l);
      if (!c) break;
      points.push_back(std::move(*c));
    }
    if (points.size() != lattices.size()) continue;
    ApartmentWitness w = apartment_witness(Apartment(frame), points, idx);
    const std::int64_t cost = star_cost(idx, lattices, w.witness);
    out.add(std::move(w.witness), cost);
    return;
  }
  report.note = "no common apartment among the tried frames";
}

// Every nonzero coefficient vector in F_p^n, in lexicographic order.
std::vector<std::vector<FieldElem>> coefficient_vectors(const Field& f, std::size_t n) {
  const std::uint64_t p = f.modulus();
  std::vector<std::vector<FieldElem>> out;
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    std::vector<FieldElem> v;
    v.reserve(n);
    for (auto d : digits) v.push_back(f.from_int(static_cast<std::int64_t>(d)));
    out.push_back(std::move(v));
  }
}

void run_enumerate(std::span<const std::size_t> idx, std::span<const Lattice> lattices, const VerifyOptions& options,
                   Collector& out, ConjectureReport& report) {
  const Field f = lattices[0].field();
  const std::size_t n = lattices[0].rank();
  if (!f.is_prime()) {
    report.note = "enumeration needs a prime base field";
    return;
  }
  double combos = 1;
  for (std::size_t i = 0; i < n; ++i) combos *= static_cast<double>(f.modulus());
  if (combos > double(1 << 20)) {
    report.note = "residue space too large to enumerate";
    return;
  }
  const auto coeffs = coefficient_vectors(f, n);
  const Lattice lo = intersect(lattices);
  const Lattice hi = sum(lattices);
  std::unordered_set<Lattice, LatticeHash> seen{lo};
  std::vector<Lattice> layer{lo};
  out.add_batch(layer, idx, lattices, options.threads);
  // Every lattice between lo and hi is reached by adding one residue line at
  // a time, each line taken from (hi cap t^{-1}Q)/Q.
  while (!layer.empty() && !out.done()) {
    std::vector<Lattice> next;
    for (const Lattice& q : layer) {
      if (next.size() >= out.remaining()) break;
      const Lattice room = intersect(hi, q.scaled(-1));
      if (room == q) continue;
      const PolyMatrix& hr = room.canonical_basis();
      const PolyMatrix& hq = q.canonical_basis();
      for (const auto& c : coeffs) {
        std::vector<LaurentPoly> v(n, LaurentPoly(f));
        for (std::size_t col = 0; col < n; ++col) {
          if (c[col].is_zero()) continue;
          for (std::size_t r = 0; r < n; ++r) v[r] += hr(r, col).scaled(c[col]);
        }
        if (q.contains(std::span<const LaurentPoly>(v))) continue;
        PolyMatrix gens(n, n + 1, LaurentPoly(f));
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t col = 0; col < n; ++col) gens(r, col) = hq(r, col);
          gens(r, n) = v[r];
        }
        Lattice bigger = Lattice::from_generators(gens, q.containment_exponent());
        if (seen.insert(bigger).second) {
          next.push_back(std::move(bigger));
          if (next.size() >= out.remaining()) break;
        }
      }
    }
    out.add_batch(next, idx, lattices, options.threads);
    layer = std::move(next);
  }
}

void run_random(std::span<const std::size_t> idx, std::span<const Lattice> lattices, const VerifyOptions& options,
                Collector& out) {
  const Field f = lattices[0].field();
  const std::size_t n = lattices[0].rank();
  const std::size_t samples = std::min<std::size_t>(out.remaining(), 1000);
  if (samples == 0) return;
  const Lattice lo = intersect(lattices);
  const Lattice hi = sum(lattices);
  std::int64_t emin = 0, emax = 0;
  for (std::size_t i = 0; i < n; ++i) {
    emin = std::min({emin, hi.pivot_exponent(i), lo.pivot_exponent(i)});
    emax = std::max({emax, hi.pivot_exponent(i), lo.pivot_exponent(i)});
  }
  const std::vector<ScalarMatrix> frames = candidate_frames(lattices, options);
  InstanceRng rng(options.seed);
  std::vector<Lattice> batch;
  for (std::size_t s = 0; s < samples; ++s) {
    ScalarMatrix frame = rng.coin(0.5) ? frames[static_cast<std::size_t>(
                                             rng.uniform(0, static_cast<std::int64_t>(frames.size()) - 1))]
                                       : identity_scalar(f, n);
    frame = frame * to_scalar(rng.unimodular(f, n, 2));
    ApartmentPoint c = rng.point(n, -emax, -emin);
    batch.push_back(Apartment(frame).lattice(c));
  }
  const std::size_t chunk = 64;
  for (std::size_t start = 0; start < batch.size() && !out.done(); start += chunk) {
    const std::size_t stop = std::min(batch.size(), start + chunk);
    out.add_batch(std::vector<Lattice>(batch.begin() + static_cast<std::ptrdiff_t>(start),
                                       batch.begin() + static_cast<std::ptrdiff_t>(stop)),
                  idx, lattices, options.threads);
  }
}

}  // namespace

ConjectureReport verify_star(std::span<const std::size_t> idx, std::span<const Lattice> lattices, Strategy strategy,
                             const VerifyOptions& options) {
  validate_indices(idx, lattices);
  ConjectureReport report;
  report.strategy = strategy;
  report.seed = options.seed;
  report.lhs = multi_f(idx, lattices);
  Collector out(report, options.budget);
  switch (strategy) {
    case Strategy::close: run_close(idx, lattices, out, report); break;
    case Strategy::apartment: run_apartment(idx, lattices, options, out, report); break;
    case Strategy::enumerate: run_enumerate(idx, lattices, options, out, report); break;
    case Strategy::random: run_random(idx, lattices, options, out); break;
  }
  if (report.status == Status::verified) {
    const Lattice& w = report.best_candidate->lattice;
    if (star_cost(idx, lattices, w) != report.lhs || multi_f(idx, lattices) != report.lhs) {
      throw std::logic_error("witness failed its re-check");
    }
  }
  return report;
}

NetworkShape NetworkShape::star(std::size_t k) { return NetworkShape(true, k, {}, {}); }

NetworkShape NetworkShape::two_node(std::size_t k, std::vector<std::size_t> p_leaves) {
  std::vector<bool> at_p(k, false);
  for (std::size_t l : p_leaves) {
    if (l >= k || at_p[l]) throw std::invalid_argument("leaves at P must be distinct and below k");
    at_p[l] = true;
  }
  std::vector<std::size_t> q;
  for (std::size_t l = 0; l < k; ++l) {
    if (!at_p[l]) q.push_back(l);
  }
  if (p_leaves.empty() || q.empty()) throw std::invalid_argument("both internal nodes need a leaf");
  return NetworkShape(false, k, std::move(p_leaves), std::move(q));
}

std::int64_t two_node_cost(std::span<const std::size_t> idx, std::span<const Lattice> lattices,
                           const NetworkShape& shape, const Lattice& p, const Lattice& q) {
  validate_indices(idx, lattices);
  if (shape.leaves() != lattices.size()) throw IndexError("shape does not match the number of lattices");
  if (shape.is_star()) return star_cost(idx, lattices, p);
  const std::size_t n = p.rank();
  std::int64_t total = 0;
  std::size_t edge = 0;
  for (std::size_t l : shape.p_leaves()) {
    total += binary_f(idx[l], n - idx[l], lattices[l], p);
    edge += idx[l];
  }
  total += binary_f(edge, n - edge, p, q);
  for (std::size_t l : shape.q_leaves()) total += binary_f(idx[l], n - idx[l], lattices[l], q);
  total -= static_cast<std::int64_t>(shape.p_leaves().size()) * p.unary_f();
  total -= static_cast<std::int64_t>(shape.q_leaves().size()) * q.unary_f();
  return total;
}

std::int64_t sl4_network_cost(std::span<const Lattice> lattices, Sl4Shape shape, const Lattice& p, const Lattice& q) {
  if (lattices.size() != 4 || p.rank() != 4) throw IndexError("the SL4 networks need four lattices of rank 4");
  const Lattice& l1 = lattices[0];
  const Lattice& l2 = lattices[1];
  const Lattice& l3 = lattices[2];
  const Lattice& l4 = lattices[3];
  if (shape == Sl4Shape::a) {
    return binary_f(2, 2, l1, p) + binary_f(1, 3, l2, p) + binary_f(3, 1, p, q) + binary_f(2, 2, l3, q) +
           binary_f(3, 1, l4, q) - 2 * p.unary_f() - q.unary_f();
  }
  return binary_f(3, 1, l4, p) + binary_f(2, 2, l1, p) + binary_f(1, 3, p, q) + binary_f(1, 3, l2, q) +
         binary_f(2, 2, l3, q) - p.unary_f() - 2 * q.unary_f();
}

namespace {

LaurentPoly det_of_columns(const std::vector<std::vector<LaurentPoly>>& cols) {
  return cofactor_determinant(PolyMatrix::from_columns(cols));
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

std::optional<std::int64_t> sl4_network_valuation(std::span<const Lattice> lattices, Sl4Shape shape) {
  if (lattices.size() != 4 || lattices[0].rank() != 4) throw IndexError("the SL4 networks need four lattices of rank 4");
  const std::size_t n = 4;
  std::array<std::vector<std::vector<LaurentPoly>>, 4> cols;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t c = 0; c < n; ++c) cols[j].push_back(lattices[j].column(c));
  }
  // a: 3-vector u1^u2^v against x_a, and x_b^x_c against w1^w2.
  // b: 3-vector v^w1^w2 against x_a, and x_b^x_c against u1^u2.
  const auto& u = cols[0];
  const auto& v = cols[1];
  const auto& w = cols[2];
  const auto& x = cols[3];
  const auto pr = pairs_of(n);
  const Field f = lattices[0].field();
  // three[t][xa] where t enumerates the 3-vector choices.
  std::vector<std::vector<LaurentPoly>> three;
  std::vector<std::vector<LaurentPoly>> two;  // two[xpair][pair choice of the other lattice]
  if (shape == Sl4Shape::a) {
    for (const auto& [a, b] : pr) {
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<LaurentPoly> row;
        for (std::size_t xa = 0; xa < n; ++xa) row.push_back(det_of_columns({u[a], u[b], v[c], x[xa]}));
        three.push_back(std::move(row));
      }
    }
  } else {
    for (std::size_t c = 0; c < n; ++c) {
      for (const auto& [a, b] : pr) {
        std::vector<LaurentPoly> row;
        for (std::size_t xa = 0; xa < n; ++xa) row.push_back(det_of_columns({v[c], w[a], w[b], x[xa]}));
        three.push_back(std::move(row));
      }
    }
  }
  const auto& other = shape == Sl4Shape::a ? w : u;
  for (const auto& [xb, xc] : pr) {
    std::vector<LaurentPoly> row;
    for (const auto& [a, b] : pr) row.push_back(det_of_columns({x[xb], x[xc], other[a], other[b]}));
    two.push_back(std::move(row));
  }
  auto pair_index = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < pr.size(); ++i) {
      if (pr[i].first == a && pr[i].second == b) return i;
    }
    return pr.size();
  };
  std::optional<std::int64_t> best;
  for (std::size_t x0 = 0; x0 < n; ++x0) {
    for (std::size_t x1 = x0 + 1; x1 < n; ++x1) {
      for (std::size_t x2 = x1 + 1; x2 < n; ++x2) {
        const std::array<std::size_t, 3> xs{x0, x1, x2};
        for (std::size_t t = 0; t < three.size(); ++t) {
          for (std::size_t o = 0; o < pr.size(); ++o) {
            LaurentPoly acc(f);
            for (std::size_t a = 0; a < 3; ++a) {
              const std::size_t xb = xs[a == 0 ? 1 : 0];
              const std::size_t xc = xs[a == 2 ? 1 : 2];
              LaurentPoly term = three[t][xs[a]] * two[pair_index(xb, xc)][o];
              if (a == 1) acc -= term;
              else acc += term;
            }
            if (acc.is_zero()) continue;
            const std::int64_t val = -acc.valuation().value();
            if (!best || val > *best) best = val;
          }
        }
      }
    }
  }
  return best;
}

ScalarMatrix scale_basis(const ScalarMatrix& basis, const DominantCoweight& lambda) {
  if (lambda.size() != basis.cols()) throw IndexError("coweight length does not match the basis");
  ScalarMatrix out = basis;
  const Field f = basis(0, 0).field();
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    const ValuedScalar s = ValuedScalar::monomial(f.one(), -lambda[c]);
    for (std::size_t r = 0; r < basis.rows(); ++r) out(r, c) = basis(r, c) * s;
  }
  return out;
}

std::vector<Lattice> scale_config(std::span<const ScalarMatrix> bases, std::span<const DominantCoweight> lambda) {
  if (bases.size() != lambda.size()) throw IndexError("one coweight per basis is required");
  std::vector<Lattice> out;
  for (std::size_t i = 0; i < bases.size(); ++i) out.push_back(Lattice::from_columns(scale_basis(bases[i], lambda[i])));
  return out;
}

namespace {

void compositions_rec(std::size_t left, std::size_t parts, IndexVector& cur, std::vector<IndexVector>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(left);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t v = 0; v <= left; ++v) {
    cur.push_back(v);
    compositions_rec(left - v, parts, cur, out);
    cur.pop_back();
  }
}

std::vector<IndexVector> compositions(std::size_t n, std::size_t parts) {
  std::vector<IndexVector> out;
  if (parts == 0) return out;
  IndexVector cur;
  compositions_rec(n, parts, cur, out);
  return out;
}

}  // namespace

AsymptoticResult asymptotic_run(std::span<const ScalarMatrix> bases,
                                std::span<const std::vector<DominantCoweight>> schedule, const VerifyOptions& options) {
  AsymptoticResult result;
  if (bases.empty()) throw IndexError("no bases given");
  const std::size_t n = bases[0].rows();
  const Field f = bases[0](0, 0).field();
  const auto all_idx = compositions(n, bases.size());
  for (std::size_t s = 0; s < schedule.size(); ++s) {
    const std::vector<Lattice> lattices = scale_config(bases, schedule[s]);
    VerifyOptions opts = options;
    for (std::size_t i = 0; i < bases.size(); ++i) opts.frames.push_back(scale_basis(bases[i], schedule[s][i]));
    bool ok = true;
    for (const auto& idx : all_idx) {
      ConjectureReport r = verify_star(idx, lattices, Strategy::apartment, opts);
      if (r.status != Status::verified && f.is_prime()) r = verify_star(idx, lattices, Strategy::enumerate, opts);
      if (r.status != Status::verified) {
        ok = false;
        break;
      }
    }
    result.step_verified.push_back(ok);
    if (ok && !result.first_verified_step) result.first_verified_step = s;
  }
  result.verified = !result.step_verified.empty() && result.step_verified.back();
  return result;
}

bool asymptotic_check(std::span<const ScalarMatrix> bases, std::span<const std::vector<DominantCoweight>> schedule,
                      const VerifyOptions& options) {
  return asymptotic_run(bases, schedule, options).verified;
}

std::optional<PositivityFailure> positivity_failure(std::span<const ScalarMatrix> bases) {
  if (bases.empty()) return std::nullopt;
  const Field f = bases[0](0, 0).field();
  if (!f.is_rational()) throw UnsupportedModeError("positivity needs an ordered base field");
  const std::size_t n = bases[0].rows();
  std::vector<Lattice> lattices;
  for (const auto& b : bases) lattices.push_back(Lattice::from_columns(b));
  const auto all_idx = compositions(n, 3);
  for (std::size_t p = 0; p < bases.size(); ++p) {
    for (std::size_t q = p + 1; q < bases.size(); ++q) {
      for (std::size_t r = q + 1; r < bases.size(); ++r) {
        const std::array<Lattice, 3> trio{lattices[p], lattices[q], lattices[r]};
        const std::array<const ScalarMatrix*, 3> bs{&bases[p], &bases[q], &bases[r]};
        for (const auto& idx : all_idx) {
          std::vector<std::vector<ValuedScalar>> cols;
          for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t c = 0; c < idx[j]; ++c) cols.push_back(bs[j]->column(c));
          }
          const ValuedScalar d = determinant(ScalarMatrix::from_columns(cols));
          const std::int64_t target = multi_f(idx, trio);
          if (d.is_zero() || -d.valuation().value() != target) {
            return PositivityFailure{p, q, r, idx, "leading-subset determinant misses the valuation"};
          }
          if (d.leading_coefficient().sign() <= 0) {
            return PositivityFailure{p, q, r, idx, "leading coefficient is not positive"};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool positivity_check(std::span<const ScalarMatrix> bases) { return !positivity_failure(bases).has_value(); }

}  // namespace affgr
