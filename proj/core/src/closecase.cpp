#include "affgr/closecase.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include "affgr/detval.hpp"
#include "affgr/errors.hpp"

namespace affgr {

namespace {

Subspace residue_image(const Lattice& l, const Lattice& e, const Lattice& e_inv) {
  if (!l.includes(e) || !e_inv.includes(l)) throw RangeError("lattice is not between E and t^{-1}E");
  const std::size_t n = l.rank();
  std::vector<FieldVector> vecs;
  for (std::size_t c = 0; c < n; ++c) {
    FieldVector v;
    v.reserve(n);
    for (std::size_t r = 0; r < n; ++r) v.push_back(l.canonical_basis()(r, c).coeff(-1));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(l.field(), n, vecs);
}

std::size_t checked_diff(std::size_t a, std::size_t b) {
  if (a < b) throw std::logic_error("negative quiver multiplicity");
  return a - b;
}

void require_sum(const SubspaceTriple& t, std::size_t i, std::size_t j, std::size_t k) {
  if (i + j + k != t.u1.ambient()) throw IndexError("indices must sum to n");
}

}  // namespace

SubspaceTriple extract_triple(const Lattice& l, const Lattice& m, const Lattice& n) {
  if (l.rank() != m.rank() || l.rank() != n.rank()) throw std::invalid_argument("lattices of different rank");
  const Lattice e = Lattice::standard(l.field(), l.rank());
  const Lattice e_inv = e.scaled(-1);
  return {residue_image(l, e, e_inv), residue_image(m, e, e_inv), residue_image(n, e, e_inv)};
}

QuiverMultiplicities decompose(const SubspaceTriple& t) {
  const Subspace i12 = intersect(t.u1, t.u2);
  const Subspace i13 = intersect(t.u1, t.u3);
  const Subspace i23 = intersect(t.u2, t.u3);
  QuiverMultiplicities m;
  m.c = intersect(i12, t.u3).dim();
  m.b = checked_diff(i12.dim(), m.c);
  m.b1 = checked_diff(i13.dim(), m.c);
  m.b2 = checked_diff(i23.dim(), m.c);
  m.d = checked_diff(intersect(sum(t.u1, t.u2), t.u3).dim(), m.b1 + m.b2 + m.c);
  m.a = checked_diff(t.u1.dim(), m.b + m.b1 + m.c + m.d);
  m.a1 = checked_diff(t.u2.dim(), m.b + m.b2 + m.c + m.d);
  m.a2 = checked_diff(t.u3.dim(), m.b1 + m.b2 + m.c + m.d);
  m.s = checked_diff(t.u1.ambient(), m.a + m.a1 + m.a2 + m.b + m.b1 + m.b2 + m.c + 2 * m.d);
  return m;
}

FlowNetwork build_network(const QuiverMultiplicities& m, std::size_t i, std::size_t j, std::size_t k) {
  struct Rep {
    const char* name;
    std::size_t mult;
    std::int64_t width;
    bool in1, in2, in3;
  };
  const Rep reps[] = {
      {"A", m.a, 1, true, false, false},   {"A'", m.a1, 1, false, true, false},
      {"A''", m.a2, 1, false, false, true}, {"B", m.b, 1, true, true, false},
      {"B'", m.b1, 1, true, false, true},   {"B''", m.b2, 1, false, true, true},
      {"C", m.c, 1, true, true, true},      {"D", m.d, 2, true, true, true},
      {"S", m.s, 1, false, false, false},
  };
  FlowNetwork net;
  net.labels.push_back("source");
  std::vector<std::pair<std::size_t, const Rep*>> present;
  for (const auto& r : reps) {
    if (r.mult == 0) continue;
    present.emplace_back(net.labels.size(), &r);
    net.labels.push_back(r.name);
  }
  const std::size_t u_base = net.labels.size();
  net.labels.insert(net.labels.end(), {"U1", "U2", "U3", "sink"});
  net.vertex_count = net.labels.size();
  net.source = 0;
  net.sink = u_base + 3;
  for (const auto& [v, r] : present) {
    const auto mult = static_cast<std::int64_t>(r->mult);
    net.edges.push_back({net.source, v, mult * r->width});
    if (r->in1) net.edges.push_back({v, u_base, mult});
    if (r->in2) net.edges.push_back({v, u_base + 1, mult});
    if (r->in3) net.edges.push_back({v, u_base + 2, mult});
  }
  net.edges.push_back({u_base, net.sink, static_cast<std::int64_t>(i)});
  net.edges.push_back({u_base + 1, net.sink, static_cast<std::int64_t>(j)});
  net.edges.push_back({u_base + 2, net.sink, static_cast<std::int64_t>(k)});
  return net;
}

std::int64_t max_flow(const FlowNetwork& net) {
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Graph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, std::int64_t,
                      boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
  Graph g(net.vertex_count);
  auto cap = boost::get(boost::edge_capacity, g);
  auto rev = boost::get(boost::edge_reverse, g);
  for (const auto& e : net.edges) {
    const auto fwd = boost::add_edge(e.from, e.to, g).first;
    const auto back = boost::add_edge(e.to, e.from, g).first;
    cap[fwd] = e.capacity;
    cap[back] = 0;
    rev[fwd] = back;
    rev[back] = fwd;
  }
  return boost::edmonds_karp_max_flow(g, net.source, net.sink);
}

std::array<std::int64_t, 8> cut_terms(const SubspaceTriple& t, std::size_t i, std::size_t j, std::size_t k) {
  require_sum(t, i, j, k);
  auto d = [](const Subspace& s) { return static_cast<std::int64_t>(s.dim()); };
  const auto ii = static_cast<std::int64_t>(i);
  const auto jj = static_cast<std::int64_t>(j);
  const auto kk = static_cast<std::int64_t>(k);
  return {ii + jj + kk,
          jj + kk + d(t.u1),
          ii + kk + d(t.u2),
          ii + jj + d(t.u3),
          kk + d(sum(t.u1, t.u2)),
          jj + d(sum(t.u1, t.u3)),
          ii + d(sum(t.u2, t.u3)),
          d(sum(sum(t.u1, t.u2), t.u3))};
}

std::int64_t min_formula(const SubspaceTriple& t, std::size_t i, std::size_t j, std::size_t k) {
  const auto terms = cut_terms(t, i, j, k);
  return *std::min_element(terms.begin(), terms.end());
}

std::array<Lattice, 8> close_candidates(const Lattice& l, const Lattice& m, const Lattice& n) {
  const Lattice lm = sum(l, m);
  return {Lattice::standard(l.field(), l.rank()).scaled(1), l, m, n, lm, sum(l, n), sum(m, n), sum(lm, n)};
}

const char* close_candidate_name(std::size_t index) {
  static const char* const names[] = {"tE", "L", "M", "N", "L+M", "L+N", "M+N", "L+M+N"};
  return index < 8 ? names[index] : "?";
}

CloseWitness close_witness(const Lattice& l, const Lattice& m, const Lattice& n, std::size_t i, std::size_t j,
                           std::size_t k) {
  const SubspaceTriple t = extract_triple(l, m, n);
  const auto cuts = cut_terms(t, i, j, k);
  const std::size_t best = static_cast<std::size_t>(std::min_element(cuts.begin(), cuts.end()) - cuts.begin());
  const auto candidates = close_candidates(l, m, n);
  const std::vector<Lattice> triple{l, m, n};
  const std::vector<std::size_t> idx{i, j, k};
  CloseWitness w{candidates[best], cuts[best], best, cuts, {}, decompose(t)};
  for (std::size_t c = 0; c < candidates.size(); ++c) w.costs[c] = star_cost(idx, triple, candidates[c]);
  if (w.costs[best] != w.value) {
    // Not expected; fall back to the first candidate attaining the value.
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (w.costs[c] == w.value) {
        w.witness = candidates[c];
        w.candidate_index = c;
        break;
      }
    }
  }
  return w;
}

}  // namespace affgr
