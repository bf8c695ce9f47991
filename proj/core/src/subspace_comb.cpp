#include "affgr/subspace_comb.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace affgr {

namespace {

constexpr std::size_t kMaxSubsets = 20;

void require_common_ambient(std::span<const Subspace> subspaces) {
  for (const auto& s : subspaces) {
    if (s.ambient() != subspaces.front().ambient() || !(s.field() == subspaces.front().field())) {
      throw std::invalid_argument("subspaces must share an ambient space");
    }
  }
}

struct SubsetOptimum {
  std::size_t value = 0;
  std::vector<std::size_t> set;
};

// Depth-first over include/exclude decisions with running sums. Sets are
// visited in an order that makes the first strict improvement among equal
// cardinalities the lexicographically first one.
void search_subsets(std::span<const Subspace> v, std::size_t pos, const Subspace& acc, std::vector<std::size_t>& set,
                    std::optional<SubsetOptimum>& best) {
  if (pos == v.size()) {
    const std::size_t value = acc.dim() + v.size() - set.size();
    const bool better = !best || value < best->value ||
                        (value == best->value &&
                         (set.size() < best->set.size() || (set.size() == best->set.size() && set < best->set)));
    if (better) best = SubsetOptimum{value, set};
    return;
  }
  set.push_back(pos);
  search_subsets(v, pos + 1, sum(acc, v[pos]), set, best);
  set.pop_back();
  search_subsets(v, pos + 1, acc, set, best);
}

SubsetOptimum minimize_subsets(std::span<const Subspace> subspaces) {
  if (subspaces.empty()) return {};
  if (subspaces.size() > kMaxSubsets) throw std::invalid_argument("too many subspaces for exact enumeration");
  require_common_ambient(subspaces);
  std::optional<SubsetOptimum> best;
  std::vector<std::size_t> set;
  search_subsets(subspaces, 0, Subspace::zero(subspaces.front().field(), subspaces.front().ambient()), set, best);
  return *best;
}

struct Element {
  std::size_t group;
  FieldVector vec;
};

// Largest set of elements, at most one per group, whose vectors are
// independent modulo `modulo` (given by its basis). Augmenting paths in the
// exchange graph of the linear and partition matroids.
std::vector<std::size_t> matroid_intersection(const Field& f, std::size_t dim, const std::vector<Element>& ground,
                                              const std::vector<FieldVector>& modulo) {
  const std::size_t g = ground.size();
  std::vector<bool> in(g, false);
  auto independent = [&](const std::vector<std::size_t>& members) {
    std::vector<FieldVector> vecs = modulo;
    for (std::size_t e : members) vecs.push_back(ground[e].vec);
    return rank_of(f, dim, vecs) == modulo.size() + members.size();
  };
  auto current = [&] {
    std::vector<std::size_t> s;
    for (std::size_t e = 0; e < g; ++e) {
      if (in[e]) s.push_back(e);
    }
    return s;
  };
  auto partition_ok = [&](const std::vector<std::size_t>& members) {
    std::vector<std::size_t> groups;
    for (std::size_t e : members) groups.push_back(ground[e].group);
    std::sort(groups.begin(), groups.end());
    return std::adjacent_find(groups.begin(), groups.end()) == groups.end();
  };
  auto swapped = [](std::vector<std::size_t> s, std::size_t out, std::size_t add) {
    s.erase(std::find(s.begin(), s.end(), out));
    s.push_back(add);
    return s;
  };

  while (true) {
    const std::vector<std::size_t> s = current();
    std::vector<std::vector<std::size_t>> adj(g);
    std::vector<bool> source(g, false), sink(g, false);
    for (std::size_t x = 0; x < g; ++x) {
      if (in[x]) continue;
      std::vector<std::size_t> plus = s;
      plus.push_back(x);
      source[x] = independent(plus);
      sink[x] = partition_ok(plus);
      for (std::size_t y : s) {
        const auto exch = swapped(s, y, x);
        if (independent(exch)) adj[y].push_back(x);
        if (partition_ok(exch)) adj[x].push_back(y);
      }
    }
    std::vector<std::ptrdiff_t> parent(g, -2);
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < g; ++x) {
      if (source[x]) {
        parent[x] = -1;
        queue.push_back(x);
      }
    }
    std::optional<std::size_t> end;
    while (!queue.empty() && !end) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (!in[u] && sink[u]) {
        end = u;
        break;
      }
      for (std::size_t w : adj[u]) {
        if (parent[w] != -2) continue;
        parent[w] = static_cast<std::ptrdiff_t>(u);
        queue.push_back(w);
      }
    }
    if (!end) return s;
    for (std::ptrdiff_t u = static_cast<std::ptrdiff_t>(*end); u >= 0; u = parent[static_cast<std::size_t>(u)]) {
      in[static_cast<std::size_t>(u)] = !in[static_cast<std::size_t>(u)];
    }
  }
}

}  // namespace

std::size_t konig_set_formula(std::span<const std::vector<std::int64_t>> sets) {
  const std::size_t r = sets.size();
  if (r > kMaxSubsets) throw std::invalid_argument("too many sets for exact enumeration");
  std::size_t best = r;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    std::vector<std::int64_t> u;
    std::size_t count = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (!(mask >> i & 1)) continue;
      ++count;
      u.insert(u.end(), sets[i].begin(), sets[i].end());
    }
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    best = std::min(best, u.size() + r - count);
  }
  return best;
}

std::size_t konig_set_max(std::span<const std::vector<std::int64_t>> sets) {
  const std::size_t r = sets.size();
  if (r == 0) return 0;
  std::map<std::int64_t, std::size_t> element_vertex;
  for (const auto& s : sets) {
    for (auto x : s) element_vertex.emplace(x, 0);
  }
  std::size_t next = r;
  for (auto& [x, v] : element_vertex) v = next++;
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(next);
  for (std::size_t i = 0; i < r; ++i) {
    for (auto x : sets[i]) boost::add_edge(i, element_vertex.at(x), g);
  }
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(next);
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  const auto matched = boost::matching_size(g, &mate[0]);
  if (r <= 12 && konig_set_formula(sets) != matched) {
    throw std::logic_error("matching disagrees with the subset formula");
  }
  return matched;
}

std::size_t konig_linear_value(std::span<const Subspace> subspaces) { return minimize_subsets(subspaces).value; }

std::vector<std::size_t> konig_minimizing_set(std::span<const Subspace> subspaces) {
  return minimize_subsets(subspaces).set;
}

std::vector<Representative> konig_linear_witness(std::span<const Subspace> subspaces) {
  if (subspaces.empty()) return {};
  const SubsetOptimum opt = minimize_subsets(subspaces);
  const Field f = subspaces.front().field();
  const std::size_t dim = subspaces.front().ambient();
  const std::vector<std::size_t>& m_set = opt.set;

  Subspace w = Subspace::zero(f, dim);
  for (std::size_t i : m_set) w = sum(w, subspaces[i]);
  const std::size_t n_w = w.dim();
  const std::size_t m = m_set.size();

  std::vector<Representative> out;

  // Basis of W from distinct members of M: pad with F^{m - n_w}, find one
  // vector per padded space forming a basis, project, keep a basis.
  {
    const std::size_t pad = m - n_w;
    std::vector<Element> ground;
    for (std::size_t g = 0; g < m; ++g) {
      std::vector<FieldVector> vecs = subspaces[m_set[g]].basis();
      for (auto& v : vecs) v.resize(dim + pad, f.zero());
      for (std::size_t p = 0; p < pad; ++p) {
        FieldVector e(dim + pad, f.zero());
        e[dim + p] = f.one();
        vecs.push_back(std::move(e));
      }
      for (auto& v : vecs) ground.push_back({g, std::move(v)});
    }
    const auto chosen = matroid_intersection(f, dim + pad, ground, {});
    if (chosen.size() != m) throw std::logic_error("padded system has no independent transversal");
    std::vector<FieldVector> kept;
    for (std::size_t e : chosen) {
      FieldVector proj(ground[e].vec.begin(), ground[e].vec.begin() + static_cast<std::ptrdiff_t>(dim));
      std::vector<FieldVector> trial = kept;
      trial.push_back(proj);
      if (rank_of(f, dim, trial) == trial.size()) {
        kept.push_back(proj);
        out.push_back({m_set[ground[e].group], std::move(proj)});
      }
    }
    if (kept.size() != n_w) throw std::logic_error("projection does not span W");
  }

  // Representatives of the remaining spaces, independent modulo W.
  {
    std::vector<std::size_t> k_set;
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
      if (!std::binary_search(m_set.begin(), m_set.end(), i)) k_set.push_back(i);
    }
    std::vector<Element> ground;
    for (std::size_t g = 0; g < k_set.size(); ++g) {
      for (const auto& v : subspaces[k_set[g]].basis()) ground.push_back({g, v});
    }
    const auto chosen = matroid_intersection(f, dim, ground, w.basis());
    if (chosen.size() != k_set.size()) throw std::logic_error("quotient system has no independent transversal");
    for (std::size_t e : chosen) out.push_back({k_set[ground[e].group], ground[e].vec});
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  std::vector<FieldVector> all;
  for (const auto& r : out) all.push_back(r.vector);
  if (out.size() != opt.value || rank_of(f, dim, all) != out.size()) {
    throw std::logic_error("representatives failed the final rank check");
  }
  return out;
}

bool moshonkin_check(std::span<const Subspace> subspaces) {
  if (subspaces.empty()) return true;
  if (subspaces.size() > kMaxSubsets) throw std::invalid_argument("too many subspaces for exact enumeration");
  require_common_ambient(subspaces);
  const std::size_t r = subspaces.size();
  const Field f = subspaces.front().field();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    Subspace acc = Subspace::zero(f, subspaces.front().ambient());
    std::size_t count = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1) {
        acc = sum(acc, subspaces[i]);
        ++count;
      }
    }
    if (acc.dim() < count) return false;
  }
  return true;
}

std::size_t multiset_g(const Subspace& u1, const Subspace& u2, const Subspace& u3, std::size_t i, std::size_t j,
                       std::size_t k) {
  std::vector<Subspace> multiset;
  multiset.insert(multiset.end(), i, u1);
  multiset.insert(multiset.end(), j, u2);
  multiset.insert(multiset.end(), k, u3);
  return konig_linear_value(multiset);
}

}  // namespace affgr
