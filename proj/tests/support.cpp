// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "regflow/exact_linalg.hpp"

namespace regflow::testing {

namespace {

std::size_t find(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

// Number of connected components among the vertices touched by `mask`.
std::size_t components(const EdgeList& edges, std::uint64_t mask) {
  std::map<long, std::size_t> id;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if ((mask >> e) & 1) {
      id.emplace(edges[e].first, id.size());
      id.emplace(edges[e].second, id.size());
    }
  }
  std::vector<std::size_t> parent(id.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t count = id.size();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!((mask >> e) & 1)) continue;
    const std::size_t a = find(parent, id[edges[e].first]);
    const std::size_t b = find(parent, id[edges[e].second]);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

std::uint64_t all_edges(const EdgeList& edges) {
  return edges.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges.size()) - 1;
}

// Undirected multigraph on vertices 0..n-1 with edges stored as sorted
// (min, max) pairs.
struct Shape {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  auto operator<=>(const Shape&) const = default;
};

Shape relabel(const Shape& g, const std::vector<int>& to) {
  Shape out{g.n, {}};
  for (auto [u, v] : g.edges) out.edges.emplace_back(std::min(to[u], to[v]), std::max(to[u], to[v]));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

// Least relabelling over vertex orders that respect (degree, loops).
Shape canonical(const Shape& g) {
  std::vector<std::pair<int, int>> invariant(g.n, {0, 0});
  for (auto [u, v] : g.edges) {
    invariant[u].first++;
    invariant[v].first++;
    if (u == v) invariant[u].second++;
  }
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return invariant[a] < invariant[b]; });
  std::vector<std::vector<int>> groups;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || invariant[order[i]] != invariant[order[i - 1]]) groups.emplace_back();
    groups.back().push_back(order[i]);
  }

  std::optional<Shape> best;
  std::vector<int> to(g.n);
  std::function<void(std::size_t, int)> place = [&](std::size_t gi, int next) {
    if (gi == groups.size()) {
      Shape cand = relabel(g, to);
      if (!best || cand < *best) best = std::move(cand);
      return;
    }
    std::vector<int> members = groups[gi];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t k = 0; k < members.size(); ++k) to[members[k]] = next + static_cast<int>(k);
      place(gi + 1, next + static_cast<int>(members.size()));
    } while (std::next_permutation(members.begin(), members.end()));
  };
  place(0, 0);
  return *best;
}

EdgeList to_edges(const Shape& g) {
  EdgeList out;
  for (auto [u, v] : g.edges) out.emplace_back(u, v);
  return out;
}

}  // namespace

std::size_t vertex_count(const EdgeList& edges) {
  std::set<long> seen;
  for (auto [u, v] : edges) {
    seen.insert(u);
    seen.insert(v);
  }
  return seen.size();
}

bool is_connected(const EdgeList& edges) {
  return edges.empty() || components(edges, all_edges(edges)) == 1;
}

bool has_bridge(const EdgeList& edges) {
  const std::uint64_t full = all_edges(edges);
  const std::size_t base = components(edges, full);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first == edges[e].second) continue;
    // Removing the edge keeps its endpoints; count them back in.
    EdgeList rest;
    for (std::size_t f = 0; f < edges.size(); ++f) {
      if (f != e) rest.push_back(edges[f]);
    }
    rest.emplace_back(edges[e].first, edges[e].first);
    rest.emplace_back(edges[e].second, edges[e].second);
    if (components(rest, all_edges(rest)) > base) return true;
  }
  return false;
}

std::vector<std::uint64_t> cycle_edge_sets(const EdgeList& edges) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::map<long, int> degree;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((mask >> e) & 1) {
        degree[edges[e].first]++;
        degree[edges[e].second]++;
      }
    }
    if (std::all_of(degree.begin(), degree.end(), [](const auto& d) { return d.second == 2; }) &&
        components(edges, mask) == 1) {
      out.push_back(mask);
    }
  }
  return out;
}

std::vector<EdgeList> connected_multigraphs(std::size_t max_edges) {
  std::vector<EdgeList> out;
  std::set<Shape> level{Shape{1, {{0, 0}}}, Shape{2, {{0, 1}}}};
  for (std::size_t m = 1; m <= max_edges; ++m) {
    for (const Shape& g : level) out.push_back(to_edges(g));
    if (m == max_edges) break;
    std::set<Shape> next;
    for (const Shape& g : level) {
      for (int u = 0; u < g.n; ++u) {
        for (int v = u; v <= g.n; ++v) {
          Shape h = g;
          if (v == g.n) h.n++;
          h.edges.emplace_back(u, v);
          std::sort(h.edges.begin(), h.edges.end());
          next.insert(canonical(h));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<EdgeList> bridgeless_simple_graphs(std::size_t max_vertices) {
  std::vector<EdgeList> out;
  for (int n = 3; n <= static_cast<int>(max_vertices); ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::set<Shape> seen;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      Shape g{n, {}};
      std::vector<int> degree(n, 0);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if ((mask >> p) & 1) {
          g.edges.push_back(pairs[p]);
          degree[pairs[p].first]++;
          degree[pairs[p].second]++;
        }
      }
      if (*std::min_element(degree.begin(), degree.end()) < 2) continue;
      const EdgeList edges = to_edges(g);
      if (!is_connected(edges) || has_bridge(edges)) continue;
      if (seen.insert(canonical(g)).second) out.push_back(edges);
    }
  }
  return out;
}

EdgeList complete_graph(long n) {
  EdgeList out;
  for (long u = 1; u <= n; ++u) {
    for (long v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  }
  return out;
}

EdgeList complete_bipartite(long a, long b) {
  EdgeList out;
  for (long u = 1; u <= a; ++u) {
    for (long v = 1; v <= b; ++v) out.emplace_back(u, a + v);
  }
  return out;
}

EdgeList bond(long n) { return EdgeList(static_cast<std::size_t>(n), Edge{1, 2}); }

EdgeList scramble(const EdgeList& edges, std::mt19937_64& rng, std::size_t pendants) {
  std::map<long, long> rename;
  for (auto [u, v] : edges) {
    rename.emplace(u, 0);
    rename.emplace(v, 0);
  }
  std::vector<long> ids(rename.size());
  std::iota(ids.begin(), ids.end(), 10);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::size_t k = 0;
  for (auto& [old, fresh] : rename) fresh = ids[k++];

  EdgeList out;
  for (auto [u, v] : edges) {
    if (rng() % 2) std::swap(u, v);
    out.emplace_back(rename[u], rename[v]);
  }
  long next = 10 + static_cast<long>(ids.size());
  for (std::size_t p = 0; p < pendants; ++p) {
    const long anchor = out[rng() % out.size()].first;
    out.emplace_back(anchor, next++);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

std::vector<GroundSubset> all_bases(const RegularMatroid& m) {
  std::vector<GroundSubset> out;
  const std::size_t r = m.rank();
  std::vector<std::size_t> comb(r);
  std::iota(comb.begin(), comb.end(), 0);
  do {
    if (rank(m.rep().select_columns(comb)) == r) out.emplace_back(comb);
  } while (next_combination(comb, m.size()));
  return out;
}

std::vector<GroundSubset> brute_force_circuits(const RegularMatroid& m) {
  std::vector<GroundSubset> out;
  const std::size_t n = m.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t e = 0; e < n; ++e) {
      if ((mask >> e) & 1) idx.push_back(e);
    }
    if (rank(m.rep().select_columns(idx)) == idx.size()) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < idx.size() && minimal; ++drop) {
      std::vector<std::size_t> smaller = idx;
      smaller.erase(smaller.begin() + static_cast<long>(drop));
      minimal = rank(m.rep().select_columns(smaller)) == smaller.size();
    }
    if (minimal) out.emplace_back(idx);
  }
  std::sort(out.begin(), out.end(), [](const GroundSubset& a, const GroundSubset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Integer cofactor_determinant(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    std::vector<std::size_t> rows(n - 1), cols;
    std::iota(rows.begin(), rows.end(), 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != c) cols.push_back(j);
    }
    const Integer term = m(0, c) * cofactor_determinant(m.submatrix(rows, cols));
    total += c % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi,
                            std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pick(lo, hi);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = pick(rng);
  }
  return m;
}

IntegerMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<long> factor(-2, 2);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    const long k = factor(rng);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntegerMatrix out = u.select_rows(perm);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() % 2) {
      for (std::size_t c = 0; c < n; ++c) out(i, c) = -out(i, c);
    }
  }
  return out;
}

RegularMatroid r10() {
  const IntegerMatrix block = IntegerMatrix::from_rows({{-1, 1, 0, 0, 1},
                                                        {1, -1, 1, 0, 0},
                                                        {0, 1, -1, 1, 0},
                                                        {0, 0, 1, -1, 1},
                                                        {1, 0, 0, 1, -1}});
  std::vector<std::string> labels;
  for (int e = 1; e <= 10; ++e) labels.push_back("e" + std::to_string(e));
  return RegularMatroid(labels, hstack(IntegerMatrix::identity(5), block));
}

}  // namespace regflow::testing
