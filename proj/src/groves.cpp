#include "circnet/groves.hpp"

#include <numeric>

namespace circnet {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> Grove::boundary_partition(const PlanarGraph& g) const {
  std::vector<std::vector<std::size_t>> parts(component_count);
  for (std::size_t i = 0; i < g.n_boundary(); ++i) parts[component[g.boundary_order()[i]]].push_back(i);
  return parts;
}

std::optional<Grove> make_grove(const PlanarGraph& g, std::vector<std::size_t> edges) {
  std::sort(edges.begin(), edges.end());
  const std::size_t nv = g.vertex_count();
  UnionFind uf(nv);
  for (std::size_t e : edges) {
    if (e >= g.edge_count()) throw Error(ErrorKind::IndexOutOfRange, "edge index out of range");
    if (!uf.unite(g.edges()[e].u, g.edges()[e].v)) return std::nullopt;
  }
  std::vector<char> touches(nv, 0);
  for (std::size_t b : g.boundary_order()) touches[uf.find(b)] = 1;
  Grove grove;
  grove.edges = std::move(edges);
  grove.component.assign(nv, npos);
  std::vector<std::size_t> id_of_root(nv, npos);
  for (std::size_t x = 0; x < nv; ++x) {
    const std::size_t r = uf.find(x);
    if (!touches[r]) return std::nullopt;
    if (id_of_root[r] == npos) id_of_root[r] = grove.component_count++;
    grove.component[x] = id_of_root[r];
  }
  return grove;
}

std::vector<Grove> enumerate_groves(const PlanarGraph& g, std::size_t max_edges) {
  const std::size_t ne = g.edge_count();
  if (ne > max_edges)
    throw Error(ErrorKind::TooLarge, std::to_string(ne) + " edges exceed the enumeration bound " + std::to_string(max_edges));
  std::vector<Grove> out;
  std::vector<std::size_t> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
    edges.clear();
    for (std::size_t e = 0; e < ne; ++e)
      if (mask >> e & 1U) edges.push_back(e);
    if (auto grove = make_grove(g, edges)) out.push_back(std::move(*grove));
  }
  return out;
}

Grove grove_from_dimer(const PlanarGraph& g, const LamGraph& lam, const Dimer& d) {
  std::vector<std::size_t> edges;
  for (std::size_t e : d.edges) {
    const auto& le = lam.edges()[e];
    if (le.kind == LamEdgeKind::VertexJoin || le.kind == LamEdgeKind::BoundaryVertexJoin)
      edges.push_back(le.conductance_edge);
  }
  // A non-grove image is reported as an empty grove with no components.
  return make_grove(g, std::move(edges)).value_or(Grove{});
}

}  // namespace circnet
