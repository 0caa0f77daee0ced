#include "circnet/symplectic.hpp"

#include "circnet/planar_graph.hpp"

namespace circnet {

std::string_view to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::U: return "u";
    case GeneratorKind::X: return "x";
    case GeneratorKind::Y: return "y";
    case GeneratorKind::Diagonal: return "d";
  }
  return "?";
}

std::vector<StrandPairEdge> standard_edge_pairs(const PlanarGraph& graph) {
  const int n = static_cast<int>(graph.n_boundary());
  if (n % 2 == 0) throw Error(ErrorKind::NotOdd, "standard decomposition needs an odd boundary count, got " + std::to_string(n));
  const auto report = is_minimal(graph);
  if (!report.minimal) throw Error(ErrorKind::NotStandard, "not minimal: " + report.witness->describe());
  const auto strands = median_strands(graph);
  if (static_cast<int>(strands.size()) != n) throw Error(ErrorKind::NotStandard, "expected one strand per boundary node");

  std::vector<std::vector<std::size_t>> edge_at(n, std::vector<std::size_t>(n, npos));
  const auto pairs = strand_pairs_by_edge(graph, strands);
  for (std::size_t e = 0; e < pairs.size(); ++e)
    edge_at[std::min(pairs[e][0], pairs[e][1])][std::max(pairs[e][0], pairs[e][1])] = e;
  std::vector<StrandPairEdge> out;
  for (int i = n - 1; i >= 1; --i)
    for (int j = n; j > i; --j) {
      const std::size_t e = edge_at[i - 1][j - 1];
      if (e == npos)
        throw Error(ErrorKind::NotStandard,
                    "strands " + std::to_string(i) + " and " + std::to_string(j) + " do not cross");
      out.push_back({i, j, e});
    }
  return out;
}

}  // namespace circnet
