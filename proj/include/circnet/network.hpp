#pragma once

#include "circnet/planar_graph.hpp"
#include "circnet/scalar.hpp"

namespace circnet {

/// A planar graph with one conductance per edge (indexed like graph.edges()).
template <typename Scalar = Rational>
struct PlanarNetwork {
  PlanarGraph graph;
  Vector<Scalar> weight;

  std::size_t n_boundary() const { return graph.n_boundary(); }
};

/// Same topology, all conductances set to `value`.
template <typename Scalar = Rational>
PlanarNetwork<Scalar> with_uniform_weights(const PlanarGraph& graph, const Scalar& value = Scalar(1)) {
  PlanarNetwork<Scalar> net{graph, Vector<Scalar>::Constant(static_cast<Index>(graph.edge_count()), value)};
  return net;
}

template <typename Scalar>
PlanarNetwork<Scalar> with_weights(const PlanarGraph& graph, Vector<Scalar> weight) {
  if (static_cast<std::size_t>(weight.size()) != graph.edge_count())
    throw Error(ErrorKind::InvalidNetwork, "weight vector length differs from edge count");
  return PlanarNetwork<Scalar>{graph, std::move(weight)};
}

template <typename Target, typename Source>
PlanarNetwork<Target> cast_network(const PlanarNetwork<Source>& net) {
  if constexpr (std::is_same_v<Target, Source>) {
    return net;
  } else {
    static_assert(std::is_same_v<Source, Rational>, "networks are converted from exact weights only");
    return PlanarNetwork<Target>{net.graph, cast_vector<Target>(net.weight)};
  }
}

/// Full invariant report: graph structure plus strictly positive weights.
template <typename Scalar>
ValidationReport validate_network(const PlanarNetwork<Scalar>& net) {
  ValidationReport report = net.graph.validate();
  if (static_cast<std::size_t>(net.weight.size()) != net.graph.edge_count()) {
    report.add("weight count", "expected one weight per edge");
    return report;
  }
  for (std::size_t e = 0; e < net.graph.edge_count(); ++e) {
    if (!(net.weight(static_cast<Index>(e)) > 0))
      report.add("non-positive weight", "edge '" + net.graph.edges()[e].id + "' has weight " +
                                            ScalarTraits<Scalar>::format(net.weight(static_cast<Index>(e))));
  }
  return report;
}

/// Throws Error(InvalidNetwork) with the first violation when the report is
/// not empty.
template <typename Scalar>
void require_valid(const PlanarNetwork<Scalar>& net) {
  const auto report = validate_network(net);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(v.code == "non-planar rotation" ? ErrorKind::InvalidEmbedding : ErrorKind::InvalidNetwork,
                v.code + ": " + v.message);
  }
}

}  // namespace circnet
