#pragma once

// Lam model of a network via the generalized Temperley construction:
// black nodes for vertices and faces, white nodes for edge midpoints, boundary
// node 2i-1 at vertex i and 2i in the face behind arc i.

#include "circnet/lam_model.hpp"
#include "circnet/network.hpp"

namespace circnet {

/// Where edge conductances are placed on the vertex joins of w_e.
///  Literal: on b_v - w_e for inner v only, 1 on b_i - w_e.
///  Uniform: on every b_v - w_e, boundary vertices included.
///  Auto:    whichever reproduces the response matrix point (Uniform on ties).
enum class WeightConvention { Literal, Uniform, Auto };

std::string_view to_string(WeightConvention c);
/// Accepts "A"/"literal", "B"/"uniform", "auto". Throws Error(Parse).
WeightConvention parse_convention(std::string_view text);

/// Combinatorial part of the construction. Throws Error(NotConnected) and
/// propagates Error(InvalidEmbedding).
LamGraph temperley_graph(const PlanarGraph& graph);

/// Lam edge weights for the given conductances (Auto is not accepted here).
template <typename Scalar>
Vector<Scalar> temperley_weights(const LamGraph& lam, const Vector<Scalar>& conductance, WeightConvention convention) {
  if (convention == WeightConvention::Auto) throw std::invalid_argument("temperley_weights needs a concrete convention");
  Vector<Scalar> w = Vector<Scalar>::Ones(static_cast<Index>(lam.edge_count()));
  for (std::size_t e = 0; e < lam.edge_count(); ++e) {
    const auto& le = lam.edges()[e];
    const bool carries = le.kind == LamEdgeKind::VertexJoin ||
                         (le.kind == LamEdgeKind::BoundaryVertexJoin && convention == WeightConvention::Uniform);
    if (carries) w(static_cast<Index>(e)) = conductance(static_cast<Index>(le.conductance_edge));
  }
  return w;
}

/// True iff, under the convention, Lam edge e carries the conductance of its
/// network edge.
bool carries_conductance(const LamEdge& edge, WeightConvention convention);

/// n - 1, the rank of the Grassmannian point of a network with n boundary nodes.
inline int expected_k(const PlanarGraph& graph) { return static_cast<int>(graph.n_boundary()) - 1; }

/// Decides Auto: tests both placements against the Plücker vector of the
/// response matrix at the given conductances (or, without them, at distinct
/// prime conductances, which separate the two placements).
WeightConvention select_convention(const PlanarGraph& graph, const Vector<Rational>* conductance = nullptr);

/// True iff the dimer boundary measurements of the model are proportional to
/// the maximal minors of the truncated response embedding.
bool convention_reproduces_response(const PlanarNetwork<Rational>& net, WeightConvention convention);

template <typename Scalar>
LamModel<Scalar> temperley_lam_model(const PlanarNetwork<Scalar>& net, WeightConvention convention) {
  if (static_cast<std::size_t>(net.weight.size()) != net.graph.edge_count())
    throw Error(ErrorKind::InvalidNetwork, "weight vector length differs from edge count");
  LamGraph lam = temperley_graph(net.graph);
  if (convention == WeightConvention::Auto) {
    if constexpr (std::is_same_v<Scalar, Rational>)
      convention = select_convention(net.graph, &net.weight);
    else
      convention = select_convention(net.graph);
  }
  Vector<Scalar> w = temperley_weights(lam, net.weight, convention);
  return LamModel<Scalar>{std::move(lam), std::move(w)};
}

}  // namespace circnet
