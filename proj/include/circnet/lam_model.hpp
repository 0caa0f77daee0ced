#pragma once

// Bicolored disk-embedded graphs with degree-one boundary nodes, their
// dimers, boundary measurements, trips and face labels.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circnet/combinatorics.hpp"
#include "circnet/disk_embedding.hpp"
#include "circnet/error.hpp"
#include "circnet/scalar.hpp"

namespace circnet {

enum class Color { Black, White };

/// What a node stands for when the model comes from a network.
enum class NodeOrigin { None, Vertex, BoundaryVertex, Face, EdgeMidpoint, BoundaryNode };

std::string_view to_string(Color c);
std::string_view to_string(NodeOrigin o);

struct LamNode {
  std::string id;
  Color color = Color::White;
  bool boundary = false;
  NodeOrigin origin = NodeOrigin::None;
  /// Index of the network vertex, face or edge the node came from.
  std::size_t source = npos;
};

/// Role of an edge in a Temperley model.
enum class LamEdgeKind { Plain, VertexJoin, BoundaryVertexJoin, FaceJoin, Leg };

struct LamEdge {
  std::string id;
  std::size_t a = 0;
  std::size_t b = 0;
  LamEdgeKind kind = LamEdgeKind::Plain;
  /// Network edge whose conductance this edge may carry.
  std::size_t conductance_edge = npos;
};

/// Topology of a Lam model. Boundary nodes are numbered 1..2n' clockwise by
/// their position in boundary_order(). Rotations follow DiskEmbedding.
class LamGraph {
 public:
  LamGraph() = default;
  /// Throws Error(InvalidNetwork) on dangling references or when the rotation
  /// system does not describe a disk embedding.
  LamGraph(std::vector<LamNode> nodes, std::vector<LamEdge> edges, std::vector<std::vector<std::size_t>> rotation,
           std::vector<std::size_t> boundary_order);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t n_boundary() const { return boundary_order_.size(); }
  const std::vector<LamNode>& nodes() const { return nodes_; }
  const std::vector<LamEdge>& edges() const { return edges_; }
  const std::vector<std::vector<std::size_t>>& rotation() const { return rotation_; }
  const std::vector<std::size_t>& boundary_order() const { return boundary_order_; }
  const DiskEmbedding& embedding() const { return embedding_; }

  /// Zero-based boundary position, npos for inner nodes.
  std::size_t boundary_position(std::size_t node) const { return boundary_pos_[node]; }
  bool is_boundary(std::size_t node) const { return boundary_pos_[node] != npos; }
  std::size_t degree(std::size_t node) const { return rotation_[node].size(); }
  std::size_t other_end(std::size_t edge, std::size_t node) const {
    return edges_[edge].a == node ? edges_[edge].b : edges_[edge].a;
  }
  std::optional<std::size_t> find_node(const std::string& id) const;

  /// Degree-one boundary nodes and bipartite edges.
  ValidationReport validate() const;

 private:
  std::vector<LamNode> nodes_;
  std::vector<LamEdge> edges_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::size_t> boundary_order_;
  std::vector<std::size_t> boundary_pos_;
  DiskEmbedding embedding_;
};

template <typename Scalar = Rational>
struct LamModel {
  LamGraph graph;
  Vector<Scalar> weight;  // per LamGraph edge
};

template <typename Scalar>
ValidationReport validate_model(const LamModel<Scalar>& m) {
  ValidationReport report = m.graph.validate();
  if (static_cast<std::size_t>(m.weight.size()) != m.graph.edge_count()) {
    report.add("weight count", "expected one weight per edge");
    return report;
  }
  for (Index e = 0; e < m.weight.size(); ++e)
    if (!(m.weight(e) > 0)) report.add("non-positive weight", "edge '" + m.graph.edges()[e].id + "'");
  return report;
}

/// (1/2)(boundary count + sum_black(deg-2) + sum_white(2-deg)) over inner
/// nodes. Throws Error(NonInteger).
int k_gamma(const LamGraph& g);

// ---------------------------------------------------------------- dimers

struct Dimer {
  std::vector<std::size_t> edges;  // sorted edge indices
};

/// Boundary nodes that a dimer with boundary condition I must cover: white
/// nodes outside I and black nodes inside I. I is 1-based.
std::vector<char> required_cover(const LamGraph& g, const Subset& I);

/// All dimers with boundary condition I. Throws Error(BadCardinality) when
/// |I| != k_gamma or I is not a valid subset of 1..2n'.
std::vector<Dimer> enumerate_dimers(const LamGraph& g, const Subset& I);

/// Boundary condition realised by a dimer (inverse of required_cover).
Subset dimer_boundary_subset(const LamGraph& g, const Dimer& d);

template <typename Scalar>
Scalar dimer_weight(const LamModel<Scalar>& m, const Dimer& d) {
  Scalar w(1);
  for (std::size_t e : d.edges) w *= m.weight(static_cast<Index>(e));
  return w;
}

template <typename Scalar>
Scalar boundary_measurement(const LamModel<Scalar>& m, const Subset& I) {
  Scalar sum(0);
  for (const auto& d : enumerate_dimers(m.graph, I)) sum += dimer_weight(m, d);
  return sum;
}

/// Δ^d_I for all k-subsets in lexicographic order.
template <typename Scalar>
std::vector<Scalar> boundary_measurement_vector(const LamModel<Scalar>& m) {
  const int k = k_gamma(m.graph);
  std::vector<Scalar> out;
  for (const auto& I : k_subsets(static_cast<int>(m.graph.n_boundary()), k)) out.push_back(boundary_measurement(m, I));
  return out;
}

// ---------------------------------------------------------------- trips

/// A directed strand realised on the model: sequence of darts, from boundary
/// node `source` to boundary node `target` (1-based), or a closed loop.
struct Trip {
  std::vector<std::size_t> darts;
  int source = 0;
  int target = 0;
  bool closed() const { return source == 0; }
};

/// Trips: at a white node leave by the next edge clockwise, at a black node by
/// the next edge counterclockwise. Boundary trips come first, ordered by
/// source; closed loops follow.
std::vector<Trip> lam_strands(const LamGraph& g);

enum class ModelDefect { None, ClosedLoop, SelfIntersection, OrientedLens };

struct ModelMinimality {
  bool minimal = true;
  ModelDefect defect = ModelDefect::None;
  std::size_t trip_a = npos;
  std::size_t trip_b = npos;
  std::vector<std::size_t> edges;
  std::string describe() const;
};

/// No closed trips, no trip through an edge twice (degree-one lollipops
/// excepted) and no pair of trips meeting at two edges in the same order.
ModelMinimality is_minimal_model(const LamGraph& g);

/// face id -> sorted 1-based label.
using FaceLabeling = std::vector<Subset>;

/// Scott rule: i belongs to the label of F iff F lies to the left of the trip
/// starting at boundary node i. Throws Error(NotMinimal).
FaceLabeling scott_labels(const LamGraph& g);

// ---------------------------------------------------------------- weights

/// O(F): product over the clockwise walk of F of the weights of white->black
/// darts over those of black->white darts. Arcs contribute nothing.
template <typename Scalar>
Scalar face_weight(const LamGraph& g, const Vector<Scalar>& weight, std::size_t face) {
  const DiskEmbedding& emb = g.embedding();
  Scalar num(1), den(1);
  for (std::size_t d : emb.faces()[face]) {
    if (emb.is_arc(d)) continue;
    const Scalar& w = weight(static_cast<Index>(DiskEmbedding::edge_of(d)));
    if (g.nodes()[emb.tail(d)].color == Color::White)
      num *= w;
    else
      den *= w;
  }
  return num / den;
}

template <typename Scalar>
Scalar face_weight(const LamModel<Scalar>& m, std::size_t face) {
  return face_weight(m.graph, m.weight, face);
}

template <typename Scalar>
std::vector<Scalar> face_weights(const LamModel<Scalar>& m) {
  std::vector<Scalar> out;
  for (std::size_t f = 0; f < m.graph.embedding().faces().size(); ++f) out.push_back(face_weight(m, f));
  return out;
}

/// Multiplies the weights at an inner node by t. Throws Error(BoundaryVertex).
template <typename Scalar>
LamModel<Scalar> gauge_transform(const LamModel<Scalar>& m, std::size_t node, const Scalar& t) {
  if (node >= m.graph.node_count()) throw Error(ErrorKind::IndexOutOfRange, "node out of range");
  if (m.graph.is_boundary(node)) throw Error(ErrorKind::BoundaryVertex, "gauge transformations act on inner nodes");
  LamModel<Scalar> out = m;
  for (std::size_t d : m.graph.embedding().darts_at(node)) out.weight(static_cast<Index>(DiskEmbedding::edge_of(d))) *= t;
  return out;
}

}  // namespace circnet
