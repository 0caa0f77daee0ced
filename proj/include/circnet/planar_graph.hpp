#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "circnet/disk_embedding.hpp"
#include "circnet/error.hpp"

namespace circnet {

struct Vertex {
  std::string id;
  bool boundary = false;
};

struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;
};

/// Topology of a circular planar electrical network: vertices, edges, a
/// clockwise rotation system and the clockwise boundary order (boundary node
/// number i+1 is boundary_order()[i]). See DiskEmbedding for the rotation
/// convention at boundary vertices.
class PlanarGraph {
 public:
  PlanarGraph() = default;
  /// Throws Error(InvalidNetwork) on dangling vertex/edge references only;
  /// everything else is reported by validate().
  PlanarGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<std::vector<std::size_t>> rotation,
              std::vector<std::size_t> boundary_order);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t n_boundary() const { return boundary_order_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<std::size_t>>& rotation() const { return rotation_; }
  const std::vector<std::size_t>& boundary_order() const { return boundary_order_; }

  /// Zero-based boundary position, npos for inner vertices.
  std::size_t boundary_position(std::size_t vertex) const { return boundary_pos_[vertex]; }
  bool is_boundary(std::size_t vertex) const { return boundary_pos_[vertex] != npos; }
  std::vector<std::size_t> inner_vertices() const;
  std::size_t degree(std::size_t vertex) const { return rotation_[vertex].size(); }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_edge(const std::string& id) const;

  bool has_embedding() const { return embedding_.has_value(); }
  /// Throws Error(InvalidEmbedding) when the rotation system is unusable or
  /// not planar.
  const DiskEmbedding& embedding() const;

  /// Structural report (weights are checked by validate_network).
  ValidationReport validate() const;
  /// Connected through network edges alone.
  bool connected() const;
  /// Every vertex shares a component with some boundary vertex.
  bool every_component_touches_boundary() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::size_t> boundary_order_;
  std::vector<std::size_t> boundary_pos_;
  std::optional<DiskEmbedding> embedding_;
  std::string embedding_error_;
};

/// Id-based description used by parsers and the built-in corpus.
struct GraphSpec {
  struct EdgeSpec {
    std::string id, u, v;
  };
  std::vector<Vertex> vertices;
  std::vector<EdgeSpec> edges;
  /// vertex id -> clockwise edge ids; vertices without an entry get an empty list.
  std::vector<std::pair<std::string, std::vector<std::string>>> rotation;
  std::vector<std::string> boundary_order;
};

/// Resolves ids. Throws Error(InvalidNetwork) on unknown or duplicate ids.
PlanarGraph build_graph(const GraphSpec& spec);

struct Face {
  std::size_t id = 0;
  /// Clockwise walk of darts (DiskEmbedding numbering, arcs included).
  std::vector<std::size_t> boundary_walk;
  bool is_outer_arc = false;
  /// For boundary faces: positions i such that arc i -> i+1 bounds the face.
  std::vector<std::size_t> arcs;
};

/// Faces from rotation tracing, the outer region split along the boundary
/// arcs. Throws Error(InvalidEmbedding).
std::vector<Face> faces(const PlanarGraph& graph);

struct Corner {
  std::size_t vertex = 0;
  std::size_t face = 0;
};

/// Scaffold for the Temperley construction: an edge midpoint with the faces
/// on either side and the four corners (endpoint, side face) next to it.
struct EdgeOverlay {
  std::size_t edge = 0;
  std::size_t right_face = 0;  // right of u -> v
  std::size_t left_face = 0;
  std::array<Corner, 4> corners{};  // (u,left) (v,left) (v,right) (u,right)
};

std::vector<EdgeOverlay> dual_with_intersections(const PlanarGraph& graph);

/// A point where a median strand meets the circle: just before boundary
/// vertex i (face i-1,i) or just after it (face i,i+1).
struct StrandTerminal {
  std::size_t boundary_position = 0;
  bool after = false;
  /// 1-based clockwise number among the 2n terminals.
  std::size_t number() const { return 2 * boundary_position + (after ? 2 : 1); }
  bool operator==(const StrandTerminal&) const = default;
};

/// One pass of a strand through an edge midpoint. `left_to_right` is relative
/// to the dart leaving `from_vertex`.
struct StrandCrossing {
  std::size_t edge = 0;
  std::size_t from_vertex = 0;
  bool left_to_right = false;
};

struct Strand {
  std::vector<StrandCrossing> crossings;
  std::optional<StrandTerminal> start;
  std::optional<StrandTerminal> end;
  bool closed_loop() const { return !start.has_value(); }
};

/// Strands of the median graph, traced straight through every edge midpoint.
/// Boundary strands come first, ordered by their smaller terminal number;
/// closed loops follow.
std::vector<Strand> median_strands(const PlanarGraph& graph);

enum class MinimalityDefect { None, ClosedLoop, SelfIntersection, Lens };

struct MinimalityWitness {
  MinimalityDefect defect = MinimalityDefect::None;
  std::size_t strand_a = npos;
  std::size_t strand_b = npos;
  std::vector<std::size_t> edges;
  std::string describe() const;
};

struct MinimalityReport {
  bool minimal = true;
  std::optional<MinimalityWitness> witness;
};

/// No closed loops, no self-crossing strand, every strand pair crosses at most
/// once (crossings counted at edge midpoints only).
MinimalityReport is_minimal(const PlanarGraph& graph);

/// For each edge, the pair of strand indices crossing at its midpoint.
std::vector<std::array<std::size_t, 2>> strand_pairs_by_edge(const PlanarGraph& graph,
                                                             const std::vector<Strand>& strands);

}  // namespace circnet
