#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace circnet {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct EdgeEnds {
  std::size_t u = 0;
  std::size_t v = 0;
};

/// A graph embedded in a closed disk via a rotation system.
///
/// Boundary vertices sit on the circle in `boundary_order` (clockwise). The
/// circle is materialised as arcs: arc i joins boundary vertex i to boundary
/// vertex i+1 (cyclically). Darts are numbered 2e (u->v) and 2e+1 (v->u);
/// edge ids >= edge_count() are arcs.
///
/// Rotation lists are clockwise. For a boundary vertex the list is linear: it
/// starts at the edge nearest to the next boundary vertex and ends at the edge
/// nearest to the previous one.
///
/// Faces are traced with the face on the right of each dart, so interior
/// walks run clockwise. The exterior region (outside the circle) is dropped.
class DiskEmbedding {
 public:
  DiskEmbedding() = default;

  /// Returns nullopt (with a reason) when the rotation lists are not a
  /// permutation of the incident edge ends.
  static std::optional<DiskEmbedding> build(std::size_t vertex_count, std::vector<EdgeEnds> edges,
                                            const std::vector<std::vector<std::size_t>>& rotation,
                                            std::vector<std::size_t> boundary_order, std::string* reason = nullptr);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t boundary_count() const { return boundary_.size(); }
  std::size_t dart_count() const { return 2 * (edge_count_ + boundary_.size()); }
  const std::vector<std::size_t>& boundary_order() const { return boundary_; }

  static std::size_t edge_of(std::size_t dart) { return dart / 2; }
  static std::size_t reverse(std::size_t dart) { return dart ^ 1U; }
  bool is_arc(std::size_t dart) const { return edge_of(dart) >= edge_count_; }
  /// Boundary position i of the arc i -> i+1 carried by this dart.
  std::size_t arc_index(std::size_t dart) const { return edge_of(dart) - edge_count_; }
  /// Dart running along arc i in the clockwise direction.
  std::size_t arc_dart(std::size_t i) const { return 2 * (edge_count_ + i); }

  std::size_t tail(std::size_t dart) const;
  std::size_t head(std::size_t dart) const { return tail(reverse(dart)); }

  /// Full rotation (arcs included) at a vertex, clockwise, as darts leaving it.
  const std::vector<std::size_t>& darts_at(std::size_t vertex) const { return rotation_[vertex]; }
  std::size_t cw_next(std::size_t dart) const;
  std::size_t cw_prev(std::size_t dart) const;
  /// Successor of a dart in its face walk.
  std::size_t face_next(std::size_t dart) const { return cw_prev(reverse(dart)); }

  /// Face walks (exterior excluded). Face ids index this vector.
  const std::vector<std::vector<std::size_t>>& faces() const { return faces_; }
  /// Face on the right of a dart; npos for the exterior.
  std::size_t right_face(std::size_t dart) const { return face_of_[dart]; }
  std::size_t left_face(std::size_t dart) const { return face_of_[reverse(dart)]; }
  /// Face bounded by arc i (between boundary positions i and i+1).
  std::size_t boundary_face(std::size_t i) const { return face_of_[arc_dart(i)]; }
  bool is_boundary_face(std::size_t face) const { return face_arc_count_[face] > 0; }
  std::size_t face_arc_count(std::size_t face) const { return face_arc_count_[face]; }

  /// Components of the graph with the arcs included.
  std::size_t component_count() const { return components_; }
  /// Euler's relation V - E + F = 1 + C (arcs and exterior counted).
  bool euler_ok() const;
  /// The exterior walk must consist of exactly the n reversed arcs.
  bool exterior_ok() const { return exterior_ok_; }
  bool planar() const { return euler_ok() && exterior_ok(); }

 private:
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<EdgeEnds> ends_;  // interior edges followed by arcs
  std::vector<std::size_t> boundary_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::size_t> position_;  // index of each dart in its tail's rotation
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<std::size_t> face_of_;
  std::vector<std::size_t> face_arc_count_;
  std::size_t total_faces_ = 0;  // including exterior
  std::size_t components_ = 0;
  bool exterior_ok_ = false;
};

}  // namespace circnet
