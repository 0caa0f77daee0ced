#include "circnet/planar_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace circnet {

namespace {

std::vector<std::size_t> component_labels(std::size_t vertex_count, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[root(e.u)] = root(e.v);
  std::vector<std::size_t> out(vertex_count);
  for (std::size_t x = 0; x < vertex_count; ++x) out[x] = root(x);
  return out;
}

}  // namespace

PlanarGraph::PlanarGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                         std::vector<std::vector<std::size_t>> rotation, std::vector<std::size_t> boundary_order)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      rotation_(std::move(rotation)),
      boundary_order_(std::move(boundary_order)) {
  const std::size_t nv = vertices_.size();
  for (const auto& e : edges_)
    if (e.u >= nv || e.v >= nv) throw Error(ErrorKind::InvalidNetwork, "edge '" + e.id + "' has an unknown endpoint");
  if (rotation_.size() != nv) throw Error(ErrorKind::InvalidNetwork, "one rotation list per vertex is required");
  for (const auto& lst : rotation_)
    for (std::size_t e : lst)
      if (e >= edges_.size()) throw Error(ErrorKind::InvalidNetwork, "rotation references an unknown edge");
  boundary_pos_.assign(nv, npos);
  for (std::size_t i = 0; i < boundary_order_.size(); ++i) {
    const std::size_t b = boundary_order_[i];
    if (b >= nv) throw Error(ErrorKind::InvalidNetwork, "boundary order references an unknown vertex");
    if (boundary_pos_[b] == npos) boundary_pos_[b] = i;
  }

  std::vector<EdgeEnds> ends;
  ends.reserve(edges_.size());
  for (const auto& e : edges_) ends.push_back({e.u, e.v});
  embedding_ = DiskEmbedding::build(nv, std::move(ends), rotation_, boundary_order_, &embedding_error_);
  if (embedding_ && !embedding_->planar()) {
    embedding_error_ = embedding_->exterior_ok() ? "face count violates Euler's relation"
                                                 : "boundary vertices do not all lie on the outer face";
    embedding_.reset();
  }
}

std::vector<std::size_t> PlanarGraph::inner_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < vertices_.size(); ++x)
    if (!is_boundary(x)) out.push_back(x);
  return out;
}

std::optional<std::size_t> PlanarGraph::find_vertex(const std::string& id) const {
  for (std::size_t x = 0; x < vertices_.size(); ++x)
    if (vertices_[x].id == id) return x;
  return std::nullopt;
}

std::optional<std::size_t> PlanarGraph::find_edge(const std::string& id) const {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].id == id) return e;
  return std::nullopt;
}

const DiskEmbedding& PlanarGraph::embedding() const {
  if (!embedding_) throw Error(ErrorKind::InvalidEmbedding, "invalid embedding: " + embedding_error_);
  return *embedding_;
}

bool PlanarGraph::connected() const {
  if (vertices_.empty()) return true;
  const auto label = component_labels(vertices_.size(), edges_);
  return std::all_of(label.begin(), label.end(), [&](std::size_t l) { return l == label[0]; });
}

bool PlanarGraph::every_component_touches_boundary() const {
  const auto label = component_labels(vertices_.size(), edges_);
  std::vector<char> touched(vertices_.size(), 0);
  for (std::size_t b : boundary_order_) touched[label[b]] = 1;
  for (std::size_t x = 0; x < vertices_.size(); ++x)
    if (!touched[label[x]]) return false;
  return true;
}

ValidationReport PlanarGraph::validate() const {
  ValidationReport report;
  if (boundary_order_.empty()) report.add("no boundary", "n_boundary must be positive");

  std::vector<int> listed(vertices_.size(), 0);
  for (std::size_t b : boundary_order_) ++listed[b];
  for (std::size_t x = 0; x < vertices_.size(); ++x) {
    if (vertices_[x].boundary && listed[x] != 1)
      report.add("boundary order", "boundary vertex '" + vertices_[x].id + "' must appear exactly once in boundary_order");
    if (!vertices_[x].boundary && listed[x] > 0)
      report.add("boundary order", "inner vertex '" + vertices_[x].id + "' appears in boundary_order");
  }

  std::vector<int> uses(2 * edges_.size(), 0);
  for (std::size_t x = 0; x < rotation_.size(); ++x) {
    for (std::size_t e : rotation_[x]) {
      const auto& ed = edges_[e];
      if (ed.u == x) ++uses[2 * e];
      if (ed.v == x) ++uses[2 * e + 1];
      if (ed.u != x && ed.v != x)
        report.add("rotation mismatch", "rotation at '" + vertices_[x].id + "' lists non-incident edge '" + ed.id + "'");
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (ed.u == ed.v) {
      report.add("self-loop", "edge '" + ed.id + "' is a loop");
      continue;
    }
    if (uses[2 * e] != 1 || uses[2 * e + 1] != 1)
      report.add("rotation mismatch", "edge '" + ed.id + "' must appear once in the rotation of each endpoint");
  }

  if (report.ok() && !embedding_) {
    // Structure is consistent, so the remaining failure is geometric.
    report.add("non-planar rotation", embedding_error_);
  }
  if (!every_component_touches_boundary())
    report.add("detached component", "a component contains no boundary vertex");
  return report;
}

PlanarGraph build_graph(const GraphSpec& spec) {
  std::map<std::string, std::size_t> vid, eid;
  for (std::size_t x = 0; x < spec.vertices.size(); ++x)
    if (!vid.emplace(spec.vertices[x].id, x).second)
      throw Error(ErrorKind::InvalidNetwork, "duplicate vertex id '" + spec.vertices[x].id + "'");
  auto vertex = [&](const std::string& id) {
    auto it = vid.find(id);
    if (it == vid.end()) throw Error(ErrorKind::InvalidNetwork, "unknown vertex id '" + id + "'");
    return it->second;
  };
  std::vector<Edge> edges;
  for (const auto& e : spec.edges) {
    if (!eid.emplace(e.id, edges.size()).second)
      throw Error(ErrorKind::InvalidNetwork, "duplicate edge id '" + e.id + "'");
    edges.push_back({e.id, vertex(e.u), vertex(e.v)});
  }
  std::vector<std::vector<std::size_t>> rotation(spec.vertices.size());
  std::vector<char> given(spec.vertices.size(), 0);
  for (const auto& [v, lst] : spec.rotation) {
    const std::size_t x = vertex(v);
    if (given[x]++) throw Error(ErrorKind::InvalidNetwork, "two rotation lists for vertex '" + v + "'");
    for (const auto& e : lst) {
      auto it = eid.find(e);
      if (it == eid.end()) throw Error(ErrorKind::InvalidNetwork, "unknown edge id '" + e + "' in rotation");
      rotation[x].push_back(it->second);
    }
  }
  std::vector<std::size_t> order;
  for (const auto& b : spec.boundary_order) order.push_back(vertex(b));
  return PlanarGraph(spec.vertices, std::move(edges), std::move(rotation), std::move(order));
}

std::vector<Face> faces(const PlanarGraph& graph) {
  const DiskEmbedding& emb = graph.embedding();
  std::vector<Face> out;
  out.reserve(emb.faces().size());
  for (std::size_t f = 0; f < emb.faces().size(); ++f) {
    Face face;
    face.id = f;
    face.boundary_walk = emb.faces()[f];
    face.is_outer_arc = emb.is_boundary_face(f);
    for (std::size_t d : face.boundary_walk)
      if (emb.is_arc(d)) face.arcs.push_back(emb.arc_index(d));
    std::sort(face.arcs.begin(), face.arcs.end());
    out.push_back(std::move(face));
  }
  return out;
}

std::vector<EdgeOverlay> dual_with_intersections(const PlanarGraph& graph) {
  const DiskEmbedding& emb = graph.embedding();
  std::vector<EdgeOverlay> out;
  out.reserve(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const std::size_t d = 2 * e;
    EdgeOverlay ov;
    ov.edge = e;
    ov.right_face = emb.right_face(d);
    ov.left_face = emb.left_face(d);
    const std::size_t u = graph.edges()[e].u;
    const std::size_t v = graph.edges()[e].v;
    ov.corners = {Corner{u, ov.left_face}, Corner{v, ov.left_face}, Corner{v, ov.right_face},
                  Corner{u, ov.right_face}};
    out.push_back(ov);
  }
  return out;
}

namespace {

// A strand state: the dart whose midpoint is being crossed and the crossing
// direction relative to that dart.
struct StrandState {
  std::size_t dart;
  bool left_to_right;
};

// Straight-through step: after crossing u->v at its midpoint the strand runs
// along a corner at v to the neighbouring edge on the side it arrived at.
StrandState strand_step(const DiskEmbedding& emb, StrandState s) {
  const std::size_t back = DiskEmbedding::reverse(s.dart);
  if (s.left_to_right) return {emb.cw_prev(back), false};
  return {emb.cw_next(back), true};
}

std::size_t diagonal_of(StrandState s) { return 2 * DiskEmbedding::edge_of(s.dart) + (s.left_to_right ? 0 : 1); }

StrandCrossing as_crossing(const DiskEmbedding& emb, StrandState s) {
  return {DiskEmbedding::edge_of(s.dart), emb.tail(s.dart), s.left_to_right};
}

}  // namespace

std::vector<Strand> median_strands(const PlanarGraph& graph) {
  const DiskEmbedding& emb = graph.embedding();
  const std::size_t n = graph.n_boundary();
  std::vector<char> used(2 * graph.edge_count(), 0);
  std::vector<Strand> out;

  // Walk forward from a first crossing; terminates at an arc.
  auto trace_open = [&](StrandState s, StrandTerminal start) {
    Strand strand;
    strand.start = start;
    for (;;) {
      used[diagonal_of(s)] = 1;
      strand.crossings.push_back(as_crossing(emb, s));
      const StrandState next = strand_step(emb, s);
      if (emb.is_arc(next.dart)) {
        const std::size_t at = graph.boundary_position(emb.head(s.dart));
        strand.end = StrandTerminal{at, s.left_to_right};
        break;
      }
      s = next;
    }
    return strand;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t arc = emb.arc_dart(i);
    const std::size_t first = emb.cw_next(arc);
    if (emb.is_arc(first)) {
      Strand trivial;
      trivial.start = StrandTerminal{i, false};
      trivial.end = StrandTerminal{i, true};
      out.push_back(std::move(trivial));
      continue;
    }
    const StrandState a{first, true};
    if (!used[diagonal_of(a)]) out.push_back(trace_open(a, StrandTerminal{i, true}));
    const std::size_t last = emb.cw_prev(DiskEmbedding::reverse(emb.arc_dart((i + n - 1) % n)));
    const StrandState b{last, false};
    if (!used[diagonal_of(b)]) out.push_back(trace_open(b, StrandTerminal{i, false}));
  }

  for (auto& s : out) {
    if (s.end->number() < s.start->number()) {
      std::swap(s.start, s.end);
      std::reverse(s.crossings.begin(), s.crossings.end());
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Strand& a, const Strand& b) { return a.start->number() < b.start->number(); });

  for (std::size_t diag = 0; diag < used.size(); ++diag) {
    if (used[diag]) continue;
    const StrandState s0{2 * (diag / 2), diag % 2 == 0};
    Strand loop;
    StrandState s = s0;
    do {
      used[diagonal_of(s)] = 1;
      loop.crossings.push_back(as_crossing(emb, s));
      s = strand_step(emb, s);
      // A closed orbit may revisit the starting diagonal from the other end.
    } while (!used[diagonal_of(s)]);
    out.push_back(std::move(loop));
  }
  return out;
}

std::vector<std::array<std::size_t, 2>> strand_pairs_by_edge(const PlanarGraph& graph,
                                                             const std::vector<Strand>& strands) {
  std::vector<std::array<std::size_t, 2>> pairs(graph.edge_count(), {npos, npos});
  for (std::size_t s = 0; s < strands.size(); ++s) {
    for (const auto& c : strands[s].crossings) {
      auto& slot = pairs[c.edge];
      if (slot[0] == npos)
        slot[0] = s;
      else
        slot[1] = s;
    }
  }
  return pairs;
}

std::string MinimalityWitness::describe() const {
  std::string edges_text;
  for (std::size_t e : edges) edges_text += (edges_text.empty() ? "" : ",") + std::to_string(e);
  switch (defect) {
    case MinimalityDefect::None: return "minimal";
    case MinimalityDefect::ClosedLoop: return "strand " + std::to_string(strand_a) + " is a closed loop";
    case MinimalityDefect::SelfIntersection:
      return "strand " + std::to_string(strand_a) + " crosses itself at edge(s) " + edges_text;
    case MinimalityDefect::Lens:
      return "strands " + std::to_string(strand_a) + " and " + std::to_string(strand_b) + " form a lens at edges " +
             edges_text;
  }
  return {};
}

MinimalityReport is_minimal(const PlanarGraph& graph) {
  const auto strands = median_strands(graph);
  MinimalityReport report;
  for (std::size_t s = 0; s < strands.size(); ++s) {
    if (strands[s].closed_loop()) {
      MinimalityWitness w;
      w.defect = MinimalityDefect::ClosedLoop;
      w.strand_a = s;
      for (const auto& c : strands[s].crossings) w.edges.push_back(c.edge);
      report.minimal = false;
      report.witness = w;
      return report;
    }
  }
  const auto pairs = strand_pairs_by_edge(graph, strands);
  std::vector<std::size_t> self_edges;
  std::size_t self_strand = npos;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> met;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    const auto [a, b] = pairs[e];
    if (a == b) {
      if (self_strand == npos) self_strand = a;
      if (a == self_strand) self_edges.push_back(e);
    } else {
      met[{std::min(a, b), std::max(a, b)}].push_back(e);
    }
  }
  if (self_strand != npos) {
    MinimalityWitness w;
    w.defect = MinimalityDefect::SelfIntersection;
    w.strand_a = self_strand;
    w.edges = self_edges;
    report.minimal = false;
    report.witness = w;
    return report;
  }
  for (const auto& [key, es] : met) {
    if (es.size() > 1) {
      MinimalityWitness w;
      w.defect = MinimalityDefect::Lens;
      w.strand_a = key.first;
      w.strand_b = key.second;
      w.edges = es;
      report.minimal = false;
      report.witness = w;
      return report;
    }
  }
  return report;
}

}  // namespace circnet
