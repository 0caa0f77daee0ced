#include "circnet/lam_model.hpp"

#include <algorithm>
#include <deque>
#include <array>
#include <functional>

namespace circnet {

std::string_view to_string(Color c) { return c == Color::Black ? "black" : "white"; }

std::string_view to_string(NodeOrigin o) {
  switch (o) {
    case NodeOrigin::None: return "none";
    case NodeOrigin::Vertex: return "b_v";
    case NodeOrigin::BoundaryVertex: return "b_i";
    case NodeOrigin::Face: return "b_F";
    case NodeOrigin::EdgeMidpoint: return "w_e";
    case NodeOrigin::BoundaryNode: return "boundary";
  }
  return "none";
}

LamGraph::LamGraph(std::vector<LamNode> nodes, std::vector<LamEdge> edges,
                   std::vector<std::vector<std::size_t>> rotation, std::vector<std::size_t> boundary_order)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      rotation_(std::move(rotation)),
      boundary_order_(std::move(boundary_order)) {
  const std::size_t nv = nodes_.size();
  if (rotation_.size() != nv) throw Error(ErrorKind::InvalidNetwork, "one rotation list per node is required");
  boundary_pos_.assign(nv, npos);
  for (std::size_t i = 0; i < boundary_order_.size(); ++i) {
    const std::size_t b = boundary_order_[i];
    if (b >= nv) throw Error(ErrorKind::InvalidNetwork, "boundary order references an unknown node");
    if (boundary_pos_[b] != npos) throw Error(ErrorKind::InvalidNetwork, "boundary node listed twice");
    boundary_pos_[b] = i;
  }
  std::vector<EdgeEnds> ends;
  for (const auto& e : edges_) {
    if (e.a >= nv || e.b >= nv) throw Error(ErrorKind::InvalidNetwork, "edge '" + e.id + "' has an unknown end");
    ends.push_back({e.a, e.b});
  }
  std::string reason;
  auto emb = DiskEmbedding::build(nv, std::move(ends), rotation_, boundary_order_, &reason);
  if (!emb) throw Error(ErrorKind::InvalidEmbedding, "Lam model rotation: " + reason);
  if (!emb->planar()) throw Error(ErrorKind::InvalidEmbedding, "Lam model rotation is not a disk embedding");
  embedding_ = std::move(*emb);
}

std::optional<std::size_t> LamGraph::find_node(const std::string& id) const {
  for (std::size_t x = 0; x < nodes_.size(); ++x)
    if (nodes_[x].id == id) return x;
  return std::nullopt;
}

ValidationReport LamGraph::validate() const {
  ValidationReport report;
  for (std::size_t x = 0; x < nodes_.size(); ++x) {
    if (is_boundary(x) && degree(x) != 1)
      report.add("boundary degree", "boundary node '" + nodes_[x].id + "' must have degree 1");
    if (nodes_[x].boundary != is_boundary(x))
      report.add("boundary order", "node '" + nodes_[x].id + "' boundary flag disagrees with boundary order");
  }
  for (const auto& e : edges_)
    if (nodes_[e.a].color == nodes_[e.b].color)
      report.add("not bipartite", "edge '" + e.id + "' joins two " + std::string(to_string(nodes_[e.a].color)) + " nodes");
  return report;
}

int k_gamma(const LamGraph& g) {
  long long sum = static_cast<long long>(g.n_boundary());
  for (std::size_t x = 0; x < g.node_count(); ++x) {
    if (g.is_boundary(x)) continue;
    const long long deg = static_cast<long long>(g.degree(x));
    sum += g.nodes()[x].color == Color::Black ? deg - 2 : 2 - deg;
  }
  if (sum % 2 != 0 || sum < 0)
    throw Error(ErrorKind::NonInteger, "k(Gamma) evaluates to " + std::to_string(sum) + "/2");
  return static_cast<int>(sum / 2);
}

std::vector<char> required_cover(const LamGraph& g, const Subset& I) {
  std::vector<char> in(g.n_boundary(), 0);
  for (int i : I) in[static_cast<std::size_t>(i - 1)] = 1;
  std::vector<char> cover(g.n_boundary(), 0);
  for (std::size_t p = 0; p < g.n_boundary(); ++p) {
    const bool black = g.nodes()[g.boundary_order()[p]].color == Color::Black;
    cover[p] = black ? in[p] : !in[p];
  }
  return cover;
}

std::vector<Dimer> enumerate_dimers(const LamGraph& g, const Subset& I_in) {
  const int k = k_gamma(g);
  const Subset I = checked_subset(I_in, static_cast<int>(g.n_boundary()), k);
  const auto cover = required_cover(g, I);

  const std::size_t nv = g.node_count();
  std::vector<char> matched(nv, 0);
  std::vector<std::size_t> chosen;
  for (std::size_t p = 0; p < g.n_boundary(); ++p) {
    const std::size_t b = g.boundary_order()[p];
    if (!cover[p] || matched[b]) continue;  // matched[b]: taken by a boundary-boundary edge
    if (g.degree(b) == 0) return {};
    const std::size_t e = g.rotation()[b][0];
    const std::size_t other = g.other_end(e, b);
    if (matched[other]) return {};
    if (g.is_boundary(other) && !cover[g.boundary_position(other)]) return {};
    matched[b] = matched[other] = 1;
    chosen.push_back(e);
  }
  // Boundary nodes that must stay uncovered are simply never matched below.
  for (std::size_t p = 0; p < g.n_boundary(); ++p) matched[g.boundary_order()[p]] = 1;

  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    incident[g.edges()[e].a].push_back(e);
    incident[g.edges()[e].b].push_back(e);
  }

  std::vector<Dimer> out;
  std::function<void()> extend = [&]() {
    std::size_t best = npos;
    std::size_t best_options = npos;
    for (std::size_t x = 0; x < nv; ++x) {
      if (matched[x]) continue;
      std::size_t options = 0;
      for (std::size_t e : incident[x])
        if (!matched[g.other_end(e, x)]) ++options;
      if (options < best_options) {
        best = x;
        best_options = options;
        if (options == 0) return;
      }
    }
    if (best == npos) {
      Dimer d{chosen};
      std::sort(d.edges.begin(), d.edges.end());
      out.push_back(std::move(d));
      return;
    }
    matched[best] = 1;
    for (std::size_t e : incident[best]) {
      const std::size_t y = g.other_end(e, best);
      if (matched[y]) continue;
      matched[y] = 1;
      chosen.push_back(e);
      extend();
      chosen.pop_back();
      matched[y] = 0;
    }
    matched[best] = 0;
  };
  extend();
  return out;
}

Subset dimer_boundary_subset(const LamGraph& g, const Dimer& d) {
  std::vector<char> covered(g.node_count(), 0);
  for (std::size_t e : d.edges) covered[g.edges()[e].a] = covered[g.edges()[e].b] = 1;
  Subset out;
  for (std::size_t p = 0; p < g.n_boundary(); ++p) {
    const std::size_t b = g.boundary_order()[p];
    const bool black = g.nodes()[b].color == Color::Black;
    if (black == static_cast<bool>(covered[b])) out.push_back(static_cast<int>(p + 1));
  }
  return out;
}

std::vector<Trip> lam_strands(const LamGraph& g) {
  const DiskEmbedding& emb = g.embedding();
  std::vector<char> seen(emb.dart_count(), 0);
  auto step = [&](std::size_t d) {
    const std::size_t back = DiskEmbedding::reverse(d);
    return g.nodes()[emb.head(d)].color == Color::White ? emb.cw_next(back) : emb.cw_prev(back);
  };
  std::vector<Trip> out;
  for (std::size_t p = 0; p < g.n_boundary(); ++p) {
    const std::size_t b = g.boundary_order()[p];
    if (g.degree(b) == 0) continue;
    Trip t;
    t.source = static_cast<int>(p + 1);
    std::size_t d = emb.cw_next(emb.arc_dart(p));
    for (;;) {
      seen[d] = 1;
      t.darts.push_back(d);
      const std::size_t h = emb.head(d);
      if (g.is_boundary(h)) {
        t.target = static_cast<int>(g.boundary_position(h) + 1);
        break;
      }
      d = step(d);
    }
    out.push_back(std::move(t));
  }
  for (std::size_t d0 = 0; d0 < emb.dart_count(); ++d0) {
    if (seen[d0] || emb.is_arc(d0)) continue;
    Trip t;
    std::size_t d = d0;
    do {
      seen[d] = 1;
      t.darts.push_back(d);
      d = step(d);
    } while (!seen[d]);
    out.push_back(std::move(t));
  }
  return out;
}

std::string ModelMinimality::describe() const {
  std::string es;
  for (std::size_t e : edges) es += (es.empty() ? "" : ",") + std::to_string(e);
  switch (defect) {
    case ModelDefect::None: return "minimal";
    case ModelDefect::ClosedLoop: return "trip " + std::to_string(trip_a) + " is a closed loop";
    case ModelDefect::SelfIntersection: return "trip " + std::to_string(trip_a) + " passes edge(s) " + es + " twice";
    case ModelDefect::OrientedLens:
      return "trips " + std::to_string(trip_a) + " and " + std::to_string(trip_b) + " form an oriented lens at edges " +
             es;
  }
  return {};
}

ModelMinimality is_minimal_model(const LamGraph& g) {
  const auto trips = lam_strands(g);
  ModelMinimality r;
  auto fail = [&](ModelDefect defect, std::size_t a, std::size_t b, std::vector<std::size_t> edges) {
    r.minimal = false;
    r.defect = defect;
    r.trip_a = a;
    r.trip_b = b;
    r.edges = std::move(edges);
    return r;
  };
  for (std::size_t t = 0; t < trips.size(); ++t)
    if (trips[t].closed()) {
      std::vector<std::size_t> es;
      for (std::size_t d : trips[t].darts) es.push_back(DiskEmbedding::edge_of(d));
      return fail(ModelDefect::ClosedLoop, t, npos, es);
    }

  // Position of each edge along each trip that uses it.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> users(g.edge_count());
  for (std::size_t t = 0; t < trips.size(); ++t) {
    const auto& darts = trips[t].darts;
    const bool lollipop = darts.size() == 2 && DiskEmbedding::edge_of(darts[0]) == DiskEmbedding::edge_of(darts[1]);
    std::vector<std::size_t> twice;
    std::map<std::size_t, int> count;
    for (std::size_t i = 0; i < darts.size(); ++i) {
      const std::size_t e = DiskEmbedding::edge_of(darts[i]);
      if (++count[e] == 2) twice.push_back(e);
      users[e].push_back({t, i});
    }
    if (!twice.empty() && !lollipop) return fail(ModelDefect::SelfIntersection, t, npos, twice);
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::array<std::size_t, 3>>> shared;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (users[e].size() != 2) continue;
    auto [ta, ia] = users[e][0];
    auto [tb, ib] = users[e][1];
    if (ta == tb) continue;
    if (ta > tb) {
      std::swap(ta, tb);
      std::swap(ia, ib);
    }
    shared[{ta, tb}].push_back({e, ia, ib});
  }
  for (const auto& [key, list] : shared) {
    for (std::size_t x = 0; x < list.size(); ++x)
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        const bool a_first = list[x][1] < list[y][1];
        const bool b_first = list[x][2] < list[y][2];
        if (a_first == b_first) return fail(ModelDefect::OrientedLens, key.first, key.second, {list[x][0], list[y][0]});
      }
  }
  return r;
}

FaceLabeling scott_labels(const LamGraph& g) {
  const auto minimality = is_minimal_model(g);
  if (!minimality.minimal) throw Error(ErrorKind::NotMinimal, "Lam model is not minimal: " + minimality.describe());
  const DiskEmbedding& emb = g.embedding();
  const std::size_t nf = emb.faces().size();
  FaceLabeling labels(nf);

  for (const auto& trip : lam_strands(g)) {
    const auto& td = trip.darts;
    if (td.size() == 2 && DiskEmbedding::edge_of(td[0]) == DiskEmbedding::edge_of(td[1])) {
      // Lollipop: a white stub keeps its boundary node uncovered in every
      // dimer, a black one keeps it covered.
      if (g.nodes()[g.embedding().head(td[0])].color == Color::White)
        for (auto& l : labels) l.push_back(trip.source);
      continue;
    }
    std::vector<int> side(nf, -1);  // 1 = left of the trip, 0 = right
    std::vector<char> on_trip(g.edge_count(), 0);
    std::deque<std::size_t> queue;
    auto mark = [&](std::size_t f, int s) {
      if (f == npos) return;
      if (side[f] == -1) {
        side[f] = s;
        queue.push_back(f);
      } else if (side[f] != s) {
        throw Error(ErrorKind::NotMinimal, "face lies on both sides of trip " + std::to_string(trip.source));
      }
    };
    for (std::size_t d : trip.darts) on_trip[DiskEmbedding::edge_of(d)] = 1;
    for (std::size_t d : trip.darts) {
      mark(emb.left_face(d), 1);
      mark(emb.right_face(d), 0);
    }
    while (!queue.empty()) {
      const std::size_t f = queue.front();
      queue.pop_front();
      for (std::size_t d : emb.faces()[f]) {
        if (emb.is_arc(d) || on_trip[DiskEmbedding::edge_of(d)]) continue;
        mark(emb.left_face(d), side[f]);
      }
    }
    for (std::size_t f = 0; f < nf; ++f)
      if (side[f] == 1) labels[f].push_back(trip.source);
  }
  for (auto& l : labels) std::sort(l.begin(), l.end());
  return labels;
}

}  // namespace circnet
