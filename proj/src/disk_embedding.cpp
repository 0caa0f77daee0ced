#include "circnet/disk_embedding.hpp"

#include <numeric>

namespace circnet {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::optional<DiskEmbedding> DiskEmbedding::build(std::size_t vertex_count, std::vector<EdgeEnds> edges,
                                                  const std::vector<std::vector<std::size_t>>& rotation,
                                                  std::vector<std::size_t> boundary_order, std::string* reason) {
  auto fail = [&](std::string why) -> std::optional<DiskEmbedding> {
    if (reason) *reason = std::move(why);
    return std::nullopt;
  };
  if (rotation.size() != vertex_count) return fail("rotation list count differs from vertex count");
  if (boundary_order.empty()) return fail("no boundary vertices");

  DiskEmbedding emb;
  emb.vertex_count_ = vertex_count;
  emb.edge_count_ = edges.size();
  emb.boundary_ = std::move(boundary_order);
  const std::size_t n = emb.boundary_.size();

  std::vector<std::size_t> boundary_pos(vertex_count, npos);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t b = emb.boundary_[i];
    if (b >= vertex_count) return fail("boundary vertex out of range");
    if (boundary_pos[b] != npos) return fail("boundary vertex listed twice");
    boundary_pos[b] = i;
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].u >= vertex_count || edges[e].v >= vertex_count) return fail("edge endpoint out of range");
    if (edges[e].u == edges[e].v) return fail("self-loop edge " + std::to_string(e));
  }

  emb.ends_ = std::move(edges);
  for (std::size_t i = 0; i < n; ++i) emb.ends_.push_back({emb.boundary_[i], emb.boundary_[(i + 1) % n]});

  const std::size_t darts = emb.dart_count();
  std::vector<int> seen(darts, 0);
  emb.rotation_.assign(vertex_count, {});
  for (std::size_t x = 0; x < vertex_count; ++x) {
    auto& out = emb.rotation_[x];
    const std::size_t bi = boundary_pos[x];
    if (bi != npos) out.push_back(emb.arc_dart(bi));
    for (std::size_t e : rotation[x]) {
      if (e >= emb.edge_count_) return fail("rotation references unknown edge");
      std::size_t d;
      if (emb.ends_[e].u == x)
        d = 2 * e;
      else if (emb.ends_[e].v == x)
        d = 2 * e + 1;
      else
        return fail("rotation at vertex " + std::to_string(x) + " lists non-incident edge " + std::to_string(e));
      out.push_back(d);
    }
    if (bi != npos) out.push_back(reverse(emb.arc_dart((bi + n - 1) % n)));
    for (std::size_t d : out) {
      if (seen[d]++) return fail("edge end used twice in rotation at vertex " + std::to_string(x));
    }
  }
  for (std::size_t d = 0; d < darts; ++d)
    if (!seen[d]) return fail("edge " + std::to_string(edge_of(d)) + " missing from a rotation list");

  emb.position_.assign(darts, 0);
  for (const auto& lst : emb.rotation_)
    for (std::size_t k = 0; k < lst.size(); ++k) emb.position_[lst[k]] = k;

  // Face tracing.
  std::vector<std::size_t> raw_face(darts, npos);
  std::vector<std::vector<std::size_t>> walks;
  for (std::size_t d0 = 0; d0 < darts; ++d0) {
    if (raw_face[d0] != npos) continue;
    std::vector<std::size_t> walk;
    std::size_t d = d0;
    while (raw_face[d] == npos) {
      raw_face[d] = walks.size();
      walk.push_back(d);
      d = emb.face_next(d);
    }
    walks.push_back(std::move(walk));
  }
  emb.total_faces_ = walks.size();

  const std::size_t exterior = raw_face[reverse(emb.arc_dart(0))];
  {
    const auto& ext = walks[exterior];
    bool ok = ext.size() == n;
    for (std::size_t d : ext) ok = ok && emb.is_arc(d) && (d % 2 == 1);
    emb.exterior_ok_ = ok;
  }

  std::vector<std::size_t> remap(walks.size(), npos);
  for (std::size_t f = 0; f < walks.size(); ++f) {
    if (f == exterior) continue;
    remap[f] = emb.faces_.size();
    emb.faces_.push_back(std::move(walks[f]));
  }
  emb.face_of_.assign(darts, npos);
  for (std::size_t d = 0; d < darts; ++d) emb.face_of_[d] = remap[raw_face[d]];
  emb.face_arc_count_.assign(emb.faces_.size(), 0);
  for (std::size_t f = 0; f < emb.faces_.size(); ++f)
    for (std::size_t d : emb.faces_[f])
      if (emb.is_arc(d)) ++emb.face_arc_count_[f];

  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& e : emb.ends_) parent[find_root(parent, e.u)] = find_root(parent, e.v);
  std::size_t comps = 0;
  for (std::size_t x = 0; x < vertex_count; ++x)
    if (find_root(parent, x) == x) ++comps;
  emb.components_ = comps;
  return emb;
}

std::size_t DiskEmbedding::tail(std::size_t dart) const {
  const auto& e = ends_[edge_of(dart)];
  return (dart % 2 == 0) ? e.u : e.v;
}

std::size_t DiskEmbedding::cw_next(std::size_t dart) const {
  const auto& lst = rotation_[tail(dart)];
  return lst[(position_[dart] + 1) % lst.size()];
}

std::size_t DiskEmbedding::cw_prev(std::size_t dart) const {
  const auto& lst = rotation_[tail(dart)];
  return lst[(position_[dart] + lst.size() - 1) % lst.size()];
}

bool DiskEmbedding::euler_ok() const {
  const long long v = static_cast<long long>(vertex_count_);
  const long long e = static_cast<long long>(ends_.size());
  const long long f = static_cast<long long>(total_faces_);
  return v - e + f == 1 + static_cast<long long>(components_);
}

}  // namespace circnet
