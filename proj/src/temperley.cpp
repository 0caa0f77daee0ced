#include "circnet/temperley.hpp"

#include "circnet/grassmann.hpp"

namespace circnet {

std::string_view to_string(WeightConvention c) {
  switch (c) {
    case WeightConvention::Literal: return "A";
    case WeightConvention::Uniform: return "B";
    case WeightConvention::Auto: return "auto";
  }
  return "auto";
}

WeightConvention parse_convention(std::string_view text) {
  if (text == "A" || text == "a" || text == "literal") return WeightConvention::Literal;
  if (text == "B" || text == "b" || text == "uniform") return WeightConvention::Uniform;
  if (text == "auto") return WeightConvention::Auto;
  throw Error(ErrorKind::Parse, "unknown convention '" + std::string(text) + "' (expected A, B or auto)");
}

bool carries_conductance(const LamEdge& edge, WeightConvention convention) {
  return edge.kind == LamEdgeKind::VertexJoin ||
         (edge.kind == LamEdgeKind::BoundaryVertexJoin && convention != WeightConvention::Literal);
}

LamGraph temperley_graph(const PlanarGraph& graph) {
  if (!graph.connected()) throw Error(ErrorKind::NotConnected, "the Temperley construction needs a connected network");
  const DiskEmbedding& emb = graph.embedding();
  const std::size_t n = graph.n_boundary();
  const std::size_t nv = graph.vertex_count();
  const std::size_t ne = graph.edge_count();
  const std::size_t nf = emb.faces().size();

  std::vector<LamNode> nodes;
  for (std::size_t p = 0; p < 2 * n; ++p)
    nodes.push_back({"n" + std::to_string(p + 1), Color::White, true, NodeOrigin::BoundaryNode, p});
  const std::size_t vertex_base = nodes.size();
  for (std::size_t v = 0; v < nv; ++v)
    nodes.push_back({"bv:" + graph.vertices()[v].id, Color::Black, false,
                     graph.is_boundary(v) ? NodeOrigin::BoundaryVertex : NodeOrigin::Vertex, v});
  const std::size_t face_base = nodes.size();
  for (std::size_t f = 0; f < nf; ++f)
    nodes.push_back({"bf:" + std::to_string(f), Color::Black, false, NodeOrigin::Face, f});
  const std::size_t mid_base = nodes.size();
  for (std::size_t e = 0; e < ne; ++e)
    nodes.push_back({"we:" + graph.edges()[e].id, Color::White, false, NodeOrigin::EdgeMidpoint, e});

  std::vector<LamEdge> edges;
  auto add = [&](std::string id, std::size_t a, std::size_t b, LamEdgeKind kind, std::size_t cond) {
    edges.push_back({std::move(id), a, b, kind, cond});
    return edges.size() - 1;
  };

  std::vector<std::size_t> odd_leg(n), even_leg(n);
  for (std::size_t i = 0; i < n; ++i) {
    odd_leg[i] = add("leg" + std::to_string(2 * i + 1), 2 * i, vertex_base + graph.boundary_order()[i],
                     LamEdgeKind::Leg, npos);
    even_leg[i] = add("leg" + std::to_string(2 * i + 2), 2 * i + 1, face_base + emb.boundary_face(i),
                      LamEdgeKind::Leg, npos);
  }
  // join[d]: Lam edge from the tail of dart d to w_e; side[d]: w_e to the face right of d.
  std::vector<std::size_t> join(2 * ne), side(2 * ne);
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& ge = graph.edges()[e];
    const std::string& id = ge.id;
    for (std::size_t s = 0; s < 2; ++s) {
      const std::size_t d = 2 * e + s;
      const std::size_t tail = s == 0 ? ge.u : ge.v;
      const auto kind = graph.is_boundary(tail) ? LamEdgeKind::BoundaryVertexJoin : LamEdgeKind::VertexJoin;
      join[d] = add(id + (s == 0 ? ":u" : ":v"), vertex_base + tail, mid_base + e, kind, e);
      side[d] = add(id + (s == 0 ? ":r" : ":l"), mid_base + e, face_base + emb.right_face(d), LamEdgeKind::FaceJoin, e);
    }
  }

  std::vector<std::vector<std::size_t>> rotation(nodes.size());
  for (std::size_t i = 0; i < n; ++i) {
    rotation[2 * i] = {odd_leg[i]};
    rotation[2 * i + 1] = {even_leg[i]};
  }
  for (std::size_t v = 0; v < nv; ++v) {
    auto& rot = rotation[vertex_base + v];
    if (graph.is_boundary(v)) rot.push_back(odd_leg[graph.boundary_position(v)]);
    for (std::size_t d : emb.darts_at(v))
      if (!emb.is_arc(d)) rot.push_back(join[d]);
  }
  for (std::size_t f = 0; f < nf; ++f) {
    auto& rot = rotation[face_base + f];
    for (std::size_t d : emb.faces()[f]) rot.push_back(emb.is_arc(d) ? even_leg[emb.arc_index(d)] : side[d]);
  }
  for (std::size_t e = 0; e < ne; ++e) {
    // Around the midpoint of u -> v: u, face on the left, v, face on the right.
    rotation[mid_base + e] = {join[2 * e], side[2 * e + 1], join[2 * e + 1], side[2 * e]};
  }

  std::vector<std::size_t> order(2 * n);
  for (std::size_t p = 0; p < 2 * n; ++p) order[p] = p;
  return LamGraph(std::move(nodes), std::move(edges), std::move(rotation), std::move(order));
}

bool convention_reproduces_response(const PlanarNetwork<Rational>& net, WeightConvention convention) {
  const auto omega = omega_prime_from_response(response_matrix(net));
  const auto minors = plucker_vector(omega);
  const auto model = temperley_lam_model(net, convention);
  return proportional(boundary_measurement_vector(model), minors.values);
}

WeightConvention select_convention(const PlanarGraph& graph, const Vector<Rational>* conductance) {
  Vector<Rational> probe;
  if (conductance) {
    probe = *conductance;
  } else {
    // Distinct primes: unit weights cannot tell the placements apart.
    probe.resize(static_cast<Index>(graph.edge_count()));
    long long candidate = 2;
    for (Index e = 0; e < probe.size(); ++e) {
      for (;; ++candidate) {
        bool prime = true;
        for (long long q = 2; q * q <= candidate; ++q) prime = prime && candidate % q != 0;
        if (prime) break;
      }
      probe(e) = Rational(candidate++);
    }
  }
  const auto net = with_weights(graph, probe);
  for (auto c : {WeightConvention::Uniform, WeightConvention::Literal})
    if (convention_reproduces_response(net, c)) return c;
  throw Error(ErrorKind::VerificationFailed, "no weight placement reproduces the response matrix");
}

}  // namespace circnet
