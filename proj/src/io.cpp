#include "circnet/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace circnet::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) parse_fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Rational rational_value(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  parse_fail("expected a rational string \"p/q\" or an integer");
}

std::vector<std::string> string_list(const json& v, const char* what) {
  if (!v.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) parse_fail(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

json rotation_json(const std::vector<std::string>& ids, const std::vector<std::vector<std::size_t>>& rotation,
                   const std::vector<std::string>& edge_ids) {
  json rot = json::object();
  for (std::size_t v = 0; v < ids.size(); ++v) {
    json lst = json::array();
    for (std::size_t e : rotation[v]) lst.push_back(edge_ids[e]);
    rot[ids[v]] = std::move(lst);
  }
  return rot;
}

NodeOrigin parse_origin(const std::string& s) {
  for (NodeOrigin o : {NodeOrigin::None, NodeOrigin::Vertex, NodeOrigin::BoundaryVertex, NodeOrigin::Face,
                       NodeOrigin::EdgeMidpoint, NodeOrigin::BoundaryNode})
    if (to_string(o) == s) return o;
  parse_fail("unknown origin '" + s + "'");
}

std::string_view to_string(LamEdgeKind k) {
  switch (k) {
    case LamEdgeKind::Plain: return "plain";
    case LamEdgeKind::VertexJoin: return "vertex_join";
    case LamEdgeKind::BoundaryVertexJoin: return "boundary_vertex_join";
    case LamEdgeKind::FaceJoin: return "face_join";
    case LamEdgeKind::Leg: return "leg";
  }
  return "plain";
}

LamEdgeKind parse_kind(const std::string& s) {
  for (LamEdgeKind k : {LamEdgeKind::Plain, LamEdgeKind::VertexJoin, LamEdgeKind::BoundaryVertexJoin,
                        LamEdgeKind::FaceJoin, LamEdgeKind::Leg})
    if (to_string(k) == s) return k;
  parse_fail("unknown edge kind '" + s + "'");
}

}  // namespace

NetworkFile parse_network(const json& j) {
  GraphSpec spec;
  const json& verts = field(j, "vertices");
  if (!verts.is_array()) parse_fail("vertices must be an array");
  for (const auto& v : verts) {
    const json& b = field(v, "boundary");
    if (!b.is_boolean()) parse_fail("vertex field 'boundary' must be a boolean");
    spec.vertices.push_back({string_field(v, "id"), b.get<bool>()});
  }
  const json& edges = field(j, "edges");
  if (!edges.is_array()) parse_fail("edges must be an array");
  std::vector<std::optional<Rational>> weights;
  for (const auto& e : edges) {
    spec.edges.push_back({string_field(e, "id"), string_field(e, "u"), string_field(e, "v")});
    if (e.contains("weight")) {
      Rational w = rational_value(e.at("weight"));
      if (w <= 0) throw Error(ErrorKind::InvalidNetwork, "edge '" + spec.edges.back().id + "' has non-positive weight");
      weights.emplace_back(std::move(w));
    } else {
      weights.emplace_back();
    }
  }
  const json& rot = field(j, "rotation");
  if (!rot.is_object()) parse_fail("rotation must map vertex ids to edge id lists");
  for (const auto& [vid, lst] : rot.items()) spec.rotation.push_back({vid, string_list(lst, "rotation list")});
  spec.boundary_order = string_list(field(j, "boundary_order"), "boundary_order");
  const json& nb = field(j, "n_boundary");
  if (!nb.is_number_integer() || nb.get<long long>() != static_cast<long long>(spec.boundary_order.size()))
    throw Error(ErrorKind::InvalidNetwork, "n_boundary does not match boundary_order");

  NetworkFile out{build_graph(spec), std::nullopt};
  std::size_t with = 0;
  for (const auto& w : weights) with += w.has_value();
  if (with == weights.size() && !weights.empty()) {
    Vector<Rational> w(static_cast<Index>(weights.size()));
    for (std::size_t e = 0; e < weights.size(); ++e) w(static_cast<Index>(e)) = *weights[e];
    out.weight = std::move(w);
  } else if (with != 0) {
    throw Error(ErrorKind::InvalidNetwork, "either every edge or no edge must carry a weight");
  }
  return out;
}

NetworkFile parse_network_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("network JSON: ") + e.what());
  }
  return parse_network(j);
}

NetworkFile read_network_file(const std::string& path) { return parse_network_text(read_text_file(path)); }

PlanarNetwork<Rational> require_weights(const NetworkFile& f) {
  if (!f.weight) throw Error(ErrorKind::InvalidNetwork, "network file has no edge weights");
  return with_weights(f.graph, *f.weight);
}

json network_to_json(const PlanarGraph& g, const Vector<Rational>* weight) {
  json j;
  j["n_boundary"] = g.n_boundary();
  std::vector<std::string> vids, eids;
  for (const auto& v : g.vertices()) {
    vids.push_back(v.id);
    j["vertices"].push_back({{"id", v.id}, {"boundary", v.boundary}});
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges()[e];
    eids.push_back(ed.id);
    json je = {{"id", ed.id}, {"u", g.vertices()[ed.u].id}, {"v", g.vertices()[ed.v].id}};
    if (weight) je["weight"] = format_rational((*weight)(static_cast<Index>(e)));
    j["edges"].push_back(std::move(je));
  }
  if (g.edge_count() == 0) j["edges"] = json::array();
  j["rotation"] = rotation_json(vids, g.rotation(), eids);
  for (std::size_t b : g.boundary_order()) j["boundary_order"].push_back(g.vertices()[b].id);
  return j;
}

json lam_model_to_json(const LamModel<Rational>& m) {
  const LamGraph& g = m.graph;
  json j;
  j["n_boundary"] = g.n_boundary();
  std::vector<std::string> vids, eids;
  for (const auto& v : g.nodes()) {
    vids.push_back(v.id);
    json jv = {{"id", v.id}, {"boundary", v.boundary}, {"color", to_string(v.color)}, {"origin", to_string(v.origin)}};
    if (v.source != npos) jv["source"] = v.source;
    j["vertices"].push_back(std::move(jv));
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges()[e];
    eids.push_back(ed.id);
    json je = {{"id", ed.id},
               {"u", g.nodes()[ed.a].id},
               {"v", g.nodes()[ed.b].id},
               {"weight", format_rational(m.weight(static_cast<Index>(e)))},
               {"kind", to_string(ed.kind)}};
    if (ed.conductance_edge != npos) je["conductance_edge"] = ed.conductance_edge;
    j["edges"].push_back(std::move(je));
  }
  j["rotation"] = rotation_json(vids, g.rotation(), eids);
  for (std::size_t b : g.boundary_order()) j["boundary_order"].push_back(g.nodes()[b].id);
  return j;
}

LamModel<Rational> parse_lam_model(const json& j) {
  std::vector<LamNode> nodes;
  std::map<std::string, std::size_t> node_ix, edge_ix;
  for (const auto& v : field(j, "vertices")) {
    LamNode n;
    n.id = string_field(v, "id");
    n.boundary = field(v, "boundary").get<bool>();
    const std::string color = string_field(v, "color");
    if (color != "black" && color != "white") parse_fail("color must be black or white");
    n.color = color == "black" ? Color::Black : Color::White;
    if (v.contains("origin")) n.origin = parse_origin(v.at("origin").get<std::string>());
    if (v.contains("source")) n.source = v.at("source").get<std::size_t>();
    if (!node_ix.emplace(n.id, nodes.size()).second) throw Error(ErrorKind::InvalidNetwork, "duplicate node " + n.id);
    nodes.push_back(std::move(n));
  }
  auto node = [&](const std::string& id) {
    const auto it = node_ix.find(id);
    if (it == node_ix.end()) throw Error(ErrorKind::InvalidNetwork, "unknown node '" + id + "'");
    return it->second;
  };
  std::vector<LamEdge> edges;
  std::vector<Rational> weights;
  for (const auto& e : field(j, "edges")) {
    LamEdge le{string_field(e, "id"), node(string_field(e, "u")), node(string_field(e, "v"))};
    if (e.contains("kind")) le.kind = parse_kind(e.at("kind").get<std::string>());
    if (e.contains("conductance_edge")) le.conductance_edge = e.at("conductance_edge").get<std::size_t>();
    if (!edge_ix.emplace(le.id, edges.size()).second) throw Error(ErrorKind::InvalidNetwork, "duplicate edge " + le.id);
    weights.push_back(e.contains("weight") ? rational_value(e.at("weight")) : Rational(1));
    edges.push_back(std::move(le));
  }
  std::vector<std::vector<std::size_t>> rotation(nodes.size());
  for (const auto& [vid, lst] : field(j, "rotation").items())
    for (const auto& eid : string_list(lst, "rotation list")) {
      const auto it = edge_ix.find(eid);
      if (it == edge_ix.end()) throw Error(ErrorKind::InvalidNetwork, "unknown edge '" + eid + "'");
      rotation[node(vid)].push_back(it->second);
    }
  std::vector<std::size_t> order;
  for (const auto& id : string_list(field(j, "boundary_order"), "boundary_order")) order.push_back(node(id));
  Vector<Rational> w(static_cast<Index>(weights.size()));
  for (std::size_t e = 0; e < weights.size(); ++e) w(static_cast<Index>(e)) = weights[e];
  return {LamGraph(std::move(nodes), std::move(edges), std::move(rotation), std::move(order)), std::move(w)};
}

Matrix<Rational> parse_matrix_text(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<Rational> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_rational(cell));
    if (!rows.empty() && row.size() != rows.front().size()) parse_fail("matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) parse_fail("empty matrix");
  Matrix<Rational> m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k) m(static_cast<Index>(i), static_cast<Index>(k)) = rows[i][k];
  return m;
}

Matrix<Rational> parse_matrix_json(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) parse_fail("matrix must be a non-empty array of rows");
  Matrix<Rational> m(static_cast<Index>(j.size()), static_cast<Index>(j.front().size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.front().size()) parse_fail("matrix rows have different lengths");
    for (std::size_t k = 0; k < j[i].size(); ++k) m(static_cast<Index>(i), static_cast<Index>(k)) = rational_value(j[i][k]);
  }
  return m;
}

Matrix<Rational> read_matrix_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return parse_matrix_json(json::parse(text));
    } catch (const json::exception& e) {
      parse_fail(std::string("matrix JSON: ") + e.what());
    }
  }
  return parse_matrix_text(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_fail("cannot write '" + path + "'");
  out << text;
}

std::string format_labels(const FaceLabeling& labels) {
  std::string out;
  for (std::size_t f = 0; f < labels.size(); ++f) out += "face " + std::to_string(f) + ": " + format_subset(labels[f]) + '\n';
  return out;
}

}  // namespace circnet::io
