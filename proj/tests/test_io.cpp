#include "doctest.h"

#include "circnet/corpus.hpp"
#include "circnet/io.hpp"
#include "circnet/temperley.hpp"
#include "test_util.hpp"

using namespace circnet;

namespace {

const std::string kData = CIRCNET_DATA_DIR;

bool same_graph(const PlanarGraph& a, const PlanarGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    if (a.vertices()[v].id != b.vertices()[v].id || a.vertices()[v].boundary != b.vertices()[v].boundary) return false;
  for (std::size_t e = 0; e < a.edge_count(); ++e)
    if (a.edges()[e].id != b.edges()[e].id || a.edges()[e].u != b.edges()[e].u || a.edges()[e].v != b.edges()[e].v)
      return false;
  return a.rotation() == b.rotation() && a.boundary_order() == b.boundary_order();
}

const char* kStar = R"({
  "n_boundary": 3,
  "vertices": [{"id": "1", "boundary": true}, {"id": "2", "boundary": true},
               {"id": "3", "boundary": true}, {"id": "x", "boundary": false}],
  "edges": [{"id": "e1", "u": "1", "v": "x", "weight": "3/2"},
            {"id": "e2", "u": "2", "v": "x", "weight": 2},
            {"id": "e3", "u": "3", "v": "x", "weight": "5"}],
  "rotation": {"1": ["e1"], "2": ["e2"], "3": ["e3"], "x": ["e1", "e2", "e3"]},
  "boundary_order": ["1", "2", "3"]
})";

}  // namespace

TEST_CASE("network files") {
  const auto f = io::parse_network_text(kStar);
  REQUIRE(f.weight);
  CHECK((*f.weight)(0) == R(3, 2));
  CHECK((*f.weight)(1) == R(2));
  CHECK(same_graph(f.graph, corpus::star()));

  const auto net = io::require_weights(f);
  const auto back = io::parse_network(io::network_to_json(net));
  CHECK(same_graph(back.graph, net.graph));
  CHECK(*back.weight == net.weight);

  std::string zero = kStar;
  zero.replace(zero.find("\"3/2\""), 5, "\"0\"");
  CHECK(kind_of([&] { io::parse_network_text(zero); }) == ErrorKind::InvalidNetwork);
  std::string bad = kStar;
  bad.replace(bad.find("\"3/2\""), 5, "\"3/x\"");
  CHECK(kind_of([&] { io::parse_network_text(bad); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_network_text("{"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_network_text("{}"); }) == ErrorKind::Parse);
  std::string count = kStar;
  count.replace(count.find("\"n_boundary\": 3"), 15, "\"n_boundary\": 4");
  CHECK(kind_of([&] { io::parse_network_text(count); }) == ErrorKind::InvalidNetwork);
  std::string partial = kStar;
  partial.replace(partial.find(", \"weight\": 2"), 13, "");
  CHECK(kind_of([&] { io::parse_network_text(partial); }) == ErrorKind::InvalidNetwork);
  std::string dangling = kStar;
  dangling.replace(dangling.find("\"v\": \"x\""), 8, "\"v\": \"y\"");
  CHECK(kind_of([&] { io::parse_network_text(dangling); }) == ErrorKind::InvalidNetwork);
}

TEST_CASE("data directory matches the built-in corpus") {
  for (const char* name : {"single_edge", "star", "triangle", "pl_tree", "lattice5", "parallel_double_edge"}) {
    INFO(name);
    const auto f = io::read_network_file(kData + "/" + name + ".json");
    CHECK(!f.weight);
    CHECK(same_graph(f.graph, corpus::by_name(name)));
  }
  const auto unit = io::require_weights(io::read_network_file(kData + "/star_unit.json"));
  CHECK(unit.weight == Vector<Rational>::Ones(3));
  CHECK(io::read_matrix_file(kData + "/star_response_unit.txt") == response_matrix(unit));
  CHECK(io::read_matrix_file(kData + "/pl_tree_resistance.txt") ==
        effective_resistance_matrix(with_uniform_weights<Rational>(corpus::pl_tree())));
}

TEST_CASE("matrix text") {
  const auto m = io::parse_matrix_text("# comment\n1/2, -3\n\n 0 , 7/4  # trailing\n");
  CHECK(m == rmat({{R(1, 2), R(-3)}, {R(0), R(7, 4)}}));
  CHECK(io::format_matrix_text(m) == "1/2, -3/1\n0/1, 7/4\n");
  CHECK(io::parse_matrix_text(io::format_matrix_text(m)) == m);
  CHECK(io::parse_matrix_json(io::matrix_to_json(m)) == m);
  CHECK(kind_of([] { io::parse_matrix_text("1, 2\n3\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_matrix_text("# nothing\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_matrix_text("1/0\n"); }) == ErrorKind::Parse);
  CHECK(io::format_matrix_text(Matrix<double>(Matrix<double>::Identity(1, 1))) == "1\n");
}

TEST_CASE("Plücker lines, labels and weights") {
  const auto p = plucker_vector(rmat({{R(1), R(0), R(2)}, {R(0), R(1), R(3)}}));
  CHECK(io::format_plucker(p) == "1,2 → 1/1\n1,3 → 3/1\n2,3 → -2/1\n");
  CHECK(io::format_labels({{2, 6}, {1, 6}}) == "face 0: 2,6\nface 1: 1,6\n");
  const auto net = corpus::star_network(R(1), R(2), R(3));
  CHECK(io::format_edge_weights(net.graph, net.weight) == "e1 → 3/1\ne2 → 1/1\ne3 → 2/1\n");
}

TEST_CASE("Lam model files") {
  const auto model = temperley_lam_model(corpus::star_network(R(2), R(3), R(5)), WeightConvention::Uniform);
  const auto j = io::lam_model_to_json(model);
  CHECK(j["vertices"][0]["origin"] == "boundary");
  bool has_face = false;
  for (const auto& v : j["vertices"]) has_face = has_face || v["origin"] == "b_F";
  CHECK(has_face);
  const auto back = io::parse_lam_model(j);
  CHECK(back.weight == model.weight);
  CHECK(back.graph.rotation() == model.graph.rotation());
  CHECK(back.graph.boundary_order() == model.graph.boundary_order());
  CHECK(boundary_measurement_vector(back) == boundary_measurement_vector(model));
  CHECK(scott_labels(back.graph) == scott_labels(model.graph));
}
