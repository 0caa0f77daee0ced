#include "doctest.h"

#include <set>

#include "circnet/corpus.hpp"
#include "test_util.hpp"

using namespace circnet;

namespace {

PlanarGraph k4_like(bool scrambled) {
  GraphSpec s;
  for (const char* b : {"1", "2", "3"}) {
    s.vertices.push_back({b, true});
    s.boundary_order.push_back(b);
  }
  s.vertices.push_back({"x", false});
  s.edges = {{"e12", "1", "2"}, {"e23", "2", "3"}, {"e31", "3", "1"},
             {"x1", "x", "1"},  {"x2", "x", "2"},  {"x3", "x", "3"}};
  s.rotation = {{"1", {"e12", "x1", "e31"}},
                {"2", {"e23", "x2", "e12"}},
                {"3", {"e31", "x3", "e23"}},
                {"x", scrambled ? std::vector<std::string>{"x1", "x3", "x2"} : std::vector<std::string>{"x1", "x2", "x3"}}};
  return build_graph(s);
}

std::size_t interior_faces(const PlanarGraph& g) {
  std::size_t k = 0;
  for (const auto& f : faces(g)) k += f.is_outer_arc ? 0 : 1;
  return k;
}

}  // namespace

TEST_CASE("star network is valid") {
  const auto net = corpus::star_network(R(1), R(2), R(3));
  CHECK(validate_network(net).ok());
}

TEST_CASE("zero weight is reported") {
  auto net = corpus::star_network(R(1), R(2), R(3));
  net.weight(1) = 0;
  const auto report = validate_network(net);
  CHECK(report.has("non-positive weight"));
  CHECK(report.violations.size() == 1);
}

TEST_CASE("scrambled rotation is non-planar") {
  CHECK(k4_like(false).validate().ok());
  const auto bad = k4_like(true);
  CHECK(bad.validate().has("non-planar rotation"));
  CHECK_THROWS_AS(faces(bad), Error);
}

TEST_CASE("edge end listed twice is a rotation mismatch") {
  GraphSpec s;
  s.vertices = {{"1", true}, {"2", true}};
  s.boundary_order = {"1", "2"};
  s.edges = {{"e", "1", "2"}};
  s.rotation = {{"1", {"e", "e"}}, {"2", {"e"}}};
  CHECK(build_graph(s).validate().has("rotation mismatch"));
}

TEST_CASE("detached inner component is reported") {
  GraphSpec s;
  s.vertices = {{"1", true}, {"2", true}, {"x", false}};
  s.boundary_order = {"1", "2"};
  s.edges = {{"e", "1", "2"}};
  s.rotation = {{"1", {"e"}}, {"2", {"e"}}};
  CHECK(build_graph(s).validate().has("detached component"));
}

TEST_CASE("face counts") {
  CHECK(faces(corpus::triangle()).size() == 4);
  CHECK(interior_faces(corpus::triangle()) == 1);
  CHECK(faces(corpus::star()).size() == 3);
  CHECK(interior_faces(corpus::star()) == 0);
  CHECK(faces(corpus::single_edge()).size() == 2);

  // Lattice: V - E + F = 1 over the closed disk, with the n arcs added.
  for (int m = 1; m <= 3; ++m) {
    const auto g = corpus::lattice(m);
    const long v = static_cast<long>(g.vertex_count());
    const long e = static_cast<long>(g.edge_count() + g.n_boundary());
    const long f = static_cast<long>(faces(g).size());
    CHECK(v - e + f == 1);
    CHECK(g.edge_count() == static_cast<std::size_t>(2 * m * (4 * m + 1)));
    CHECK(interior_faces(g) == static_cast<std::size_t>((m - 1) * (4 * m + 1) + 1));
  }
}

TEST_CASE("every dart is used by exactly one face") {
  for (const auto& shape : corpus::minimal_shapes()) {
    const auto& emb = shape.graph.embedding();
    std::vector<int> seen(emb.dart_count(), 0);
    for (const auto& f : faces(shape.graph))
      for (auto d : f.boundary_walk) ++seen[d];
    // Reversed arcs belong to the dropped exterior.
    for (std::size_t d = 0; d < emb.dart_count(); ++d)
      CHECK(seen[d] == ((emb.is_arc(d) && d % 2 == 1) ? 0 : 1));
  }
}

TEST_CASE("overlay faces") {
  {
    const auto g = corpus::single_edge();
    const auto ov = dual_with_intersections(g);
    REQUIRE(ov.size() == 1);
    const auto& emb = g.embedding();
    CHECK(ov[0].left_face != ov[0].right_face);
    CHECK(emb.is_boundary_face(ov[0].left_face));
    CHECK(emb.is_boundary_face(ov[0].right_face));
  }
  {
    const auto g = corpus::triangle();
    const auto& emb = g.embedding();
    for (const auto& ov : dual_with_intersections(g)) {
      const bool l = emb.is_boundary_face(ov.left_face);
      const bool r = emb.is_boundary_face(ov.right_face);
      CHECK(l != r);
    }
  }
  {
    const auto g = corpus::star();
    const auto& emb = g.embedding();
    for (const auto& ov : dual_with_intersections(g)) {
      CHECK(emb.is_boundary_face(ov.left_face));
      CHECK(emb.is_boundary_face(ov.right_face));
      CHECK(ov.left_face != ov.right_face);
      CHECK(ov.corners[0].vertex == g.edges()[ov.edge].u);
      CHECK(ov.corners[2].face == ov.right_face);
    }
  }
}

TEST_CASE("median strands") {
  {
    const auto strands = median_strands(corpus::single_edge());
    CHECK(strands.size() == 2);
    std::size_t crossing = 0;
    for (const auto& s : strands) crossing += s.crossings.size();
    CHECK(crossing == 2);
  }
  {
    const auto g = corpus::star();
    const auto strands = median_strands(g);
    REQUIRE(strands.size() == 3);
    const auto pairs = strand_pairs_by_edge(g, strands);
    std::set<std::pair<std::size_t, std::size_t>> met;
    for (const auto& p : pairs) {
      CHECK(p[0] != p[1]);
      met.insert({std::min(p[0], p[1]), std::max(p[0], p[1])});
    }
    CHECK(met.size() == 3);
  }
  {
    const auto g = corpus::parallel_double_edge();
    const auto strands = median_strands(g);
    const auto pairs = strand_pairs_by_edge(g, strands);
    REQUIRE(pairs.size() == 2);
    CHECK(std::min(pairs[0][0], pairs[0][1]) == std::min(pairs[1][0], pairs[1][1]));
    CHECK(std::max(pairs[0][0], pairs[0][1]) == std::max(pairs[1][0], pairs[1][1]));
  }
}

TEST_CASE("strand terminals pair up all 2n boundary points") {
  for (const auto& shape : corpus::minimal_shapes()) {
    const auto strands = median_strands(shape.graph);
    const std::size_t n = shape.graph.n_boundary();
    CHECK(strands.size() == n);
    std::vector<int> hit(2 * n + 1, 0);
    std::size_t crossings = 0;
    for (const auto& s : strands) {
      REQUIRE_FALSE(s.closed_loop());
      ++hit[s.start->number()];
      ++hit[s.end->number()];
      crossings += s.crossings.size();
    }
    for (std::size_t t = 1; t <= 2 * n; ++t) CHECK(hit[t] == 1);
    CHECK(crossings == 2 * shape.graph.edge_count());
  }
}

TEST_CASE("minimality") {
  for (const auto& shape : corpus::minimal_shapes()) {
    INFO(shape.name);
    CHECK(is_minimal(shape.graph).minimal);
  }
  CHECK(is_minimal(corpus::lattice(2)).minimal);
  const auto bad = is_minimal(corpus::parallel_double_edge());
  CHECK_FALSE(bad.minimal);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->defect == MinimalityDefect::Lens);
  CHECK(bad.witness->edges.size() == 2);
}

TEST_CASE("minimality ignores inner vertex labels") {
  GraphSpec s;
  s.vertices = {{"zz", false}, {"1", true}, {"2", true}, {"3", true}};
  s.boundary_order = {"1", "2", "3"};
  s.edges = {{"e3", "3", "zz"}, {"e1", "1", "zz"}, {"e2", "2", "zz"}};
  s.rotation = {{"zz", {"e1", "e2", "e3"}}, {"1", {"e1"}}, {"2", {"e2"}}, {"3", {"e3"}}};
  CHECK(is_minimal(build_graph(s)).minimal);
}

TEST_CASE("closed loop around an inner cycle") {
  // Boundary 1 joined to a triangle of inner nodes: the median strand around
  // the triangle closes up.
  GraphSpec s;
  s.vertices = {{"1", true}, {"2", true}, {"a", false}, {"b", false}, {"c", false}};
  s.boundary_order = {"1", "2"};
  s.edges = {{"s", "1", "a"}, {"t", "2", "b"}, {"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}};
  s.rotation = {{"1", {"s"}}, {"2", {"t"}}, {"a", {"s", "ab", "ca"}}, {"b", {"t", "bc", "ab"}}, {"c", {"ca", "bc"}}};
  const auto g = build_graph(s);
  REQUIRE(g.validate().ok());
  CHECK_FALSE(is_minimal(g).minimal);
}
