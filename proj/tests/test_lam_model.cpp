#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "circnet/corpus.hpp"
#include "circnet/grassmann.hpp"
#include "circnet/temperley.hpp"
#include "test_util.hpp"

using namespace circnet;

namespace {

// Square model on four boundary nodes with k = 2: inner square Ba-Wb-Bc-Wd,
// legs 1-Ba and 3-Bc, degree-two black nodes between 2-Wb and 4-Wd.
LamModel<Rational> square_model(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  std::vector<LamNode> nodes = {
      {"1", Color::White, true},   {"2", Color::White, true},   {"3", Color::White, true},
      {"4", Color::White, true},   {"Ba", Color::Black, false}, {"Wb", Color::White, false},
      {"Bc", Color::Black, false}, {"Wd", Color::White, false}, {"B2", Color::Black, false},
      {"B4", Color::Black, false}};
  std::vector<LamEdge> edges = {{"l1", 0, 4}, {"l3", 2, 6}, {"l2", 1, 8}, {"l4", 3, 9}, {"x2", 8, 5},
                                {"x4", 9, 7}, {"ab", 4, 5}, {"bc", 5, 6}, {"cd", 6, 7}, {"da", 7, 4}};
  std::vector<std::vector<std::size_t>> rot = {{0}, {2}, {1}, {3}, {0, 6, 9}, {4, 7, 6}, {7, 1, 8}, {9, 8, 5}, {2, 4},
                                               {5, 3}};
  LamGraph g(nodes, edges, rot, {0, 1, 2, 3});
  Vector<Rational> w = Vector<Rational>::Ones(10);
  w(6) = a;
  w(7) = b;
  w(8) = c;
  w(9) = d;
  return {g, w};
}

bool has_label(const FaceLabeling& labels, Subset s) { return std::find(labels.begin(), labels.end(), s) != labels.end(); }

}  // namespace

TEST_CASE("k_gamma") {
  const auto sq = square_model(R(2), R(3), R(5), R(7));
  CHECK(sq.graph.validate().ok());
  CHECK(k_gamma(sq.graph) == 2);
  for (const auto& shape : corpus::minimal_shapes())
    CHECK(k_gamma(temperley_graph(shape.graph)) == expected_k(shape.graph));
  CHECK(expected_k(corpus::star()) == 2);
  CHECK(expected_k(corpus::single_edge()) == 1);
  CHECK(expected_k(corpus::lattice(1)) == 4);

  // One white node of degree two between two boundary nodes.
  LamGraph chain({{"1", Color::White, true}, {"2", Color::White, true}, {"w", Color::White, false}},
                 {{"p", 0, 2}, {"q", 1, 2}}, {{0}, {1}, {0, 1}}, {0, 1});
  CHECK(k_gamma(chain) == 1);
}

TEST_CASE("k_gamma on small stars") {
  LamGraph g({{"1", Color::White, true}, {"2", Color::White, true}, {"b", Color::Black, false}}, {{"p", 0, 2}, {"q", 1, 2}},
             {{0}, {1}, {0, 1}}, {0, 1});
  CHECK(k_gamma(g) == 1);
  LamGraph odd({{"1", Color::White, true}, {"2", Color::White, true}, {"3", Color::White, true},
                {"b", Color::Black, false}},
               {{"p", 0, 3}, {"q", 1, 3}, {"r", 2, 3}}, {{0}, {1}, {2}, {0, 1, 2}}, {0, 1, 2});
  CHECK(k_gamma(odd) == 2);
  // The total always has the parity of 2|E|, so a degree-3 white node is fine.
  LamGraph white3({{"1", Color::White, true}, {"2", Color::White, true}, {"3", Color::White, true},
                   {"w", Color::White, false}},
                  {{"p", 0, 3}, {"q", 1, 3}, {"r", 2, 3}}, {{0}, {1}, {2}, {0, 1, 2}}, {0, 1, 2});
  CHECK(k_gamma(white3) == 1);
}

TEST_CASE("square model dimers") {
  const Rational a(2), b(3), c(5), d(7);
  const auto sq = square_model(a, b, c, d);
  const auto dimers = enumerate_dimers(sq.graph, {1, 3});
  CHECK(dimers.size() == 2);
  CHECK(boundary_measurement(sq, {1, 3}) == a * c + b * d);
  bool found = false;
  for (const auto& dm : dimers) found = found || dimer_weight(sq, dm) == a * c;
  CHECK(found);
  for (const auto& I : k_subsets(4, 2)) {
    for (const auto& dm : enumerate_dimers(sq.graph, I)) CHECK(dimer_boundary_subset(sq.graph, dm) == I);
  }
  CHECK_THROWS_AS(enumerate_dimers(sq.graph, {1}), Error);
  CHECK_THROWS_AS(enumerate_dimers(sq.graph, {1, 1}), Error);
  // Plücker relation for Gr(2,4).
  auto D = [&](int i, int j) { return boundary_measurement(sq, {i, j}); };
  CHECK(D(1, 3) * D(2, 4) == D(1, 2) * D(3, 4) + D(1, 4) * D(2, 3));
}

TEST_CASE("temperley structure") {
  {
    const auto lam = temperley_graph(corpus::triangle());
    CHECK(lam.validate().ok());
    CHECK(lam.n_boundary() == 6);
    std::map<NodeOrigin, int> count;
    for (const auto& node : lam.nodes()) ++count[node.origin];
    CHECK(count[NodeOrigin::BoundaryVertex] == 3);
    CHECK(count[NodeOrigin::EdgeMidpoint] == 3);
    CHECK(count[NodeOrigin::Face] == 4);
    CHECK(count[NodeOrigin::Vertex] == 0);
  }
  {
    const auto lam = temperley_graph(corpus::single_edge());
    CHECK(lam.n_boundary() == 4);
    std::map<NodeOrigin, int> count;
    for (const auto& node : lam.nodes()) ++count[node.origin];
    CHECK(count[NodeOrigin::EdgeMidpoint] == 1);
    CHECK(count[NodeOrigin::BoundaryVertex] == 2);
    CHECK(count[NodeOrigin::Face] == 2);
  }
  for (const auto& shape : corpus::minimal_shapes()) {
    const auto lam = temperley_graph(shape.graph);
    INFO(shape.name);
    CHECK(lam.validate().ok());
    for (std::size_t p = 0; p < lam.n_boundary(); ++p) CHECK(lam.degree(lam.boundary_order()[p]) == 1);
  }
  GraphSpec s;
  s.vertices = {{"1", true}, {"2", true}, {"3", true}, {"4", true}};
  s.boundary_order = {"1", "2", "3", "4"};
  s.edges = {{"a", "1", "2"}, {"b", "3", "4"}};
  s.rotation = {{"1", {"a"}}, {"2", {"a"}}, {"3", {"b"}}, {"4", {"b"}}};
  CHECK_THROWS_AS(temperley_graph(build_graph(s)), Error);
}

TEST_CASE("uniform placement reproduces the response point, literal does not") {
  std::mt19937_64 rng(7);
  for (const auto& shape : corpus::minimal_shapes()) {
    INFO(shape.name);
    const auto net = with_weights(shape.graph, corpus::random_weights(shape.graph.edge_count(), rng));
    CHECK(convention_reproduces_response(net, WeightConvention::Uniform));
  }
  const auto star = corpus::star_network(R(1), R(2), R(3));
  CHECK_FALSE(convention_reproduces_response(star, WeightConvention::Literal));
  CHECK(select_convention(corpus::star()) == WeightConvention::Uniform);

  // Exact proportionality factor on the star: L_unc = a + b + c.
  const auto model = temperley_lam_model(star, WeightConvention::Uniform);
  const auto minors = plucker_vector(omega_prime_from_response(response_matrix(star)));
  const auto dimers = boundary_measurement_vector(model);
  for (std::size_t i = 0; i < dimers.size(); ++i) CHECK(dimers[i] == minors.values[i] * R(6));
}

TEST_CASE("lam strands") {
  {
    const auto trips = lam_strands(temperley_graph(corpus::star()));
    CHECK(trips.size() == 6);
    std::set<int> targets;
    for (const auto& t : trips) {
      CHECK_FALSE(t.closed());
      targets.insert(t.target);
    }
    CHECK(targets.size() == 6);
  }
  {
    LamGraph chain({{"1", Color::White, true}, {"2", Color::White, true}, {"b", Color::Black, false}},
                   {{"p", 0, 2}, {"q", 1, 2}}, {{0}, {1}, {0, 1}}, {0, 1});
    const auto trips = lam_strands(chain);
    REQUIRE(trips.size() == 2);
    CHECK(trips[0].source == 1);
    CHECK(trips[0].target == 2);
    CHECK(is_minimal_model(chain).minimal);
  }
  {
    // Boundary node 2 carries a black lollipop.
    LamGraph lolli({{"1", Color::White, true}, {"2", Color::White, true}, {"3", Color::White, true},
                    {"b", Color::Black, false}, {"s", Color::Black, false}},
                   {{"p", 0, 3}, {"q", 2, 3}, {"r", 1, 4}}, {{0}, {2}, {1}, {1, 0}, {2}}, {0, 1, 2});
    const auto trips = lam_strands(lolli);
    REQUIRE(trips.size() == 3);
    CHECK(trips[1].source == 2);
    CHECK(trips[1].target == 2);
    CHECK(is_minimal_model(lolli).minimal);
    const auto labels = scott_labels(lolli);
    for (const auto& l : labels) CHECK(std::find(l.begin(), l.end(), 2) == l.end());
  }
}

TEST_CASE("model minimality") {
  for (const auto& shape : corpus::minimal_shapes()) {
    INFO(shape.name);
    CHECK(is_minimal_model(temperley_graph(shape.graph)).minimal);
  }
  const auto bad = is_minimal_model(temperley_graph(corpus::parallel_double_edge()));
  CHECK_FALSE(bad.minimal);
  CHECK_THROWS_AS(scott_labels(temperley_graph(corpus::parallel_double_edge())), Error);
}

TEST_CASE("scott labels") {
  const auto lam = temperley_graph(corpus::star());
  const auto labels = scott_labels(lam);
  for (const auto& l : labels) CHECK(l.size() == 2);
  for (Subset s : {Subset{2, 6}, Subset{1, 6}, Subset{5, 6}, Subset{4, 6}, Subset{4, 5}}) {
    INFO(format_subset(s));
    CHECK(has_label(labels, s));
  }

  for (const auto& shape : corpus::minimal_shapes()) {
    INFO(shape.name);
    const auto g = temperley_graph(shape.graph);
    const auto lab = scott_labels(g);
    const auto& emb = g.embedding();
    for (const auto& l : lab) CHECK(static_cast<int>(l.size()) == k_gamma(g));
    for (std::size_t d = 0; d < emb.dart_count(); d += 2) {
      if (emb.is_arc(d)) continue;
      Subset diff;
      const auto& x = lab[emb.right_face(d)];
      const auto& y = lab[emb.left_face(d)];
      std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
      CHECK(diff.size() == 2);
    }
    // Boundary faces in circle order change by one index at each step.
    std::vector<std::size_t> bfaces;
    for (std::size_t p = 0; p < g.n_boundary(); ++p) bfaces.push_back(emb.boundary_face(p));
    for (std::size_t p = 0; p < bfaces.size(); ++p) {
      const auto& x = lab[bfaces[p]];
      const auto& y = lab[bfaces[(p + 1) % bfaces.size()]];
      Subset diff;
      std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
      CHECK(diff.size() <= 2);
    }
  }
}

TEST_CASE("boundary faces have a unique dimer") {
  std::mt19937_64 rng(11);
  for (const auto& shape : corpus::minimal_shapes()) {
    INFO(shape.name);
    const auto g = temperley_graph(shape.graph);
    const auto labels = scott_labels(g);
    for (std::size_t f = 0; f < labels.size(); ++f)
      if (g.embedding().is_boundary_face(f)) CHECK(enumerate_dimers(g, labels[f]).size() == 1);
  }
}

TEST_CASE("k equals the boundary profile of every dimer") {
  for (const auto& shape : corpus::minimal_shapes()) {
    const auto g = temperley_graph(shape.graph);
    const int k = k_gamma(g);
    for (const auto& I : k_subsets(static_cast<int>(g.n_boundary()), k))
      for (const auto& d : enumerate_dimers(g, I)) CHECK(static_cast<int>(dimer_boundary_subset(g, d).size()) == k);
  }
}

TEST_CASE("face weights and gauge") {
  std::mt19937_64 rng(3);
  const auto net = with_weights(corpus::triangle(), corpus::random_weights(3, rng));
  const auto model = temperley_lam_model(net, WeightConvention::Uniform);
  const auto unit = temperley_lam_model(with_uniform_weights(corpus::triangle()), WeightConvention::Uniform);
  for (const auto& o : face_weights(unit)) CHECK(o == 1);

  // A corner face b_v, w_e, b_F, w_e' sees a ratio of two conductances.
  const auto& emb = model.graph.embedding();
  bool saw_ratio = false;
  for (std::size_t f = 0; f < emb.faces().size(); ++f) {
    const Rational o = face_weight(model, f);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j)
        if (i != j && (o == net.weight(i) / net.weight(j))) saw_ratio = true;
  }
  CHECK(saw_ratio);

  const auto before = face_weights(model);
  const auto meas = boundary_measurement_vector(model);
  for (std::size_t x = 0; x < model.graph.node_count(); ++x) {
    if (model.graph.is_boundary(x)) {
      CHECK_THROWS_AS(gauge_transform(model, x, R(2)), Error);
      continue;
    }
    const auto moved = gauge_transform(model, x, R(5, 3));
    CHECK(face_weights(moved) == before);
    const auto mm = boundary_measurement_vector(moved);
    for (std::size_t i = 0; i < mm.size(); ++i) CHECK(mm[i] == meas[i] * R(5, 3));
    const auto back = gauge_transform(moved, x, R(3, 5));
    CHECK(back.weight == model.weight);
    CHECK(gauge_transform(model, x, R(1)).weight == model.weight);
  }
}
