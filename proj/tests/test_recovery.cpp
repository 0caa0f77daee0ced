#include "doctest.h"

#include <random>

#include "circnet/corpus.hpp"
#include "circnet/recovery.hpp"
#include "test_util.hpp"

using namespace circnet;

TEST_CASE("star recovery") {
  const auto net = corpus::star_network(R(1), R(2), R(3));
  const auto res = recover_from_response(corpus::star(), response_matrix(net));
  CHECK(res.network.weight == net.weight);
  CHECK(res.residual == 0);
  CHECK(res.redundant_count > 0);

  const auto unit = recover_from_response(corpus::star(), response_matrix(corpus::star_network(R(1), R(1), R(1))));
  for (Index e = 0; e < 3; ++e) CHECK(unit.network.weight(e) == 1);
}

TEST_CASE("twisted representative is gauge equivalent to the true weights") {
  std::mt19937_64 rng(17);
  for (const auto& shape : corpus::minimal_shapes()) {
    INFO(shape.name);
    const auto net = with_weights(shape.graph, corpus::random_weights(shape.graph.edge_count(), rng));
    const auto model = temperley_lam_model(net, WeightConvention::Uniform);
    const auto tau = twist(omega_prime_from_response(response_matrix(net)));
    const auto rep = lam_weights_from_twist(model.graph, tau, scott_labels(model.graph));
    for (std::size_t f = 0; f < model.graph.embedding().faces().size(); ++f)
      CHECK(face_weight(model.graph, rep, f) == face_weight(model, f));
  }
}

TEST_CASE("constraint shapes") {
  const auto g = corpus::star();
  const auto lam = temperley_graph(g);
  const auto net = corpus::star_network(R(2), R(3), R(5));
  const auto tau = twist(omega_prime_from_response(response_matrix(net)));
  const auto rep = lam_weights_from_twist(lam, tau, scott_labels(lam));
  const auto cs = build_constraints(lam, rep, WeightConvention::Uniform, g.edge_count());
  bool single = false, ratio = false;
  for (const auto& c : cs.constraints) {
    for (const auto& [e, x] : c.exponents) CHECK(std::abs(x) == 1);
    if (c.exponents.size() == 1) single = true;
    if (c.exponents.size() == 2) {
      CHECK(c.exponents[0].second == -c.exponents[1].second);
      ratio = true;
    }
  }
  CHECK(single);
  CHECK(ratio);
}

TEST_CASE("solver outcomes") {
  ConstraintSystem<Rational> cs;
  cs.variable_count = 2;
  cs.constraints.push_back({0, {{0, 1}}, R(3)});
  cs.constraints.push_back({1, {{0, 1}, {1, -1}}, R(3, 4)});
  cs.constraints.push_back({2, {}, R(1)});
  const auto sol = solve_constraints(cs);
  CHECK(sol.weight(0) == 3);
  CHECK(sol.weight(1) == 4);
  CHECK(sol.redundant == 1);

  auto bad = cs;
  bad.constraints[2].value = R(2);
  CHECK(kind_of([&] { solve_constraints(bad); }) == ErrorKind::Inconsistent);

  ConstraintSystem<Rational> stall;
  stall.variable_count = 2;
  stall.constraints.push_back({0, {{0, 1}, {1, 1}}, R(3)});
  CHECK(kind_of([&] { solve_constraints(stall); }) == ErrorKind::Underdetermined);
}

TEST_CASE("round trips on the corpus") {
  std::mt19937_64 rng(23);
  for (const auto& shape : corpus::minimal_shapes()) {
    INFO(shape.name);
    for (int trial = 0; trial < 5; ++trial) {
      const auto net = with_weights(shape.graph, corpus::random_weights(shape.graph.edge_count(), rng));
      const auto a = recover_from_response(shape.graph, response_matrix(net));
      const auto b = recover_from_resistance(shape.graph, effective_resistance_matrix(net));
      CHECK(a.network.weight == net.weight);
      CHECK(b.network.weight == net.weight);
    }
  }
}

TEST_CASE("pl-tree from known resistances") {
  const auto r = rmat({{R(0), R(3), R(3), R(2)}, {R(3), R(0), R(2), R(3)}, {R(3), R(2), R(0), R(3)}, {R(2), R(3), R(3), R(0)}});
  const auto res = recover_from_resistance(corpus::pl_tree(), r);
  for (Index e = 0; e < res.network.weight.size(); ++e) CHECK(res.network.weight(e) == 1);
  const auto e = recover_from_resistance(corpus::single_edge(), rmat({{R(0), R(2, 9)}, {R(2, 9), R(0)}}));
  CHECK(e.network.weight(0) == R(9, 2));
}

TEST_CASE("larger lattice round trip") {
  std::mt19937_64 rng(29);
  const auto g = corpus::lattice(2);
  const auto net = with_weights(g, corpus::random_weights(g.edge_count(), rng));
  CHECK(recover_from_response(g, response_matrix(net)).network.weight == net.weight);
}

TEST_CASE("scale covariance") {
  std::mt19937_64 rng(31);
  const auto g = corpus::lattice(1);
  const auto w = corpus::random_weights(g.edge_count(), rng);
  const Rational t(7, 3);
  const auto m = response_matrix(with_weights(g, w));
  const Vector<Rational> ws = w * t;
  CHECK(response_matrix(with_weights(g, ws)) == m * t);
  CHECK(recover_from_response(g, Matrix<Rational>(m * t)).network.weight == ws);
  const auto r = effective_resistance_matrix(with_weights(g, w));
  CHECK(recover_from_resistance(g, Matrix<Rational>(r / t)).network.weight == ws);
}

TEST_CASE("negative controls") {
  CHECK(kind_of([] {
          recover_from_response(corpus::parallel_double_edge(),
                                response_matrix(with_uniform_weights(corpus::parallel_double_edge())));
        }) == ErrorKind::NotMinimal);

  // One entry changed, every position, several shapes.
  std::mt19937_64 rng(41);
  for (const auto& shape : corpus::minimal_shapes()) {
    INFO(shape.name);
    const auto net = with_weights(shape.graph, corpus::random_weights(shape.graph.edge_count(), rng));
    const auto m = response_matrix(net);
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) {
        auto bad = m;
        bad(i, j) += R(1, 7);
        const auto k = kind_of([&] { recover_from_response(shape.graph, bad); });
        CHECK((k == ErrorKind::Inconsistent || k == ErrorKind::VerificationFailed));
      }
  }
  // A symmetric change keeping row sums is another star response: recovered
  // weights then reproduce the changed matrix.
  auto sym = response_matrix(corpus::star_network(R(1), R(2), R(3)));
  sym(0, 1) -= R(1, 10);
  sym(1, 0) -= R(1, 10);
  sym(0, 0) += R(1, 10);
  sym(1, 1) += R(1, 10);
  CHECK(response_matrix(recover_from_response(corpus::star(), sym).network) == sym);
  const auto m = response_matrix(corpus::star_network(R(1), R(2), R(3)));
  CHECK(kind_of([&] { recover_from_response(corpus::triangle(), Matrix<Rational>(m.topLeftCorner(2, 2))); }) ==
        ErrorKind::BadResponse);
}

TEST_CASE("literal placement leaves bridges undetermined") {
  const auto net = with_uniform_weights(corpus::triangle(), R(2));
  RecoveryOptions opt;
  opt.convention = WeightConvention::Literal;
  CHECK(kind_of([&] { recover_from_response(corpus::triangle(), response_matrix(net), opt); }) ==
        ErrorKind::Underdetermined);
  opt.convention = WeightConvention::Auto;
  const auto res = recover_from_response(corpus::triangle(), response_matrix(net), opt);
  CHECK(res.convention == WeightConvention::Uniform);
}

TEST_CASE("float mode recovery") {
  std::mt19937_64 rng(37);
  const auto g = corpus::lattice(1);
  const auto w = corpus::random_weights(g.edge_count(), rng);
  const auto net = cast_network<double>(with_weights(g, w));
  const auto res = recover_from_response(g, response_matrix(net));
  for (Index e = 0; e < w.size(); ++e) CHECK(res.network.weight(e) == doctest::Approx(w(e).convert_to<double>()).epsilon(1e-9));
}
