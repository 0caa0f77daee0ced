#include "doctest.h"

#include <random>

#include "circnet/corpus.hpp"
#include "circnet/grassmann.hpp"
#include "circnet/symplectic.hpp"
#include "test_util.hpp"

using namespace circnet;

namespace {

using Gen = ElementaryGenerator<Rational>;

Matrix<Rational> n3_product(const Rational& t12, const Rational& t13, const Rational& t23) {
  return generator_product<Rational>({{GeneratorKind::U, 1, t23}, {GeneratorKind::U, 2, t13}, {GeneratorKind::U, 1, t12}}, 2);
}

}  // namespace

TEST_CASE("skew form") {
  CHECK(lambda_form<Rational>(2) == rmat({{R(0), R(1)}, {R(-1), R(0)}}));
  CHECK(lambda_form<Rational>(3) == rmat({{R(0), R(1), R(0)}, {R(-1), R(0), R(-1)}, {R(0), R(1), R(0)}}));
  for (Index s = 2; s <= 6; ++s) {
    const auto l = lambda_form<Rational>(s);
    CHECK(Matrix<Rational>(l.transpose()) == Matrix<Rational>(-l));
  }
  CHECK(kind_of([] { lambda_form<Rational>(1); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("generator matrices") {
  const Rational t(3, 2);
  CHECK(generator_matrix(Gen{GeneratorKind::X, 1, t}, 3) ==
        rmat({{R(1), t, R(0)}, {R(0), R(1), R(0)}, {R(0), R(0), R(1)}}));
  CHECK(generator_matrix(Gen{GeneratorKind::Y, 2, t}, 3) ==
        rmat({{R(1), R(0), R(0)}, {R(0), R(1), R(0)}, {R(0), t, R(1)}}));
  for (Index s = 2; s <= 6; ++s) {
    CHECK(generator_matrix(Gen{GeneratorKind::U, 1, t}, s) == generator_matrix(Gen{GeneratorKind::Y, 1, t}, s));
    CHECK(generator_matrix(Gen{GeneratorKind::U, static_cast<int>(s), t}, s) ==
          generator_matrix(Gen{GeneratorKind::X, static_cast<int>(s) - 1, t}, s));
    for (int i = 2; i < s; ++i)
      CHECK(generator_matrix(Gen{GeneratorKind::U, i, t}, s) ==
            generator_matrix(Gen{GeneratorKind::Y, i, t}, s) * generator_matrix(Gen{GeneratorKind::X, i - 1, t}, s));
    // Every u generator preserves the form.
    for (int i = 1; i <= s; ++i) CHECK(is_symplectic<Rational>(generator_matrix(Gen{GeneratorKind::U, i, t}, s)));
  }
  CHECK(generator_matrix(Gen{GeneratorKind::Diagonal, 2, t}, 2)(1, 1) == t);
  CHECK(kind_of([] { generator_matrix(Gen{GeneratorKind::X, 3, R(1)}, 3); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { generator_matrix(Gen{GeneratorKind::U, 0, R(1)}, 3); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { generator_matrix(Gen{GeneratorKind::U, 4, R(1)}, 3); }) == ErrorKind::IndexOutOfRange);
  CHECK(format_generators<Rational>({{GeneratorKind::U, 1, R(3, 2)}, {GeneratorKind::X, 2, R(1)}}) ==
        "(u,1,3/2) (x,2,1/1)");
}

TEST_CASE("n = 3 product") {
  const Rational a(2, 3), b(5), c(7, 11);  // t23, t13, t12
  const auto m = n3_product(c, b, a);
  CHECK(m == rmat({{1 + b * c, b}, {a + c * (a * b + 1), a * b + 1}}));
  CHECK(is_symplectic<Rational>(m));
  CHECK(linalg::determinant(m) == 1);
  const auto rep = check_totally_positive(m);
  CHECK(rep.totally_positive);
  CHECK(rep.minors_checked == 5);

  const auto unit = check_totally_positive(n3_product(R(1), R(1), R(1)));
  CHECK(unit.totally_positive);

  const auto zero = check_totally_positive(n3_product(R(1), R(0), R(1)));
  CHECK(!zero.totally_positive);
  CHECK(zero.totally_nonnegative);
  CHECK(zero.value == 0);
  INFO(zero.describe());

  const auto x = plucker_vector(x_of_a(m));
  for (const auto& v : x.values) CHECK(v >= 0);
  CHECK(x_of_a(m)(1, 0) == -1);
}

TEST_CASE("positivity check") {
  CHECK(check_totally_positive(rmat({{R(2)}})).totally_positive);
  const auto id = check_totally_positive(Matrix<Rational>(Matrix<Rational>::Identity(3, 3)));
  CHECK(!id.totally_positive);
  CHECK(id.totally_nonnegative);
  CHECK(id.rows == Subset{1});
  CHECK(id.cols == Subset{2});
  CHECK(!check_totally_positive(rmat({{R(1), R(2)}, {R(3), R(4)}})).totally_nonnegative);
  CHECK(kind_of([] { check_totally_positive(Matrix<Rational>(Matrix<Rational>::Identity(7, 7))); }) ==
        ErrorKind::TooLarge);
}

TEST_CASE("standard decomposition") {
  std::mt19937_64 rng(3);
  for (const auto& shape : {corpus::star(), corpus::triangle()}) {
    const auto net = with_weights(shape, corpus::random_weights(3, rng));
    const auto dec = standard_decomposition(net);
    REQUIRE(dec.pairs.size() == 3);
    CHECK(dec.pairs[0].i == 2);
    CHECK(dec.pairs[0].j == 3);
    CHECK(dec.pairs[1].i == 1);
    CHECK(dec.pairs[1].j == 3);
    CHECK(dec.pairs[2].i == 1);
    CHECK(dec.pairs[2].j == 2);
    const auto w = [&](int k) { return net.weight(static_cast<Index>(dec.pairs[k].edge)); };
    CHECK(dec.a == n3_product(1 / w(2), w(1), 1 / w(0)));
    CHECK(is_symplectic<Rational>(dec.a));
    CHECK(check_totally_positive(dec.a).totally_positive);
  }
  const auto g5 = standard_decomposition(with_weights(corpus::lattice(1), corpus::random_weights(10, rng)));
  CHECK(g5.factors.size() == 10);
  CHECK(g5.a.rows() == 4);
  CHECK(is_symplectic<Rational>(g5.a));
  const auto rep = check_totally_positive(g5.a);
  INFO(rep.describe());
  CHECK(rep.totally_positive);

  CHECK(kind_of([] { standard_decomposition(with_uniform_weights<Rational>(corpus::single_edge())); }) ==
        ErrorKind::NotOdd);
  CHECK(kind_of([] { standard_decomposition(with_uniform_weights<Rational>(corpus::pl_tree())); }) ==
        ErrorKind::NotOdd);
  // Path 1-2-3: strands 1 and 3 never meet.
  GraphSpec path;
  for (const char* v : {"1", "2", "3"}) {
    path.vertices.push_back({v, true});
    path.boundary_order.push_back(v);
  }
  path.edges = {{"p", "1", "2"}, {"q", "2", "3"}};
  path.rotation = {{"1", {"p"}}, {"2", {"q", "p"}}, {"3", {"q"}}};
  const auto pg = build_graph(path);
  REQUIRE(is_minimal(pg).minimal);
  CHECK(kind_of([&] { standard_decomposition(with_uniform_weights<Rational>(pg)); }) == ErrorKind::NotStandard);
  CHECK(kind_of([] { standard_edge_pairs(corpus::parallel_double_edge()); }) == ErrorKind::NotOdd);
}
