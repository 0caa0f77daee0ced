#include "circnet/corpus.hpp"

namespace circnet::corpus {

namespace {

using Rot = std::vector<std::pair<std::string, std::vector<std::string>>>;

GraphSpec boundary_spec(int n) {
  GraphSpec s;
  for (int i = 1; i <= n; ++i) {
    s.vertices.push_back({std::to_string(i), true});
    s.boundary_order.push_back(std::to_string(i));
  }
  return s;
}

}  // namespace

PlanarGraph single_edge() {
  GraphSpec s = boundary_spec(2);
  s.edges = {{"e", "1", "2"}};
  s.rotation = Rot{{"1", {"e"}}, {"2", {"e"}}};
  return build_graph(s);
}

PlanarGraph star() {
  GraphSpec s = boundary_spec(3);
  s.vertices.push_back({"x", false});
  s.edges = {{"e1", "1", "x"}, {"e2", "2", "x"}, {"e3", "3", "x"}};
  s.rotation = Rot{{"1", {"e1"}}, {"2", {"e2"}}, {"3", {"e3"}}, {"x", {"e1", "e2", "e3"}}};
  return build_graph(s);
}

PlanarGraph triangle() {
  GraphSpec s = boundary_spec(3);
  s.edges = {{"e12", "1", "2"}, {"e23", "2", "3"}, {"e31", "3", "1"}};
  s.rotation = Rot{{"1", {"e12", "e31"}}, {"2", {"e23", "e12"}}, {"3", {"e31", "e23"}}};
  return build_graph(s);
}

PlanarGraph pl_tree() {
  GraphSpec s = boundary_spec(4);
  s.vertices.push_back({"p", false});
  s.vertices.push_back({"q", false});
  s.edges = {{"a", "1", "p"}, {"b", "4", "p"}, {"c", "p", "q"}, {"d", "q", "2"}, {"f", "q", "3"}};
  s.rotation = Rot{{"1", {"a"}}, {"2", {"d"}}, {"3", {"f"}}, {"4", {"b"}}, {"p", {"a", "c", "b"}},
                   {"q", {"c", "d", "f"}}};
  return build_graph(s);
}

PlanarGraph lattice(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidNetwork, "lattice needs m >= 1");
  const int n = 4 * m + 1;
  auto node = [](int i, int j) { return "v" + std::to_string(i) + "_" + std::to_string(j); };
  auto wrap = [n](int j) { return (j - 1 + n) % n + 1; };
  auto radial = [](int i, int j) { return "r" + std::to_string(i) + "_" + std::to_string(j); };
  auto circular = [](int i, int j) { return "c" + std::to_string(i) + "_" + std::to_string(j); };

  GraphSpec s;
  for (int i = 1; i <= m + 1; ++i)
    for (int j = 1; j <= n; ++j) s.vertices.push_back({node(i, j), i == m + 1});
  for (int j = 1; j <= n; ++j) s.boundary_order.push_back(node(m + 1, j));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) s.edges.push_back({radial(i, j), node(i, j), node(i + 1, j)});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) s.edges.push_back({circular(i, j), node(i, j), node(i, wrap(j + 1))});

  for (int i = 1; i <= m + 1; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::vector<std::string> rot;
      if (i == m + 1) {
        rot = {radial(m, j)};
      } else {
        // Clockwise from the outward ray: outward, towards j+1, inward, towards j-1.
        rot.push_back(radial(i, j));
        rot.push_back(circular(i, j));
        if (i > 1) rot.push_back(radial(i - 1, j));
        rot.push_back(circular(i, wrap(j - 1)));
      }
      s.rotation.emplace_back(node(i, j), std::move(rot));
    }
  }
  return build_graph(s);
}

PlanarGraph parallel_double_edge() {
  GraphSpec s = boundary_spec(2);
  s.edges = {{"x", "1", "2"}, {"y", "1", "2"}};
  s.rotation = Rot{{"1", {"x", "y"}}, {"2", {"y", "x"}}};
  return build_graph(s);
}

PlanarNetwork<Rational> star_network(const Rational& a, const Rational& b, const Rational& c) {
  Vector<Rational> w(3);
  w << c, a, b;
  return with_weights(star(), std::move(w));
}

std::vector<NamedShape> minimal_shapes() {
  return {{"single_edge", single_edge()}, {"star", star()}, {"triangle", triangle()},
          {"pl_tree", pl_tree()},         {"lattice5", lattice(1)}};
}

PlanarGraph by_name(const std::string& name) {
  if (name == "single_edge") return single_edge();
  if (name == "star") return star();
  if (name == "triangle") return triangle();
  if (name == "pl_tree") return pl_tree();
  if (name == "parallel_double_edge") return parallel_double_edge();
  if (name.rfind("lattice", 0) == 0) {
    const std::string digits = name.substr(7);
    if (digits.empty() || digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::InvalidNetwork, "unknown built-in shape '" + name + "'");
    const int n = std::stoi(digits);
    if ((n - 1) % 4 != 0 || n < 5) throw Error(ErrorKind::InvalidNetwork, "lattice size must be 4m+1 with m >= 1");
    return lattice((n - 1) / 4);
  }
  throw Error(ErrorKind::InvalidNetwork, "unknown built-in shape '" + name + "'");
}

Vector<Rational> random_weights(std::size_t count, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Vector<Rational> w(static_cast<Index>(count));
  for (Index e = 0; e < w.size(); ++e) {
    const int p = dist(rng);
    w(e) = Rational(p, dist(rng));
  }
  return w;
}

}  // namespace circnet::corpus
