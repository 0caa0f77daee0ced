#pragma once

// Built-in shapes used by tests, the acceptance suite and the CLI.

#include <random>
#include <string>
#include <vector>

#include "circnet/network.hpp"

namespace circnet::corpus {

/// One edge "e" joining boundary nodes 1 and 2.
PlanarGraph single_edge();
/// Inner centre joined to boundary 1, 2, 3 by edges e1, e2, e3.
PlanarGraph star();
/// Three boundary nodes joined pairwise (edges e12, e23, e31).
PlanarGraph triangle();
/// Two inner nodes p, q: 1-p, 4-p, p-q, q-2, q-3 (edges a, b, c, d, f).
PlanarGraph pl_tree();
/// The concentric family with 4m+1 boundary nodes, m >= 1.
PlanarGraph lattice(int m);
/// Two parallel edges between boundary 1 and 2 (not minimal).
PlanarGraph parallel_double_edge();

/// Ratios p/q with p, q uniform in [lo, hi].
Vector<Rational> random_weights(std::size_t count, std::mt19937_64& rng, int lo = 1, int hi = 100);

/// Star with weights c, a, b on the edges at boundary 1, 2, 3.
PlanarNetwork<Rational> star_network(const Rational& a, const Rational& b, const Rational& c);

struct NamedShape {
  std::string name;
  PlanarGraph graph;
};

/// The minimal connected shapes of the round-trip corpus.
std::vector<NamedShape> minimal_shapes();

/// Looks up a built-in shape by name ("star", "lattice5", ...). Throws
/// Error(InvalidNetwork) for unknown names.
PlanarGraph by_name(const std::string& name);

}  // namespace circnet::corpus
