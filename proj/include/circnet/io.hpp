#pragma once

// Structured (JSON) and line-oriented text forms for networks, Lam models,
// matrices, Plücker vectors and face labels. Parsing is exact; errors are
// Error(Parse) for malformed text and Error(InvalidNetwork) for bad content.

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "circnet/grassmann.hpp"
#include "circnet/lam_model.hpp"
#include "circnet/network.hpp"

namespace circnet::io {

using json = nlohmann::json;

/// A network file; weights are optional so that the same format can describe
/// a bare shape.
struct NetworkFile {
  PlanarGraph graph;
  std::optional<Vector<Rational>> weight;
};

NetworkFile parse_network(const json& j);
NetworkFile parse_network_text(const std::string& text);
NetworkFile read_network_file(const std::string& path);

/// Requires a weight on every edge.
PlanarNetwork<Rational> require_weights(const NetworkFile& f);

json network_to_json(const PlanarGraph& g, const Vector<Rational>* weight = nullptr);
inline json network_to_json(const PlanarNetwork<Rational>& net) { return network_to_json(net.graph, &net.weight); }

json lam_model_to_json(const LamModel<Rational>& m);
LamModel<Rational> parse_lam_model(const json& j);

/// Comma separated rows, '#' starts a comment, blank lines ignored.
Matrix<Rational> parse_matrix_text(const std::string& text);
Matrix<Rational> read_matrix_file(const std::string& path);
/// Accepts an array of rows of rational strings or numbers.
Matrix<Rational> parse_matrix_json(const json& j);

std::string read_text_file(const std::string& path);
/// Writes to `path`, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

template <typename Scalar>
std::string format_matrix_text(const Matrix<Scalar>& m) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += ScalarTraits<Scalar>::format(m(i, j));
    }
    out += '\n';
  }
  return out;
}

template <typename Scalar>
json matrix_to_json(const Matrix<Scalar>& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(ScalarTraits<Scalar>::format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// "i1,...,ik → value" per coordinate, lexicographic.
template <typename Scalar>
std::string format_plucker(const PluckerVector<Scalar>& p) {
  std::string out;
  for (std::size_t s = 0; s < p.subsets.size(); ++s)
    out += format_subset(p.subsets[s]) + " → " + ScalarTraits<Scalar>::format(p.values[s]) + '\n';
  return out;
}

/// "face 3: 2,6" per face.
std::string format_labels(const FaceLabeling& labels);

/// "edge_id → value" per network edge.
template <typename Scalar>
std::string format_edge_weights(const PlanarGraph& g, const Vector<Scalar>& w) {
  std::string out;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    out += g.edges()[e].id + " → " + ScalarTraits<Scalar>::format(w(static_cast<Index>(e))) + '\n';
  return out;
}

}  // namespace circnet::io
