#pragma once

// Brute-force spanning groves, used as an independent oracle for the
// dimer and Plücker side of the pipeline.

#include <optional>
#include <string>
#include <vector>

#include "circnet/forward.hpp"
#include "circnet/grassmann.hpp"
#include "circnet/temperley.hpp"

namespace circnet {

/// Acyclic spanning edge set whose every component contains a boundary vertex.
struct Grove {
  std::vector<std::size_t> edges;      // sorted edge indices
  std::vector<std::size_t> component;  // vertex -> component id (0-based, by first vertex)
  std::size_t component_count = 0;

  /// Boundary positions (0-based) grouped by component, each group sorted.
  std::vector<std::vector<std::size_t>> boundary_partition(const PlanarGraph& g) const;
};

/// Default bound on the edge count for exhaustive enumeration.
inline constexpr std::size_t kGroveEdgeLimit = 20;

/// Every grove, in increasing order of the edge-subset bitmask.
/// Throws Error(TooLarge) above max_edges.
std::vector<Grove> enumerate_groves(const PlanarGraph& g, std::size_t max_edges = kGroveEdgeLimit);

/// Nullopt unless the edge set is a grove.
std::optional<Grove> make_grove(const PlanarGraph& g, std::vector<std::size_t> edges);

/// Network edges whose midpoint node is matched towards a vertex node.
Grove grove_from_dimer(const PlanarGraph& g, const LamGraph& lam, const Dimer& d);

template <typename Scalar>
Scalar grove_weight(const PlanarNetwork<Scalar>& net, const Grove& grove) {
  Scalar w(1);
  for (std::size_t e : grove.edges) w *= net.weight(static_cast<Index>(e));
  return w;
}

/// Total weight of the groves with exactly n components.
template <typename Scalar>
Scalar uncrossed_partition(const PlanarNetwork<Scalar>& net, const std::vector<Grove>& groves) {
  Scalar sum(0);
  for (const auto& g : groves)
    if (g.component_count == net.graph.n_boundary()) sum += grove_weight(net, g);
  return sum;
}

template <typename Scalar>
Scalar uncrossed_partition(const PlanarNetwork<Scalar>& net) {
  return uncrossed_partition(net, enumerate_groves(net.graph));
}

/// Response matrix from grove sums: -x_ij L_unc is the weight of groves that
/// join i and j and leave every other boundary vertex alone.
template <typename Scalar>
Matrix<Scalar> response_from_groves(const PlanarNetwork<Scalar>& net) {
  const auto groves = enumerate_groves(net.graph);
  const std::size_t n = net.graph.n_boundary();
  const Scalar lunc = uncrossed_partition(net, groves);
  Matrix<Scalar> m = Matrix<Scalar>::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (const auto& g : groves) {
    if (g.component_count != n - 1) continue;
    for (const auto& part : g.boundary_partition(net.graph)) {
      if (part.size() != 2) continue;
      const Scalar w = grove_weight(net, g) / lunc;
      const auto i = static_cast<Index>(part[0]);
      const auto j = static_cast<Index>(part[1]);
      m(i, j) -= w;
      m(j, i) -= w;
    }
  }
  for (Index i = 0; i < m.rows(); ++i) m(i, i) = -m.row(i).sum();
  return m;
}

template <typename Scalar>
struct GroveSubsetRow {
  Subset subset;
  Scalar omega_minor;   // Δ_I(Ω')
  Scalar dimer_sum;     // Σ wt(Π), Π ∈ Π(I)
  Scalar grove_sum;     // Σ wt(F_I(Π))
  Scalar factor;        // dimer_sum / omega_minor, 0 when the minor vanishes
};

template <typename Scalar>
struct GroveFaceRow {
  std::size_t face = 0;
  Subset label;
  bool boundary_face = false;
  std::size_t dimer_count = 0;
  Scalar twist_minor;       // Δ_I(τ(Ω'))
  Scalar implied_weight;    // L_unc / Δ_I(τ(Ω'))
  bool implied_weight_found = false;
};

template <typename Scalar>
struct GrovePluckerReport {
  Scalar lunc;
  std::size_t grove_count = 0;
  std::vector<GroveSubsetRow<Scalar>> subsets;
  std::vector<GroveFaceRow<Scalar>> faces;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::string describe() const;
};

namespace detail {

template <typename Scalar>
bool same_value(const Scalar& a, const Scalar& b, double tol) {
  return ScalarTraits<Scalar>::near(a, b, tol);
}

}  // namespace detail

/// Cross-checks Ω' minors, dimer measurements and grove sums (each Δ_I(Ω')
/// times L_unc equals both sums), the boundary-face dimers and the twist
/// minors. Disagreements are collected in the report, not thrown.
template <typename Scalar>
GrovePluckerReport<Scalar> check_grove_plucker(const PlanarNetwork<Scalar>& net, double tol = 1e-9) {
  require_valid(net);
  GrovePluckerReport<Scalar> rep;
  const auto groves = enumerate_groves(net.graph);
  rep.grove_count = groves.size();
  rep.lunc = uncrossed_partition(net, groves);

  const LamModel<Scalar> model = temperley_lam_model(net, WeightConvention::Uniform);
  const Matrix<Scalar> om = omega_prime_from_response(response_matrix(net), tol);
  const auto pl = plucker_vector(om);
  auto miss = [&](std::string what) { rep.mismatches.push_back(std::move(what)); };

  std::vector<Scalar> dimer_vec, grove_vec;
  for (std::size_t s = 0; s < pl.subsets.size(); ++s) {
    const Subset& I = pl.subsets[s];
    GroveSubsetRow<Scalar> row{I, pl.values[s], Scalar(0), Scalar(0), Scalar(0)};
    for (const auto& d : enumerate_dimers(model.graph, I)) {
      row.dimer_sum += dimer_weight(model, d);
      const Grove g = grove_from_dimer(net.graph, model.graph, d);
      if (g.component_count == 0) miss("dimer for {" + format_subset(I) + "} does not map to a grove");
      row.grove_sum += grove_weight(net, g);
    }
    if (!ScalarTraits<Scalar>::is_zero(row.omega_minor)) row.factor = row.dimer_sum / row.omega_minor;
    if (!detail::same_value<Scalar>(row.dimer_sum, row.grove_sum, tol))
      miss("{" + format_subset(I) + "}: dimer and grove sums differ");
    if (!detail::same_value<Scalar>(row.omega_minor * rep.lunc, row.dimer_sum, tol))
      miss("{" + format_subset(I) + "}: minor times L_unc differs from the dimer sum");
    dimer_vec.push_back(row.dimer_sum);
    grove_vec.push_back(row.grove_sum);
    rep.subsets.push_back(std::move(row));
  }
  if (!proportional(pl.values, dimer_vec, tol)) miss("dimer vector not proportional to the minors");
  if (!proportional(pl.values, grove_vec, tol)) miss("grove vector not proportional to the minors");

  const Matrix<Scalar> tau = twist(om);
  const FaceLabeling labels = scott_labels(model.graph);
  const DiskEmbedding& emb = model.graph.embedding();
  std::optional<Scalar> boundary_product;
  for (std::size_t f = 0; f < labels.size(); ++f) {
    GroveFaceRow<Scalar> row;
    row.face = f;
    row.label = labels[f];
    row.boundary_face = emb.is_boundary_face(f);
    row.twist_minor = minor(tau, labels[f]);
    const auto dimers = enumerate_dimers(model.graph, labels[f]);
    row.dimer_count = dimers.size();
    const std::string tag = "face " + std::to_string(f) + " {" + format_subset(labels[f]) + "}";
    if (ScalarTraits<Scalar>::is_zero(row.twist_minor)) {
      miss(tag + ": twist minor vanishes");
      rep.faces.push_back(std::move(row));
      continue;
    }
    row.implied_weight = rep.lunc / row.twist_minor;
    for (const auto& d : dimers)
      if (detail::same_value<Scalar>(grove_weight(net, grove_from_dimer(net.graph, model.graph, d)), row.implied_weight,
                                     tol))
        row.implied_weight_found = true;
    if (!row.implied_weight_found) miss(tag + ": L_unc / twist minor is not a grove weight");
    if (row.boundary_face) {
      if (row.dimer_count != 1) miss(tag + ": boundary face has " + std::to_string(row.dimer_count) + " dimers");
      const Scalar prod = row.twist_minor * pl.at(labels[f]);
      if (!boundary_product)
        boundary_product = prod;
      else if (!detail::same_value<Scalar>(*boundary_product, prod, tol))
        miss(tag + ": twist minor times minor differs from other boundary faces");
    }
    rep.faces.push_back(std::move(row));
  }
  return rep;
}

template <typename Scalar>
std::string GrovePluckerReport<Scalar>::describe() const {
  using T = ScalarTraits<Scalar>;
  std::string out = "L_unc " + T::format(lunc) + ", " + std::to_string(grove_count) + " groves\n";
  for (const auto& r : subsets)
    out += "  {" + format_subset(r.subset) + "} minor " + T::format(r.omega_minor) + " dimers " + T::format(r.dimer_sum) +
           " groves " + T::format(r.grove_sum) + " factor " + T::format(r.factor) + "\n";
  for (const auto& f : faces)
    out += "  face " + std::to_string(f.face) + " {" + format_subset(f.label) + "}" + (f.boundary_face ? " boundary" : "") +
           " twist " + T::format(f.twist_minor) + " grove " + T::format(f.implied_weight) +
           (f.implied_weight_found ? "" : " (not found)") + "\n";
  for (const auto& m : mismatches) out += "  mismatch: " + m + "\n";
  return out;
}

}  // namespace circnet
