#pragma once

// Forward problem: Laplacian, Dirichlet-to-Neumann map, effective resistances.

#include "circnet/linalg.hpp"
#include "circnet/network.hpp"

namespace circnet {

/// Laplacian over all vertices (graph vertex order); multi-edges are summed.
template <typename Scalar>
Matrix<Scalar> kirchhoff_laplacian(const PlanarNetwork<Scalar>& net) {
  const Index nv = static_cast<Index>(net.graph.vertex_count());
  Matrix<Scalar> lap = Matrix<Scalar>::Zero(nv, nv);
  for (std::size_t e = 0; e < net.graph.edge_count(); ++e) {
    const Index u = static_cast<Index>(net.graph.edges()[e].u);
    const Index v = static_cast<Index>(net.graph.edges()[e].v);
    const Scalar& w = net.weight(static_cast<Index>(e));
    lap(u, u) += w;
    lap(v, v) += w;
    lap(u, v) -= w;
    lap(v, u) -= w;
  }
  return lap;
}

namespace detail {

template <typename Scalar>
struct LaplacianBlocks {
  Matrix<Scalar> bb, bi, ib, ii;
};

template <typename Scalar>
LaplacianBlocks<Scalar> laplacian_blocks(const PlanarNetwork<Scalar>& net) {
  const Matrix<Scalar> lap = kirchhoff_laplacian(net);
  const auto& bnd = net.graph.boundary_order();
  const auto inner = net.graph.inner_vertices();
  const Index nb = static_cast<Index>(bnd.size());
  const Index ni = static_cast<Index>(inner.size());
  LaplacianBlocks<Scalar> blk{Matrix<Scalar>(nb, nb), Matrix<Scalar>(nb, ni), Matrix<Scalar>(ni, nb),
                              Matrix<Scalar>(ni, ni)};
  for (Index r = 0; r < nb; ++r) {
    for (Index c = 0; c < nb; ++c) blk.bb(r, c) = lap(bnd[r], bnd[c]);
    for (Index c = 0; c < ni; ++c) blk.bi(r, c) = lap(bnd[r], inner[c]);
  }
  for (Index r = 0; r < ni; ++r) {
    for (Index c = 0; c < nb; ++c) blk.ib(r, c) = lap(inner[r], bnd[c]);
    for (Index c = 0; c < ni; ++c) blk.ii(r, c) = lap(inner[r], inner[c]);
  }
  return blk;
}

}  // namespace detail

/// Schur complement L_BB - L_BI L_II^{-1} L_IB, rows/columns in boundary order.
/// Throws Error(SingularInterior).
template <typename Scalar>
Matrix<Scalar> response_matrix(const PlanarNetwork<Scalar>& net) {
  const auto blk = detail::laplacian_blocks(net);
  if (blk.ii.rows() == 0) return blk.bb;
  const auto x = linalg::solve(blk.ii, blk.ib);
  if (!x) throw Error(ErrorKind::SingularInterior, "interior Laplacian block is singular");
  return blk.bb - blk.bi * *x;
}

/// Voltages at all vertices (graph order) for the given boundary voltages
/// (boundary order). Throws Error(SingularInterior).
template <typename Scalar>
Vector<Scalar> harmonic_extension(const PlanarNetwork<Scalar>& net, const Vector<Scalar>& boundary_voltage) {
  const auto& bnd = net.graph.boundary_order();
  if (static_cast<std::size_t>(boundary_voltage.size()) != bnd.size())
    throw Error(ErrorKind::InvalidNetwork, "one boundary voltage per boundary node is required");
  const auto blk = detail::laplacian_blocks(net);
  const auto inner = net.graph.inner_vertices();
  Vector<Scalar> out(static_cast<Index>(net.graph.vertex_count()));
  for (std::size_t i = 0; i < bnd.size(); ++i) out(bnd[i]) = boundary_voltage(static_cast<Index>(i));
  if (!inner.empty()) {
    const Matrix<Scalar> rhs = -(blk.ib * boundary_voltage);
    const auto x = linalg::solve(blk.ii, rhs);
    if (!x) throw Error(ErrorKind::SingularInterior, "interior Laplacian block is singular");
    for (std::size_t k = 0; k < inner.size(); ++k) out(inner[k]) = (*x)(static_cast<Index>(k), 0);
  }
  return out;
}

/// R_ij = |U_i - U_j| for the unit dipole current -e_i + e_j, computed by
/// grounding boundary node `ground` (zero-based; defaults to the last one).
/// Throws Error(Disconnected).
template <typename Scalar>
Matrix<Scalar> effective_resistance_matrix(const PlanarNetwork<Scalar>& net, std::size_t ground = npos) {
  if (!net.graph.connected()) throw Error(ErrorKind::Disconnected, "effective resistance needs a connected network");
  const Matrix<Scalar> m = response_matrix(net);
  const Index n = m.rows();
  if (ground == npos) ground = static_cast<std::size_t>(n - 1);
  const Index g = static_cast<Index>(ground);
  if (g < 0 || g >= n) throw Error(ErrorKind::IndexOutOfRange, "ground node out of range");

  std::vector<Index> keep;
  for (Index i = 0; i < n; ++i)
    if (i != g) keep.push_back(i);
  Matrix<Scalar> reduced(n - 1, n - 1);
  for (Index r = 0; r < n - 1; ++r)
    for (Index c = 0; c < n - 1; ++c) reduced(r, c) = m(keep[r], keep[c]);
  const auto inv = linalg::solve(reduced, Matrix<Scalar>(Matrix<Scalar>::Identity(n - 1, n - 1)));
  if (!inv) throw Error(ErrorKind::Disconnected, "grounded response matrix is singular");

  // Green's function with the ground row/column set to zero.
  Matrix<Scalar> green = Matrix<Scalar>::Zero(n, n);
  for (Index r = 0; r < n - 1; ++r)
    for (Index c = 0; c < n - 1; ++c) green(keep[r], keep[c]) = (*inv)(r, c);
  Matrix<Scalar> res(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      res(i, j) = i == j ? Scalar(0) : ScalarTraits<Scalar>::abs(green(i, i) + green(j, j) - green(i, j) - green(j, i));
  return res;
}

/// Symmetry, zero row sums and non-positive off-diagonal entries.
template <typename Scalar>
ValidationReport validate_response_properties(const Matrix<Scalar>& m, double tol = 1e-9) {
  using T = ScalarTraits<Scalar>;
  ValidationReport report;
  if (m.rows() != m.cols() || m.rows() == 0) {
    report.add("shape", "response matrix must be square and non-empty");
    return report;
  }
  const Index n = m.rows();
  auto at = [](Index i, Index j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; };
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j)
      if (!T::near(m(i, j), m(j, i), tol)) report.add("symmetry", "entries " + at(i, j) + " and " + at(j, i) + " differ");
    for (Index j = 0; j < n; ++j)
      if (i != j && m(i, j) > 0 && !T::near(m(i, j), Scalar(0), tol))
        report.add("off-diagonal sign", "entry " + at(i, j) + " is positive");
    Scalar sum(0);
    for (Index j = 0; j < n; ++j) sum += m(i, j);
    if (!T::near(sum, Scalar(0), tol)) report.add("row sum", "row " + std::to_string(i + 1) + " sums to " + T::format(sum));
  }
  return report;
}

/// Symmetry, zero diagonal, positive off-diagonal entries.
template <typename Scalar>
ValidationReport validate_resistance_properties(const Matrix<Scalar>& r, double tol = 1e-9) {
  using T = ScalarTraits<Scalar>;
  ValidationReport report;
  if (r.rows() != r.cols() || r.rows() < 2) {
    report.add("shape", "resistance matrix must be square with at least two rows");
    return report;
  }
  const Index n = r.rows();
  auto at = [](Index i, Index j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; };
  for (Index i = 0; i < n; ++i) {
    if (!T::near(r(i, i), Scalar(0), tol)) report.add("diagonal", "entry " + at(i, i) + " is not zero");
    for (Index j = i + 1; j < n; ++j) {
      if (!T::near(r(i, j), r(j, i), tol)) report.add("symmetry", "entries " + at(i, j) + " and " + at(j, i) + " differ");
      if (!(r(i, j) > 0)) report.add("positivity", "entry " + at(i, j) + " is not positive");
    }
  }
  return report;
}

}  // namespace circnet
