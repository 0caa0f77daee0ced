#pragma once

// Tridiagonal skew form, elementary Jacobi-type generators and the product
// decomposition of standard networks with an odd number of boundary nodes.

#include <array>
#include <string>
#include <vector>

#include "circnet/combinatorics.hpp"
#include "circnet/linalg.hpp"
#include "circnet/network.hpp"

namespace circnet {

/// size x size skew form with entry (i, i+1) = (-1)^(i+1) (1-based) and
/// (i+1, i) its negative. Throws Error(IndexOutOfRange) for size < 2.
template <typename Scalar>
Matrix<Scalar> lambda_form(Index size) {
  if (size < 2) throw Error(ErrorKind::IndexOutOfRange, "form size must be at least 2");
  Matrix<Scalar> l = Matrix<Scalar>::Zero(size, size);
  for (Index i = 0; i + 1 < size; ++i) {
    const Scalar s = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
    l(i, i + 1) = s;
    l(i + 1, i) = -s;
  }
  return l;
}

enum class GeneratorKind { U, X, Y, Diagonal };

std::string_view to_string(GeneratorKind k);

/// kind U with index i is u_{i,i+1}(t); X and Y are x_i(t), y_i(t); Diagonal
/// replaces entry (i,i) of the identity by t. Indices are 1-based. t is not
/// sign-checked here so that degenerate products (t = 0) can be formed.
template <typename Scalar>
struct ElementaryGenerator {
  GeneratorKind kind = GeneratorKind::U;
  int index = 1;
  Scalar t = Scalar(1);
};

/// x_i(t) = E + t E_{i,i+1}, y_i(t) = E + t E_{i+1,i},
/// u_{i,i+1}(t) = E + t (E_{i+1,i} + E_{i-1,i}) with out-of-range terms dropped.
/// Throws Error(IndexOutOfRange).
template <typename Scalar>
Matrix<Scalar> generator_matrix(const ElementaryGenerator<Scalar>& g, Index size) {
  const Index i = g.index - 1;  // zero-based
  const Index hi = (g.kind == GeneratorKind::X || g.kind == GeneratorKind::Y) ? size - 1 : size;
  if (size < 1 || i < 0 || i >= hi)
    throw Error(ErrorKind::IndexOutOfRange, std::string(to_string(g.kind)) + " index " + std::to_string(g.index) +
                                                " out of range for size " + std::to_string(size));
  Matrix<Scalar> m = Matrix<Scalar>::Identity(size, size);
  switch (g.kind) {
    case GeneratorKind::X: m(i, i + 1) = g.t; break;
    case GeneratorKind::Y: m(i + 1, i) = g.t; break;
    case GeneratorKind::Diagonal: m(i, i) = g.t; break;
    case GeneratorKind::U:
      if (i + 1 < size) m(i + 1, i) = g.t;
      if (i >= 1) m(i - 1, i) = g.t;
      break;
  }
  return m;
}

/// Left-to-right product of the generators.
template <typename Scalar>
Matrix<Scalar> generator_product(const std::vector<ElementaryGenerator<Scalar>>& gens, Index size) {
  Matrix<Scalar> a = Matrix<Scalar>::Identity(size, size);
  for (const auto& g : gens) a = a * generator_matrix(g, size);
  return a;
}

/// "(u,1,3/2) (u,2,5/1) ..." in application order.
template <typename Scalar>
std::string format_generators(const std::vector<ElementaryGenerator<Scalar>>& gens) {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ' ';
    out += "(" + std::string(to_string(g.kind)) + "," + std::to_string(g.index) + "," +
           ScalarTraits<Scalar>::format(g.t) + ")";
  }
  return out;
}

template <typename Scalar>
bool is_symplectic(const Matrix<Scalar>& a, double tol = 1e-9) {
  if (a.rows() != a.cols() || a.rows() < 2) return false;
  const Matrix<Scalar> l = lambda_form<Scalar>(a.rows());
  return matrices_near<Scalar>(Matrix<Scalar>(a * l * a.transpose()), l, tol);
}

/// Edge of a standard network lying on the crossing of strands i < j
/// (strands numbered 1..n by their smaller terminal).
struct StrandPairEdge {
  int i = 0;
  int j = 0;
  std::size_t edge = 0;
};

/// Pairs in reverse lexicographic order. Throws Error(NotOdd) for even n and
/// Error(NotStandard) unless the network is minimal with every strand pair
/// crossing exactly once.
std::vector<StrandPairEdge> standard_edge_pairs(const PlanarGraph& graph);

template <typename Scalar>
struct StandardDecomposition {
  int n = 0;
  std::vector<StrandPairEdge> pairs;
  std::vector<ElementaryGenerator<Scalar>> factors;  // u_{j-i,j-i+1}(t_ij), same order as pairs
  Matrix<Scalar> a;                                  // (n-1) x (n-1)
};

/// A = product of u_{j-i,j-i+1}(t_ij) over pairs in reverse lexicographic
/// order, t_ij = w_ij^((-1)^(i+j)).
template <typename Scalar>
StandardDecomposition<Scalar> standard_decomposition(const PlanarNetwork<Scalar>& net) {
  require_valid(net);
  StandardDecomposition<Scalar> out;
  out.n = static_cast<int>(net.graph.n_boundary());
  out.pairs = standard_edge_pairs(net.graph);
  for (const auto& p : out.pairs) {
    const Scalar& w = net.weight(static_cast<Index>(p.edge));
    out.factors.push_back({GeneratorKind::U, p.j - p.i, ((p.i + p.j) % 2 == 0) ? w : Scalar(Scalar(1) / w)});
  }
  out.a = generator_product(out.factors, out.n - 1);
  return out;
}

template <typename Scalar>
struct PositivityReport {
  bool totally_positive = true;
  bool totally_nonnegative = true;
  std::size_t minors_checked = 0;
  // First minor that is not strictly positive.
  Subset rows, cols;
  Scalar value = Scalar(0);
  std::string describe() const;
};

inline constexpr Index kPositivityLimit = 6;

/// Every square minor, rows and columns in lexicographic order.
/// Throws Error(TooLarge) above kPositivityLimit and Error(BadCardinality)
/// for non-square input.
template <typename Scalar>
PositivityReport<Scalar> check_totally_positive(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::BadCardinality, "matrix is not square");
  if (a.rows() > kPositivityLimit)
    throw Error(ErrorKind::TooLarge, "minor enumeration is limited to size " + std::to_string(kPositivityLimit));
  PositivityReport<Scalar> rep;
  const int n = static_cast<int>(a.rows());
  for (int k = 1; k <= n; ++k) {
    const auto subsets = k_subsets(n, k);
    for (const auto& r : subsets)
      for (const auto& c : subsets) {
        Matrix<Scalar> sub(k, k);
        for (int x = 0; x < k; ++x)
          for (int y = 0; y < k; ++y) sub(x, y) = a(r[x] - 1, c[y] - 1);
        Scalar v = linalg::determinant(sub);
        if constexpr (!ScalarTraits<Scalar>::exact)
          if (ScalarTraits<Scalar>::is_zero(v)) v = 0;
        ++rep.minors_checked;
        if (v < 0) rep.totally_nonnegative = false;
        if (!(v > 0) && rep.totally_positive) {
          rep.totally_positive = false;
          rep.rows = r;
          rep.cols = c;
          rep.value = v;
        }
      }
  }
  return rep;
}

template <typename Scalar>
std::string PositivityReport<Scalar>::describe() const {
  std::string out = std::to_string(minors_checked) + " minors checked";
  if (totally_positive) return out + ", all positive";
  return out + ", minor rows {" + format_subset(rows) + "} cols {" + format_subset(cols) +
         "} = " + ScalarTraits<Scalar>::format(value) + (totally_nonnegative ? " (all non-negative)" : "");
}

/// (Id-bar, A): row r of the left block has (-1)^(r+1) in column n+1-r.
template <typename Scalar>
Matrix<Scalar> x_of_a(const Matrix<Scalar>& a) {
  const Index n = a.rows();
  Matrix<Scalar> x = Matrix<Scalar>::Zero(n, n + a.cols());
  for (Index r = 0; r < n; ++r) x(r, n - 1 - r) = (r % 2 == 0) ? Scalar(1) : Scalar(-1);
  x.rightCols(a.cols()) = a;
  return x;
}

}  // namespace circnet
