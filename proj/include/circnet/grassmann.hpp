#pragma once

// Grassmannian points of networks: the response embedding, the resistance
// embedding, maximal minors and the twist.

#include "circnet/combinatorics.hpp"
#include "circnet/forward.hpp"
#include "circnet/linalg.hpp"

namespace circnet {

namespace detail {

template <typename Scalar>
Matrix<Scalar> omega_pattern(const Matrix<Scalar>& m) {
  const Index n = m.rows();
  Matrix<Scalar> om = Matrix<Scalar>::Zero(n, 2 * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) om(i, 2 * j) = ((i + j) % 2 == 0) ? Scalar(m(i, j)) : Scalar(-m(i, j));
  for (Index j = 0; j + 1 < n; ++j) {
    om(j, 2 * j + 1) = Scalar(1);
    om(j + 1, 2 * j + 1) = Scalar(1);
  }
  om(0, 2 * n - 1) += (n % 2 == 0) ? Scalar(1) : Scalar(-1);
  om(n - 1, 2 * n - 1) += Scalar(1);
  return om;
}

}  // namespace detail

/// n x 2n matrix: column 2j-1 holds (-1)^(i+j) x_ij, column 2j (j < n) holds 1
/// in rows j and j+1, column 2n holds (-1)^n in row 1 and 1 in row n.
/// Throws Error(BadResponse) if M fails validate_response_properties.
template <typename Scalar>
Matrix<Scalar> omega_from_response(const Matrix<Scalar>& m, double tol = 1e-9) {
  const auto report = validate_response_properties(m, tol);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorKind::BadResponse, v.code + ": " + v.message);
  }
  return detail::omega_pattern(m);
}

/// First n-1 rows.
template <typename Scalar>
Matrix<Scalar> truncate_last_row(const Matrix<Scalar>& om) {
  return om.topRows(om.rows() - 1);
}

template <typename Scalar>
Matrix<Scalar> omega_prime_from_response(const Matrix<Scalar>& m, double tol = 1e-9) {
  return truncate_last_row(omega_from_response(m, tol));
}

/// m_ij = -(R_ij + R_{i+1,j+1} - R_{i,j+1} - R_{i+1,j}) / 2, indices mod n.
template <typename Scalar>
Matrix<Scalar> resistance_coefficients(const Matrix<Scalar>& r) {
  const Index n = r.rows();
  Matrix<Scalar> out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Index i1 = (i + 1) % n, j1 = (j + 1) % n;
      out(i, j) = -(r(i, j) + r(i1, j1) - r(i, j1) - r(i1, j)) / Scalar(2);
    }
  return out;
}

namespace detail {

template <typename Scalar>
Matrix<Scalar> omega_resistance_pattern(const Matrix<Scalar>& r) {
  const Index n = r.rows();
  const Matrix<Scalar> mc = resistance_coefficients(r);
  Matrix<Scalar> om = Matrix<Scalar>::Zero(n, 2 * n);
  om(0, 0) += Scalar(1);
  om(n - 1, 0) += (n % 2 == 0) ? Scalar(1) : Scalar(-1);
  for (Index j = 1; j < n; ++j) {
    om(j - 1, 2 * j) = Scalar(1);
    om(j, 2 * j) = Scalar(1);
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) om(i, 2 * j + 1) = ((i + j) % 2 == 0) ? Scalar(mc(i, j)) : Scalar(-mc(i, j));
  return om;
}

}  // namespace detail

/// n x 2n: column 1 holds 1 in row 1 and (-1)^n in row n, column 2j-1 (j >= 2)
/// holds 1 in rows j-1 and j, column 2j holds (-1)^(i+j) m_ij.
/// Throws Error(BadResistance).
template <typename Scalar>
Matrix<Scalar> omega_from_resistance_full(const Matrix<Scalar>& r, double tol = 1e-9) {
  const auto report = validate_resistance_properties(r, tol);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorKind::BadResistance, v.code + ": " + v.message);
  }
  return detail::omega_resistance_pattern(r);
}

/// The (n-1) x 2n truncation of omega_from_resistance_full.
template <typename Scalar>
Matrix<Scalar> omega_from_resistance(const Matrix<Scalar>& r, double tol = 1e-9) {
  return truncate_last_row(omega_from_resistance_full(r, tol));
}

/// Every row v satisfies sum_i (-1)^i v_{2i} = 0 and sum_i (-1)^i v_{2i-1} = 0.
template <typename Scalar>
bool rows_in_alternating_subspace(const Matrix<Scalar>& om, double tol = 1e-9) {
  for (Index r = 0; r < om.rows(); ++r) {
    Scalar odd(0), even(0);
    for (Index i = 0; 2 * i + 1 < om.cols(); ++i) {
      const Scalar s = (i % 2 == 0) ? Scalar(-1) : Scalar(1);
      odd += s * om(r, 2 * i);
      even += s * om(r, 2 * i + 1);
    }
    if (!ScalarTraits<Scalar>::near(odd, Scalar(0), tol) || !ScalarTraits<Scalar>::near(even, Scalar(0), tol))
      return false;
  }
  return true;
}

/// Maximal minor on 1-based columns I. Throws Error(BadCardinality).
template <typename Scalar>
Scalar minor(const Matrix<Scalar>& a, const Subset& I) {
  const Subset s = checked_subset(I, static_cast<int>(a.cols()), static_cast<int>(a.rows()));
  std::vector<Index> cols;
  for (int c : s) cols.push_back(c - 1);
  return linalg::determinant(linalg::select_columns(a, cols));
}

template <typename Scalar>
struct PluckerVector {
  int k = 0;
  int m = 0;
  std::vector<Subset> subsets;  // lexicographic
  std::vector<Scalar> values;
  /// All nonzero coordinates share one sign.
  bool sign_uniform = true;

  const Scalar& at(const Subset& I) const {
    const auto it = std::lower_bound(subsets.begin(), subsets.end(), I);
    if (it == subsets.end() || *it != I) throw Error(ErrorKind::BadCardinality, "no coordinate {" + format_subset(I) + "}");
    return values[static_cast<std::size_t>(it - subsets.begin())];
  }
};

/// All maximal minors. Throws Error(RankDeficient).
template <typename Scalar>
PluckerVector<Scalar> plucker_vector(const Matrix<Scalar>& a) {
  if (linalg::rank(a) < a.rows()) throw Error(ErrorKind::RankDeficient, "matrix does not have full row rank");
  PluckerVector<Scalar> p;
  p.k = static_cast<int>(a.rows());
  p.m = static_cast<int>(a.cols());
  p.subsets = k_subsets(p.m, p.k);
  bool pos = false, neg = false;
  for (const auto& I : p.subsets) {
    Scalar v = minor(a, I);
    if constexpr (!ScalarTraits<Scalar>::exact)
      if (ScalarTraits<Scalar>::is_zero(v)) v = 0;
    pos = pos || v > 0;
    neg = neg || v < 0;
    p.values.push_back(std::move(v));
  }
  p.sign_uniform = !(pos && neg);
  return p;
}

/// Divides by the first nonzero coordinate (lexicographic order).
template <typename Scalar>
std::vector<Scalar> normalize_projective(const std::vector<Scalar>& v) {
  std::vector<Scalar> out = v;
  for (const auto& x : v) {
    if (!ScalarTraits<Scalar>::is_zero(x)) {
      const Scalar pivot = x;
      for (auto& y : out) y /= pivot;
      return out;
    }
  }
  return out;
}

/// Same projective point (exact, or within relative tolerance in float mode).
template <typename Scalar>
bool proportional(const std::vector<Scalar>& a, const std::vector<Scalar>& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  const auto na = normalize_projective(a);
  const auto nb = normalize_projective(b);
  for (std::size_t i = 0; i < na.size(); ++i)
    if (!ScalarTraits<Scalar>::near(na[i], nb[i], tol)) return false;
  return true;
}

/// Twist: column i of the result pairs to 1 with A_i and to 0 with the other
/// columns collected by scanning i, i+1, ... cyclically for a basis.
/// Throws Error(ZeroColumn) or Error(ScanExhausted).
template <typename Scalar>
Matrix<Scalar> twist(const Matrix<Scalar>& a) {
  const Index k = a.rows();
  const Index m = a.cols();
  Matrix<Scalar> out(k, m);
  for (Index i = 0; i < m; ++i) {
    bool zero = true;
    for (Index r = 0; r < k; ++r) zero = zero && ScalarTraits<Scalar>::is_zero(a(r, i));
    if (zero) throw Error(ErrorKind::ZeroColumn, "column " + std::to_string(i + 1) + " is zero");
    std::vector<Index> basis{i};
    for (Index step = 1; step < m && static_cast<Index>(basis.size()) < k; ++step) {
      const Index j = (i + step) % m;
      auto trial = basis;
      trial.push_back(j);
      if (linalg::rank(linalg::select_columns(a, trial)) == static_cast<Index>(trial.size())) basis = std::move(trial);
    }
    if (static_cast<Index>(basis.size()) < k)
      throw Error(ErrorKind::ScanExhausted, "no basis found scanning from column " + std::to_string(i + 1));
    const Matrix<Scalar> b = linalg::select_columns(a, basis);
    Matrix<Scalar> rhs = Matrix<Scalar>::Zero(k, 1);
    rhs(0, 0) = Scalar(1);
    const auto x = linalg::solve(Matrix<Scalar>(b.transpose()), rhs);
    if (!x) throw Error(ErrorKind::ScanExhausted, "collected columns are dependent");
    out.col(i) = x->col(0);
  }
  return out;
}

}  // namespace circnet
