#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace circnet {

using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

/// Parses "p/q", "-p/q" or an integer. Throws Error(ErrorKind::Parse).
Rational parse_rational(std::string_view text);

/// Always "p/q", also for integers ("3/1"), matching the interchange format.
std::string format_rational(const Rational& value);

/// Arithmetic policy per scalar type. Exact scalars compare with ==; floating
/// scalars use a relative tolerance supplied by the caller.
template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static bool is_zero(const Rational& x, const Rational& /*scale*/ = Rational(0)) {
    return x == 0;
  }
  static bool near(const Rational& a, const Rational& b, double /*tol*/ = 0.0) {
    return a == b;
  }
  static Rational from_rational(const Rational& r) { return r; }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static std::string format(const Rational& x) { return format_rational(x); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  // Pivot threshold used by eliminations; independent of the user tolerance.
  static constexpr double pivot_eps = 1e-11;

  static bool is_zero(double x, double scale = 1.0) {
    return std::abs(x) <= pivot_eps * std::max(1.0, std::abs(scale));
  }
  static bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
  }
  static double from_rational(const Rational& r) { return r.convert_to<double>(); }
  static double abs(double x) { return std::abs(x); }
  static double to_double(double x) { return x; }
  static std::string format(double x);
};

template <typename Scalar>
Matrix<Scalar> cast_matrix(const Matrix<Rational>& m) {
  Matrix<Scalar> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = ScalarTraits<Scalar>::from_rational(m(i, j));
  return out;
}

template <typename Scalar>
Vector<Scalar> cast_vector(const Vector<Rational>& v) {
  Vector<Scalar> out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = ScalarTraits<Scalar>::from_rational(v(i));
  return out;
}

template <typename Scalar>
bool matrices_near(const Matrix<Scalar>& a, const Matrix<Scalar>& b, double tol = 0.0) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!ScalarTraits<Scalar>::near(a(i, j), b(i, j), tol)) return false;
  return true;
}

}  // namespace circnet
