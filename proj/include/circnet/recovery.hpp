#pragma once

// Conductance recovery from a response or effective resistance matrix on a
// known minimal graph: twist, face labels, face weights, unit propagation.

#include <optional>

#include "circnet/grassmann.hpp"
#include "circnet/temperley.hpp"

namespace circnet {

/// Gauge representative built from the twist: 1/(Δ_F1 Δ_F2) on inner edges
/// (F1, F2 the faces on either side), 1/Δ_F on boundary legs (F the face on
/// the right when walking inward from the boundary node). Δ_F is the minor of
/// `tau` on the label of F. Throws Error(ZeroMinor).
template <typename Scalar>
Vector<Scalar> lam_weights_from_twist(const LamGraph& g, const Matrix<Scalar>& tau, const FaceLabeling& labels) {
  const DiskEmbedding& emb = g.embedding();
  std::vector<std::optional<Scalar>> cache(labels.size());
  auto delta = [&](std::size_t f) -> const Scalar& {
    if (!cache[f]) {
      Scalar v = minor(tau, labels[f]);
      if (ScalarTraits<Scalar>::is_zero(v))
        throw Error(ErrorKind::ZeroMinor, "twisted minor on {" + format_subset(labels[f]) + "} vanishes");
      cache[f] = std::move(v);
    }
    return *cache[f];
  };
  Vector<Scalar> w(static_cast<Index>(g.edge_count()));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& le = g.edges()[e];
    const bool a_bnd = g.is_boundary(le.a);
    const bool b_bnd = g.is_boundary(le.b);
    if (a_bnd || b_bnd) {
      const std::size_t inward = a_bnd ? 2 * e : 2 * e + 1;
      w(static_cast<Index>(e)) = Scalar(1) / delta(emb.right_face(inward));
    } else {
      w(static_cast<Index>(e)) = Scalar(1) / (delta(emb.right_face(2 * e)) * delta(emb.left_face(2 * e)));
    }
  }
  return w;
}

template <typename Scalar>
struct FaceConstraint {
  std::size_t face = 0;
  /// (network edge, exponent) with nonzero exponents, sorted by edge.
  std::vector<std::pair<std::size_t, int>> exponents;
  Scalar value;
};

/// One multiplicative relation prod w(e)^exp = O(F) per Lam face.
template <typename Scalar>
struct ConstraintSystem {
  std::size_t variable_count = 0;
  std::vector<FaceConstraint<Scalar>> constraints;
};

/// Face weights of the representative together with the exponent pattern of
/// the conductances under the given placement.
template <typename Scalar>
ConstraintSystem<Scalar> build_constraints(const LamGraph& g, const Vector<Scalar>& representative,
                                           WeightConvention convention, std::size_t variable_count) {
  if (convention == WeightConvention::Auto) throw std::invalid_argument("build_constraints needs a concrete convention");
  const DiskEmbedding& emb = g.embedding();
  ConstraintSystem<Scalar> cs;
  cs.variable_count = variable_count;
  for (std::size_t f = 0; f < emb.faces().size(); ++f) {
    std::map<std::size_t, int> exps;
    for (std::size_t d : emb.faces()[f]) {
      if (emb.is_arc(d)) continue;
      const auto& le = g.edges()[DiskEmbedding::edge_of(d)];
      if (!carries_conductance(le, convention)) continue;
      exps[le.conductance_edge] += g.nodes()[emb.tail(d)].color == Color::White ? 1 : -1;
    }
    FaceConstraint<Scalar> c;
    c.face = f;
    for (const auto& [e, x] : exps)
      if (x != 0) c.exponents.emplace_back(e, x);
    c.value = face_weight(g, representative, f);
    cs.constraints.push_back(std::move(c));
  }
  return cs;
}

template <typename Scalar>
struct ConstraintSolution {
  Vector<Scalar> weight;
  /// Faces used to determine a variable, in order of use.
  std::vector<std::size_t> used_faces;
  /// Constraints checked as identities after propagation.
  std::size_t redundant = 0;
};

namespace detail {

template <typename Scalar>
Scalar int_power(const Scalar& x, int e) {
  Scalar r(1);
  for (int i = 0; i < std::abs(e); ++i) r *= x;
  return e < 0 ? Scalar(Scalar(1) / r) : r;
}

}  // namespace detail

/// Unit propagation over faces in increasing id order, then exact (or
/// tolerance) verification of all remaining constraints.
/// Throws Error(Underdetermined) or Error(Inconsistent).
template <typename Scalar>
ConstraintSolution<Scalar> solve_constraints(const ConstraintSystem<Scalar>& cs, double tol = 1e-9) {
  using T = ScalarTraits<Scalar>;
  const std::size_t nvar = cs.variable_count;
  std::vector<char> known(nvar, 0);
  ConstraintSolution<Scalar> sol;
  sol.weight = Vector<Scalar>::Ones(static_cast<Index>(nvar));
  std::vector<char> used(cs.constraints.size(), 0);
  std::size_t determined = 0;

  for (bool progress = true; progress && determined < nvar;) {
    progress = false;
    for (std::size_t c = 0; c < cs.constraints.size() && !progress; ++c) {
      if (used[c]) continue;
      const auto& fc = cs.constraints[c];
      std::size_t unknown = npos, count = 0;
      int exp = 0;
      for (const auto& [e, x] : fc.exponents)
        if (!known[e]) {
          ++count;
          unknown = e;
          exp = x;
        }
      if (count != 1 || std::abs(exp) != 1) continue;
      Scalar rest(1);
      for (const auto& [e, x] : fc.exponents)
        if (e != unknown) rest *= detail::int_power(sol.weight(static_cast<Index>(e)), x);
      Scalar value = fc.value / rest;
      if (exp < 0) value = Scalar(1) / value;
      if (!(value > 0) || T::is_zero(value))
        throw Error(ErrorKind::Inconsistent, "face " + std::to_string(fc.face) + " forces a non-positive conductance");
      sol.weight(static_cast<Index>(unknown)) = value;
      known[unknown] = 1;
      used[c] = 1;
      sol.used_faces.push_back(fc.face);
      ++determined;
      progress = true;
    }
  }
  if (determined < nvar) {
    std::size_t missing = 0;
    while (known[missing]) ++missing;
    throw Error(ErrorKind::Underdetermined,
                "propagation stalls with " + std::to_string(nvar - determined) + " conductance(s) undetermined (edge " +
                    std::to_string(missing) + ")");
  }
  for (std::size_t c = 0; c < cs.constraints.size(); ++c) {
    if (used[c]) continue;
    const auto& fc = cs.constraints[c];
    Scalar lhs(1);
    for (const auto& [e, x] : fc.exponents) lhs *= detail::int_power(sol.weight(static_cast<Index>(e)), x);
    if (!T::near(lhs, fc.value, tol))
      throw Error(ErrorKind::Inconsistent, "face " + std::to_string(fc.face) + " constraint fails: expected " +
                                               T::format(fc.value) + ", got " + T::format(lhs));
    ++sol.redundant;
  }
  return sol;
}

struct RecoveryOptions {
  WeightConvention convention = WeightConvention::Uniform;
  /// Relative tolerance for floating point runs; ignored in exact mode.
  double tolerance = 1e-9;
};

template <typename Scalar>
struct RecoveryResult {
  PlanarNetwork<Scalar> network;
  WeightConvention convention = WeightConvention::Uniform;
  std::size_t constraint_count = 0;
  std::size_t anchor_count = 0;
  std::size_t redundant_count = 0;
  /// Largest absolute entry of (forward re-solve - input).
  Scalar residual;
};

namespace detail {

inline void require_recoverable_shape(const PlanarGraph& shape) {
  const auto report = shape.validate();
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(v.code == "non-planar rotation" ? ErrorKind::InvalidEmbedding : ErrorKind::InvalidNetwork,
                v.code + ": " + v.message);
  }
  if (!shape.connected()) throw Error(ErrorKind::NotConnected, "recovery needs a connected network");
  const auto minimal = is_minimal(shape);
  if (!minimal.minimal) throw Error(ErrorKind::NotMinimal, "network is not minimal: " + minimal.witness->describe());
}

template <typename Scalar>
Scalar max_abs_difference(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Scalar worst(0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      const Scalar d = ScalarTraits<Scalar>::abs(Scalar(a(i, j) - b(i, j)));
      if (d > worst) worst = d;
    }
  return worst;
}

template <typename Scalar>
RecoveryResult<Scalar> recover_from_omega(const PlanarGraph& shape, const Matrix<Scalar>& omega_prime,
                                          const RecoveryOptions& options) {
  const Matrix<Scalar> tau = twist(omega_prime);
  const LamGraph lam = temperley_graph(shape);
  const FaceLabeling labels = scott_labels(lam);
  WeightConvention convention = options.convention;
  if (convention == WeightConvention::Auto) convention = select_convention(shape);
  const Vector<Scalar> rep = lam_weights_from_twist(lam, tau, labels);
  const auto cs = build_constraints(lam, rep, convention, shape.edge_count());
  const auto sol = solve_constraints(cs, options.tolerance);
  RecoveryResult<Scalar> out{with_weights(shape, sol.weight), convention, cs.constraints.size(),
                             sol.used_faces.size(), sol.redundant, Scalar(0)};
  return out;
}

inline void check_size(const PlanarGraph& shape, Index rows, Index cols, ErrorKind kind) {
  const Index n = static_cast<Index>(shape.n_boundary());
  if (rows != n || cols != n)
    throw Error(kind, "matrix is " + std::to_string(rows) + "x" + std::to_string(cols) + ", expected " +
                          std::to_string(n) + "x" + std::to_string(n));
}

}  // namespace detail

/// Full pipeline from a response matrix, verified by re-solving the forward
/// problem. Throws NotMinimal, BadResponse (wrong size), ZeroMinor,
/// Underdetermined, Inconsistent or VerificationFailed.
template <typename Scalar>
RecoveryResult<Scalar> recover_from_response(const PlanarGraph& shape, const Matrix<Scalar>& m,
                                             const RecoveryOptions& options = {}) {
  detail::require_recoverable_shape(shape);
  detail::check_size(shape, m.rows(), m.cols(), ErrorKind::BadResponse);
  // No property pre-check: damaged input surfaces through the redundant
  // constraints or the forward re-solve.
  auto result = detail::recover_from_omega(shape, truncate_last_row(detail::omega_pattern(m)), options);
  const Matrix<Scalar> again = response_matrix(result.network);
  result.residual = detail::max_abs_difference(again, m);
  if (!matrices_near(again, m, options.tolerance))
    throw Error(ErrorKind::VerificationFailed, "recovered conductances do not reproduce the response matrix (residual " +
                                                   ScalarTraits<Scalar>::format(result.residual) + ")");
  return result;
}

/// As recover_from_response, starting from effective resistances.
template <typename Scalar>
RecoveryResult<Scalar> recover_from_resistance(const PlanarGraph& shape, const Matrix<Scalar>& r,
                                               const RecoveryOptions& options = {}) {
  detail::require_recoverable_shape(shape);
  detail::check_size(shape, r.rows(), r.cols(), ErrorKind::BadResistance);
  auto result = detail::recover_from_omega(shape, truncate_last_row(detail::omega_resistance_pattern(r)), options);
  const Matrix<Scalar> again = effective_resistance_matrix(result.network);
  result.residual = detail::max_abs_difference(again, r);
  if (!matrices_near(again, r, options.tolerance))
    throw Error(ErrorKind::VerificationFailed,
                "recovered conductances do not reproduce the resistance matrix (residual " +
                    ScalarTraits<Scalar>::format(result.residual) + ")");
  return result;
}

}  // namespace circnet
