// circnet: forward solve, embed, twist, recover and verify circular planar
// networks from the command line.

#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "circnet/corpus.hpp"
#include "circnet/forward.hpp"
#include "circnet/grassmann.hpp"
#include "circnet/groves.hpp"
#include "circnet/io.hpp"
#include "circnet/recovery.hpp"
#include "circnet/temperley.hpp"

using namespace circnet;
using io::json;

namespace {

struct RunConfig {
  std::string mode = "exact";
  double tol = 1e-9;
  std::string convention = "B";
  std::string out;
  std::string format = "text";

  bool exact() const { return mode == "exact"; }
  WeightConvention weight_convention() const { return parse_convention(convention); }
};

// Text lines and a structured mirror of the same content.
struct Report {
  std::string text;
  json data = json::object();
  bool ok = true;

  void line(const std::string& s) { text += s + '\n'; }
  void block(const std::string& title, const std::string& body) {
    line("# " + title);
    text += body;
  }
  void check(const std::string& name, bool pass, const std::string& detail = {}) {
    ok = ok && pass;
    line("check " + name + ": " + (pass ? "PASS" : "FAIL") + (detail.empty() ? "" : " (" + detail + ")"));
    data["checks"].push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
  }
};

void emit(const RunConfig& cfg, const Report& rep) {
  if (cfg.format == "json") {
    json out = rep.data;
    out["status"] = rep.ok ? "pass" : "fail";
    io::write_text(cfg.out, out.dump(2) + '\n');
  } else {
    io::write_text(cfg.out, rep.text + "status: " + (rep.ok ? "PASS" : "FAIL") + '\n');
  }
}

PlanarGraph load_shape(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::read_network_file(arg).graph;
  return corpus::by_name(arg);
}

PlanarNetwork<Rational> load_network(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::require_weights(io::read_network_file(arg));
  return with_uniform_weights<Rational>(corpus::by_name(arg));
}

template <typename Scalar>
PlanarNetwork<Scalar> as_scalar(const PlanarNetwork<Rational>& net) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return net;
  else
    return cast_network<Scalar>(net);
}

template <typename Scalar>
std::string format_vector(const Vector<Scalar>& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) out += (i ? " " : "") + ScalarTraits<Scalar>::format(v(i));
  return out;
}

json weights_json(const PlanarGraph& g, const auto& w) {
  using S = std::decay_t<decltype(w(0))>;
  json j = json::object();
  for (std::size_t e = 0; e < g.edge_count(); ++e) j[g.edges()[e].id] = ScalarTraits<S>::format(w(static_cast<Index>(e)));
  return j;
}

// ---------------------------------------------------------------- commands

template <typename Scalar>
Report cmd_forward(const RunConfig&, const PlanarNetwork<Rational>& exact_net) {
  const auto net = as_scalar<Scalar>(exact_net);
  Report rep;
  const auto m = response_matrix(net);
  rep.block("response", io::format_matrix_text(m));
  rep.data["response"] = io::matrix_to_json(m);
  try {
    const auto r = effective_resistance_matrix(net);
    rep.block("resistance", io::format_matrix_text(r));
    rep.data["resistance"] = io::matrix_to_json(r);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Disconnected) throw;
    rep.line("# resistance unavailable: " + std::string(e.what()));
    rep.data["resistance_error"] = e.what();
  }
  return rep;
}

template <typename Scalar>
Report cmd_embed(const RunConfig& cfg, const PlanarNetwork<Rational>& exact_net) {
  const auto net = as_scalar<Scalar>(exact_net);
  Report rep;
  const auto m = response_matrix(net);
  const auto om = omega_from_response(m, cfg.tol);
  const auto omp = truncate_last_row(om);
  const auto pl = plucker_vector(omp);
  rep.block("omega", io::format_matrix_text(om));
  rep.block("omega_prime", io::format_matrix_text(omp));
  rep.block("plucker", io::format_plucker(pl));
  bool pos = false, neg = false;
  for (const auto& v : pl.values) {
    pos = pos || v > 0;
    neg = neg || v < 0;
  }
  const std::string sign = !pos && !neg ? "zero" : pos && neg ? "mixed" : pos ? "positive" : "negative";
  rep.line("rank: " + std::to_string(linalg::rank(om)));
  rep.line("sign: " + sign);
  rep.check("sign_uniform", pl.sign_uniform);
  rep.data["omega"] = io::matrix_to_json(om);
  rep.data["omega_prime"] = io::matrix_to_json(omp);
  rep.data["rank"] = linalg::rank(om);
  rep.data["sign"] = sign;
  for (std::size_t s = 0; s < pl.subsets.size(); ++s)
    rep.data["plucker"][format_subset(pl.subsets[s])] = ScalarTraits<Scalar>::format(pl.values[s]);
  return rep;
}

template <typename Scalar>
Report cmd_twist(const RunConfig&, const Matrix<Rational>& a_exact) {
  const Matrix<Scalar> a = cast_matrix<Scalar>(a_exact);
  Report rep;
  const auto t = twist(a);
  rep.block("twist", io::format_matrix_text(t));
  rep.data["twist"] = io::matrix_to_json(t);
  return rep;
}

template <typename Scalar>
void add_recovery(Report& rep, const PlanarGraph& shape, const RecoveryResult<Scalar>& res) {
  rep.block("conductances", io::format_edge_weights(shape, res.network.weight));
  rep.line("# verification");
  rep.line("convention: " + std::string(to_string(res.convention)));
  rep.line("constraints: " + std::to_string(res.constraint_count));
  rep.line("anchors: " + std::to_string(res.anchor_count));
  rep.line("redundant: " + std::to_string(res.redundant_count));
  rep.line("residual: " + ScalarTraits<Scalar>::format(res.residual));
  rep.data["conductances"] = weights_json(shape, res.network.weight);
  rep.data["verification"] = {{"convention", to_string(res.convention)},
                              {"constraints", res.constraint_count},
                              {"anchors", res.anchor_count},
                              {"redundant", res.redundant_count},
                              {"residual", ScalarTraits<Scalar>::format(res.residual)}};
}

template <typename Scalar>
Report cmd_recover(const RunConfig& cfg, const PlanarGraph& shape, const Matrix<Rational>& m_exact,
                   const std::string& from) {
  const Matrix<Scalar> m = cast_matrix<Scalar>(m_exact);
  const RecoveryOptions opt{cfg.weight_convention(), cfg.tol};
  Report rep;
  const auto res = from == "resistance" ? recover_from_resistance(shape, m, opt) : recover_from_response(shape, m, opt);
  add_recovery(rep, shape, res);
  return rep;
}

template <typename Scalar>
bool same_weights(const Vector<Scalar>& a, const Vector<Scalar>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (!ScalarTraits<Scalar>::near(a(i), b(i), tol)) return false;
  return true;
}

template <typename Scalar>
Report cmd_verify(const RunConfig& cfg, const PlanarNetwork<Rational>& exact_net) {
  const auto net = as_scalar<Scalar>(exact_net);
  const double tol = cfg.tol;
  Report rep;
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      rep.check(name, false, std::string(to_string(e.kind())) + ": " + e.what());
    }
  };

  const auto valid = validate_network(exact_net);
  rep.check("network_valid", valid.ok(), valid.ok() ? "" : valid.violations.front().code);
  if (!valid.ok()) return rep;
  const auto minimal = is_minimal(net.graph);
  rep.check("minimal", minimal.minimal, minimal.minimal ? "" : minimal.witness->describe());

  Matrix<Scalar> m, r;
  guarded("response_properties", [&] {
    m = response_matrix(net);
    const auto v = validate_response_properties(m, tol);
    rep.check("response_properties", v.ok(), v.ok() ? "" : v.violations.front().code);
  });
  guarded("resistance_properties", [&] {
    r = effective_resistance_matrix(net);
    const auto v = validate_resistance_properties(r, tol);
    rep.check("resistance_properties", v.ok(), v.ok() ? "" : v.violations.front().code);
  });
  if (m.size() == 0) return rep;
  const Index n = m.rows();

  guarded("grassmann", [&] {
    const auto om = omega_from_response(m, tol);
    rep.check("omega_rank", linalg::rank(om) == n - 1, "rank " + std::to_string(linalg::rank(om)));
    rep.check("omega_rows_in_V", rows_in_alternating_subspace(om, tol));
    const auto pl = plucker_vector(truncate_last_row(om));
    rep.check("plucker_sign_uniform", pl.sign_uniform);
    if (r.size() != 0) {
      const auto pr = plucker_vector(omega_from_resistance(r, tol));
      rep.check("response_resistance_proportional", proportional(pl.values, pr.values, tol));
    }
    const auto model = temperley_lam_model(net, cfg.weight_convention() == WeightConvention::Literal
                                                    ? WeightConvention::Literal
                                                    : WeightConvention::Uniform);
    rep.check("dimers_proportional", proportional(boundary_measurement_vector(model), pl.values, tol));
  });

  if (minimal.minimal) {
    guarded("scott_labels", [&] {
      const auto labels = scott_labels(temperley_graph(net.graph));
      bool sizes = true;
      for (const auto& l : labels) sizes = sizes && static_cast<Index>(l.size()) == n - 1;
      rep.check("scott_labels", sizes, std::to_string(labels.size()) + " faces");
    });
    const RecoveryOptions opt{cfg.weight_convention(), tol};
    guarded("recover_from_response", [&] {
      const auto res = recover_from_response(net.graph, m, opt);
      rep.check("recover_from_response", same_weights(res.network.weight, net.weight, tol));
    });
    if (r.size() != 0)
      guarded("recover_from_resistance", [&] {
        const auto res = recover_from_resistance(net.graph, r, opt);
        rep.check("recover_from_resistance", same_weights(res.network.weight, net.weight, tol));
      });
    if (net.graph.edge_count() <= 15) {
      guarded("grove_oracle", [&] {
        const auto g = check_grove_plucker(net, tol);
        rep.check("grove_oracle", g.ok(), g.ok() ? std::to_string(g.grove_count) + " groves" : g.mismatches.front());
        rep.check("groves_reproduce_response", matrices_near(response_from_groves(net), m, tol));
      });
    } else {
      rep.line("# grove oracle skipped: more than 15 edges");
    }
  }
  return rep;
}

template <typename Scalar>
Report cmd_roundtrip(const RunConfig& cfg, const PlanarGraph& shape, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  const RecoveryOptions opt{cfg.weight_convention(), cfg.tol};
  Report rep;
  rep.line("seed: " + std::to_string(seed));
  int good = 0;
  for (int t = 0; t < trials; ++t) {
    const Vector<Rational> w = corpus::random_weights(shape.edge_count(), rng);
    const auto net = as_scalar<Scalar>(with_weights(shape, w));
    std::string status;
    bool ok = true;
    try {
      const auto a = recover_from_response(shape, response_matrix(net), opt);
      const auto b = recover_from_resistance(shape, effective_resistance_matrix(net), opt);
      const bool ra = same_weights(a.network.weight, net.weight, cfg.tol);
      const bool rb = same_weights(b.network.weight, net.weight, cfg.tol);
      const bool agree = same_weights(a.network.weight, b.network.weight, cfg.tol);
      ok = ra && rb && agree;
      status = std::string("response ") + (ra ? "ok" : "MISMATCH") + ", resistance " + (rb ? "ok" : "MISMATCH") +
               (agree ? "" : ", routes disagree");
    } catch (const Error& e) {
      ok = false;
      status = std::string(to_string(e.kind())) + ": " + e.what();
    }
    good += ok;
    rep.line("trial " + std::to_string(t + 1) + ": " + status + " | weights " + format_vector(w));
    rep.data["trials"].push_back({{"trial", t + 1}, {"ok", ok}, {"status", status}, {"weights", format_vector(w)}});
  }
  const std::string summary = std::to_string(good) + "/" + std::to_string(trials) + (cfg.exact() ? " exact" : " within tolerance");
  rep.line("roundtrip: " + summary);
  rep.data["seed"] = seed;
  rep.data["summary"] = summary;
  rep.ok = good == trials;
  return rep;
}

// Runs body<Scalar>() with the scalar type chosen by --mode.
template <typename Body>
Report in_mode(const RunConfig& cfg, Body&& body) {
  if (cfg.exact()) return body.template operator()<Rational>();
  return body.template operator()<double>();
}

void emit_failure(const RunConfig& cfg, ErrorKind kind, const std::string& message) {
  if (cfg.format == "json") {
    const json j = {{"status", "fail"}, {"error", to_string(kind)}, {"exit", exit_code(kind)}, {"message", message}};
    io::write_text(cfg.out, j.dump(2) + '\n');
  } else {
    io::write_text(cfg.out, "# failure\nerror: " + std::string(to_string(kind)) + "\nexit: " +
                                std::to_string(exit_code(kind)) + "\nmessage: " + message + "\nstatus: FAIL\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circular planar networks: forward problem, Grassmannian embedding and conductance recovery"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--mode", cfg.mode, "Arithmetic: exact or float")
      ->check(CLI::IsMember({"exact", "float"}))
      ->envname("CIRCNET_MODE");
  app.add_option("--tol", cfg.tol, "Relative tolerance in float mode")
      ->check(CLI::PositiveNumber)
      ->envname("CIRCNET_TOL");
  app.add_option("--convention", cfg.convention, "Temperley weight placement: A, B or auto")
      ->check(CLI::IsMember({"A", "B", "auto"}))
      ->envname("CIRCNET_CONVENTION");
  app.add_option("--out", cfg.out, "Output file (default stdout)")->envname("CIRCNET_OUT");
  app.add_option("--format", cfg.format, "Report form: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("CIRCNET_FORMAT");

  std::string network, shape, matrix, from = "response", shape_weights = "unit";
  std::uint64_t seed = 1;
  int trials = 100;

  auto* forward = app.add_subcommand("forward", "Response and effective resistance matrices");
  forward->add_option("network", network, "Network file or built-in shape name")->required();
  auto* embed = app.add_subcommand("embed", "Omega, Omega', Plücker vector and sign report");
  embed->add_option("network", network, "Network file or built-in shape name")->required();
  auto* twist_cmd = app.add_subcommand("twist", "Twist of a matrix");
  twist_cmd->add_option("matrix", matrix, "Matrix file (p/q entries)")->required()->check(CLI::ExistingFile);
  auto* recover = app.add_subcommand("recover", "Conductances from a response or resistance matrix");
  recover->add_option("shape", shape, "Shape file or built-in shape name")->required();
  recover->add_option("matrix", matrix, "Matrix file (p/q entries)")->required()->check(CLI::ExistingFile);
  recover->add_option("--from", from, "Input kind")
      ->check(CLI::IsMember({"response", "resistance"}))
      ->envname("CIRCNET_FROM");
  auto* verify = app.add_subcommand("verify", "Invariant suite for a weighted network");
  verify->add_option("network", network, "Network file or built-in shape name")->required();
  auto* roundtrip = app.add_subcommand("roundtrip", "Random-weight recovery round trips");
  roundtrip->add_option("shape", shape, "Shape file or built-in shape name")->required();
  roundtrip->add_option("--seed", seed, "Random seed")->envname("CIRCNET_SEED");
  roundtrip->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber)->envname("CIRCNET_TRIALS");
  auto* shape_cmd = app.add_subcommand("shape", "Print a built-in shape as a network file");
  shape_cmd->add_option("name", shape, "single_edge, star, triangle, pl_tree, lattice5, ...")->required();
  shape_cmd->add_option("--weights", shape_weights, "unit, random or none")
      ->check(CLI::IsMember({"unit", "random", "none"}));
  shape_cmd->add_option("--seed", seed, "Random seed for --weights random");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Report rep;
    if (*forward) {
      const auto net = load_network(network);
      rep = in_mode(cfg, [&]<typename S>() { return cmd_forward<S>(cfg, net); });
    } else if (*embed) {
      const auto net = load_network(network);
      rep = in_mode(cfg, [&]<typename S>() { return cmd_embed<S>(cfg, net); });
    } else if (*twist_cmd) {
      const auto a = io::read_matrix_file(matrix);
      rep = in_mode(cfg, [&]<typename S>() { return cmd_twist<S>(cfg, a); });
    } else if (*recover) {
      const auto g = load_shape(shape);
      const auto m = io::read_matrix_file(matrix);
      rep = in_mode(cfg, [&]<typename S>() { return cmd_recover<S>(cfg, g, m, from); });
    } else if (*verify) {
      const auto net = load_network(network);
      rep = in_mode(cfg, [&]<typename S>() { return cmd_verify<S>(cfg, net); });
    } else if (*roundtrip) {
      const auto g = load_shape(shape);
      rep = in_mode(cfg, [&]<typename S>() { return cmd_roundtrip<S>(cfg, g, seed, trials); });
    } else if (*shape_cmd) {
      const PlanarGraph g = corpus::by_name(shape);
      std::mt19937_64 rng(seed);
      Vector<Rational> w = shape_weights == "random" ? corpus::random_weights(g.edge_count(), rng)
                                                     : Vector<Rational>(Vector<Rational>::Ones(static_cast<Index>(g.edge_count())));
      io::write_text(cfg.out, io::network_to_json(g, shape_weights == "none" ? nullptr : &w).dump(2) + '\n');
      return 0;
    }
    emit(cfg, rep);
    return rep.ok ? 0 : exit_code(ErrorKind::VerificationFailed);
  } catch (const Error& e) {
    emit_failure(cfg, e.kind(), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    emit_failure(cfg, ErrorKind::Parse, e.what());
    return 9;
  }
}
