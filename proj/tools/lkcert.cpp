// lkcert: command-line front end. Each subcommand reads matrices in the
// {"dim", "entries"} JSON schema and writes JSON (default) or TSV.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lk/cli.hpp"

int main(int argc, char** argv) {
  lk::cli::RunConfig config;
  try {
    config = lk::cli::default_config();
  } catch (const lk::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lk::cli::kPrecondition;
  }

  CLI::App app{"Exact certificates for common eigenvectors of quasi-unipotent matrix pairs"};
  app.set_version_flag("--version", lk::cli::kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_option("--max-dim", config.max_dim, "Largest accepted matrix dimension (env LKCERT_MAX_DIM)");

  auto matrix_opt = [&](CLI::App* sub, const char* name, std::string& dest, const char* what) {
    sub->add_option(name, dest, what)->required();
  };

  auto* check_qu = app.add_subcommand("check-qu", "Decide quasi-unipotence of A");
  matrix_opt(check_qu, "--A", config.a_path, "Matrix JSON file");

  auto* index = app.add_subcommand("index", "Index of A (bottom for the zero matrix)");
  matrix_opt(index, "--A", config.a_path, "Matrix JSON file");

  auto* trace_poly = app.add_subcommand("trace-poly", "tr((A B^n)^k) as a polynomial in n");
  matrix_opt(trace_poly, "--A", config.a_path, "Matrix JSON file");
  matrix_opt(trace_poly, "--B", config.b_path, "Unipotent single-block matrix JSON file");
  trace_poly->add_option("--k", config.k, "Power k")->required();
  trace_poly->add_option("--method", config.method, "expand or interpolate")
      ->check(CLI::IsMember({"expand", "interpolate"}));

  auto* verify = app.add_subcommand("verify", "Full pipeline: hypotheses, witness or certificate");
  matrix_opt(verify, "--A", config.a_path, "Matrix JSON file");
  matrix_opt(verify, "--B", config.b_path, "Matrix JSON file");

  auto* tri = app.add_subcommand("triangularize", "Simultaneous triangularization certificate");
  matrix_opt(tri, "--A", config.a_path, "Matrix JSON file");
  matrix_opt(tri, "--B", config.b_path, "Matrix JSON file");

  auto* cex = app.add_subcommand("counterexample", "Search (k, n) with tr((A B^n)^k) != tr(A^k)");
  matrix_opt(cex, "--A", config.a_path, "Matrix JSON file");
  matrix_opt(cex, "--B", config.b_path, "Matrix JSON file");
  cex->add_option("--kmax", config.kmax, "Largest k (default dim)");
  cex->add_option("--nmax", config.nmax, "Largest n (default dim*(dim-1)+1)");

  auto* pk = app.add_subcommand("pk", "Table of the cyclic polynomials p_k");
  pk->add_option("--r", config.r, "Shift r >= 0")->required();
  pk->add_option("--m", config.m, "m (x has m+1 entries)")->required();
  pk->add_option("--x", config.x, "Comma-separated rationals x_1..x_{m+1}")->required();
  pk->add_option("--kmax", config.kmax, "Largest k (default m+1)");

  auto* tnn = app.add_subcommand("tnn", "Exhaustive total nonnegativity scan");
  matrix_opt(tnn, "--A", config.a_path, "Matrix JSON file");
  tnn->add_option("--cap", config.tnn_cap, "Largest dimension scanned (env LKCERT_TNN_CAP)");

  auto* pascal = app.add_subcommand("pascal", "Lower triangular Pascal matrix L_n");
  pascal->add_option("--n", config.n, "Size n >= 1")->required();
  pascal->add_flag("--factor", config.factor, "Also list the bidiagonal factors I + E_{i,i-1}");

  auto* minor = app.add_subcommand("minor-positivity", "Binomial minor determinant with chain certificate");
  minor->add_option("--qs", config.qs, "Strictly increasing q_1,...,q_m")->required();
  minor->add_option("--r", config.r, "Shift r >= 0")->required();

  auto* comm = app.add_subcommand("commutator-check", "g = prod [x_i, y_i] central in <x_i, y_i> is quasi-unipotent");
  matrix_opt(comm, "--g", config.g_path, "Matrix JSON file");
  comm->add_option("--xs", config.xs_paths, "Matrix JSON files x_1,...")->required()->delimiter(',');
  comm->add_option("--ys", config.ys_paths, "Matrix JSON files y_1,...")->required()->delimiter(',');

  auto* check_cert = app.add_subcommand("check-cert", "Re-validate a serialized certificate");
  check_cert->add_option("--cert", config.cert_path, "Certificate or verify output JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lk::cli::kPrecondition;
  }
  config.command = app.get_subcommands().front()->get_name();

  const auto result = lk::cli::run(config);
  if (!result.error.empty()) {
    std::cerr << result.error;
    return result.exit_code;
  }
  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return lk::cli::kPrecondition;
    }
    out << result.output;
  }
  return result.exit_code;
}
