#pragma once

// Command dispatch for the lkcert tool. argv parsing lives in tools/; this
// header maps a validated RunConfig onto the library and serializes the
// result, so the same path is exercised by tests without a subprocess.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lk/lk.hpp"
#include "lk/serialize.hpp"

namespace lk::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kWitnessed = 1,
  kPrecondition = 2,
  kResource = 3,
  kFalsified = 4,
};

struct RunConfig {
  std::string command;
  std::string a_path, b_path, g_path, cert_path;
  std::vector<std::string> xs_paths, ys_paths;
  std::optional<std::uint64_t> k, kmax, nmax, n, m;
  std::optional<std::int64_t> r;
  std::string x;   // comma-separated rationals
  std::string qs;  // comma-separated positive integers
  bool factor = false;
  std::string method = "expand";
  std::size_t tnn_cap = kDefaultTnnCap;
  std::size_t max_dim = 8;
  std::string format = "json";
};

struct RunResult {
  int exit_code = kOk;
  std::string output;
  std::string error;  // diagnostic for stderr; output is empty when set
};

inline std::size_t env_cap(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
      throw ParseError(std::string("environment variable ") + name + ": not a number: " + v);
    }
  }
  return fallback;
}

/// Defaults for the resource caps, overridable via LKCERT_MAX_DIM and
/// LKCERT_TNN_CAP.
inline RunConfig default_config() {
  RunConfig c;
  c.max_dim = env_cap("LKCERT_MAX_DIM", 8);
  c.tnn_cap = env_cap("LKCERT_TNN_CAP", kDefaultTnnCap);
  return c;
}

namespace detail {

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

inline std::string tsv_cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Top-level keys as key<TAB>value lines.
inline std::string flat_tsv(const json& doc) {
  std::string out;
  for (auto it = doc.begin(); it != doc.end(); ++it) out += it.key() + "\t" + tsv_cell(it.value()) + "\n";
  return out;
}

inline std::string matrix_tsv(const MatQ& a) {
  std::string out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out += (j ? "\t" : "") + to_string(a(i, j));
    out += "\n";
  }
  return out;
}

class Runner {
 public:
  explicit Runner(const RunConfig& c) : c_(c) {}

  RunResult run() {
    const auto& cmd = c_.command;
    if (c_.format != "json" && c_.format != "tsv") throw ParseError("--format must be json or tsv");
    if (cmd == "check-qu") return check_qu();
    if (cmd == "index") return index();
    if (cmd == "trace-poly") return trace_poly();
    if (cmd == "verify") return verify();
    if (cmd == "triangularize") return triangularize_cmd();
    if (cmd == "counterexample") return counterexample();
    if (cmd == "pk") return pk();
    if (cmd == "tnn") return tnn();
    if (cmd == "pascal") return pascal();
    if (cmd == "minor-positivity") return minor_pos();
    if (cmd == "commutator-check") return commutator();
    if (cmd == "check-cert") return check_cert();
    throw ParseError("unknown command '" + cmd + "'");
  }

 private:
  MatQ load(const std::string& path, const char* flag) {
    if (path.empty()) throw ParseError(std::string("missing required option ") + flag);
    MatQ a = read_matrix_file(path);
    cap_dim(a.dim());
    return a;
  }

  void cap_dim(std::size_t dim) const {
    if (dim > c_.max_dim)
      throw ResourceError("dimension " + std::to_string(dim) + " exceeds cap " +
                          std::to_string(c_.max_dim) + " (raise with --max-dim or LKCERT_MAX_DIM)");
  }

  template <typename T>
  T need(const std::optional<T>& v, const char* flag) const {
    if (!v) throw ParseError(std::string("missing required option ") + flag);
    return *v;
  }

  RunResult emit(const json& result, int code = kOk, std::optional<std::string> tsv = std::nullopt) {
    if (c_.format == "tsv") return {code, tsv ? *tsv : flat_tsv(result)};
    json doc;
    doc["lkcert_version"] = kVersion;
    doc["command"] = c_.command;
    doc["result"] = result;
    return {code, doc.dump(2) + "\n"};
  }

  RunResult check_qu() {
    return emit(to_json(is_quasi_unipotent(load(c_.a_path, "--A"))));
  }

  RunResult index() {
    const MatQ a = load(c_.a_path, "--A");
    const IndexValue v = index_of(a);
    json out{{"index", to_json(v)}, {"upper_triangular", is_upper_triangular(a)}};
    return emit(out);
  }

  RunResult trace_poly() {
    const MatQ a = load(c_.a_path, "--A");
    const MatQ b = load(c_.b_path, "--B");
    const auto k = need(c_.k, "--k");
    if (k == 0) throw ParseError("--k must be positive");
    TracePoly tp;
    if (c_.method == "expand")
      tp = expand_trace_poly(a, b, k);
    else if (c_.method == "interpolate")
      tp = trace_poly_interpolated(a, b, k);
    else
      throw ParseError("--method must be expand or interpolate");
    std::string tsv = "degree\tcoeff\n";
    for (std::size_t i = 0; i < tp.poly.coeffs().size(); ++i)
      tsv += std::to_string(i) + "\t" + to_string(tp.poly.coeffs()[i]) + "\n";
    return emit(to_json(tp), kOk, tsv);
  }

  RunResult verify() {
    const MatQ a = load(c_.a_path, "--A");
    const MatQ b = load(c_.b_path, "--B");
    const Verdict v = verify_main_theorem(a, b);
    const int code = v.status == Status::kCertified ? kOk
                     : v.status == Status::kWitnessed ? kWitnessed
                                                      : kPrecondition;
    return emit(to_json(a, b, v), code);
  }

  RunResult triangularize_cmd() {
    const MatQ a = load(c_.a_path, "--A");
    const MatQ b = load(c_.b_path, "--B");
    const HypothesisReport report = hypothesis_verifier(a, b);
    if (!report.verdict) return emit({{"report", to_json(report)}, {"certificate", nullptr}}, kWitnessed);
    return emit({{"report", to_json(report)}, {"certificate", certificate_to_json(a, b, triangularize(a, b))}});
  }

  RunResult counterexample() {
    const MatQ a = load(c_.a_path, "--A");
    const MatQ b = load(c_.b_path, "--B");
    const std::uint64_t m = a.dim() - 1;
    const auto kmax = c_.kmax.value_or(m + 1);
    const auto nmax = c_.nmax.value_or((m + 1) * m + 1);
    if (kmax == 0 || nmax == 0) throw ParseError("--kmax and --nmax must be positive");
    if (kmax > 64 || nmax > 4096) throw ResourceError("counterexample: kmax <= 64 and nmax <= 4096");
    const auto w = counterexample_search(a, b, kmax, nmax);
    json out{{"kmax", kmax}, {"nmax", nmax}};
    if (w) {
      out["witness"] = {{"k", w->k}, {"n", w->n}, {"trace_at_0", to_string(w->trace_at_zero)},
                        {"trace_at_n", to_string(w->trace_at_n)}};
    } else {
      out["witness"] = nullptr;
    }
    return emit(out, w ? kWitnessed : kOk);
  }

  RunResult pk() {
    PkInstance inst;
    inst.r = need(c_.r, "--r");
    inst.m = need(c_.m, "--m");
    cap_dim(inst.m + 1);
    for (const auto& item : split_commas(c_.x)) inst.x.push_back(parse_rat(item));
    if (inst.x.size() != inst.m + 1)
      throw ParseError("--x: expected " + std::to_string(inst.m + 1) + " values, got " +
                       std::to_string(inst.x.size()));
    inst.validate();
    const auto kmax = c_.kmax.value_or(inst.m + 1);
    if (kmax == 0) throw ParseError("--kmax must be positive");
    if (kmax > 12) throw ResourceError("pk: kmax > 12 (direct sum has (m+1)^k terms)");
    json rows = json::array();
    std::string tsv = "k\tp_k\tp_k_trace\n";
    for (std::uint64_t k = 1; k <= kmax; ++k) {
      const Rat direct = pk_direct(inst, k), via = pk_via_trace(inst, k);
      rows.push_back({{"k", k}, {"p_k", to_string(direct)}, {"p_k_trace", to_string(via)}});
      tsv += std::to_string(k) + "\t" + to_string(direct) + "\t" + to_string(via) + "\n";
    }
    const PkCheck check = theorem_pk_check(inst);
    json out{{"r", inst.r}, {"m", inst.m}, {"x", to_json(inst.x)}, {"table", rows},
             {"all_zero", check.all_zero},
             {"witness_k", check.witness_k ? json(*check.witness_k) : json(nullptr)}};
    return emit(out, kOk, tsv);
  }

  RunResult tnn() {
    const MatQ a = load(c_.a_path, "--A");
    const TnnResult r = is_totally_nonnegative(a, c_.tnn_cap);
    json out{{"totally_nonnegative", r.nonnegative}};
    if (r.offending) {
      out["offending"] = {{"rows", r.offending->rows}, {"cols", r.offending->cols},
                          {"det", to_string(minor_det(a, *r.offending))}};
    } else {
      out["offending"] = nullptr;
    }
    return emit(out);
  }

  RunResult pascal() {
    const auto n = need(c_.n, "--n");
    if (n == 0) throw ParseError("--n must be positive");
    cap_dim(n);
    const MatQ l = pascal_L(n);
    json out{{"n", n}, {"L", to_json(l)}};
    std::string tsv = matrix_tsv(l);
    if (c_.factor) {
      json factors = json::array();
      MatQ product = MatQ::identity(n);
      for (const auto& f : bidiagonal_factorization(n)) {
        for (std::size_t i = 1; i < n; ++i)
          if (f(i, i - 1) != 0) factors.push_back({{"i", i + 1}, {"j", i}});
        product = product * f;
      }
      out["factors"] = factors;
      out["product_equals_L"] = product == l;
      tsv += "factor\ti\tj\n";
      for (std::size_t t = 0; t < factors.size(); ++t)
        tsv += std::to_string(t + 1) + "\t" + factors[t]["i"].dump() + "\t" + factors[t]["j"].dump() + "\n";
    }
    return emit(out, kOk, tsv);
  }

  RunResult minor_pos() {
    std::vector<std::size_t> qs;
    for (const auto& item : split_commas(c_.qs)) {
      try {
        std::size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size() || v < 1) throw std::invalid_argument(item);
        qs.push_back(static_cast<std::size_t>(v));
      } catch (const std::exception&) {
        throw ParseError("--qs: invalid entry '" + item + "'");
      }
    }
    const auto r = need(c_.r, "--r");
    if (!qs.empty()) cap_dim(qs.back() + static_cast<std::size_t>(std::max<std::int64_t>(r, 0)) + 1);
    return emit(chain_to_json(qs, r, minor_positivity(qs, r)));
  }

  RunResult commutator() {
    const MatQ g = load(c_.g_path, "--g");
    std::vector<MatQ> xs, ys;
    for (const auto& p : c_.xs_paths) xs.push_back(load(p, "--xs"));
    for (const auto& p : c_.ys_paths) ys.push_back(load(p, "--ys"));
    const bool qu = commutator_qu_check(g, xs, ys);
    return emit({{"g_quasi_unipotent", qu}, {"qu_report", to_json(is_quasi_unipotent(g))}}, qu ? kOk : kFalsified);
  }

  RunResult check_cert() {
    if (c_.cert_path.empty()) throw ParseError("missing required option --cert");
    json doc = read_json_file(c_.cert_path);
    if (doc.contains("result") && doc.contains("lkcert_version")) doc = doc["result"];
    const auto problems = check_certificate_json(doc);
    return emit({{"valid", problems.empty()}, {"problems", problems}}, problems.empty() ? kOk : kWitnessed);
  }

  const RunConfig& c_;
};

}  // namespace detail

/// Runs one command. Library errors map onto exit codes: parse and domain
/// errors 2, resource caps 3, a falsified theorem 4.
inline RunResult run(const RunConfig& config) {
  try {
    return detail::Runner(config).run();
  } catch (const ParseError& e) {
    return {kPrecondition, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ResourceError& e) {
    return {kResource, "", std::string("resource error: ") + e.what() + "\n"};
  } catch (const TheoremFalsified& e) {
    return {kFalsified, "", std::string("theorem falsified: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kPrecondition, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace lk::cli
