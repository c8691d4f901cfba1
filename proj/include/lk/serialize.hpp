#pragma once

// JSON encodings. Rationals are strings "p/q" (or "p"); every index set is
// 1-based. Matrices: {"dim": d, "entries": [[...], ...]}.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lk/comb.hpp"
#include "lk/pipeline.hpp"
#include "lk/qu.hpp"
#include "lk/tracepoly.hpp"

namespace lk {

using json = nlohmann::ordered_json;

inline json to_json(const Rat& v) { return to_string(v); }

inline json to_json(const VecQ& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline json to_json(const UniPoly& p) { return to_json(p.coeffs()); }

inline json to_json(const MatQ& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dim", a.dim()}, {"entries", std::move(rows)}};
}

inline json to_json(const IndexValue& v) {
  if (v.is_bottom()) return "bottom";
  return v.value();
}

inline json to_json(const QuReport& r) {
  json out;
  out["is_quasi_unipotent"] = r.is_quasi_unipotent;
  out["unipotent_order"] = r.unipotent_order ? json(*r.unipotent_order) : json(nullptr);
  out["witness_factor"] = r.witness_factor ? to_json(*r.witness_factor) : json(nullptr);
  return out;
}

inline json to_json(const TracePoly& t) { return {{"k", t.k}, {"coeffs", to_json(t.poly)}}; }

inline json to_json(const HypothesisReport& r) {
  json out;
  out["verdict"] = r.verdict;
  out["checked_k"] = r.checked_k;
  out["b_power"] = r.b_power;
  if (r.witness) {
    const auto& w = *r.witness;
    out["witness"] = {{"k", w.k}, {"n1", w.n1}, {"n2", w.n2}, {"t1", to_string(w.t1)},
                      {"t2", to_string(w.t2)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

/// A certificate document carries its inputs so it can be re-validated alone.
inline json certificate_to_json(const MatQ& a, const MatQ& b, const TriangularizationCertificate& c) {
  return {{"kind", "triangularization"},
          {"A", to_json(a)},
          {"B", to_json(b)},
          {"P", to_json(c.p)},
          {"A_conj", to_json(c.a_conj)},
          {"B_conj", to_json(c.b_conj)},
          {"common_eigenvector", to_json(c.common_eigenvector)},
          {"eigenvalue_A", to_string(c.eigenvalue_a)},
          {"eigenvalue_B", to_string(c.eigenvalue_b)}};
}

inline json chain_to_json(const std::vector<std::size_t>& qs, std::int64_t r,
                          const MinorPositivity& mp) {
  std::vector<std::size_t> p;
  for (auto q : qs) p.push_back(q + static_cast<std::size_t>(r));
  return {{"kind", "chain"},
          {"qs", qs},
          {"r", r},
          {"rows", p},
          {"cols", qs},
          {"det", to_string(mp.det)},
          {"n", mp.cert.n},
          {"chain", mp.cert.chain}};
}

inline json to_json(const MatQ& a, const MatQ& b, const Verdict& v) {
  json out;
  out["status"] = to_string(v.status);
  out["report"] = v.report ? to_json(*v.report) : json(nullptr);
  out["certificate"] = v.cert ? certificate_to_json(a, b, *v.cert) : json(nullptr);
  if (v.precondition) {
    out["precondition"] = {{"kind", to_string(*v.precondition)}, {"message", v.message}};
  } else {
    out["precondition"] = nullptr;
  }
  return out;
}

// ---- parsing ----

inline Rat rat_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return parse_rat(j.dump());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational string or integer, got " + j.dump());
}

inline VecQ vec_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  VecQ out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline MatQ matrix_from_json(const json& j, const std::string& where = "matrix") {
  if (!j.is_object()) throw ParseError(where + ": expected an object with dim and entries");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    throw ParseError(where + ".dim: expected a positive integer");
  const auto dim = j["dim"].get<std::size_t>();
  if (!j.contains("entries") || !j["entries"].is_array())
    throw ParseError(where + ".entries: expected an array of rows");
  const auto& rows = j["entries"];
  if (rows.size() != dim)
    throw ParseError(where + ".entries: expected " + std::to_string(dim) + " rows, got " +
                     std::to_string(rows.size()));
  MatQ out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string row_where = where + ".entries[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != dim)
      throw ParseError(row_where + ": expected " + std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c)
      out(i, c) = rat_from_json(rows[i][c], row_where + "[" + std::to_string(c) + "]");
  }
  return out;
}

/// Parses text, reporting syntax errors with line and column.
inline json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

inline MatQ read_matrix_file(const std::string& path) {
  return matrix_from_json(read_json_file(path), path);
}

/// Re-validates a serialized triangularization or chain certificate. Returns
/// the violated invariants (empty when valid).
inline std::vector<std::string> check_certificate_json(const json& doc) {
  const json* cert = &doc;
  if (doc.contains("certificate")) {
    if (doc["certificate"].is_null()) return {"document carries no certificate"};
    cert = &doc["certificate"];
  }
  if (!cert->is_object() || !cert->contains("kind"))
    throw ParseError("certificate: missing \"kind\"");
  const std::string kind = (*cert)["kind"].get<std::string>();
  if (kind == "triangularization") {
    const MatQ a = matrix_from_json((*cert)["A"], "certificate.A");
    const MatQ b = matrix_from_json((*cert)["B"], "certificate.B");
    TriangularizationCertificate c;
    c.p = matrix_from_json((*cert)["P"], "certificate.P");
    c.a_conj = matrix_from_json((*cert)["A_conj"], "certificate.A_conj");
    c.b_conj = matrix_from_json((*cert)["B_conj"], "certificate.B_conj");
    c.common_eigenvector = vec_from_json((*cert)["common_eigenvector"], "certificate.common_eigenvector");
    c.eigenvalue_a = rat_from_json((*cert)["eigenvalue_A"], "certificate.eigenvalue_A");
    c.eigenvalue_b = rat_from_json((*cert)["eigenvalue_B"], "certificate.eigenvalue_B");
    return certificate_problems(a, b, c);
  }
  if (kind == "chain") {
    ChainCertificate c;
    std::vector<std::size_t> rows, cols;
    try {
      c.n = (*cert)["n"].get<std::size_t>();
      c.chain = (*cert)["chain"].get<std::vector<std::vector<std::size_t>>>();
      rows = (*cert)["rows"].get<std::vector<std::size_t>>();
      cols = (*cert)["cols"].get<std::vector<std::size_t>>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("certificate: ") + e.what());
    }
    std::vector<std::string> problems;
    if (!verify_chain_certificate(c, rows, cols)) problems.emplace_back("chain certificate does not verify");
    if (cert->contains("det") && c.n >= 1 && rows.size() == cols.size() && !rows.empty()) {
      try {
        if (minor_det(pascal_L(c.n), {rows, cols}) != rat_from_json((*cert)["det"], "certificate.det"))
          problems.emplace_back("recorded det differs from recomputed minor");
      } catch (const DomainError& e) {
        problems.emplace_back(e.what());
      }
    }
    return problems;
  }
  throw ParseError("certificate: unknown kind '" + kind + "'");
}

}  // namespace lk
