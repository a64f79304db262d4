#pragma once

// JSON descriptions of the structures the library works with. Every file
// carries a "kind" ("algebra", "lie-rinehart", "poisson", "prequantum",
// "costratified"); polynomial values are strings in the file's variables,
// matrix entries are integers or scalar strings. An optional "expect": "fail"
// marks descriptions that are supposed to be rejected by verification.

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "builtins.hpp"
#include "costratified.hpp"
#include <nlohmann/json.hpp>
#include "lie_rinehart.hpp"
#include "poisson.hpp"
#include "prequant.hpp"

namespace lira {

using nlohmann::json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open \"" + path + "\"");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError("invalid JSON in \"" + path + "\": " + e.what());
  }
  if (!j.is_object()) throw FormatError("\"" + path + "\" does not hold a JSON object");
  return j;
}

inline std::string kind_of(const json& j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw FormatError("description lacks a string \"kind\" field");
  return j["kind"].get<std::string>();
}

inline bool expect_fail(const json& j) { return j.value("expect", "pass") == "fail"; }

namespace detail_io {

inline std::vector<std::string> string_list(const json& j, const std::string& key,
                                            bool required) {
  if (!j.contains(key)) {
    if (required) throw FormatError("missing \"" + key + "\" list");
    return {};
  }
  if (!j[key].is_array()) throw FormatError("\"" + key + "\" must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j[key]) {
    if (!e.is_string()) throw FormatError("\"" + key + "\" must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

inline std::pair<std::string, std::string> split_pair(const std::string& key, char sep,
                                                      const std::string& what) {
  size_t pos = key.find(sep);
  if (pos == std::string::npos || key.find(sep, pos + 1) != std::string::npos)
    throw FormatError(what + " key \"" + key + "\" must contain exactly one '" + sep + "'");
  return {trim(key.substr(0, pos)), trim(key.substr(pos + 1))};
}

inline Scalar scalar_entry(const json& e, const std::string& what) {
  if (e.is_number_integer()) return Scalar((long long)e.get<int64_t>());
  if (e.is_string()) {
    Poly p = parse_poly(e.get<std::string>(), {}, 0);
    return p.constant_value();
  }
  throw FormatError(what + " entries must be integers or scalar strings");
}

inline Mat mat_entry(const json& e, const std::string& what) {
  if (!e.is_array() || e.empty() || !e[0].is_array())
    throw FormatError(what + " must be a matrix (list of rows)");
  Mat m((int)e.size(), (int)e[0].size());
  for (int r = 0; r < m.rows; ++r) {
    if (!e[(size_t)r].is_array() || (int)e[(size_t)r].size() != m.cols)
      throw FormatError(what + " has rows of unequal length");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = scalar_entry(e[(size_t)r][(size_t)c], what);
  }
  return m;
}

}  // namespace detail_io

inline Algebra load_algebra(const json& j) {
  auto vars = detail_io::string_list(j, "vars", true);
  auto order = detail_io::string_list(j, "order", false);
  auto rels = detail_io::string_list(j, "relations", false);
  return Algebra::presented(vars, order.empty() ? vars : order, rels);
}

inline LieRinehart load_lie_rinehart(const json& j) {
  LieRinehart L;
  L.A = load_algebra(j);
  L.basis = detail_io::string_list(j, "basis", true);
  auto basis_index = [&](const std::string& name) {
    for (size_t k = 0; k < L.basis.size(); ++k)
      if (L.basis[k] == name) return (int)k;
    throw FormatError("unknown basis element \"" + name + "\"");
  };
  for (size_t k = 0; k < L.basis.size(); ++k) L.anchors.push_back(Derivation::zero(L.A));
  if (j.contains("anchor")) {
    if (!j["anchor"].is_object()) throw FormatError("\"anchor\" must map basis names to objects");
    for (const auto& [bname, imgs] : j["anchor"].items()) {
      int b = basis_index(bname);
      if (!imgs.is_object())
        throw FormatError("anchor of \"" + bname + "\" must map variables to polynomials");
      for (const auto& [var, poly] : imgs.items())
        L.anchors[(size_t)b].images[(size_t)L.A.slot(var)] = L.A.parse(poly.get<std::string>());
    }
  }
  if (j.contains("bracket")) {
    if (!j["bracket"].is_object())
      throw FormatError("\"bracket\" must map \"a,b\" pairs to objects");
    for (const auto& [key, val] : j["bracket"].items()) {
      auto [lhs, rhs] = detail_io::split_pair(key, ',', "bracket");
      int a = basis_index(lhs), b = basis_index(rhs);
      if (a == b) throw FormatError("bracket key \"" + key + "\" repeats a basis element");
      if (!val.is_object())
        throw FormatError("bracket \"" + key + "\" must map basis names to coefficients");
      LElement el;
      for (const auto& [bname, poly] : val.items()) {
        Poly c = L.A.normal_form(L.A.parse(poly.get<std::string>()));
        if (!c.is_zero()) el.emplace(basis_index(bname), std::move(c));
      }
      if (a < b) {
        L.table[std::make_pair(a, b)] = std::move(el);
      } else {
        LElement neg;
        for (auto& [bb, c] : el) neg.emplace(bb, -c);
        L.table[std::make_pair(b, a)] = std::move(neg);
      }
    }
  }
  return L;
}

inline Poisson load_poisson(const json& j) {
  Poisson P;
  P.A = load_algebra(j);
  if (!j.contains("poisson") || !j["poisson"].is_object())
    throw FormatError("poisson description needs a \"poisson\" table of generator brackets");
  for (const auto& [key, val] : j["poisson"].items()) {
    auto [lhs, rhs] = detail_io::split_pair(key, ',', "poisson");
    int a = P.A.slot(lhs), b = P.A.slot(rhs);
    if (a == b) throw FormatError("poisson key \"" + key + "\" repeats a variable");
    Poly c = P.A.normal_form(P.A.parse(val.get<std::string>()));
    if (a < b)
      P.table[std::make_pair(a, b)] = std::move(c);
    else
      P.table[std::make_pair(b, a)] = -c;
  }
  if (j.contains("module_rules")) {
    if (!j["module_rules"].is_array()) throw FormatError("\"module_rules\" must be a list");
    for (const auto& rj : j["module_rules"]) {
      ModuleRule rule;
      Poly lead = P.A.parse(rj.at("lead").get<std::string>());
      if (lead.term_count() != 1 || !lead.leading_coeff().is_one())
        throw FormatError("module rule lead must be a single monic monomial");
      rule.lead_mono = lead.leading_mono();
      rule.lead_gen = P.A.slot(rj.at("d").get<std::string>());
      rule.tail = P.zero_diff();
      for (const auto& [var, poly] : rj.at("tail").items())
        rule.tail[(size_t)P.A.slot(var)] = P.A.parse(poly.get<std::string>());
      // Every tail term must be smaller than the lead in the module order
      // (monomial grlex, then generator index), so reduction terminates.
      GrlexLess less;
      for (size_t s = 0; s < rule.tail.size(); ++s)
        for (const auto& [m, c] : rule.tail[s].terms()) {
          bool smaller = less(m, rule.lead_mono) ||
                         (!less(rule.lead_mono, m) && (int)s < rule.lead_gen);
          if (!smaller)
            throw FormatError("module rule tail term is not smaller than its lead");
        }
      P.module_rules.push_back(std::move(rule));
    }
  }
  if (j.contains("involution")) {
    if (!j["involution"].is_object())
      throw FormatError("\"involution\" must map variables to variables");
    P.involution.assign((size_t)P.A.nvars(), -1);
    for (const auto& [from, to] : j["involution"].items())
      P.involution[(size_t)P.A.slot(from)] = P.A.slot(to.get<std::string>());
    std::vector<bool> seen((size_t)P.A.nvars(), false);
    for (int v : P.involution) {
      if (v < 0) throw FormatError("involution must cover every variable");
      seen[(size_t)v] = true;
    }
    for (bool b : seen)
      if (!b) throw FormatError("involution must be a permutation of the variables");
  }
  return P;
}

inline Prequantum load_prequantum(const json& j) {
  Prequantum Q;
  Q.P = load_poisson(j);
  Q.theta = Q.P.zero_diff();
  if (!j.contains("theta") || !j["theta"].is_object())
    throw FormatError("prequantum description needs a \"theta\" one-form");
  for (const auto& [key, poly] : j["theta"].items()) {
    std::string var = key;
    if (!Q.P.A.slots().count(var) && var.size() > 1 && var[0] == 'd') var = var.substr(1);
    Q.theta[(size_t)Q.P.A.slot(var)] = Q.P.A.parse(poly.get<std::string>());
  }
  return Q;
}

inline Costratified load_costratified(const json& j) {
  Costratified C;
  C.strata = detail_io::string_list(j, "strata", true);
  auto idx = [&](const std::string& name) {
    int k = C.index(name);
    if (k < 0) throw FormatError("unknown stratum \"" + name + "\"");
    return k;
  };
  if (!j.contains("order") || !j["order"].is_array())
    throw FormatError("costratified description needs an \"order\" list of [lo, hi] pairs");
  for (const auto& e : j["order"]) {
    if (!e.is_array() || e.size() != 2)
      throw FormatError("\"order\" entries must be [lo, hi] pairs");
    C.order.emplace_back(idx(e[0].get<std::string>()), idx(e[1].get<std::string>()));
  }
  if (!j.contains("dims") || !j["dims"].is_object())
    throw FormatError("costratified description needs a \"dims\" object");
  C.dims.assign(C.strata.size(), -1);
  for (const auto& [name, d] : j["dims"].items()) C.dims[(size_t)idx(name)] = d.get<int>();
  for (int d : C.dims)
    if (d < 0) throw FormatError("every stratum needs a dimension");
  if (j.contains("maps")) {
    if (!j["maps"].is_object())
      throw FormatError("\"maps\" must map \"Hi->Lo\" keys to matrices");
    for (const auto& [key, val] : j["maps"].items()) {
      size_t pos = key.find("->");
      if (pos == std::string::npos) throw FormatError("map key \"" + key + "\" lacks \"->\"");
      int hi = idx(detail_io::trim(key.substr(0, pos)));
      int lo = idx(detail_io::trim(key.substr(pos + 2)));
      C.maps.emplace(std::make_pair(hi, lo), detail_io::mat_entry(val, "map \"" + key + "\""));
    }
  }
  if (j.contains("operators")) {
    const auto& ops = j["operators"];
    if (!ops.is_object() || !ops.contains("labels"))
      throw FormatError("\"operators\" needs a \"labels\" list plus per-stratum matrix lists");
    C.op_labels = detail_io::string_list(ops, "labels", true);
    for (const auto& [name, list] : ops.items()) {
      if (name == "labels") continue;
      int k = idx(name);
      if (!list.is_array()) throw FormatError("operators of \"" + name + "\" must be a list");
      std::vector<Mat> mats;
      for (const auto& e : list)
        mats.push_back(detail_io::mat_entry(e, "operator on \"" + name + "\""));
      C.ops.emplace(k, std::move(mats));
    }
  }
  return C;
}

// Dispatch on kind and run the matching verifier.
inline Report run_verification(const std::string& kind, const json& j, uint32_t deg_bound) {
  if (kind == "algebra") {
    Algebra A = load_algebra(j);
    Report rep;
    rep.check("relation rewrite system is confluent", A.completion().confluent,
              A.completion().message);
    return rep;
  }
  if (kind == "lie-rinehart") return verify_lie_rinehart(load_lie_rinehart(j), deg_bound);
  if (kind == "poisson") {
    Poisson P = load_poisson(j);
    Report rep = verify_poisson(P, deg_bound);
    rep.merge(verify_differentials(P, deg_bound), "differentials");
    return rep;
  }
  if (kind == "extension") {
    Poisson P = load_poisson(j);
    Report rep = verify_poisson(P, deg_bound);
    rep.merge(verify_extension(P, deg_bound), "extension");
    return rep;
  }
  if (kind == "prequantum") {
    Prequantum Q = load_prequantum(j);
    Report rep = verify_poisson(Q.P, deg_bound);
    rep.merge(verify_prequantum(Q, deg_bound), "prequantum");
    return rep;
  }
  if (kind == "costratified") return verify_costratified(load_costratified(j));
  throw FormatError("unknown kind \"" + kind + "\"");
}

}  // namespace lira
