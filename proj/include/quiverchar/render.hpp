#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "quiverchar/characters.hpp"
#include "quiverchar/diagrams.hpp"

namespace quiverchar {

using json = nlohmann::ordered_json;

/// Exponent-vector key "[e1,e2,...]" used by the JSON term maps.
inline std::string expo_key(const std::vector<int>& e) {
  std::string s = "[";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "]";
}

/// Expanded monomial terms of a q-free symmetric polynomial as a JSON map.
inline json sympoly_terms_json(const SymPoly& p) {
  json terms = json::object();
  MPoly m = p.expand();
  for (const auto& [e, q] : m.terms()) {
    if (q.degree() > 0)
      throw std::invalid_argument("sympoly_terms_json: coefficient carries q");
    mpz_class c = q.coeff(0);
    if (c.fits_slong_p())
      terms[expo_key(e)] = c.get_si();
    else
      terms[expo_key(e)] = c.get_str();
  }
  return terms;
}

inline std::string sympoly_terms_text(const SymPoly& p) {
  MPoly m = p.expand();
  if (m.is_zero()) return "0";
  std::string s;
  for (const auto& [e, q] : m.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + q.str() + ")*a^" + expo_key(e);
  }
  return s;
}

inline json character_json(const ModelParams& p, int qmax,
                           const SymSeries& ch) {
  json out;
  out["params"] = {{"N", p.N}, {"n", p.n}, {"k", p.k}, {"qmax", qmax}};
  json coeffs = json::array();
  for (int d = 0; d <= qmax; ++d)
    coeffs.push_back(
        {{"q", d}, {"terms", sympoly_terms_json(ch.coeffs[static_cast<size_t>(d)])}});
  out["coeffs"] = coeffs;
  return out;
}

inline json weightrow_json(const WeightRow& row) {
  json r;
  r["entries"] = row.entries;
  if (row.tail)
    r["tail"] = {{"n", row.tail->n}, {"k", row.tail->k}, {"r", row.tail->r}};
  else
    r["tail"] = nullptr;
  return r;
}

inline json pattern_json(const GTPattern& p) {
  json rows = json::array();
  for (const auto& row : p.rows) rows.push_back(row.entries);
  json out;
  out["rows"] = rows;
  if (p.semi_infinite()) {
    const Tail& t = *p.rows.front().tail;
    out["tail"] = {{"n", t.n}, {"k", t.k}, {"r", t.r}};
  } else {
    out["tail"] = nullptr;
  }
  return out;
}

inline std::string pattern_text(const GTPattern& p) {
  std::string s;
  for (const auto& row : p.rows) {
    s += "(";
    for (size_t i = 0; i < row.entries.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(row.entries[i]);
    }
    if (row.tail)
      s += (row.entries.empty() ? "" : ",") + std::string("...r=") +
           std::to_string(row.tail->r);
    s += ")";
  }
  return s;
}

}  // namespace quiverchar
