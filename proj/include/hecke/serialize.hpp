#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/ext.hpp"
#include "hecke/h_module.hpp"
#include "hecke/ht_module.hpp"
#include "hecke/theorem.hpp"

namespace hecke::io {

using json = nlohmann::ordered_json;

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json to_json(const FpMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline FpMatrix matrix_from_json(const json& j, std::size_t dim, std::uint32_t p, const char* name) {
  if (!j.is_array() || j.size() != dim) throw parse_error(std::string(name) + ": expected " + std::to_string(dim) + " rows");
  FpMatrix m(dim, dim, p);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != dim) throw parse_error(std::string(name) + ": row " + std::to_string(i) + " has wrong length");
    for (std::size_t c = 0; c < dim; ++c) {
      if (!row[c].is_number_integer()) throw parse_error(std::string(name) + ": non-integer entry");
      m.set(i, c, row[c].get<std::int64_t>());
    }
  }
  return m;
}

inline json to_json(const HModule& m) {
  json j;
  j["p"] = m.modulus();
  j["dim"] = m.dim();
  j["S0"] = to_json(m.s0);
  j["S1"] = to_json(m.s1);
  j["G"] = to_json(m.g);
  return j;
}

inline json to_json(const HTModule& m) {
  json j;
  j["p"] = m.modulus();
  j["dim"] = m.dim();
  j["X"] = to_json(m.x());
  j["G"] = to_json(m.g());
  return j;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::int64_t parse_int(const std::string& s, const std::string& context) {
  std::int64_t v = 0;
  const auto t = trim(s);
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last) throw parse_error("not an integer: '" + s + "' in '" + context + "'");
  return v;
}

inline std::pair<std::uint32_t, std::size_t> header(const json& j) {
  if (!j.is_object()) throw parse_error("module record must be a JSON object");
  for (const char* key : {"p", "dim"}) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) throw parse_error(std::string("missing or invalid field '") + key + "'");
  }
  const auto p = j["p"].get<std::uint32_t>();
  require_supported_prime(p);
  return {p, j["dim"].get<std::size_t>()};
}

}  // namespace detail

/// Parses an H-module record. Relations are not checked here.
inline HModule hmodule_from_json(const json& j) {
  const auto [p, dim] = detail::header(j);
  for (const char* key : {"S0", "S1", "G"}) {
    if (!j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
  }
  return {matrix_from_json(j["S0"], dim, p, "S0"), matrix_from_json(j["S1"], dim, p, "S1"),
          matrix_from_json(j["G"], dim, p, "G")};
}

inline HTModule htmodule_from_json(const json& j) {
  const auto [p, dim] = detail::header(j);
  for (const char* key : {"X", "G"}) {
    if (!j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
  }
  return {matrix_from_json(j["X"], dim, p, "X"), matrix_from_json(j["G"], dim, p, "G")};
}

inline json to_json(const ExtTable& t) {
  json j = json::object();
  for (const auto& [n, d] : t) j[std::to_string(n)] = d;
  return j;
}

inline json to_json(const CharMultiset& c) {
  json arr = json::array();
  for (const auto& [chi, m] : c.terms) arr.push_back({chi.u.value, chi.e, m, c.uniserial ? 1 : 0});
  return arr;
}

inline json to_json(const ConstraintRow& r) {
  json j;
  j["id"] = r.id;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["pass"] = r.pass;
  return j;
}

inline json to_json(const TheoremResult& res) {
  json j;
  j["class"] = to_string(res.rep.cls);
  j["p"] = res.p;
  if (res.rep.chi) {
    j["chi"] = {res.rep.chi->u.value, res.rep.chi->e};
  } else {
    j["chi"] = nullptr;
  }
  json table = json::object();
  for (const auto& [n, c] : res.table) table[std::to_string(n)] = to_json(c);
  j["table"] = std::move(table);
  json rows = json::array();
  for (const auto& r : res.report.rows) rows.push_back(to_json(r));
  j["constraints"] = std::move(rows);
  j["verdict"] = res.verdict();
  return j;
}

inline json to_json(const std::vector<TheoremResult>& all) {
  json j;
  json reports = json::array();
  bool ok = true;
  for (const auto& r : all) {
    reports.push_back(to_json(r));
    ok = ok && r.verdict();
  }
  j["reports"] = std::move(reports);
  j["verdict"] = ok;
  return j;
}

/// "u,e" -> character at p.
inline SmoothCharacter parse_character(const std::string& text, std::uint32_t p) {
  const auto parts = detail::split(text, ',');
  if (parts.size() != 2) throw parse_error("character spec '" + text + "' must be u,e");
  const auto u = detail::parse_int(parts[0], text);
  const auto e = detail::parse_int(parts[1], text);
  if (u < 1 || u >= static_cast<std::int64_t>(p)) throw parse_error("u must satisfy 1 <= u < p in '" + text + "'");
  if (e < 0 || e >= static_cast<std::int64_t>(p) - 1) throw parse_error("e must satisfy 0 <= e < p-1 in '" + text + "'");
  return {p, u, e};
}

/// Sum of terms joined by '+': "u,e", "u,e*m" (multiplicity) or
/// "chain:u,e,r" (uniserial, length r; must be the only term).
inline CharMultiset parse_multiset(const std::string& text, std::uint32_t p) {
  if (text == "0") return {};
  CharMultiset out;
  const auto terms = detail::split(text, '+');
  for (const auto& raw : terms) {
    const std::string t = detail::trim(raw);
    if (t.rfind("chain:", 0) == 0) {
      if (terms.size() != 1) throw parse_error("a chain cannot be summed with other terms: '" + text + "'");
      const auto parts = detail::split(t.substr(6), ',');
      if (parts.size() != 3) throw parse_error("chain spec '" + t + "' must be chain:u,e,r");
      const auto r = detail::parse_int(parts[2], t);
      if (r < 1) throw parse_error("chain length must be positive in '" + t + "'");
      return CharMultiset::chain(parse_character(parts[0] + "," + parts[1], p), static_cast<std::size_t>(r));
    }
    std::int64_t mult = 1;
    std::string body = t;
    if (const auto star = t.find('*'); star != std::string::npos) {
      mult = detail::parse_int(t.substr(star + 1), t);
      body = t.substr(0, star);
      if (mult < 1) throw parse_error("multiplicity must be positive in '" + t + "'");
    }
    out.add(parse_character(body, p), static_cast<std::size_t>(mult));
  }
  return out;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hecke::io
