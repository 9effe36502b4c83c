// Copyright (c) 2026 The semibound authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cctype>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semibound/nu.hpp"
#include "semibound/semigroup.hpp"

namespace semibound {

inline std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      Int v = std::stoll(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
        ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer: '" + item + "'");
    }
  }
  if (out.empty()) throw InvalidArgument("empty integer list: '" + text + "'");
  return out;
}

/// Parse the semigroup text format:
///   gen:4,5   gaps:1,2,4   interval:4,5   ordinary:5   gs:q=2,m=5
inline NumericalSemigroup parse_semigroup_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw InvalidArgument(
        "semigroup spec must look like gen:4,5 gaps:1,2,4 interval:4,5 "
        "ordinary:5 or gs:q=2,m=5 (got '" + spec + "')");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "gen") return NumericalSemigroup::from_generators(parse_int_list(rest));
  if (kind == "gaps") return NumericalSemigroup::from_gaps(parse_int_list(rest));
  if (kind == "interval") {
    auto v = parse_int_list(rest);
    if (v.size() != 2) throw InvalidArgument("interval: needs exactly i,j");
    return NumericalSemigroup::from_interval(v[0], v[1]);
  }
  if (kind == "ordinary") {
    auto v = parse_int_list(rest);
    if (v.size() != 1) throw InvalidArgument("ordinary: needs one conductor");
    return NumericalSemigroup::ordinary(v[0]);
  }
  if (kind == "gs") {
    Int q = -1, m = -1;
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw InvalidArgument("gs: expects q=<int>,m=<int>");
      std::string key = item.substr(0, eq);
      Int value;
      try {
        value = std::stoll(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw InvalidArgument("gs: bad integer in '" + item + "'");
      }
      if (key == "q") q = value;
      else if (key == "m") m = value;
      else throw InvalidArgument("gs: unknown key '" + key + "'");
    }
    if (q < 0 || m < 0) throw InvalidArgument("gs: expects q=<int>,m=<int>");
    return NumericalSemigroup::garcia_stichtenoth(q, m);
  }
  throw InvalidArgument("unknown semigroup spec kind '" + kind + "'");
}

/// Canonical JSON form: {"conductor": c, "gaps": [...]}.
inline nlohmann::json semigroup_to_json(const NumericalSemigroup& s) {
  return {{"conductor", s.conductor()}, {"gaps", s.gaps()}};
}

inline NumericalSemigroup semigroup_from_json(const nlohmann::json& j) {
  NumericalSemigroup s =
      NumericalSemigroup::from_gaps(j.at("gaps").get<std::vector<Int>>());
  if (j.contains("conductor") && j.at("conductor").get<Int>() != s.conductor())
    throw InvalidArgument("conductor does not match the gap set");
  return s;
}

/// Display form, e.g. "{0,4,5,8,9,10} u {i >= 12}".
inline std::string member_string(const NumericalSemigroup& s) {
  std::string out = "{";
  for (Int m : s.members_below_conductor()) {
    if (out.size() > 1) out += ',';
    out += std::to_string(m);
  }
  out += "}";
  if (s.is_trivial()) return "N0";
  return out + " u {i >= " + std::to_string(s.conductor()) + "}";
}

/// The (i, lambda_i, nu_i, d_ORD(C_i)) table, one row per index 0..upto.
/// Fixed column widths so the output is byte-stable for golden comparison.
inline void write_nu_table(std::ostream& os, const NumericalSemigroup& s,
                           Int upto) {
  if (upto < 0) throw InvalidArgument("--upto must be non-negative");
  NuProfile prof(s);
  char line[96];
  std::snprintf(line, sizeof line, "%3s %8s %5s %6s\n", "i", "lambda_i",
                "nu_i", "d_ord");
  os << line;
  for (Int i = 0; i <= upto; ++i) {
    std::snprintf(line, sizeof line, "%3lld %8lld %5lld %6lld\n", i,
                  s.lambda(i), prof.value(i), d_ord(prof, i));
    os << line;
  }
}

inline nlohmann::json nu_table_json(const NumericalSemigroup& s, Int upto) {
  if (upto < 0) throw InvalidArgument("--upto must be non-negative");
  NuProfile prof(s);
  nlohmann::json rows = nlohmann::json::array();
  for (Int i = 0; i <= upto; ++i)
    rows.push_back({{"i", i},
                    {"lambda", s.lambda(i)},
                    {"nu", prof.value(i)},
                    {"d_ord", d_ord(prof, i)}});
  return {{"semigroup", semigroup_to_json(s)}, {"rows", rows}};
}

}  // namespace semibound
