#pragma once

// Serialisation of flat antichains.
//
// JSON:  {"n": 9, "levels": [3, 4], "size": 63, "sets": [[1,2,4], ...], "trace": [...]}
//        with sets ordered by cardinality, then colex; "trace" is optional.
// Text:  a header line "n=<n> l=<l>" followed by one set per line, elements
//        ascending and space separated.

#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "flatac/antichain.hpp"
#include "flatac/error.hpp"
#include "flatac/planner.hpp"
#include "flatac/setfam.hpp"

namespace flatac {

struct AntichainDocument {
  FlatAntichain antichain;
  std::optional<ConstructionTrace> trace;
};

namespace detail {

inline nlohmann::ordered_json set_to_json(SubsetMask s) { return s.elements(); }

inline SubsetMask set_from_elements(const std::vector<int>& elems, int n) {
  SubsetMask s;
  for (int e : elems) {
    if (e < 1 || e > n) throw error(errc::bad_family, "element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
    if (s.contains(e)) throw error(errc::bad_family, "repeated element " + std::to_string(e));
    s = s.with(e);
  }
  return s;
}

/// Splits sets into the two levels; sets on other levels are rejected.
inline FlatAntichain antichain_from_sets(int n, int l, const std::vector<SubsetMask>& sets) {
  if (n < 2 || n > max_ground || l < 0 || l + 1 > n) throw error(errc::bad_family, "levels outside [0,n]");
  std::vector<SubsetMask> upper, lower;
  for (SubsetMask s : sets) {
    if (s.size() == l + 1) upper.push_back(s);
    else if (s.size() == l) lower.push_back(s);
    else throw error(errc::bad_family, "set " + to_string(s) + " is not on levels " + std::to_string(l) + "," + std::to_string(l + 1));
  }
  const std::size_t given = sets.size();
  FlatAntichain a(n, l, Family(n, l + 1, std::move(upper)), Family(n, l, std::move(lower)));
  if (static_cast<std::size_t>(a.size()) != given) throw error(errc::bad_family, "duplicate sets");
  return a;
}

}  // namespace detail

inline nlohmann::ordered_json trace_to_json(const ConstructionTrace& trace) {
  auto out = nlohmann::ordered_json::array();
  for (const TraceStep& s : trace.steps) {
    nlohmann::ordered_json j;
    j["rule"] = std::string(to_string(s.kind));
    j["n"] = s.n;
    j["l"] = s.l;
    j["size"] = s.size;
    if (s.kind == rule::star || s.kind == rule::level12) j["t"] = s.t;
    out.push_back(std::move(j));
  }
  return out;
}

inline ConstructionTrace trace_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw error(errc::bad_trace, "trace must be an array");
  ConstructionTrace tr;
  for (const auto& step : j) {
    const auto kind = rule_from_string(step.at("rule").get<std::string>());
    if (!kind) throw error(errc::bad_trace, "unknown rule " + step.at("rule").dump());
    tr.steps.push_back({*kind, step.at("n").get<int>(), step.at("l").get<int>(), step.at("size").get<std::int64_t>(),
                        step.value("t", 0)});
  }
  return tr;
}

inline nlohmann::ordered_json to_json(const FlatAntichain& a, const ConstructionTrace* trace = nullptr) {
  nlohmann::ordered_json j;
  j["n"] = a.n;
  j["levels"] = {a.l, a.l + 1};
  j["size"] = a.size();
  auto sets = nlohmann::ordered_json::array();
  for (SubsetMask s : a.lower) sets.push_back(detail::set_to_json(s));
  for (SubsetMask s : a.upper) sets.push_back(detail::set_to_json(s));
  j["sets"] = std::move(sets);
  if (trace != nullptr) j["trace"] = trace_to_json(*trace);
  return j;
}

/// Parses and validates the shape of a document; maximality is left to the
/// verifier. Throws BadFamily / BadTrace on malformed input.
inline AntichainDocument document_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto levels = j.at("levels").get<std::vector<int>>();
    if (levels.size() != 2 || levels[1] != levels[0] + 1) throw error(errc::bad_family, "levels must be [l, l+1]");
    std::vector<SubsetMask> sets;
    for (const auto& s : j.at("sets")) sets.push_back(detail::set_from_elements(s.get<std::vector<int>>(), n));
    AntichainDocument doc{detail::antichain_from_sets(n, levels[0], sets), std::nullopt};
    if (j.contains("size") && j.at("size").get<std::int64_t>() != doc.antichain.size())
      throw error(errc::bad_family, "size field disagrees with the number of sets");
    if (j.contains("trace")) doc.trace = trace_from_json(j.at("trace"));
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::bad_family, std::string("malformed document: ") + e.what());
  }
}

inline std::string to_text(const FlatAntichain& a) {
  std::ostringstream out;
  out << "n=" << a.n << " l=" << a.l << '\n';
  auto line = [&](SubsetMask s) {
    bool first = true;
    for (int e : s.elements()) {
      out << (first ? "" : " ") << e;
      first = false;
    }
    out << '\n';
  };
  for (SubsetMask s : a.lower) line(s);
  for (SubsetMask s : a.upper) line(s);
  return out.str();
}

inline FlatAntichain from_text(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw error(errc::bad_family, "empty text document");
  int n = 0, l = 0;
  char tail = 0;
  if (std::sscanf(header.c_str(), "n=%d l=%d%c", &n, &l, &tail) != 2)
    throw error(errc::bad_family, "header must read 'n=<n> l=<l>'");
  std::vector<SubsetMask> sets;
  std::string row;
  while (std::getline(in, row)) {
    if (row.find_first_not_of(" \t\r") == std::string::npos) {
      if (l == 0) sets.push_back(SubsetMask{});  // the empty set on level 0
      continue;
    }
    std::istringstream fields(row);
    std::vector<int> elems;
    int e = 0;
    while (fields >> e) elems.push_back(e);
    if (!fields.eof()) throw error(errc::bad_family, "non-numeric entry in line '" + row + "'");
    sets.push_back(detail::set_from_elements(elems, n));
  }
  return detail::antichain_from_sets(n, l, sets);
}

}  // namespace flatac
