#pragma once

// JSON forms:
//   IndexSet            [1,3]
//   AdmissiblePair      {"top":[..],"bot":[..]}
//   StandardTableau     {"pairs":[..]}
//   StandardMonomial    {"words":[[..],..]}
//   Cell                [row,col]
//   Monomial            {"v":[..],"d":n,"cells":[[r,c],..]}
//   NotchedTableauPair  {"P":[[..],..],"Q":[[..],..]}
// Index sets carry no ambient size on the wire; readers take it from context.

#include <string>
#include <vector>

#include "json.hpp"
#include "sympbrsk/brsk.hpp"
#include "sympbrsk/core_order.hpp"
#include "sympbrsk/grid.hpp"
#include "sympbrsk/peel.hpp"

namespace sympbrsk {

using json = nlohmann::ordered_json;

inline json to_json(const IndexSet& x) { return json(x.vec()); }

inline json to_json(const AdmissiblePair& p) {
  return json{{"top", to_json(p.top)}, {"bot", to_json(p.bot)}};
}

inline json to_json(const StandardTableau& t) {
  json pairs = json::array();
  for (const auto& p : t.pairs) pairs.push_back(to_json(p));
  return json{{"pairs", pairs}};
}

inline json to_json(const StandardMonomial& m) {
  json words = json::array();
  for (const auto& w : m.words) words.push_back(to_json(w));
  return json{{"words", words}};
}

inline json to_json(Cell c) { return json::array({c.row, c.col}); }

inline json cells_to_json(std::span<const Cell> cells) {
  json out = json::array();
  for (Cell c : cells) out.push_back(to_json(c));
  return out;
}

inline json to_json(const Monomial& m) {
  return json{{"v", to_json(m.v())}, {"d", m.d()}, {"cells", cells_to_json(m.cells())}};
}

inline json to_json(const NotchedTableauPair& t) { return json{{"P", t.P}, {"Q", t.Q}}; }

inline json to_json(const PeelTrace& trace) {
  json words = json::array();
  json distinguished = json::array();
  for (const auto& s : trace.steps) {
    words.push_back(to_json(s.w));
    distinguished.push_back(cells_to_json(s.distinguished));
  }
  return json{{"words", words}, {"distinguished", distinguished}};
}

namespace detail {

template <class F>
auto parse_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

inline const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("JSON object lacks \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

inline IndexSet index_set_from_json(const json& j, int ambient) {
  return detail::parse_guard("index set", [&] {
    if (!j.is_array()) throw InvalidInput("index set must be a JSON array");
    return IndexSet(j.get<std::vector<int>>(), ambient);
  });
}

inline AdmissiblePair pair_from_json(const json& j, int d) {
  return make_admissible_pair(index_set_from_json(detail::member(j, "top"), 2 * d),
                              index_set_from_json(detail::member(j, "bot"), 2 * d), d);
}

inline StandardTableau tableau_from_json(const json& j, int d) {
  const json& pairs = detail::member(j, "pairs");
  if (!pairs.is_array()) throw InvalidInput("\"pairs\" must be an array");
  StandardTableau t;
  for (const auto& p : pairs) t.pairs.push_back(pair_from_json(p, d));
  return t;
}

inline StandardMonomial standard_monomial_from_json(const json& j, int ambient) {
  const json& words = detail::member(j, "words");
  if (!words.is_array()) throw InvalidInput("\"words\" must be an array");
  StandardMonomial m;
  for (const auto& w : words) m.words.push_back(index_set_from_json(w, ambient));
  return m;
}

inline std::vector<Cell> cells_from_json(const json& j) {
  return detail::parse_guard("cell list", [&] {
    if (!j.is_array()) throw InvalidInput("cell list must be a JSON array");
    std::vector<Cell> cells;
    for (const auto& c : j) {
      if (!c.is_array() || c.size() != 2) throw InvalidInput("cell must be [row, col]");
      cells.push_back(Cell{c[0].get<int>(), c[1].get<int>()});
    }
    return cells;
  });
}

/// Accepts a bare cell list (v supplied by the caller) or the full object
/// form, in which case its "v" must agree with `v` when one is given.
inline Monomial monomial_from_json(const json& j, const IndexSet* v) {
  if (j.is_array()) {
    if (!v) throw InvalidInput("bare cell list needs v");
    return Monomial(*v, cells_from_json(j));
  }
  const json& jd = detail::member(j, "d");
  const int d = detail::parse_guard("monomial", [&] { return jd.get<int>(); });
  if (d <= 0) throw InvalidInput("monomial d must be positive");
  IndexSet mv = index_set_from_json(detail::member(j, "v"), 2 * d);
  if (v && *v != mv) throw InvalidInput("monomial v disagrees with --v");
  return Monomial(std::move(mv), cells_from_json(detail::member(j, "cells")));
}

inline NotchedTableauPair tableau_pair_from_json(const json& j) {
  return detail::parse_guard("tableau pair", [&] {
    NotchedTableauPair t;
    t.P = detail::member(j, "P").get<std::vector<std::vector<int>>>();
    t.Q = detail::member(j, "Q").get<std::vector<std::vector<int>>>();
    return t;
  });
}

}  // namespace sympbrsk
