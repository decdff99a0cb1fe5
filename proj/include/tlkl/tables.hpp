#pragma once

// Single polynomials by a named route, full-table export (CSV/JSON) and the
// on-disk R/P cache.

#include <iosfwd>
#include <string>
#include <vector>

#include "tlkl/engine.hpp"

namespace tlkl {

struct PolyResult {
  LaurentPoly poly;
  Route route;
};

/// `route` is "main", "oracle" or a route name (recursion, via-kl, closed,
/// ic-solve, oracle-inverse, oracle-hecke, oracle-ideal, oracle-solve).
/// Throws std::invalid_argument for inadmissible labels or a route the family
/// does not have, GateError for a closed route on a gated graph.
PolyResult compute_poly(Engine& e, Family family, Element x, Element w, std::string_view route = "main");

enum class RouteMode { Main, Oracle, Both };
RouteMode parse_route_mode(std::string_view s);

struct TableRow {
  Family family;
  std::size_t w_order = 0;
  std::size_t x_order = 0;
  std::string graph, x, w, poly, route;
};

struct TableOptions {
  int max_length = -1;
  std::vector<Family> families;
  RouteMode routes = RouteMode::Main;
  unsigned threads = 1;
  std::string cache_dir;  // empty: no cache
  std::size_t element_cap = CoxeterGroup::kDefaultElementCap;
};

struct TableResult {
  std::vector<TableRow> rows;
  /// RouteMode::Both only: cells where main and oracle disagree.
  std::vector<std::string> mismatches;
  std::size_t cache_loaded = 0;
  std::size_t cache_saved = 0;
};

/// Rows ordered by family (R, P, D, a, L), then w by length and ShortLex,
/// then x by ShortLex; main before oracle. Zero entries are omitted.
TableResult compute_table(const std::string& graph_spec, const TableOptions& options);

void write_csv(std::ostream& os, const std::vector<TableRow>& rows);
void write_json(std::ostream& os, const std::vector<TableRow>& rows);

/// Cache file for a graph inside `dir`.
std::string cache_path(const std::string& dir, const std::string& graph_spec);
/// Loads cached R and P entries into e.hecke; returns the number loaded.
std::size_t load_cache(Engine& e, const std::string& dir);
/// Writes every R and P entry memoised by the engines (merged, sorted).
std::size_t save_cache(const std::vector<Engine*>& engines, const std::string& dir);

}  // namespace tlkl
