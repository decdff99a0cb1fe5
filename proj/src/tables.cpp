#include "tlkl/tables.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"

namespace tlkl {

namespace {

void require_fc(const CoxeterGroup& g, Element x, const char* what) {
  if (!g.is_fully_commutative(x))
    throw std::invalid_argument(std::string(what) + " must be fully commutative, got " + g.format(x));
}

[[noreturn]] void no_route(Family f, std::string_view route) {
  throw std::invalid_argument("family " + family_name(f) + " has no route '" + std::string(route) + "'");
}

}  // namespace

PolyResult compute_poly(Engine& e, Family family, Element x, Element w, std::string_view route) {
  auto& g = e.group;
  const bool main = route == "main";
  const bool oracle = route == "oracle";
  switch (family) {
    case Family::R:
      if (main || route == "recursion") return {e.hecke.r_poly(x, w), Route::Recursion};
      if (oracle || route == "oracle-inverse") return {e.oracle.r_poly(x, w), Route::OracleInverse};
      no_route(family, route);
    case Family::P:
      if (main || route == "recursion") return {e.hecke.kl_poly(x, w), Route::Recursion};
      if (oracle || route == "oracle-solve") return {e.oracle.kl_poly(x, w), Route::OracleSolve};
      no_route(family, route);
    case Family::D:
      require_fc(g, x, "x");
      if (main || route == "recursion") return {e.tl.d_poly_rec(x, w), Route::Recursion};
      if (route == "via-kl") return {e.tl.d_poly_via_kl(x, w), Route::ViaKl};
      if (oracle || route == "oracle-ideal") return {e.oracle.d_poly_ideal(x, w), Route::OracleIdeal};
      no_route(family, route);
    case Family::a:
      require_fc(g, x, "x");
      require_fc(g, w, "w");
      if (main || route == "recursion") return {e.tl.a_poly_rec(x, w), Route::Recursion};
      if (route == "closed") return {e.tl.a_poly_closed(x, w), Route::Closed};
      if (oracle || route == "oracle-inverse") return {e.oracle.a_via_inverse(x, w), Route::OracleInverse};
      if (route == "oracle-hecke") return {e.oracle.oracle_a_via_hecke(x, w), Route::OracleHecke};
      no_route(family, route);
    case Family::L:
      require_fc(g, x, "x");
      require_fc(g, w, "w");
      if (main) return {e.tl.l_poly(x, w), e.tl.l_route()};
      if (route == "closed") return {e.tl.l_poly_closed(x, w), Route::Closed};
      if (route == "ic-solve") return {column_value(e.tl.l_poly_ic_solve(w), x), Route::IcSolve};
      if (oracle || route == "oracle-solve") return {column_value(e.oracle.oracle_ic_solve(w), x), Route::OracleSolve};
      no_route(family, route);
  }
  no_route(family, route);
}

RouteMode parse_route_mode(std::string_view s) {
  if (s == "main") return RouteMode::Main;
  if (s == "oracle") return RouteMode::Oracle;
  if (s == "both") return RouteMode::Both;
  throw std::invalid_argument("unknown route mode '" + std::string(s) + "' (expected main, oracle or both)");
}

// ---------------------------------------------------------------------------
// Tables

namespace {

struct Worker {
  std::unique_ptr<Engine> engine;
  std::vector<TableRow> rows;
  std::vector<std::string> mismatches;
  std::size_t cache_loaded = 0;
  std::string error;
};

void table_worker(const std::string& spec, const TableOptions& opt, const std::vector<Family>& families,
                  unsigned index, unsigned stride, Worker& out) {
  try {
    out.engine = std::make_unique<Engine>(spec, DescentPolicy::Smallest, opt.element_cap);
    Engine& e = *out.engine;
    if (!opt.cache_dir.empty()) out.cache_loaded = load_cache(e, opt.cache_dir);
    const std::vector<Element> elements = e.group.enumerate_up_to(opt.max_length);
    const std::string graph = e.group.graph().spec();
    for (Family f : families) {
      for (std::size_t i = index; i < elements.size(); i += stride) {
        const Element w = elements[i];
        const bool fc_family = f == Family::a || f == Family::L;
        if (fc_family && !e.group.is_fully_commutative(w)) continue;
        const std::vector<Element> xs = f == Family::R || f == Family::P ? e.group.lower_interval(w) : e.tl.fc_below(w);
        for (std::size_t k = 0; k < xs.size(); ++k) {
          const Element x = xs[k];
          std::optional<PolyResult> main, oracle;
          if (opt.routes != RouteMode::Oracle) main = compute_poly(e, f, x, w, "main");
          if (opt.routes != RouteMode::Main) oracle = compute_poly(e, f, x, w, "oracle");
          if (main && oracle && main->poly != oracle->poly)
            out.mismatches.push_back(family_name(f) + " x=" + e.group.format(x) + " w=" + e.group.format(w) + ": " +
                                     main->poly.to_string() + " (" + route_name(main->route) + ") vs " +
                                     oracle->poly.to_string() + " (" + route_name(oracle->route) + ")");
          for (const auto* r : {main ? &*main : nullptr, oracle ? &*oracle : nullptr}) {
            if (!r || r->poly.is_zero()) continue;
            out.rows.push_back({f, i, k, graph, e.group.format(x), e.group.format(w), r->poly.to_string(),
                                route_name(r->route)});
          }
        }
      }
    }
  } catch (const std::exception& ex) {
    out.error = ex.what();
  }
}

}  // namespace

TableResult compute_table(const std::string& graph_spec, const TableOptions& options) {
  std::vector<Family> families = options.families;
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());

  const unsigned threads = std::max(1U, options.threads);
  std::vector<Worker> workers(threads);
  if (threads == 1) {
    table_worker(graph_spec, options, families, 0, 1, workers[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(table_worker, std::cref(graph_spec), std::cref(options), std::cref(families), t, threads,
                        std::ref(workers[t]));
    for (auto& th : pool) th.join();
  }
  for (const auto& w : workers)
    if (!w.error.empty()) throw std::runtime_error(w.error);

  TableResult result;
  for (auto& w : workers) {
    result.rows.insert(result.rows.end(), w.rows.begin(), w.rows.end());
    result.mismatches.insert(result.mismatches.end(), w.mismatches.begin(), w.mismatches.end());
  }
  result.cache_loaded = workers[0].cache_loaded;
  // Stable: within a cell the main row precedes the oracle row.
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const TableRow& a, const TableRow& b) {
    return std::tie(a.family, a.w_order, a.x_order) < std::tie(b.family, b.w_order, b.x_order);
  });
  std::sort(result.mismatches.begin(), result.mismatches.end());
  if (!options.cache_dir.empty()) {
    std::vector<Engine*> engines;
    for (auto& w : workers) engines.push_back(w.engine.get());
    result.cache_saved = save_cache(engines, options.cache_dir);
  }
  return result;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "family,graph,x,w,poly,route\n";
  for (const auto& r : rows)
    os << family_name(r.family) << ',' << csv_field(r.graph) << ',' << csv_field(r.x) << ',' << csv_field(r.w) << ','
       << csv_field(r.poly) << ',' << r.route << '\n';
}

void write_json(std::ostream& os, const std::vector<TableRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["family"] = family_name(r.family);
    o["graph"] = r.graph;
    o["x"] = r.x;
    o["w"] = r.w;
    o["poly"] = r.poly;
    o["route"] = r.route;
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Cache

std::string cache_path(const std::string& dir, const std::string& graph_spec) {
  std::string name;
  for (char c : graph_spec) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return (std::filesystem::path(dir) / (name + ".tsv")).string();
}

std::size_t load_cache(Engine& e, const std::string& dir) {
  const std::string spec = e.group.graph().spec();
  const std::string path = cache_path(dir, spec);
  std::ifstream in(path);
  if (!in) return 0;
  std::size_t loaded = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string part; std::getline(ss, part, '\t');) f.push_back(part);
    try {
      if (f.size() != 5) throw std::invalid_argument("expected 5 tab-separated fields");
      if (f[1] != spec) throw std::invalid_argument("graph '" + f[1] + "' does not match " + spec);
      Family fam = parse_family(f[0]);
      if (fam != Family::R && fam != Family::P) throw std::invalid_argument("only R and P are cached");
      e.hecke.table(fam).put(e.group.parse(f[2]), e.group.parse(f[3]), LaurentPoly::parse(f[4]), Route::Cache);
      ++loaded;
    } catch (const std::invalid_argument& ex) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + ex.what());
    }
  }
  return loaded;
}

std::size_t save_cache(const std::vector<Engine*>& engines, const std::string& dir) {
  if (engines.empty() || !engines.front()) return 0;
  const std::string spec = engines.front()->group.graph().spec();
  // (family, w length, w word, x length, x word) -> poly
  std::map<std::tuple<Family, std::size_t, Word, std::size_t, Word>, std::string> entries;
  for (Engine* e : engines) {
    if (!e) continue;
    for (Family fam : {Family::R, Family::P}) {
      e->hecke.table(fam).for_each([&](Element x, Element w, const PolyTable::Entry& entry) {
        const Word& ww = e->group.word(w);
        const Word& xw = e->group.word(x);
        entries.emplace(std::make_tuple(fam, ww.size(), ww, xw.size(), xw), entry.poly.to_string());
      });
    }
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir + ": " + ec.message());
  const std::string path = cache_path(dir, spec);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << "# family\tgraph\tx\tw\tpoly\n";
    for (const auto& [key, poly] : entries)
      out << family_name(std::get<0>(key)) << '\t' << spec << '\t' << format_word(std::get<4>(key)) << '\t'
          << format_word(std::get<2>(key)) << '\t' << poly << '\n';
    if (!out) throw std::runtime_error("error writing cache file " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot move " + tmp + " to " + path + ": " + ec.message());
  return entries.size();
}

}  // namespace tlkl
