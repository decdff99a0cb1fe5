// tlkl: enumerate Coxeter groups, compute polynomial tables and run the
// identity suites.
//
// Exit codes: 0 success, 1 identity failure (or route disagreement), 2 usage
// error, 3 projection dichotomy violated on a graph where it is not expected.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tlkl/tables.hpp"
#include "tlkl/verify.hpp"

namespace {

using namespace tlkl;

constexpr int kUsage = 2;

struct Common {
  std::string graph;
  int max_length = -1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--graph", c.graph, "Coxeter graph: A3, B4, D4, E6, F4, H3, I2(5), affA2, custom:[1,3;3,1], ...")
      ->required();
  cmd->add_option("--max-length", c.max_length, "Only elements of length <= N (required for infinite graphs)");
}

CoxeterGraph checked_graph(const Common& c) {
  CoxeterGraph g = CoxeterGraph::parse(c.graph);
  if (c.max_length < 0 && g.classification().kind != GraphKind::Finite)
    throw std::invalid_argument("--max-length is required for " + g.spec() + " (not a recognised finite group)");
  return g;
}

std::string descent_text(const CoxeterGroup& g, Element w, Side side) {
  Word d;
  for (Generator s : g.descents(w, side)) d.push_back(s);
  return d.empty() ? "-" : format_word(d);
}

// Writes to --out when given, else stdout.
template <class F>
void emit(const std::string& out, F&& write) {
  if (out.empty() || out == "-") {
    write(std::cout);
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open " + out + " for writing");
  write(f);
  f.flush();
  if (!f) throw std::runtime_error("error writing " + out);
}

int cmd_enum(const Common& c, const std::string& format, const std::string& out) {
  Engine e(checked_graph(c));
  std::vector<Element> els = e.group.enumerate_up_to(c.max_length);
  std::size_t fc = 0;
  for (Element w : els) fc += e.group.is_fully_commutative(w);
  const std::string size_note = c.max_length < 0 ? "" : " (length <= " + std::to_string(c.max_length) + ")";
  emit(out, [&](std::ostream& os) {
    if (format == "json") {
      nlohmann::ordered_json j;
      j["graph"] = e.group.graph().spec();
      j["max_length"] = c.max_length;
      j["elements"] = els.size();
      j["fully_commutative"] = fc;
      auto& list = j["list"] = nlohmann::ordered_json::array();
      for (Element w : els)
        list.push_back({{"w", e.group.format(w)},
                        {"length", e.group.length(w)},
                        {"fc", e.group.is_fully_commutative(w)},
                        {"left_descents", descent_text(e.group, w, Side::Left)},
                        {"right_descents", descent_text(e.group, w, Side::Right)}});
      os << j.dump(2) << '\n';
    } else if (format == "csv") {
      os << "w,length,fc,left_descents,right_descents\n";
      for (Element w : els)
        os << e.group.format(w) << ',' << e.group.length(w) << ',' << (e.group.is_fully_commutative(w) ? 1 : 0) << ','
           << descent_text(e.group, w, Side::Left) << ',' << descent_text(e.group, w, Side::Right) << '\n';
    } else {
      for (Element w : els)
        os << e.group.format(w) << "\tlength " << e.group.length(w) << '\t'
           << (e.group.is_fully_commutative(w) ? "FC" : "--") << "\tDL " << descent_text(e.group, w, Side::Left)
           << "\tDR " << descent_text(e.group, w, Side::Right) << '\n';
      os << e.group.graph().spec() << ": " << els.size() << " elements, " << fc << " fully commutative" << size_note
         << '\n';
    }
  });
  if (!out.empty() && out != "-")
    std::cout << e.group.graph().spec() << ": " << els.size() << " elements, " << fc << " fully commutative"
              << size_note << '\n';
  return 0;
}

int cmd_poly(const Common& c, const std::string& family, const std::string& x, const std::string& w,
             const std::string& route, const std::string& cache) {
  Engine e(CoxeterGraph::parse(c.graph));
  if (!cache.empty()) load_cache(e, cache);
  Element xe = e.group.parse(x);
  Element we = e.group.parse(w);
  PolyResult r = compute_poly(e, parse_family(family), xe, we, route);
  std::cout << r.poly << "\nroute: " << route_name(r.route) << '\n';
  if (!cache.empty()) save_cache({&e}, cache);
  return 0;
}

std::vector<Family> parse_families(const std::string& text) {
  std::vector<Family> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    if (!part.empty()) out.push_back(parse_family(part));
  }
  return out;
}

int cmd_table(const Common& c, const std::string& family, const std::string& route, const std::string& format,
              const std::string& out, const std::string& cache, unsigned threads) {
  checked_graph(c);
  if (format != "csv" && format != "json") throw std::invalid_argument("--format must be csv or json");
  TableOptions opt;
  opt.max_length = c.max_length;
  opt.families = parse_families(family);
  opt.routes = parse_route_mode(route);
  opt.threads = threads;
  opt.cache_dir = cache;
  TableResult res = compute_table(c.graph, opt);
  emit(out, [&](std::ostream& os) {
    if (format == "json")
      write_json(os, res.rows);
    else
      write_csv(os, res.rows);
  });
  for (const auto& m : res.mismatches) std::cerr << "route mismatch: " << m << '\n';
  return res.mismatches.empty() ? 0 : 1;
}

int cmd_verify(const Common& c, const std::string& suite, unsigned threads, std::uint64_t seed,
               std::size_t max_dump) {
  checked_graph(c);
  VerifyOptions opt;
  opt.max_length = c.max_length;
  opt.threads = threads;
  opt.seed = seed;
  opt.max_dump = max_dump;
  SuiteReport report = run_suite(c.graph, parse_suite(suite), opt);
  std::cout << format_report(report);
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig style polynomials of Hecke and generalized Temperley-Lieb algebras"};
  app.require_subcommand(1);

  Common common;
  std::string format = "text", out, family, x, w, route = "main", cache, suite = "all";
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::size_t max_dump = 10;

  auto* en = app.add_subcommand("enum", "List elements with length, FC flag and descents");
  add_common(en, common);
  en->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  en->add_option("--out", out, "Output file (default: stdout)");

  auto* po = app.add_subcommand("poly", "Print one polynomial and the route used");
  add_common(po, common);
  po->add_option("--family", family, "R, P, D, a or L")->required();
  po->add_option("--x", x, "Word for x, e.g. \"2 3\" or e")->required();
  po->add_option("--w", w, "Word for w")->required();
  po->add_option("--route", route,
                 "main, oracle, or one of recursion, via-kl, closed, ic-solve, oracle-inverse, oracle-hecke, "
                 "oracle-ideal, oracle-solve");
  po->add_option("--cache", cache, "Directory holding R/P cache files");

  auto* ta = app.add_subcommand("table", "Write the (x, w) table of one or more families");
  add_common(ta, common);
  ta->add_option("--family", family, "Comma-separated subset of R,P,D,a,L (may be empty)")->required();
  ta->add_option("--route", route, "main, oracle or both")->check(CLI::IsMember({"main", "oracle", "both"}));
  ta->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  ta->add_option("--out", out, "Output file (default: stdout)");
  ta->add_option("--cache", cache, "Directory holding R/P cache files");
  ta->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1U, 256U));

  auto* ve = app.add_subcommand("verify", "Run an identity suite over all admissible tuples");
  add_common(ve, common);
  ve->add_option("--suite", suite, "r-identities, d-identities, a-identities, l-identities, projection or all")
      ->check(CLI::IsMember({"r-identities", "d-identities", "a-identities", "l-identities", "projection", "all"}));
  ve->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1U, 256U));
  ve->add_option("--seed", seed, "Nonzero: visit elements in a shuffled order");
  ve->add_option("--max-dump", max_dump, "Counterexamples printed per identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  if (ta->parsed() && format == "text") format = "csv";

  try {
    if (en->parsed()) return cmd_enum(common, format, out);
    if (po->parsed()) return cmd_poly(common, family, x, w, route, cache);
    if (ta->parsed()) return cmd_table(common, family, route, format, out, cache, threads);
    if (ve->parsed()) return cmd_verify(common, suite, threads, seed, max_dump);
  } catch (const GateError& e) {
    std::cerr << "gate error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << " (lower --max-length)\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
