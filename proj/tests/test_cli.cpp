#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "cli_run.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string l; std::getline(ss, l);) out.push_back(l);
  return out;
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("tlkl_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("enum") {
  auto r = run_cli("enum --graph A3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "A3: 24 elements, 14 fully commutative"));
  CHECK(contains(run_cli("enum --graph B3").out, "B3: 48 elements, 24 fully commutative"));
  CHECK(contains(run_cli("enum --graph 'I2(5)'").out, "I2(5): 10 elements, 9 fully commutative"));
  auto csv = run_cli("enum --graph A2 --format csv");
  CHECK(lines(csv.out).size() == 7);
  CHECK(lines(csv.out)[0] == "w,length,fc,left_descents,right_descents");
  CHECK(contains(csv.out, "1 2 1,3,0,1 2,1 2"));
  auto js = nlohmann::json::parse(run_cli("enum --graph A2 --format json").out);
  CHECK(js["elements"] == 6);
  CHECK(js["fully_commutative"] == 5);
  auto aff = run_cli("enum --graph affA2 --max-length 2");
  CHECK(aff.code == 0);
  CHECK(contains(aff.out, "10 elements"));
}

TEST_CASE("poly") {
  auto a = run_cli("poly --graph A4 --family a --x '2 3' --w '2 3 1 2'");
  CHECK(a.code == 0);
  CHECK(lines(a.out).at(0) == "-q + q^2");
  auto l = run_cli("poly --graph A2 --family L --x e --w '1 2'");
  CHECK(lines(l.out).at(0) == "q^(-1)");
  CHECK(lines(l.out).at(1) == "route: closed");
  CHECK(lines(run_cli("poly --graph B3 --family R --x '1 2' --w '1 2'").out).at(0) == "1");
  CHECK(lines(run_cli("poly --graph A2 --family D --x 1,2 --w 2,1,2 --route oracle").out).at(0) == "-1");
  auto ic = run_cli("poly --graph D4 --family L --x e --w '1 2'");
  CHECK(ic.code == 0);
  CHECK(lines(ic.out).at(1) == "route: ic-solve");
}

TEST_CASE("errors map to exit codes") {
  auto gate = run_cli("poly --graph D4 --family L --x e --w '1 2' --route closed", true);
  CHECK(gate.code == 2);
  CHECK(contains(gate.out, "gate error"));
  CHECK(run_cli("enum --graph Q3").code == 2);
  CHECK(run_cli("enum --graph affA2").code == 2);
  CHECK(run_cli("poly --graph A2 --family a --x e --w '1 2 1'").code == 2);
  CHECK(run_cli("poly --graph A2 --family Z --x e --w e").code == 2);
  CHECK(run_cli("table --graph A2 --family D --out /nonexistent/dir/t.csv").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("").code == 2);
}

TEST_CASE("table") {
  auto d = run_cli("table --graph A2 --family D");
  REQUIRE(d.code == 0);
  std::vector<std::string> w0_rows;
  for (const auto& l : lines(d.out))
    if (contains(l, ",1 2 1,")) w0_rows.push_back(l);
  CHECK(w0_rows.size() == 5);
  for (const auto& l : w0_rows) CHECK(l.substr(l.size() - 13) == ",-1,recursion");

  auto both = run_cli("table --graph 'I2(4)' --family L --route both");
  CHECK(both.code == 0);
  std::size_t main = 0, oracle = 0;
  for (const auto& l : lines(both.out)) {
    main += contains(l, ",closed");
    oracle += contains(l, ",oracle-solve");
  }
  CHECK(main > 0);
  CHECK(main == oracle);

  const fs::path dir = scratch("empty");
  auto empty = run_cli("table --graph A2 --max-length 0 --family '' --out " + (dir / "t.csv").string());
  CHECK(empty.code == 0);
  CHECK(slurp(dir / "t.csv") == "family,graph,x,w,poly,route\n");
}

TEST_CASE("JSON mirrors CSV") {
  auto csv = lines(run_cli("table --graph A3 --family P,a").out);
  auto js = nlohmann::json::parse(run_cli("table --graph A3 --family P,a --format json").out);
  REQUIRE(js.size() + 1 == csv.size());
  for (std::size_t i = 0; i < js.size(); ++i) {
    const auto& o = js[i];
    const std::string row = o["family"].get<std::string>() + "," + o["graph"].get<std::string>() + "," +
                            o["x"].get<std::string>() + "," + o["w"].get<std::string>() + "," +
                            o["poly"].get<std::string>() + "," + o["route"].get<std::string>();
    CHECK(row == csv[i + 1]);
  }
}

TEST_CASE("determinism") {
  const fs::path dir = scratch("det");
  const std::string base = "table --graph B3 --family R,P,D,a,L --route both";
  REQUIRE(run_cli(base + " --out " + (dir / "a.csv").string()).code == 0);
  REQUIRE(run_cli(base + " --out " + (dir / "b.csv").string()).code == 0);
  REQUIRE(run_cli(base + " --threads 3 --out " + (dir / "c.csv").string()).code == 0);
  const std::string a = slurp(dir / "a.csv");
  CHECK(a.size() > 1000);
  CHECK(a == slurp(dir / "b.csv"));
  auto la = lines(a), lc = lines(slurp(dir / "c.csv"));
  std::sort(la.begin(), la.end());
  std::sort(lc.begin(), lc.end());
  CHECK(la == lc);
  CHECK(a == slurp(dir / "c.csv"));
}

TEST_CASE("cold and warm cache give the same table") {
  const fs::path dir = scratch("cache");
  const std::string cache = (dir / "cache").string();
  const std::string base = "table --graph A3 --family R,P,L --cache " + cache;
  auto cold = run_cli(base);
  REQUIRE(cold.code == 0);
  CHECK(fs::exists(dir / "cache" / "A3.tsv"));
  const std::string first = slurp(dir / "cache" / "A3.tsv");
  auto warm = run_cli(base);
  CHECK(warm.code == 0);
  CHECK(warm.out == cold.out);
  CHECK(slurp(dir / "cache" / "A3.tsv") == first);
  CHECK(run_cli("table --graph A3 --family R,P,L").out == cold.out);
  auto cached = lines(run_cli("poly --graph A3 --family P --x e --w '2 1 3 2' --cache " + cache).out);
  CHECK(cached.at(0) == "1 + q");
  CHECK(cached.at(1) == "route: recursion");

  std::ofstream(dir / "cache" / "A3.tsv", std::ios::app) << "P\tA3\tbad\n";
  auto broken = run_cli(base, true);
  CHECK(broken.code == 2);
  CHECK(contains(broken.out, "A3.tsv:"));
}

TEST_CASE("verify") {
  auto p = run_cli("verify --graph A3 --suite projection");
  CHECK(p.code == 0);
  CHECK(contains(p.out, "result: PASS"));
  auto b3 = run_cli("verify --graph B3 --suite all --threads 2");
  CHECK(b3.code == 0);
  auto d4 = run_cli("verify --graph D4 --suite projection --max-dump 1");
  CHECK(d4.code == 3);
  CHECK(contains(d4.out, "FAIL projection-non-fc"));
  CHECK(contains(d4.out, "EXPECTED FAILURE"));
  auto seeded = run_cli("verify --graph A3 --suite d-identities --seed 7");
  CHECK(seeded.code == 0);
  auto gated = run_cli("verify --graph D4 --suite a-identities --max-length 4");
  CHECK(gated.code == 0);
  CHECK(contains(gated.out, "SKIP a-rec-vs-closed"));
  CHECK(run_cli("verify --graph A3 --suite nonsense").code == 2);
}
