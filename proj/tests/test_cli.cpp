#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "genlab/cli.hpp"
#include "json.hpp"

using namespace genlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_pres(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("genlab_test_" + name + ".pres");
  std::ofstream(path) << text;
  return path.string();
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

const std::string kAbab = "alphabet: a b\nkind: monoid\nrel: abab = aab\n";

}  // namespace

TEST_CASE("check exit codes") {
  const auto f = write_pres("abab", kAbab);
  CHECK(run({"check", "--file", f, "--m", "2"}).code == kExitOk);
  CHECK(run({"check", "--file", f, "--m", "3"}).code == kExitNegative);
  const auto bad = write_pres("bad", "alphabet: a b\nkind: monoid\nrel: ac = a\n");
  const auto r = run({"check", "--file", bad, "--m", "2"});
  CHECK(r.code == kExitUsage);
  CHECK(r.out.empty());
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"check", "--file", "/nonexistent/x.pres", "--m", "2"}).code == kExitUsage);
}

TEST_CASE("pieces and degree") {
  const auto f = write_pres("abab", kAbab);
  const auto p = run({"pieces", "--file", f});
  CHECK(p.code == 0);
  CHECK(p.out == "a 4\nb 3\nab 3\n");
  CHECK(run({"pieces", "--file", f, "--format", "csv"}).out == "piece,occurrences\na,4\nb,3\nab,3\n");
  const auto j = nlohmann::json::parse(run({"pieces", "--file", f, "--format", "json"}).out);
  CHECK(j.size() == 3);
  CHECK(run({"degree", "--file", f}).out == "2\n");
  const auto free = write_pres("free", "alphabet: a b\nkind: semigroup\nrel: a = b\n");
  CHECK(run({"degree", "--file", free}).out == "unbounded\n");
}

TEST_CASE("count, enumerate, sample") {
  const auto c = run({"count", "--alphabet", "2", "--k", "1", "--kind", "monoid", "--strat", "sum",
                      "--n", "2"});
  CHECK(c.code == 0);
  CHECK(c.out == "12\n");
  CHECK(run({"count", "--strat", "max", "--n", "1"}).out == "8\n");
  CHECK(run({"count", "--n", "2", "--ball"}).out == "16\n");  // 4 + 12
  const auto e = run({"enumerate", "--n", "2"});
  CHECK(lines(e.out) == 12);
  const auto ej = nlohmann::json::parse(run({"enumerate", "--n", "2", "--format", "json"}).out);
  CHECK(ej.size() == 12);
  const auto s1 = run({"sample", "--n", "9", "--k", "2", "--seed", "5", "--count", "4"});
  const auto s2 = run({"sample", "--n", "9", "--k", "2", "--seed", "5", "--count", "4"});
  CHECK(s1.code == 0);
  CHECK(lines(s1.out) == 4);
  CHECK(s1.out == s2.out);
  CHECK(run({"sample", "--n", "3"}).code == kExitUsage);  // seed required
  CHECK(run({"estimate", "--n", "3"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  const auto r = run({"count", "--n", "2", "--bogus"});
  CHECK(r.code == kExitUsage);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
  CHECK(run({"count", "--n", "2", "--strat", "median"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("enumeration cap exit code") {
  const auto r = run({"enumerate", "--n", "14", "--k", "2"});
  CHECK(r.code == kExitCapExceeded);
  CHECK(r.out.empty());
  CHECK(r.err.find("11141120") != std::string::npos);  // 2^14 * C(17,3)
}

TEST_CASE("cap override through the environment") {
  setenv("GENLAB_ENUM_CAP", "10", 1);
  const auto r = run({"enumerate", "--n", "2"});
  unsetenv("GENLAB_ENUM_CAP");
  CHECK(r.code == kExitCapExceeded);
  CHECK(r.err.find("12") != std::string::npos);
  CHECK(run({"enumerate", "--n", "2"}).code == kExitOk);
}

TEST_CASE("estimate and bounds emit the CSV schema") {
  const std::vector<std::string> args{"estimate", "--n", "10,20", "--m", "2", "--k", "1",
                                      "--trials", "300", "--seed", "42"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto par = args;
  par.insert(par.end(), {"--jobs", "8"});
  CHECK(run(par).out == a.out);
  CHECK(a.out.rfind("n,strat,kind,alphabet,k,m,trials,failures,estimate,ci_low,ci_high,bound\n", 0) ==
        0);
  CHECK(lines(a.out) == 3);
  auto js = args;
  js.insert(js.end(), {"--format", "json"});
  CHECK(nlohmann::json::parse(run(js).out).size() == 2);

  const auto bd = run({"bounds", "--n", "4,3", "--m", "1", "--exact"});
  CHECK(bd.code == 0);
  // rows ascending; exact C(1)-failure proportion is 2/(n+1)
  CHECK(bd.out.find("\n3,sum,monoid,2,1,1,32,16,0.5,0.5,0.5,") != std::string::npos);
  CHECK(bd.out.find("\n4,sum,monoid,2,1,1,80,32,0.4,0.4,0.4,") != std::string::npos);
  CHECK(bd.out.find("\n3,") < bd.out.find("\n4,"));
}

TEST_CASE("wp exit codes") {
  const auto comm = write_pres("comm", "alphabet: a b\nkind: monoid\nrel: ab = ba\n");
  const auto eq = run({"wp", "--file", comm, "--u", "aab", "--v", "baa"});
  CHECK(eq.code == kExitOk);
  CHECK(eq.out == "equivalent 2\n");
  CHECK(run({"wp", "--file", comm, "--u", "aab", "--v", "abb"}).code == kExitNegative);
  CHECK(run({"wp", "--file", comm, "--u", "1", "--v", "1"}).code == kExitOk);
  const auto idem = write_pres("idem", "alphabet: a b\nkind: monoid\nrel: a = aa\n");
  const auto inc = run({"wp", "--file", idem, "--u", "a", "--v", "b"});
  CHECK(inc.code == kExitInconclusive);
  CHECK(inc.out.rfind("inconclusive", 0) == 0);
  CHECK(run({"wp", "--file", comm, "--u", "abc", "--v", "a"}).code == kExitUsage);
}

TEST_CASE("fibres") {
  const auto r = run({"fibres", "--map", "forget_order", "--k", "2", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("surjective true") != std::string::npos);
  CHECK(r.out.find("stratification_preserving true") != std::string::npos);
  const auto s = run({"fibres", "--map", "semigroup_as_monoid", "--n", "4", "--format", "json"});
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["d_ratio"] == "1");
  CHECK(j["outside_proportion"] == "2/5");
}
