#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(MVPOLY_EXE) + " " + args + " 2>/dev/null";
  if (!input.empty()) {
    std::ofstream("cli_stdin.txt") << input;
    cmd += " < cli_stdin.txt";
  }
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("enumerate") {
  Run r = run("enumerate A 2 --coweight 1,1");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 2);
  CHECK(lines(run("enumerate A 2 --coweight 0,0").out) == 1);
  Run neg = run("enumerate A 2 --coweight -1,2");
  CHECK(neg.code == 0);
  CHECK(neg.out.empty());
  CHECK(run("enumerate A 2 --coweight 1").code == 2);
  CHECK(run("enumerate G 2 --coweight 1,1").code == 2);
  CHECK(run("enumerate A 5 --coweight 1,1,1,1,1").code == 2);
  CHECK(run("--rank-cap 5 enumerate A 5 --coweight 1,0,0,0,0").code == 0);
  // deterministic and identical with workers
  CHECK(run("enumerate B 2 --coweight 2,2").out == run("--parallel 3 enumerate B 2 --coweight 2,2").out);
  Run sub = run("enumerate A 2 --coweight 2,1 --subset-keys --lusztig-word 2,1,2");
  auto first = nlohmann::json::parse(sub.out.substr(0, sub.out.find('\n')));
  CHECK(first["M"].contains("13"));
  CHECK(first.contains("lusztig"));
  CHECK(run("enumerate A 2 --coweight 1,1 --lusztig-word 1,1,2").code == 2);
}

TEST_CASE("mult") {
  Run w = run("mult weight A 2 --lambda 1,1 --mu 0,0 --check-oracle");
  CHECK(w.code == 0);
  CHECK(w.out == "2\n");
  CHECK(run("mult weight A 2 --lambda 1,1 --mu 1,1").out == "1\n");
  Run t = run("mult tensor A 2 --lambda 1,1 --mu 1,1 --nu 1,1 --check-oracle --canonical");
  CHECK(t.code == 0);
  CHECK(t.out == "2\n");
  CHECK(run("mult tensor A 2 --lambda 1,1 --mu 1,1 --nu 2,2").out == "1\n");
  CHECK(run("mult weight A 2 --lambda 1,1 --mu 0,0 --check-oracle --inject-mismatch").code == 1);
  CHECK(run("mult tensor A 2 --lambda 1,1 --mu 1,1").code == 2);
  CHECK(run("mult weight A 2 --lambda 1,0 --mu 0,0").code == 2);
  CHECK(run("mult volume A 2 --lambda 1,1 --mu 0,0").code == 2);
}

TEST_CASE("primes") {
  Run b = run("primes B 2");
  REQUIRE(b.code == 0);
  auto j = nlohmann::json::parse(b.out);
  CHECK(j["primes"].size() == 8);
  CHECK(j["maximal_cones"] == 4);
  std::multiset<std::size_t> sizes;
  for (auto& c : j["clusters"]) sizes.insert(c.get<std::string>().size());
  CHECK(sizes == std::multiset<std::size_t>{4, 4, 5, 5});
  auto a = nlohmann::json::parse(run("primes A 2 --subset-keys").out);
  CHECK(a["primes"].size() == 4);
  CHECK(a["clusters"].size() == 2);
}

TEST_CASE("collapse") {
  Run r = run("collapse 3 2 --picture [[1,2,2],[1,3,1],[2,3,1]] --verify");
  CHECK(r.code == 0);
  CHECK(r.out == "[[1,3,1]]\n");
  std::ofstream("pic.json") << "[[1,2,0],[1,3,2],[1,4,1],[2,3,1],[2,4,0],[3,4,3]]";
  CHECK(run("collapse 4 3 --picture pic.json --verify").code == 0);
  CHECK(run("collapse 3 2 --picture [[1,2,2],[1,3,1]]").code == 2);
  CHECK(run("collapse 3 2 --picture [[1,2,2],").code == 2);
}

TEST_CASE("validate and draw") {
  std::string docs = run("enumerate A 2 --coweight 2,1").out;
  Run v = run("validate", docs);
  CHECK(v.code == 0);
  CHECK(lines(v.out) == 2);
  // the two pseudo-Weyl polytopes next to the MV one
  for (int x : {-2, 0}) {
    std::ostringstream d;
    d << R"({"group":{"family":"A","rank":2},"M":{"1":0,"12":0,"2":-2,"23":-3,"3":-2,"13":)" << x << "}}";
    Run bad = run("validate", d.str());
    CHECK(bad.code == 1);
    auto rep = nlohmann::json::parse(bad.out);
    CHECK(rep["valid"] == false);
    CHECK(rep["violations"].size() >= 1);
  }
  CHECK(run("validate", "{\"group\": ").code == 2);
  CHECK(run("validate", "[1,2]").code == 2);

  std::string point = run("enumerate A 2 --coweight 0,0").out;
  CHECK(run("draw --out point.svg", point).code == 0);
  std::ifstream f("point.svg");
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("<circle") != std::string::npos);
  CHECK(run("draw --out hex.svg --index 1", docs).code == 0);
  CHECK(run("draw --out hex.svg --index 5", docs).code == 2);
  std::string a3 = run("enumerate A 3 --coweight 1,1,1").out;
  CHECK(run("draw --out a3.svg", a3).code == 2);
  CHECK(run("draw --out a3.svg --face 0,1,2", a3).code == 0);
}
