#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// stdout only; stderr is discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string(NFABA_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& file) { return std::string(NFABA_DATA_DIR) + "/" + file; }

}  // namespace

TEST_CASE("solve enumerates in canonical order") {
  auto r = cli("solve baf " + data("example3_2.baf") + " --sigma pr");
  CHECK(r.status == 0);
  CHECK(r.out == "[x,u,v]\n[y,z]\ncount 2\n");

  r = cli("solve baf " + data("example3_8.baf") + " --sigma co");
  CHECK(r.out == "count 0\n");
  r = cli("solve baf " + data("single.baf") + " --sigma stb");
  CHECK(r.out == "[0]\ncount 1\n");
  r = cli("solve aba " + data("motivating.aba") + " --sigma co");
  CHECK(r.out == "[cc,mr]\ncount 1\n");
}

TEST_CASE("solve answers decision tasks") {
  CHECK(cli("solve aba " + data("example2_2.aba") + " --sigma ad --task ver --query b").out ==
        "YES\n");
  CHECK(cli("solve aba " + data("example4_4.aba") + " --sigma ad --task ver --query {a,b}").out ==
        "NO\n");
  CHECK(cli("solve baf " + data("example3_2.baf") + " --sigma co --task skept --query u").out ==
        "YES\n");
  CHECK(cli("solve baf " + data("example3_2.baf") + " --task cred --query {x,y}").status == 1);
}

TEST_CASE("json output") {
  const auto r = cli("solve baf " + data("example3_8.baf") + " --sigma ad --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["semantics"] == "ad");
  CHECK(j["count"] == 2);
  CHECK(j["extensions"].size() == 2);
}

TEST_CASE("translate and reduce feed back into solve") {
  auto r = cli("translate " + data("example2_2.aba"));
  CHECK(r.status == 0);
  CHECK(r.out.rfind("p baf 9\n", 0) == 0);
  r = cli("translate " + data("example4_4.aba") + " --target pbaf");
  CHECK(r.out.rfind("p pbaf 8 3\n", 0) == 0);
  r = cli("reduce " + data("fig.cnf") + " --construction skept-pbaf");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("p pbaf 19", 0) == 0);

  const auto piped = cli("translate " + data("example4_4.aba") + " --target pbaf | " +
                         std::string(NFABA_CLI) + " solve pbaf - --sigma ad");
  CHECK(piped.status == 0);
  CHECK(piped.out.find("count") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli("solve aba " + data("example2_2.aba") + " --sigma nope").status == 1);
  CHECK(cli("solve aba /nonexistent/file.aba").status == 1);
  CHECK(cli("reduce " + data("empty_clause.cnf") + " --construction sat-baf").status == 2);
  CHECK(cli("solve baf " + data("example2_2.aba")).status == 2);
  CHECK(cli("translate " + data("example2_2.aba") + " --cap 3").status == 3);
  CHECK(cli("reduce " + data("fig.cnf") + " --construction gr-baf | " + std::string(NFABA_CLI) +
            " solve baf - --sigma gr --limit 5")
            .status == 3);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::string fuzz = "fuzz --count 20 --seed 3 --format json --verbose";
  CHECK(cli(fuzz).out == cli(fuzz).out);
  const std::string dot = "export-dot baf " + data("example3_2.baf");
  CHECK(cli(dot).out == cli(dot).out);
}
