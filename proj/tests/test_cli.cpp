#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "dot_grammar.hpp"
#include "malformed_corpus.hpp"
#include "json.hpp"
#include "process.hpp"

using nlohmann::json;
using ktinv::testing::run_tool;

namespace {

const std::string kTool = KTINV_CLI_PATH;

json parse_out(const ktinv::testing::RunResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("analyze") {
  auto r = run_tool(kTool, "analyze --order 3 --mult 1,1,0 --max-n 4 --depth 3");
  REQUIRE(r.exit_code == 0);
  auto j = parse_out(r);
  CHECK(j["schema"] == "ktinv/1");
  CHECK(j["doubling"]["n_min"] == 3);
  CHECK(j["homotopy_aut_table"].size() == 5);
  CHECK(j["bratteli_preview"]["levels"][3] == json::array({"2", "3", "3"}));

  auto bad = run_tool(kTool, "analyze --order 4 --mult 1,1");
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.err)["error"] == "malformed_input");

  auto np = run_tool(kTool, "analyze --order 5 --mult 3,0,0,0,0");
  REQUIRE(np.exit_code == 0);
  auto k = parse_out(np);
  CHECK(k["primitive"] == false);
  CHECK(k["homotopy_aut_table"].is_null());
  CHECK(k["homotopy_table_omitted_reason"].is_string());
}

TEST_CASE("positivity") {
  auto r = run_tool(kTool, "positivity --order 3 --mult 1,1,0 --elem 2,-1,0 --kpow 0");
  REQUIRE(r.exit_code == 0);
  CHECK(parse_out(r)["positive"] == true);
  CHECK(parse_out(r)["witness_l"] == 2);
  auto z = parse_out(run_tool(kTool, "positivity --order 3 --mult 1,1,0 --elem 0,0,0"));
  CHECK(z["positive"] == true);
  CHECK(z["is_zero"] == true);
  CHECK(parse_out(run_tool(kTool, "positivity --order 3 --mult 1,1,0 --elem -1,0,0"))["positive"] ==
        false);
  CHECK(parse_out(run_tool(kTool, "positivity --order 3 --mult 1,1,0 --elem=-1,0,0 --oracle"))
            ["positive"] == false);
}

TEST_CASE("unit") {
  auto t = parse_out(run_tool(kTool, "unit --order 3 --mult 1,1,0 --elem 0,1,0"));
  CHECK(t["status"] == "unit");
  CHECK(t["inverse"]["r"] == json::array({"0", "0", "1"}));
  CHECK(t["inverse"]["l"] == 0);
  auto two = parse_out(run_tool(kTool, "unit --order 2 --mult 1,1 --elem 2,0"));
  CHECK(two["inverse"]["r"] == json::array({"1", "1"}));
  CHECK(two["inverse"]["l"] == 2);
  auto nu = parse_out(run_tool(kTool, "unit --order 3 --mult 1,1,0 --elem 2,0,0"));
  CHECK(nu["status"] == "non_unit");
  CHECK(nu["obstruction"] == "resultant");
  auto neg = parse_out(run_tool(kTool, "unit --positive --order 2 --mult 1,1 --elem -2,0"));
  CHECK(neg["positive_unit"] == false);
  CHECK(neg["unit"]["status"] == "unit");
  auto o = parse_out(run_tool(kTool, "unit --oracle --order 2 --mult 1,1 --elem 2,0"));
  CHECK(o["status"] == "unit");
  CHECK(o["inverse"]["l"] == 2);
}

TEST_CASE("unit bound from the environment, overridden by the flag") {
  auto env = run_tool(kTool, "unit --order 2 --mult 1,1 --elem 2,0", "KTINV_UNIT_BOUND=1");
  CHECK(parse_out(env)["status"] == "unknown");
  auto flag = run_tool(kTool, "unit --order 2 --mult 1,1 --elem 2,0 --unit-bound 3",
                       "KTINV_UNIT_BOUND=1");
  CHECK(parse_out(flag)["status"] == "unit");
  auto junk = run_tool(kTool, "unit --order 2 --mult 1,1 --elem 2,0", "KTINV_UNIT_BOUND=abc");
  CHECK(junk.exit_code == 1);
}

TEST_CASE("bratteli") {
  auto j = parse_out(run_tool(kTool, "bratteli --order 3 --mult 1,1,0 --depth 2"));
  CHECK(j["levels"] == json::parse(R"([["1","0","0"],["1","1","0"],["1","2","1"]])"));
  auto dot = run_tool(kTool, "bratteli --order 2 --mult 1,1 --depth 1 --format dot");
  REQUIRE(dot.exit_code == 0);
  auto g = ktinv::testing::parse_dot(dot.out);
  REQUIRE(g.has_value());
  CHECK(g->nodes.size() == 3);
  CHECK(run_tool(kTool, "bratteli --order 2 --mult 1,1 --depth 65").exit_code == 2);
  CHECK(run_tool(kTool, "bratteli --order 2 --mult 1,1 --depth 70 --max-depth 80").exit_code == 0);
}

TEST_CASE("doubling") {
  CHECK(parse_out(run_tool(kTool, "doubling --order 2 --mult 1,1"))["n_min"] == 2);
  CHECK(parse_out(run_tool(kTool, "doubling --order 3 --mult 2,2,2"))["n_min"] == 1);
  auto np = run_tool(kTool, "doubling --order 5 --mult 1,0,0,0,0");
  CHECK(np.exit_code == 2);
  CHECK(json::parse(np.err).contains("message"));
  CHECK(parse_out(run_tool(kTool, "doubling --oracle --order 3 --mult 1,1,0"))["n_min"] == 3);
}

TEST_CASE("homotopy") {
  auto a = parse_out(run_tool(kTool, "homotopy --order 3 --mult 1,1,0 --target aut --n 0"));
  CHECK(a["group"] == "positive_units");
  CHECK(a["ring"] == "Z[t]/(t^3-1) localized at 1+t");
  auto u = parse_out(run_tool(kTool, "homotopy --order 3 --mult 1,1,0 --target unitary --n 2"));
  CHECK(u["group"] == "zero");
  auto k = parse_out(
      run_tool(kTool, "homotopy --target ku --subgroup trivial --n 0 --order 2 --mult 1,1"));
  CHECK(k["display"] == "Z[1/2]");
  CHECK(run_tool(kTool, "homotopy --order 3 --mult 0,1,0 --target aut --n 0").exit_code == 2);
}

TEST_CASE("text format and output file") {
  auto t = run_tool(kTool, "doubling --order 2 --mult 1,1 --format text");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("n_min") != std::string::npos);
  auto path = std::filesystem::temp_directory_path() / "ktinv_cli_out.json";
  auto w = run_tool(kTool, "doubling --order 2 --mult 1,1 -o " + path.string());
  CHECK(w.exit_code == 0);
  CHECK(w.out.empty());
  CHECK(std::filesystem::exists(path));
  std::filesystem::remove(path);
}

TEST_CASE("malformed input corpus exits 1 with a JSON error") {
  const auto& corpus = ktinv::testing::kMalformedCorpus;
  CHECK(corpus.size() >= 20);
  for (const auto& args : corpus) {
    CAPTURE(args);
    auto r = run_tool(kTool, args);
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    json e = json::parse(r.err, nullptr, false);
    REQUIRE_FALSE(e.is_discarded());
    CHECK(e["schema"] == "ktinv/1");
    CHECK(e["error"] == "malformed_input");
  }
}
