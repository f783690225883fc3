#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "synclab/errors.hpp"
#include "synclab/families.hpp"
#include "synclab/text_format.hpp"

using namespace synclab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kCerny3 = "n 3\ngen a 2 3 1\ngen b 2 2 3\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parsing the automaton format") {
  const auto a = parse_automaton(kCerny3);
  CHECK(a == build_family(FamilyKind::cerny, 3));
  const auto one = parse_automaton("n 1\ngen a 1");
  CHECK(one.states() == 1);
  const auto commented = parse_automaton("# header\n\nn 2\n  # indented comment\ngen x 1 1\n");
  CHECK(commented.generators().front().map == Transformation{1, 1});

  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      (void)parse_automaton(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("n 3\ngen a 2 3 4") == 2);
  CHECK(line_of("n 3\ngen a 1 2") == 2);
  CHECK(line_of("n 3\ngen a 1 2 3 1") == 2);
  CHECK(line_of("gen a 1") == 1);
  CHECK(line_of("n 0") == 1);
  CHECK(line_of("n 2\nn 2") == 2);
  CHECK(line_of("n 2\ngen a 1 2\ngen a 2 1") == 3);
  CHECK(line_of("n 2\nstate 1") == 2);
  CHECK(line_of("n x") == 1);
  CHECK(line_of("n 2\ngen a 1 z") == 2);
  CHECK(line_of("# nothing") > 0);
}

TEST_CASE("render and parse round trip on random automata") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 8;
    std::vector<oracle::Map> gens;
    for (int k = 0; k <= trial % 3; ++k) gens.push_back(oracle::random_map(n, rng));
    const auto a = oracle::automaton(gens);
    CHECK(parse_automaton(render_automaton(a)) == a);
  }
}

TEST_CASE("analyze reports the three-state Cerny automaton") {
  const auto r = invoke({"--format", "json", "analyze"}, kCerny3);
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["classification"]["synchronizing"] == true);
  CHECK(j["rt"] == 4);
  CHECK(j["at"] == 3);
  CHECK(j["msc"] == 2);
  CHECK(j["bounds"]["all_ok"] == true);

  const auto text = invoke({"analyze", "-"}, kCerny3);
  CHECK(text.code == cli::kOk);
  CHECK(text.out.find("rt: 4") != std::string::npos);
  CHECK(text.out.find("msc: 2") != std::string::npos);
}

TEST_CASE("family output pipes into rt") {
  const auto family = invoke({"family", "rn", "--n", "4"});
  REQUIRE(family.code == cli::kOk);
  CHECK(parse_automaton(family.out) == build_family(FamilyKind::rn, 4));
  const auto rt = invoke({"--format", "json", "rt"}, family.out);
  REQUIRE(rt.code == cli::kOk);
  CHECK(nlohmann::json::parse(rt.out)["rt"] == 6);
  CHECK(nlohmann::json::parse(invoke({"--format", "json", "rt", "--family", "rn", "--n", "5"}).out)["rt"] == 10);
}

TEST_CASE("primitive lists blocks of a four-cycle") {
  const auto r = invoke({"--format", "json", "primitive"}, "n 4\ngen y 2 3 4 1\n");
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["primitive"] == false);
  CHECK(j["blocks"] == nlohmann::json::parse("[[1,3],[2,4]]"));
}

TEST_CASE("other commands") {
  CHECK(nlohmann::json::parse(invoke({"--format", "json", "at"}, kCerny3).out)["at"] == 3);
  CHECK(nlohmann::json::parse(invoke({"--format", "json", "msc"}, kCerny3).out)["msc"] == 2);
  CHECK(nlohmann::json::parse(invoke({"--format", "json", "reach"}, kCerny3).out)["count"] == 7);
  const auto w = nlohmann::json::parse(invoke({"--format", "json", "witness", "--target", "{2,3}"}, kCerny3).out);
  CHECK(w["word"] == nlohmann::json::parse("[\"b\"]"));
  const auto word = nlohmann::json::parse(invoke({"--format", "json", "word"}, kCerny3).out);
  CHECK(word["length"].get<int>() <= 4);
  const auto pi = nlohmann::json::parse(invoke({"--format", "json", "pi"}, kCerny3).out);
  CHECK(pi["chain"].size() == 3);
  CHECK(invoke({"bounds"}, kCerny3).code == cli::kOk);

  const auto stats = nlohmann::json::parse(invoke({"--format", "json", "monoid", "stats", "--family", "rn", "--n", "3"}).out);
  CHECK(stats["size"] == 7);
  const auto mrt = invoke({"--format", "json", "monoid", "rt", "--family", "rn", "--n", "3"});
  CHECK(mrt.code == cli::kOk);
  CHECK(nlohmann::json::parse(mrt.out)["rt"] == 3);
  const auto thm = nlohmann::json::parse(invoke({"--format", "json", "monoid", "thm17", "--n", "4"}).out);
  CHECK(thm["monoid_size"] == 34);
  CHECK(thm["phi_is_isomorphism"] == true);
}

TEST_CASE("sweeps print their seed") {
  const auto r = invoke({"sweep", "equivalences", "--n", "3", "--samples", "50", "--seed", "99"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("seed: 99") != std::string::npos);
  const auto again = invoke({"sweep", "equivalences", "--n", "3", "--samples", "50", "--seed", "99"});
  CHECK(again.out == r.out);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"nonsense"}).code == cli::kUsage);
  CHECK(invoke({"rt"}, "n 3\ngen a 2 3 4\n").code == cli::kUsage);
  CHECK(invoke({"rt"}, "n 3\ngen a 2 3 4\n").err.find("line 2") != std::string::npos);
  CHECK(invoke({"rt", "/no/such/file"}).code == cli::kUsage);
  CHECK(invoke({"msc"}, "n 3\ngen a 2 3 1\n").code == cli::kUsage);
  CHECK(invoke({"--format", "yaml", "rt"}, kCerny3).code == cli::kUsage);
  CHECK(invoke({"rt", "--family", "cerny", "--n", "26"}).code == cli::kScopeCapped);
  CHECK(invoke({"at", "--family", "cerny", "--n", "16"}).code == cli::kScopeCapped);
  CHECK(invoke({"monoid", "rt", "--family", "cerny", "--n", "4"}).code == cli::kScopeCapped);
  CHECK(invoke({"--help"}).code == cli::kOk);
}

TEST_CASE("gates come from the environment") {
  setenv("SYNCLAB_SUBSET_BFS_MAX_N", "3", 1);
  CHECK(invoke({"rt", "--family", "cerny", "--n", "4"}).code == cli::kScopeCapped);
  setenv("SYNCLAB_SUBSET_BFS_MAX_N", "zero", 1);
  CHECK(invoke({"rt", "--family", "cerny", "--n", "4"}).code == cli::kUsage);
  unsetenv("SYNCLAB_SUBSET_BFS_MAX_N");
  CHECK(invoke({"rt", "--family", "cerny", "--n", "4"}).code == cli::kOk);
}

TEST_CASE("text and json carry the same values") {
  for (const auto& cmd : {"analyze", "rt", "at", "reach", "bounds"}) {
    const auto text = invoke({cmd}, kCerny3).out;
    const auto j = nlohmann::ordered_json::parse(invoke({"--format", "json", cmd}, kCerny3).out);
    for (const auto& [key, value] : j.items()) {
      if (!value.is_number()) continue;
      CHECK(text.find(key + ": " + value.dump()) != std::string::npos);
    }
  }
}

}  // TEST_SUITE
