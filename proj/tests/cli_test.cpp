#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cbalg/catalog.hpp"
#include "cbalg/cli.hpp"
#include "cbalg/io.hpp"
#include "test_util.hpp"

namespace {

using namespace cbalg;
using cbtest::vec;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

const RationalField Q;
const PrimeField F3(3);

const fs::path kCorpus = CBALG_CORPUS;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Run run_machine(std::vector<std::string> args) {
  args.push_back("--machine");
  return run(std::move(args));
}

std::string corpus(const char* name) { return (kCorpus / name).string(); }

const char* kHeisenberg = R"({
  "field": {"type": "Q"},
  "dim": 3,
  "anticommutative": true,
  "products": [ {"left": 1, "right": 2, "result": [{"k": 3, "c": "1"}]} ]
})";

template <class Fn>
file_error located(Fn&& fn) {
  try {
    fn();
  } catch (const file_error& e) {
    return e;
  }
  ADD_FAILURE() << "no file_error";
  return file_error(errc::parse_error, "", 0, 0);
}

TEST(Parse, Heisenberg) {
  const auto f = parse_algebra_file(kHeisenberg, Q);
  EXPECT_EQ(f.algebra, get_entry("L3,2", Q));
  EXPECT_FALSE(f.decomposition);
  EXPECT_TRUE(f.generators.empty());
}

TEST(Parse, ExampleSeven) {
  const auto doc = parse_document(slurp(kCorpus / "example7.json"));
  EXPECT_EQ(doc.products.size(), 6u);
  EXPECT_EQ(instantiate(doc, Q).algebra, example_seven(Q));
  EXPECT_EQ(instantiate(doc, F3).algebra, example_seven(F3));
  const auto f = instantiate(doc, Q);
  ASSERT_TRUE(f.decomposition);
  EXPECT_EQ(build_from_decomposition(*f.decomposition).algebra, example_seven(Q));
}

TEST(Parse, Errors) {
  auto e = located([] { parse_document(R"({"field": {"type": "Fp", "p": 4}, "dim": 1, "anticommutative": true, "products": []})"); });
  EXPECT_EQ(e.code(), errc::parse_error);
  EXPECT_EQ(e.line(), 1u);

  e = located([] { parse_document("{\n  \"dim\": 2,\n  oops\n}"); });
  EXPECT_EQ(e.code(), errc::parse_error);
  EXPECT_EQ(e.line(), 3u);

  const std::string bad_index = "{\"field\": {\"type\": \"Q\"}, \"dim\": 2, \"anticommutative\": true,\n"
                                "\"products\": [{\"left\": 1, \"right\": 2, \"result\": [{\"k\": 3, \"c\": \"1\"}]}]}";
  e = located([&] { parse_document(bad_index); });
  EXPECT_EQ(e.code(), errc::bad_index);
  EXPECT_EQ(e.line(), 2u);

  const std::string diag = "{\"field\": {\"type\": \"Q\"}, \"dim\": 2, \"anticommutative\": true,\n"
                           "\"products\": [{\"left\": 1, \"right\": 1, \"result\": [{\"k\": 2, \"c\": \"1\"}]}]}";
  EXPECT_EQ(located([&] { parse_document(diag); }).code(), errc::diagonal_in_anticommutative);

  const std::string scalar = "{\"field\": {\"type\": \"Q\"}, \"dim\": 2, \"anticommutative\": false,\n"
                             "\"products\": [{\"left\": 1, \"right\": 1,\n\"result\": [{\"k\": 2, \"c\": \"1/0\"}]}]}";
  const auto doc = parse_document(scalar);
  e = located([&] { instantiate(doc, Q); });
  EXPECT_EQ(e.code(), errc::bad_scalar);
  EXPECT_EQ(e.line(), 3u);

  EXPECT_EQ(located([] { parse_document(R"({"field": {"type": "Q"}, "dim": 1, "anticommutative": true, "products": [], "extra": 1})"); })
                .code(),
            errc::parse_error);
  // the field in the file must match the requested type
  try {
    parse_algebra_file(kHeisenberg, F3);
    ADD_FAILURE();
  } catch (const error& err) {
    EXPECT_EQ(err.code(), errc::field_mismatch);
  }
}

TEST(Parse, RoundTripCorpus) {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kCorpus)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    const auto text = slurp(entry.path());
    const auto doc = parse_document(text);
    const auto fd = document_field(doc, std::nullopt);
    visit_field(fd, [&](const auto& field) {
      const auto f = instantiate(doc, field);
      const auto again = render(f);
      const auto g = parse_algebra_file(again, field);
      EXPECT_EQ(g.algebra, f.algebra) << entry.path();
      EXPECT_EQ(g.algebra.labels(), f.algebra.labels()) << entry.path();
      EXPECT_EQ(g.generators, f.generators) << entry.path();
      EXPECT_EQ(g.decomposition.has_value(), f.decomposition.has_value()) << entry.path();
      if (f.decomposition) {
        EXPECT_EQ(build_from_decomposition(*g.decomposition).algebra, build_from_decomposition(*f.decomposition).algebra);
      }
      EXPECT_EQ(render(g), again) << entry.path();
      return 0;
    });
  }
  EXPECT_EQ(files, 47u);
}

TEST(Parse, CorpusMatchesCatalog) {
  for (const auto& e : catalog()) {
    std::string file = e.name;
    file[0] = 'l';
    file[file.find(',')] = '_';
    const auto f = parse_algebra_file(slurp(kCorpus / (file + ".json")), Q);
    EXPECT_EQ(f.algebra, instantiate(e, Q, e.parametric ? std::optional(Q.one()) : std::nullopt)) << e.name;
  }
}

TEST(Format, Elements) {
  const std::vector<std::string> labels{"e1", "e2", "e3"};
  EXPECT_EQ(cli::format_element(vec(Q, {1, 0, -2}), labels), "e1 - 2*e3");
  EXPECT_EQ(cli::format_element(vec(Q, {0, 0, 0}), labels), "0");
  const auto h = get_entry("L3,2", Q);
  EXPECT_EQ(cli::parse_element(h, "e2"), h.basis(1));
  EXPECT_EQ(cli::parse_element(h, "1,0,-1/2"), (Element<RationalField>{Q.one(), Q.zero(), Q.parse("-1/2")}));
}

TEST(Cli, CheckHeisenberg) {
  const auto r = run_machine({"check", corpus("l3_2.json")});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["identities"]["anti_commutative"]["holds"].get<bool>());
  EXPECT_TRUE(j["identities"]["lie"]["holds"].get<bool>());
  EXPECT_TRUE(j["cb"]["cb"].get<bool>());
}

TEST(Cli, CbL43BruteOverF3) {
  const auto r = run_machine({"cb", corpus("l4_3.json"), "--field", "F3", "--brute"});
  EXPECT_EQ(r.code, 1);
  const auto j = json::parse(r.out);
  EXPECT_FALSE(j["cb"]["cb"].get<bool>());
  EXPECT_EQ(j["cb"]["witness"]["x"], "e1");
  EXPECT_EQ(j["cb"]["witness"]["y"], "e1");
  EXPECT_EQ(j["cb"]["witness"]["z"], "e2");
}

TEST(Cli, CatalogCheck) {
  const auto r = run_machine({"catalog", "check", "--field", "Q", "--eps", "0,1,-1,2"});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 42u);
  for (const auto& row : j["rows"]) EXPECT_TRUE(row["match"].get<bool>()) << row["name"];
  EXPECT_EQ(run({"catalog", "check", "--field", "F2"}).code, 2);
  // characteristic three: reported, never a failing exit
  const auto f3 = run_machine({"catalog", "check", "--field", "F3"});
  EXPECT_EQ(f3.code, 0);
  EXPECT_FALSE(json::parse(f3.out)["match_enforced"].get<bool>());
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"series", corpus("l4_3.json")}).code, 0);
  EXPECT_EQ(run({"centralizer", corpus("l3_2.json"), "--x", "e1"}).code, 0);
  EXPECT_EQ(run({"centralizer", corpus("nonexample_2d.json"), "--field", "F3"}).code, 1);
  EXPECT_EQ(run({"check", corpus("nonexample_2d.json"), "--field", "F3", "--brute"}).code, 1);
  EXPECT_EQ(run({"catalog", "list"}).code, 0);

  auto r = run_machine({"cb-elements", corpus("l4_3.json"), "--field", "F3", "--z", "e1", "--brute"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["witness"]["x"], "e1 + e2");

  r = run_machine({"cb-elements", corpus("l4_3_f2_shear.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["count"], 4);

  r = run_machine({"liesation", corpus("leibniz_e11.json")});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["ideal"]["basis"], json::array({"e2"}));
  EXPECT_TRUE(j["quotient"]["abelian"].get<bool>());

  r = run_machine({"orbit", corpus("heisenberg_f3_swap.json"), "--x", "e1"});
  EXPECT_EQ(r.code, 0);
  j = json::parse(r.out);
  EXPECT_EQ(j["group_order"], 2);
  EXPECT_EQ(j["orbit"], json::array({"e1", "e2"}));
  EXPECT_EQ(j["preservation"]["cb_elements"], 27);

  r = run_machine({"construct", corpus("example7.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["all_conditions"].get<bool>());

  r = run({"construct", corpus("example7.json"), "--emit"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_algebra_file(r.out, Q).algebra, example_seven(Q));

  r = run({"construct", "--r", "3", "--dimz", "1", "--seed", "4", "--field", "F5", "--emit"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(is_anti_associative(parse_algebra_file(r.out, PrimeField(5)).algebra));

  r = run({"catalog", "get", "L6,19", "--eps", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_algebra_file(r.out, Q).algebra, get_entry("L6,19", Q, Q.from_int(2)));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({"check", "/no/such/file.json"}).code, 2);
  EXPECT_EQ(run({"check", corpus("l3_2.json"), "--field", "F4"}).code, 2);
  EXPECT_EQ(run({"cb", corpus("l3_2.json"), "--brute"}).code, 2);  // Q cannot be enumerated
  EXPECT_EQ(run({"cb", corpus("l6_10.json"), "--field", "F5", "--brute", "--cap", "100"}).code, 2);
  EXPECT_EQ(run({"catalog", "get", "L6,19"}).code, 2);
  const auto r = run({"cb-elements", corpus("l3_2.json"), "--z", "e9"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, MachineOutputIsStable) {
  for (auto args : std::vector<std::vector<std::string>>{{"check", corpus("example7.json"), "--field", "F3", "--both"},
                                                         {"orbit", corpus("l4_3_f2_shear.json")},
                                                         {"catalog", "check", "--field", "F5"}}) {
    const auto a = run_machine(args), b = run_machine(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

// The installed binary, through a real process and exit status.
int exit_status(const std::string& args) {
  const std::string cmd = std::string(CBALG_CLI) + " " + args + " > /dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(exit_status("check " + corpus("l3_2.json")), 0);
  EXPECT_EQ(exit_status("cb " + corpus("l4_3.json") + " --field F3 --brute"), 1);
  EXPECT_EQ(exit_status("catalog check --field Q --eps 0,1,-1,2"), 0);
  EXPECT_EQ(exit_status("check"), 2);
  EXPECT_EQ(exit_status("check - < " + corpus("l3_2.json")), 0);
}

}  // namespace
