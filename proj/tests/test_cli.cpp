#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gpk/cli.hpp"
#include "gpk/errors.hpp"
#include "support.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gpk");
  std::ostringstream out, err;
  const int status = gpk::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("records round-trip") {
    const gpk::Record r{{"suite", "retraction"}, {"word", "v0:1 v1:-1"}, {"empty", ""}, {"quote", "say \"hi\" \\ now"},
                        {"eq", "a=b"}, {"multi", "one\ntwo"}};
    const auto line = gpk::format_record(r);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(gpk::parse_record(line) == r);
    CHECK(gpk::format_record({{"a", "1"}, {"b", "x y"}}) == "a=1 b=\"x y\"");
    CHECK_GPK_ERROR(gpk::parse_record("a"), gpk::ErrorCode::invalid_argument);
    CHECK_GPK_ERROR(gpk::parse_record("a=\"open"), gpk::ErrorCode::invalid_argument);
    CHECK_GPK_ERROR(gpk::parse_record("a=\"x\"y"), gpk::ErrorCode::invalid_argument);
    CHECK_GPK_ERROR(gpk::format_record({{"bad key", "1"}}), gpk::ErrorCode::invalid_argument);
  }

  TEST_CASE("normalize") {
    const auto r = run({"normalize", "--context", "d-infinity", "--word", "v0:1 v1:1 v0:1 v1:1"});
    CHECK(r.status == 0);
    CHECK(r.out == "v0:1 v1:1 v0:1 v1:1\nnl=4\n");
  }

  TEST_CASE("retraction example") {
    const auto r = run({"--samples", "500", "--seed", "7", "verify", "retraction", "--family", "c2-to-z", "--cofamily",
                        "z-to-c2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS retraction") == 0);
    CHECK(r.out.find("Φ is a retract of Ψ") != std::string::npos);
    // Global options may also follow the subcommand.
    const auto later = run({"verify", "retraction", "--family", "c2-to-z", "--cofamily", "z-to-c2", "--samples", "500",
                            "--seed", "7"});
    CHECK(later.out == r.out);
  }

  TEST_CASE("complex census") {
    const auto r = run({"complex", "--context", "c2-c2-c2-edge01", "--census"});
    CHECK(r.status == 0);
    CHECK(r.out == "V=8 E=12 T=0 Sq=2\n");
  }

  TEST_CASE("complex export") {
    const auto path = std::filesystem::temp_directory_path() / "gpk_cli_export.txt";
    const auto r = run({"complex", "--context", "d-infinity", "--export", path.string()});
    CHECK(r.status == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "0 1 v0:1\n0 2 v1:1\n1 3 v1:1\n2 3 v0:1\n");
    std::filesystem::remove(path);
  }

  TEST_CASE("other word commands") {
    CHECK(run({"mul", "--context", "c2xc2", "--word", "v1:1", "--word2", "v0:1"}).out == "v0:1 v1:1\nnl=2\n");
    CHECK(run({"inv", "--context", "raag-two", "--word", "v0:2 v1:-1"}).out == "v1:1 v0:-2\nnl=2\n");
    CHECK(run({"project", "--context", "raag-two", "--word", "v0:2 v1:-1 v0:1"}).out == "(3,-1)\n");
    CHECK(run({"kernel-test", "--context", "d-infinity", "--word", "v0:1 v1:1 v0:1 v1:1"}).out ==
          "in the kernel of the projection\n");
    CHECK(run({"kernel-test", "--context", "d-infinity", "--word", "v0:1 v1:1 v0:1 v1:1", "--extension", "two-complete"})
              .out == "in the kernel of the extension two-complete\n");
    CHECK(run({"induce", "--family", "c2-to-z", "--word", "v0:1 v1:1 v0:1 v1:1"}).out.find("image: v0:1 v1:1 v0:-1 v1:-1") == 0);
  }

  TEST_CASE("growth rows") {
    const auto r = run({"growth", "--context", "d-infinity", "--radius", "3"});
    CHECK(r.out == "0,1\n1,2\n2,2\n3,2\n");
    const auto k = run({"--format", "kv", "growth", "--context", "d-infinity", "--radius", "4", "--kernel"});
    const auto rec = gpk::parse_record(lines(k.out).at(0));
    CHECK(rec.back() == std::make_pair(std::string("counts"), std::string("1,0,0,0,2")));
  }

  TEST_CASE("machine-readable output round-trips") {
    const std::vector<std::vector<std::string>> commands = {
        {"normalize", "--context", "raag-path3", "--word", "v2:1 v0:-1 v1:3"},
        {"induce", "--family", "c4-mod2", "--word", "v0:1 v1:1 v0:1 v1:1 v0:2"},
        {"--samples", "50", "verify", "homomorphism", "--family", "c4-scramble", "--families", "c3-perm"},
        {"--samples", "50", "verify", "functoriality", "--family", "c2-to-c4", "--second", "c4-scramble"},
        {"verify", "census", "--context", "c2-c2-c2-edge01"},
        {"complex", "--context", "mixed-path3"},
        {"growth", "--context", "c3-free", "--radius", "2"}};
    for (auto args : commands) {
      args.insert(args.begin(), {"--format", "kv"});
      const auto r = run(args);
      const auto ls = lines(r.out);
      REQUIRE_FALSE(ls.empty());
      for (const auto& l : ls) CHECK(gpk::format_record(gpk::parse_record(l)) == l);
    }
    const auto both = run({"--format", "both", "normalize", "--context", "d-infinity", "--word", "v0:1"});
    CHECK(both.out == "v0:1\nnl=1\ncommand=normalize context=d-infinity word=v0:1 nl=1\n");
  }

  TEST_CASE("identical arguments give identical output") {
    const std::vector<std::string> args = {"--seed", "3", "--samples", "200", "--format", "both", "verify",
                                           "functoriality", "--family", "c2-to-c4", "--second", "c4-scramble"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.status == b.status);
    auto other = args;
    other[1] = "4";
    CHECK(run(other).out != a.out);
  }

  TEST_CASE("exit statuses") {
    CHECK(run({"--help"}).status == 0);
    CHECK(run({"--help"}).out.find("Exit status:") != std::string::npos);
    CHECK(run({}).status == gpk::exit_code::usage);
    CHECK(run({"frobnicate"}).status == gpk::exit_code::usage);
    CHECK(run({"verify", "everything"}).status == gpk::exit_code::usage);
    CHECK(run({"normalize", "--context", "nowhere", "--word", "v0:1"}).status == gpk::exit_code::config);
    CHECK(run({"--config", "/nonexistent/gpk.json", "normalize", "--context", "x", "--word", ""}).status ==
          gpk::exit_code::config);
    CHECK(run({"normalize", "--context", "d-infinity", "--word", "v0:x"}).status == gpk::exit_code::invalid_input);
    CHECK(run({"normalize", "--context", "d-infinity", "--word", "v7:1"}).status == gpk::exit_code::invalid_input);
    CHECK(run({"induce", "--family", "c2-to-z", "--word", "v0:1", "--kernel"}).status == gpk::exit_code::precondition);
    CHECK(run({"verify", "isometry", "--family", "c4-mod2"}).status == gpk::exit_code::non_injective);
    CHECK(run({"complex", "--context", "raag-two"}).status == gpk::exit_code::invalid_input);
    CHECK(run({"complex", "--context", "c4-path3", "--cap", "10"}).status == gpk::exit_code::budget);
    CHECK(run({"kernel-test", "--context", "c2xc2", "--word", "v0:1", "--extension", "two-complete"}).status ==
          gpk::exit_code::context_mismatch);
    CHECK(run({"mul", "--context", "raag-two", "--word", "v0:9223372036854775807", "--word2", "v0:1"}).status ==
          gpk::exit_code::overflow);
    CHECK(run({"verify", "homomorphism"}).status == gpk::exit_code::invalid_input);
    CHECK(run({"--samples", "100", "verify", "functoriality", "--family", "c2-to-c4", "--second", "c4-scramble"}).status ==
          gpk::exit_code::check_failed);
    CHECK(run({"--samples", "100", "verify", "negative-control", "--family", "c4-scramble"}).status == 0);
  }

  TEST_CASE("external config file") {
    const auto path = std::filesystem::temp_directory_path() / "gpk_cli_config.json";
    {
      std::ofstream out(path);
      out << R"({"groups": {"c3": {"cyclic": 3}}, "graphs": {"one": {"vertices": 1}},
                 "contexts": {"solo": {"graph": "one", "groups": "c3"}}})";
    }
    const auto r = run({"--config", path.string(), "normalize", "--context", "solo", "--word", "v0:2 v0:2"});
    CHECK(r.status == 0);
    CHECK(r.out == "v0:1\nnl=1\n");
    const auto missing = run({"--config", path.string(), "normalize", "--context", "d-infinity", "--word", "v0:1"});
    CHECK(missing.status == gpk::exit_code::config);
    std::filesystem::remove(path);
  }
}
