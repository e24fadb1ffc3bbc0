#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "prepcode/cli.hpp"
#include "prepcode/code.hpp"
#include "prepcode/construct.hpp"

using namespace prepcode;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("prepcode_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

}  // namespace

TEST_CASE("exit code matrix") {
  TempDir tmp;
  const std::string p16 = tmp.file("p16.code"), p15 = tmp.file("p15.code"), nr = tmp.file("nr.code");

  CHECK(run({"construct", "--n", "16", "--out", p16}).code == 0);
  CHECK(read_code_file(p16) == build_extended_preparata(3));
  CHECK(run({"puncture", "--in", p16, "--coord", "16", "--out", p15}).code == 0);
  CHECK(run({"octacode", "--out", nr}).code == 0);

  SUBCASE("passing suites") {
    const auto ext = run({"verify", "--in", p16, "--suite", "extended", "--report", tmp.file("r.json")});
    CHECK(ext.code == 0);
    std::ifstream f(tmp.file("r.json"));
    const auto report = nlohmann::json::parse(f);
    CHECK(report["pass"] == true);
    CHECK(report["checks"].size() == 3);
    CHECK(report["inputs"][0]["fnv1a64"].get<std::string>().size() == 16);

    const auto pun = run({"verify", "--in", p15, "--suite", "punctured"});
    CHECK(pun.code == 0);
    CHECK(nlohmann::json::parse(pun.out)["checks"].size() == 4);

    const auto cw = run({"cwmax", "--n", "10", "--w", "5", "--d", "6"});
    CHECK(cw.code == 0);
    CHECK(cw.out == "6\n");

    CHECK(run({"design", "--in", p15, "--t", "2", "--k", "5"}).code == 0);
    CHECK(run({"scan", "--imin", "6", "--imax", "100"}).code == 0);
    CHECK(run({"stats", "--in", p16}).code == 0);
    CHECK(run({"mdg", "--in", p15, "--out", tmp.file("g.dimacs")}).code == 0);
    CHECK(run({"equiv", "--a", p16, "--b", nr, "--auto-out", tmp.file("f.json")}).code == 0);
    CHECK(run({"wiso", "--a", p16, "--b", nr, "--map-out", tmp.file("m.json")}).code == 0);
    CHECK(run({"isocheck", "--a", p16, "--b", nr, "--map", tmp.file("m.json")}).code == 0);
    CHECK(run({"--threads", "1", "--seed", "3", "wiso", "--a", p16, "--b", p16, "--shuffle"}).code == 0);
  }

  SUBCASE("failing checks exit 1") {
    // the n=15 code read as an extended-mode design fails (not a 3-design)
    CHECK(run({"design", "--in", p15, "--t", "3", "--k", "5"}).code == 1);
    CHECK(run({"equiv", "--a", p15, "--b", p16}).code == 1);
    CHECK(run({"wiso", "--a", p15, "--b", p16}).code == 1);
    // map that swaps two codewords of different weight
    nlohmann::json pairs = nlohmann::json::array();
    const Code c = build_extended_preparata(3);
    const auto six = c.words_of_weight(6).front(), eight = c.words_of_weight(8).front();
    for (const auto& x : c) {
      const auto& y = x == six ? eight : x == eight ? six : x;
      pairs.push_back({x.to_hex(), y.to_hex()});
    }
    write_file(tmp.file("swap.json"), pairs.dump());
    const auto bad = run({"isocheck", "--a", p16, "--b", p16, "--map", tmp.file("swap.json")});
    CHECK(bad.code == 1);
    CHECK(nlohmann::json::parse(bad.out).contains("violation"));
  }

  SUBCASE("usage, parse and I/O errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"verify", "--in", tmp.file("missing.code"), "--suite", "extended"}).code == 2);
    CHECK(run({"verify", "--in", tmp.file("missing.code")}).code == 2);
    CHECK(run({"verify", "--in", p16, "--suite", "sideways"}).code == 2);
    CHECK(run({"verify", "--in", p16, "--suite", "punctured"}).code == 2);
    CHECK(run({"construct", "--n", "32"}).code == 2);
    CHECK(run({"construct", "--n", "16", "--primpoly", "15"}).code == 2);
    CHECK(run({"cwmax", "--n", "30", "--w", "15", "--d", "6"}).code == 2);
    CHECK(run({"scan", "--imin", "3"}).code == 2);
    write_file(tmp.file("bad.code"), "# prepcode v1\nn=16 m=2 d=?\n0000\n00G0\n");
    const auto parse = run({"stats", "--in", tmp.file("bad.code")});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("line 4") != std::string::npos);
    CHECK(run({"puncture", "--in", p16, "--coord", "17"}).code == 2);
    write_file(tmp.file("junk.json"), "{");
    CHECK(run({"isocheck", "--a", p16, "--b", p16, "--map", tmp.file("junk.json")}).code == 2);
  }

  SUBCASE("help and version exit 0") {
    CHECK(run({"--help"}).code == 0);
    const auto v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find(cli::kVersion) != std::string::npos);
  }
}

TEST_CASE("n=64 membership stub") {
  const auto r = run({"construct", "--n", "64"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mode"] == "membership");
  CHECK(j["log2_size"] == 52);
  CHECK(j["modulus"] == 37);
}

TEST_CASE("file digest") {
  TempDir tmp;
  write_file(tmp.file("empty"), "");
  CHECK(cli::file_digest(tmp.file("empty")) == "cbf29ce484222325");
  write_file(tmp.file("a"), "a");
  CHECK(cli::file_digest(tmp.file("a")) == "af63dc4c8601ec8c");
}
