#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "kautz/cli.hpp"
#include "kautz/report.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, bool cached = false) {
  args.insert(args.begin(), "kautz");
  if (!cached) args.push_back("--no-cache");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = kautz::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("kautz-cli-" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("analyze reports congestion and ratio") {
  const auto r = run({"analyze", "--d", "2", "--D", "11", "--edge", "012010212021"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cong=18383\n") != std::string::npos);
  CHECK(r.out.find("tau=16384\n") != std::string::npos);
  CHECK(r.out.find("ratio=1.1220\n") != std::string::npos);
  CHECK(r.out.find("beats_tau=true\n") != std::string::npos);
}

TEST_CASE("analyze formats") {
  const auto j = run({"analyze", "--d", "2", "--D", "4", "--edge", "01210", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("cong") == "45");
  CHECK(parsed.at("ratio") == "1.0227");
  const auto c = run({"analyze", "--d", "2", "--D", "4", "--edge", "01210", "--format", "csv"});
  CHECK(c.out == std::string(kautz::kClassCsvHeader) + "\n01210,2,4,45,44,1.0227,false,false,\n");
  const auto cyl =
      run({"analyze", "--d", "2", "--D", "4", "--edge", "01210", "--method", "cylinder"});
  const auto en = run({"analyze", "--d", "2", "--D", "4", "--edge", "01210"});
  CHECK(cyl.out == en.out);
}

TEST_CASE("analyze validation and budget exits") {
  CHECK(run({"analyze", "--d", "2", "--D", "4", "--edge", "01110"}).code == 1);
  CHECK(run({"analyze", "--d", "2", "--D", "5", "--edge", "01210"}).code == 1);
  CHECK(run({"analyze", "--d", "1", "--D", "4", "--edge", "01010"}).code == 1);
  const auto big = run({"analyze", "--d", "2", "--D", "34", "--edge",
                        "01210201021012102120210201210212021"});
  CHECK(big.code == 2);
  CHECK(big.err.find("budget") != std::string::npos);
}

TEST_CASE("usage errors print the grammar") {
  const auto r = run({"frobnicate"});
  CHECK(r.code == 1);
  CHECK(r.err.find("analyze") != std::string::npos);
  CHECK(r.err.find("reproduce") != std::string::npos);
  CHECK(run({}).code == 1);
  CHECK(run({"analyze", "--d", "2"}).code == 1);
  CHECK(run({"bounds", "--d", "2", "--D", "7", "--edge", "01202102", "--side", "up"}).code == 1);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("generate") != std::string::npos);
}

TEST_CASE("scan summary") {
  const auto r = run({"scan", "--d", "2", "--D", "3", "--class", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count=24\n") != std::string::npos);
  CHECK(r.out.find("max_cong=15\n") != std::string::npos);
  CHECK(r.out.find("tau=16\n") != std::string::npos);
  CHECK(r.out.find("beats_tau=false\n") != std::string::npos);
}

TEST_CASE("scan classes and predicates") {
  const auto csf = run({"scan", "--d", "2", "--D", "11", "--class", "circular-square-free",
                        "--format", "json"});
  REQUIRE(csf.code == 0);
  const auto j = nlohmann::json::parse(csf.out);
  CHECK(j.at("count") == 72);
  CHECK(j.at("min_cong") == "18383");
  CHECK(j.at("max_cong") == "19911");
  const auto g = run({"scan", "--d", "2", "--D", "9", "--class",
                      "predicate:full-row:7+unbordered+square-free"});
  CHECK(g.out.find("count=24\n") != std::string::npos);
  CHECK(g.out.find("mean_ratio=1.1403\n") != std::string::npos);
  const auto f = run({"scan", "--d", "2", "--D", "10", "--class", "full-row:8", "--format", "csv"});
  CHECK(std::count(f.out.begin(), f.out.end(), '\n') == 631);
  CHECK(run({"scan", "--d", "2", "--D", "4", "--class", "pretty"}).code == 1);
  CHECK(run({"scan", "--d", "2", "--D", "4", "--class", "predicate:shiny"}).code == 1);
  CHECK(run({"scan", "--d", "2", "--D", "30", "--class", "all"}).code == 2);
}

TEST_CASE("scan CSV written with --out round trips") {
  const auto dir = scratch("out");
  fs::create_directories(dir);
  const auto path = (dir / "scan.csv").string();
  REQUIRE(run({"scan", "--d", "2", "--D", "6", "--class", "unbordered", "--format", "csv", "--out",
               path})
              .code == 0);
  const auto text = slurp(path);
  CHECK(kautz::to_csv(kautz::parse_class_csv(text)) == text);
  fs::remove_all(dir);
}

TEST_CASE("generate nonexistence") {
  const auto r = run({"generate", "--alpha", "2", "--circular", "--length", "17", "--exhaustive"});
  CHECK(r.code == 0);
  CHECK(r.out == "# 0 words of length 17, none exist (exhaustive)\n");
  const auto j = run({"generate", "--alpha", "7/4", "--strict", "--circular", "--length", "16",
                      "--exhaustive", "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("count") == 0);
  CHECK(parsed.at("nonexistent") == true);
  CHECK(parsed.at("alpha") == "7/4");
}

TEST_CASE("generate streams") {
  const auto all = run({"generate", "--alpha", "2", "--circular", "--length", "12", "--exhaustive"});
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 73);
  const auto three = run({"generate", "--alpha", "2", "--circular", "--length", "20", "--count", "3"});
  CHECK(std::count(three.out.begin(), three.out.end(), '\n') == 3);
  const auto one = run({"generate", "--alpha", "2", "--circular", "--length", "20"});
  CHECK(three.out.rfind(one.out, 0) == 0);
  const auto seeded = run({"generate", "--alpha", "2", "--circular", "--length", "30", "--count",
                           "4", "--seed", "99"});
  CHECK(seeded.out == run({"generate", "--alpha", "2", "--circular", "--length", "30", "--count",
                           "4", "--seed", "99"})
                          .out);
  CHECK(run({"generate", "--alpha", "1", "--circular", "--length", "8"}).code == 1);
  CHECK(run({"generate", "--alpha", "2", "--length", "8"}).code == 1);
  CHECK(run({"generate", "--alpha", "2", "--circular", "--length", "8", "--count", "2",
             "--exhaustive"})
            .code == 1);
}

TEST_CASE("bounds command") {
  const auto r = run({"bounds", "--d", "2", "--D", "7", "--edge", "01202102", "--side", "forward"});
  CHECK(r.code == 0);
  CHECK(r.out.find("omega=13/16\n") != std::string::npos);
  CHECK(r.out.find("R_2={3}\n") != std::string::npos);
  CHECK(r.out.find("sufficient=false\n") != std::string::npos);
  CHECK(r.out.find("U_D_lower=344\n") != std::string::npos);
  const auto j = run({"bounds", "--d", "2", "--D", "7", "--edge", "01202102", "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("sparsity").at("side") == "two-sided");
  CHECK(parsed.at("certificate").at("D0") == 35);
  CHECK(run({"bounds", "--d", "2", "--D", "6", "--edge", "0121020"}).code == 1);
}

TEST_CASE("oracle commands") {
  const auto v = run({"oracle", "--d", "3", "--D", "3", "verify"});
  CHECK(v.code == 0);
  CHECK(v.out == "K(3,3): 108 edges checked, 0 mismatches\n");
  const auto e = run({"oracle", "--d", "2", "--D", "4", "edge", "01210"});
  CHECK(e.out.find("cong=45\n") != std::string::npos);
  CHECK(run({"oracle", "--d", "2", "--D", "4"}).code == 1);
}

TEST_CASE("reproduce exit codes") {
  const auto a = run({"reproduce", "--table", "appendix-a"});
  CHECK(a.code == 3);
  CHECK(a.out.find("D=15 word=0121020102120102 cong=431623 ratio=1.197  ok") != std::string::npos);
  CHECK(a.out.find("D=5 word=012102 cong=123 (expected 113)") != std::string::npos);
  const auto t = run({"reproduce", "--table", "table-1", "--format", "json"});
  CHECK(t.code == 0);
  const auto parsed = nlohmann::json::parse(t.out);
  CHECK(parsed.at("rows").size() == 2);
  CHECK(parsed.at("diff").empty());
  CHECK(run({"reproduce", "--table", "section-7-1"}).code == 0);
  CHECK(run({"reproduce", "--table", "appendix-a", "--D-max", "4"}).code == 0);
  CHECK(run({"reproduce", "--table", "appendix-a", "--D-max", "34"}).code == 2);
  CHECK(run({"reproduce", "--table", "table-9"}).code == 1);
}

TEST_CASE("threads flag and environment") {
  const std::vector<std::string> base{"analyze", "--d", "2", "--D", "9", "--edge", "0120210201"};
  auto with_flag = base;
  with_flag.insert(with_flag.end(), {"--threads", "2"});
  const auto reference = run(base).out;
  CHECK(run(with_flag).out == reference);
  auto zero = base;
  zero.insert(zero.end(), {"--threads", "0"});
  CHECK(run(zero).code == 1);
  ::setenv("KAUTZ_THREADS", "nope", 1);
  CHECK(run(base).code == 1);
  CHECK(run(with_flag).out == reference);  // flag wins
  ::setenv("KAUTZ_THREADS", "3", 1);
  CHECK(run(base).out == reference);
  ::unsetenv("KAUTZ_THREADS");
}

TEST_CASE("cache directory is used and reruns are byte-identical") {
  const auto dir = scratch("cache");
  const std::vector<std::string> args{"analyze", "--d",  "2", "--D", "8", "--edge", "012102120",
                                      "--cache-dir", dir.string()};
  const auto first = run(args, true);
  REQUIRE(first.code == 0);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);
  const auto second = run(args, true);
  CHECK(second.out == first.out);
  const auto scan = std::vector<std::string>{"scan", "--d", "2", "--D", "5", "--class", "all",
                                             "--cache-dir", dir.string()};
  const auto s1 = run(scan, true);
  const auto s2 = run(scan, true);
  CHECK(s1.out == s2.out);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1 + 96);
  fs::remove_all(dir);
}
