#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "sjack/cli.hpp"
#include "sjack/report.hpp"

using namespace sjack;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"shifted-jack"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : owned) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "sjack-cli-XXXXXX").string();
    path = ::mkdtemp(tmpl.data());
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("coeff") {
  auto r = run({"coeff", "--mu", "1", "--nu", "1", "--lambda", "1,1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("c        = 2*alpha/(1 + alpha)") != std::string::npos);
  CHECK(r.out.find("g        = 2*alpha^2") != std::string::npos);

  r = run({"coeff", "--mu", "3,1", "--nu", "2,1", "--lambda", "4,2,1", "--format", "json"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["g_laurent"]["min_exp"] == 5);
  CHECK(j["g_laurent"]["coeffs"] == Json::parse(R"(["72","776","2352","2568","1048","96"])"));
  CHECK(j["nonneg_integer"] == true);

  r = run({"coeff", "--mu", "2", "--nu", "1", "--lambda", "1,1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("c        = 0\n") != std::string::npos);
  CHECK(r.out.find("g        = 0\n") != std::string::npos);

  for (const char* engine : {"triple-sum", "linear-solve"}) {
    auto e = run({"coeff", "--mu", "2,1", "--nu", "1", "--lambda", "3,1", "--format", "json", "--engine", engine});
    auto base = run({"coeff", "--mu", "2,1", "--nu", "1", "--lambda", "3,1", "--format", "json"});
    CHECK(e.code == kExitOk);
    CHECK(e.out == base.out);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"coeff", "--mu", "1", "--nu", "1"}).code == kExitUsage);
  auto bad = run({"coeff", "--mu", "1,x", "--nu", "1", "--lambda", "1"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("--mu") != std::string::npos);
  CHECK(run({"coeff", "--mu", "1,2", "--nu", "1", "--lambda", "2,1"}).code == kExitUsage);
  CHECK(run({"coeff", "--mu", "1", "--nu", "1", "--lambda", "2", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"eval", "--mu", "2"}).code == kExitUsage);
  CHECK(run({"eval", "--mu", "1", "--point", "1,2"}).code == kExitUsage);
  CHECK(run({"eval", "--mu", "1", "--point", "1,2", "--alpha", "0"}).code == kExitUsage);
  CHECK(run({"eval", "--mu", "1", "--lambda", "1", "--point", "1"}).code == kExitUsage);
  CHECK(run({"falling", "--mu", "1,1", "--n", "1"}).code == kExitUsage);
  CHECK(run({"falling", "--mu", "a", "--n", "1"}).code == kExitUsage);
  CHECK(run({"verify", "--max-mu", "-1", "--max-nu", "0"}).code == kExitUsage);
  CHECK(run({"verify", "--max-mu", "1", "--max-nu", "1", "--samples", "0"}).code == kExitUsage);
  CHECK(run({"verify", "--max-mu", "1", "--max-nu", "1", "--samples", "1/0"}).code == kExitUsage);
  CHECK(run({"verify", "--max-mu", "1", "--max-nu", "1", "--jobs", "0"}).code == kExitUsage);
  CHECK(run({"verify", "--max-mu", "1", "--max-nu", "1", "--out", "/nonexistent-dir/x.json"}).code == kExitUsage);
  CHECK(run({"table", "--mu", "1"}).code == kExitUsage);
}

TEST_CASE("help and version exit 0") {
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"coeff", "--help"}).code == kExitOk);
  auto v = run({"--version"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find(kToolVersion) != std::string::npos);
}

TEST_CASE("eval") {
  auto r = run({"eval", "--mu", "2", "--lambda", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "2\n");
  CHECK(run({"eval", "--mu", "2", "--lambda", "1"}).out == "0\n");
  CHECK(run({"eval", "--mu", "1,1", "--lambda", "1,1"}).out == "(1 + alpha)/alpha\n");
  CHECK(run({"eval", "--mu", "1,1", "--lambda", "1,1", "--alpha", "1/2"}).out == "3\n");
  CHECK(run({"eval", "--mu", "1", "--point", "5,2", "--alpha", "3"}).out == "7\n");
  CHECK(run({"eval", "--mu", "1,1", "--point", "1,1", "--alpha", "1"}).out == "2\n");
}

TEST_CASE("falling") {
  auto r = run({"falling", "--mu", "1", "--n", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("alpha^0 b=(1,0): 1") != std::string::npos);
  CHECK(r.out.find("alpha^0 b=(0,1): 2") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  auto j = run({"falling", "--mu", "2,1", "--n", "2", "--format", "json"});
  CHECK(j.code == kExitOk);
  CHECK(Json::parse(j.out)["verdict"] == "PASS");
}

TEST_CASE("table") {
  auto r = run({"table", "--mu", "1", "--nu", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "1\t1\n2\t1\n1,1\t2*alpha/(1 + alpha)\n");
  auto csv = run({"table", "--mu", "1", "--nu", "1", "--format", "csv"});
  CHECK(csv.out == "lambda,c\n\"1\",\"1\"\n\"2\",\"1\"\n\"1,1\",\"2*alpha/(1 + alpha)\"\n");
  auto json = run({"table", "--mu", "1", "--nu", "1", "--format", "json"});
  const Json j = Json::parse(json.out);
  CHECK(j["coefficients"].size() == 3);
  CHECK(rational_from_json(j["coefficients"][2]["c"]).to_string() == "2*alpha/(1 + alpha)");
}

TEST_CASE("verify: reports, determinism and round trip") {
  TempDir dir;
  const auto a = (dir.path / "a.json").string();
  const auto b = (dir.path / "b.json").string();
  CHECK(run({"verify", "--max-mu", "2", "--max-nu", "2", "--out", a}).code == kExitOk);
  CHECK(run({"verify", "--max-mu", "2", "--max-nu", "2", "--out", b, "--jobs", "3"}).code == kExitOk);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));

  const Json report = Json::parse(text);
  CHECK(report.dump(2) + "\n" == text);
  CHECK(report["metadata"]["tool"] == "shifted-jack");
  CHECK(report["metadata"]["timestamp"].is_null());
  CHECK(report["metadata"]["alpha_samples"] == Json::parse(R"(["1/2","1","3"])"));
  CHECK(report["metadata"]["failure_count"] == 0);
  CHECK(report["failures"].empty());
  CHECK(report["records"].size() == report["metadata"]["record_count"].get<std::size_t>());
  for (const auto& rec : report["records"]) {
    CHECK(rec["nonneg_integer"] == true);
    const AlphaLaurent l = laurent_from_json(rec["g_laurent"]);
    CHECK(l.to_rational() == rational_from_json(rec["g"]));
  }

  auto pinned = run({"verify", "--max-mu", "1", "--max-nu", "1", "--timestamp", "2024-01-01T00:00:00Z"});
  CHECK(Json::parse(pinned.out)["metadata"]["timestamp"] == "2024-01-01T00:00:00Z");
  auto now = run({"verify", "--max-mu", "1", "--max-nu", "1", "--timestamp", "now"});
  CHECK(Json::parse(now.out)["metadata"]["timestamp"].is_string());

  auto zero = run({"verify", "--max-mu", "0", "--max-nu", "0"});
  CHECK(zero.code == kExitOk);
  const Json z = Json::parse(zero.out);
  REQUIRE(z["records"].size() == 1);
  CHECK(z["records"][0]["mu"] == "");
  CHECK(z["records"][0]["lambda"] == "");

  auto csv = run({"verify", "--max-mu", "1", "--max-nu", "1", "--format", "csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.rfind("mu,nu,lambda,g_min_exp,g_coeffs,is_laurent,nonneg_integer,shift_poly_ok\n", 0) == 0);
  CHECK(csv.out.find("1,1,\"1,1\",2,2,true,true,true\n") != std::string::npos);
}

TEST_CASE("report failures are data") {
  VerifyResult result;
  ConstantRecord rec{{Partition{1}, Partition{1}, Partition{2}}, AlphaRational(1), AlphaRational(-1), {}, {}};
  rec.g_laurent = to_laurent(rec.g);
  rec.nonneg_integer = false;
  result.records.push_back(rec);
  result.failures.push_back({rec.key, FailureReason::negative_coefficient});
  const Json j = report_to_json(ReportMetadata{1, 1, {BigRat(1)}, std::nullopt}, result);
  CHECK(j["metadata"]["failure_count"] == 1);
  CHECK(j["failures"][0]["reason"] == "negative-coefficient");
  CHECK(j["failures"][0]["lambda"] == "2");
  CHECK(report_to_csv(result).find("1,1,2,0,-1,true,false,false\n") != std::string::npos);
  CHECK(verify_exit_code(result) == kExitFinding);
  result.failures.clear();
  CHECK(verify_exit_code(result) == kExitOk);
}

TEST_CASE("json helpers reject malformed input") {
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"min_exp": "x", "coeffs": []})")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"min_exp": 0, "coeffs": [1]})")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"num": ["1/2"], "den": ["1"]})")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"num": ["1"]})")), std::invalid_argument);
}

TEST_CASE("installed binary honours the exit-code contract") {
  const char* bin = std::getenv("SHIFTED_JACK_BIN");
  if (bin == nullptr) return;
  auto status = [&](const std::string& args) {
    const int raw = std::system((std::string(bin) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("--version") == 0);
  CHECK(status("eval --mu 2 --lambda 2") == 0);
  CHECK(status("verify --max-mu 1 --max-nu 1") == 0);
  CHECK(status("coeff --mu x --nu 1 --lambda 1") == 2);
  CHECK(status("") == 2);
}
