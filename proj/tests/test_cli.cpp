#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "beattylab/cli.hpp"
#include "beattylab/report.hpp"

using namespace beattylab;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "beattylab");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    v.push_back(l);
  return v;
}

bool naive_prime(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace

TEST_CASE("empty report is the CSV header alone") {
  CHECK(report::emit_report({}, report::Format::csv) == "check_id,params,lhs,rhs,margin,pass\n");
  CHECK(json::parse(report::emit_report({}, report::Format::json)).empty());
}

TEST_CASE("one record gives one row with margin rhs - lhs") {
  const auto r = VerificationRecord::make("x.one", {{"k", std::int64_t{3}}}, 0.1, 0.3);
  const auto text = report::emit_report({r}, report::Format::csv);
  const auto ls = lines(text);
  REQUIRE(ls.size() == 2);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", 0.3 - 0.1);
  CHECK(ls[1] == std::string("x.one,k=3,0.10000000000000001,0.29999999999999999,") + buf + ",true");

  const auto j = json::parse(report::emit_report({r}, report::Format::json));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["margin"].get<double>() == 0.3 - 0.1);
  CHECK(j[0]["pass"].get<bool>());
}

TEST_CASE("fields containing commas are quoted") {
  const auto r = VerificationRecord::make("x,y", {{"s", std::string("a\"b")}}, 1, 1);
  CHECK(lines(report::emit_report({r}, report::Format::csv))[1] == "\"x,y\",\"s=a\"\"b\",1,1,0,true");
}

TEST_CASE("a thousand records sort by id then params whatever the input order") {
  std::vector<VerificationRecord> recs;
  for (std::int64_t i = 0; i < 1000; ++i)
    recs.push_back(VerificationRecord::make("id." + std::to_string(i % 7), {{"i", i}}, 1, 2));
  const auto expected = report::emit_report(recs, report::Format::csv);
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(recs.begin(), recs.end(), gen);
    REQUIRE(report::emit_report(recs, report::Format::csv) == expected);
  }
  const auto ls = lines(expected);
  REQUIRE(ls.size() == 1001);
  for (std::size_t i = 2; i < ls.size(); ++i) {
    const auto id_prev = ls[i - 1].substr(0, ls[i - 1].find(','));
    const auto id_cur = ls[i].substr(0, ls[i].find(','));
    REQUIRE(id_prev <= id_cur);
  }
  CHECK(lines(expected)[1].rfind("id.0,i=0,", 0) == 0);
}

TEST_CASE("least-prime on the golden ratio") {
  long n = 1, p = 0;
  const double G = (1 + std::sqrt(5.0)) / 2;
  for (;; ++n)
    if (naive_prime(p = static_cast<long>(std::floor(n * G))))
      break;
  const auto r = invoke({"least-prime", "--alpha", "surd:(1+sqrt(5))/2", "--beta", "rat:0/1", "--limit", "1000"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["prime"] == p);
  CHECK(j["n"] == n);
  CHECK(p == 3);
}

TEST_CASE("rational decomposition of B(15/2, 3)") {
  const auto r = invoke({"rational", "--a", "15", "--q", "2", "--beta", "rat:3/1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["offsets"] == json::array({10, 18}));
  CHECK(j["prime_class"] == false);
  CHECK(j["contains_prime"] == false);
}

TEST_CASE("dsq check up to 171 exits 1 and flags X = 2") {
  const auto r = invoke({"verify", "explicit", "--check", "dsq", "--xmax", "171"});
  CHECK(r.code == 1);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[2].rfind("explicit.dsq.violation,X=2,5,4.66", 0) == 0);
  CHECK(ls[2].substr(ls[2].size() - 6) == ",false");
  CHECK(invoke({"verify", "explicit", "--check", "d3sq", "--xmax", "2000"}).code == 0);
}

TEST_CASE("usage errors exit 2 with a diagnostic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"nonsense"},
           {"bound", "--eps", "0.02"},
           {"bound", "--alpha", "pi", "--eps", "0.02"},
           {"bound", "--alpha", "surd:(1+sqrt(5))/2", "--eps", "0.02", "--mode", "fast"},
           {"verify", "vaughan", "--suite", "unknown"},
           {"verify", "explicit", "--check", "dsq", "--xmax", "100", "--sieve-limit", "50"},
           {"rational", "--a", "14", "--q", "4"},
           {"cf", "--alpha", "rat:3/2", "--terms", "20", "--cap", "10"},
       }) {
    const auto r = invoke(args);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("bound reports m, ell and provenance") {
  const auto r = invoke({"bound", "--alpha", "surd:(1+sqrt(5))/2", "--eps", "0.02", "--ell", "20", "--mode", "exact"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["m"] == 7);
  CHECK(j["ell"] == 20.0);
  CHECK(j["provenance"] == "exact_convergent");
  // p_27 of the golden ratio is F_29 = 514229
  CHECK(j["log_p_m_ell"].get<double>() == doctest::Approx(std::log(514229.0)));
  CHECK(j["log10_bound"].get<double>() == doctest::Approx(j["log_bound"].get<double>() / std::log(10.0)));

  const auto est = json::parse(invoke({"bound", "--alpha", "surd:(1+sqrt(5))/2", "--eps", "0.02"}).out);
  CHECK(est["provenance"] == "growth_rate_estimate");
}

TEST_CASE("cf prints convergents as CSV") {
  const auto r = invoke({"cf", "--alpha", "surd:(0+sqrt(2))/1", "--terms", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "n,a_n,p_n,q_n\n0,1,1,1\n1,2,3,2\n2,2,7,5\n3,2,17,12\n");
}

TEST_CASE("members of alpha = 4 + sqrt(2)/10 start with multiples of 4") {
  const auto r = invoke({"members", "--alpha", "surd:(40+sqrt(2))/10", "--count", "7", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.size() == 7);
  for (int i = 0; i < 7; ++i) {
    CHECK(j[i]["element"] == 4 * (i + 1));
    CHECK(j[i]["is_prime"] == false);
  }
}

TEST_CASE("same seed gives byte-identical output across worker counts") {
  for (const char* suite : {"identity", "sh", "chi-sum", "bilinear"}) {
    const auto one = invoke({"verify", "vaughan", "--suite", suite, "--seed", "11", "--n", "3000", "--cases", "4", "--workers", "1"});
    const auto four = invoke({"verify", "vaughan", "--suite", suite, "--seed", "11", "--n", "3000", "--cases", "4", "--workers", "4"});
    CAPTURE(suite);
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(lines(one.out).size() > 1);
  }
  const auto a = invoke({"verify", "vaughan", "--suite", "identity", "--seed", "11", "--cases", "4"});
  const auto b = invoke({"verify", "vaughan", "--suite", "identity", "--seed", "12", "--cases", "4"});
  CHECK(a.out != b.out);
}

TEST_CASE("--out writes the file and --explain describes a subcommand") {
  const std::string path = "test_cli_out.csv";
  const auto r = invoke({"--out", path, "verify", "beatty", "--alpha", "surd:(1+sqrt(5))/2", "--check", "rayleigh", "--n", "1000"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().rfind("check_id,params", 0) == 0);
  std::remove(path.c_str());

  const auto e = invoke({"bound", "--explain"});
  CHECK(e.code == 0);
  CHECK(e.out.find("p_{m+ell}") != std::string::npos);
}
