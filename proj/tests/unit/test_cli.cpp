#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "oracles.hpp"
#include "recurseq/cli.hpp"
#include "recurseq/errors.hpp"

using namespace recurseq;
using namespace recurseq::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, Seq) {
  EXPECT_EQ(run_cli({"seq", "-p", "1", "-q", "-1", "--a0", "0", "--a1", "1", "-n", "10"}).out, "55\n");
  EXPECT_EQ(run_cli({"seq", "-p", "1", "-q", "-1", "--a0", "2", "--a1", "1", "-n", "0"}).out, "2\n");
  EXPECT_EQ(run_cli({"seq", "-p", "3", "-q", "2", "--a0", "0", "--a1", "1", "-n", "5"}).out, "31\n");
  EXPECT_EQ(run_cli({"seq", "--p=1", "--q=-1", "-n", "10"}).out, "55\n");
}

TEST(Cli, Ratio) {
  EXPECT_EQ(run_cli({"ratio", "-p", "3", "-q", "2", "-n", "5"}).out, "31/15\n");
  EXPECT_EQ(run_cli({"--format", "decimal:4", "ratio", "-p", "1", "-q", "-1", "-n", "20"}).out,
            "1.6180\n");
  EXPECT_EQ(run_cli({"ratio", "-p", "1", "-q", "-1", "--a0", "2", "--a1", "1", "-n", "4"}).out,
            "7/4\n");
}

TEST(Cli, Accelerate) {
  EXPECT_EQ(run_cli({"accelerate", "-p", "1", "-q", "-1", "--scheme", "double", "--start", "2",
                     "--count", "3"})
                .out,
            "2 1\n4 3/2\n8 21/13\n");
  EXPECT_EQ(run_cli({"accelerate", "-p", "1", "-q", "-1", "--scheme", "fib-index", "--count", "1"})
                .out,
            "2 1\n");
  auto arith = lines(run_cli({"accelerate", "-p", "1", "-q", "-1", "--scheme", "arith", "--h",
                              "2", "--k", "2", "--count", "3"})
                         .out);
  ASSERT_FALSE(arith.empty());
  EXPECT_EQ(arith.back(), "6 8/5");
  auto general = lines(run_cli({"accelerate", "-p", "1", "-q", "-1", "--scheme", "general", "--i",
                                "2", "--j", "3", "--s", "2", "--t", "-1", "--count", "3"})
                           .out);
  ASSERT_EQ(general.size(), 3u);
  EXPECT_EQ(general.back(), "8 21/13");
}

TEST(Cli, Root) {
  EXPECT_EQ(run_cli({"root", "-a", "1", "-b", "1", "-c", "1", "--method", "newton", "--digits",
                     "10"})
                .out,
            "1.6180339887\n");
  EXPECT_EQ(run_cli({"root", "-a", "1", "-b", "0", "-c", "4", "--method", "newton", "--digits",
                     "3"})
                .out,
            "2.000\n");
  auto trace = lines(run_cli({"root", "-a", "1", "-b", "1", "-c", "1", "--method", "halley",
                              "--digits", "8", "--trace"})
                         .out);
  ASSERT_GE(trace.size(), 4u);
  EXPECT_EQ(trace[1], "idx 0 → 1");
  EXPECT_EQ(trace[2], "idx 2 → 3/2");
  EXPECT_EQ(trace[3], "idx 8 → 55/34");
}

TEST(Cli, ContinuedFractions) {
  EXPECT_EQ(run_cli({"cf", "--cf", "1/2, 1/3", "--count", "2"}).out, "1/2\n7/2\n");
  auto quad = lines(run_cli({"cf", "-a", "2", "-b", "2", "-c", "1", "--count", "4", "--form",
                             "sigma"})
                        .out);
  ASSERT_EQ(quad.size(), 4u);
  EXPECT_EQ(quad[3], "11/8");
  EXPECT_EQ(run_cli({"cf", "-a", "2", "-b", "2", "-c", "1", "--count", "4", "--form", "integer"})
                .out,
            run_cli({"cf", "-a", "2", "-b", "2", "-c", "1", "--count", "4"}).out);
}

TEST(Cli, Verify) {
  auto nested = lines(run_cli({"verify", "nested-fib", "--n-max", "20"}).out);
  EXPECT_EQ(nested.back(), "PASS 18/18");
  auto fkn = run_cli({"verify", "fkn", "--k-max", "1", "--n-max", "2"});
  EXPECT_EQ(fkn.code, kOk);
  EXPECT_EQ(lines(fkn.out).back(), "PASS 1/1");
  auto maps = run_cli({"verify", "method-maps", "-p", "1", "-q", "-1", "--k-max", "32"});
  EXPECT_EQ(maps.code, kOk);
  EXPECT_EQ(lines(maps.out).back().rfind("PASS", 0), 0u);
  auto three = run_cli({"verify", "cf-threeway", "-a", "1", "-b", "1", "-c", "1", "--n-max", "20"});
  EXPECT_EQ(three.code, kOk);
  // Output order does not depend on the worker count.
  EXPECT_EQ(run_cli({"verify", "cubic-fib", "--jobs", "1"}).out,
            run_cli({"verify", "cubic-fib", "--jobs", "8"}).out);
}

TEST(Cli, OutputFormats) {
  EXPECT_EQ(parse_output_format("decimal:3").digits, 3u);
  EXPECT_THROW(parse_output_format("decimal:0"), InvalidArgument);
  EXPECT_THROW(parse_output_format("hex"), InvalidArgument);
  OutputFormat rational;
  EXPECT_EQ(format_value(make_rational(-6, 4), rational), "-3/2");

  auto records = run_cli({"--format", "records", "ratio", "-p", "1", "-q", "-1", "-n", "10"});
  EXPECT_EQ(records.code, kOk);
  EXPECT_NE(records.out.find("\"55/34\""), std::string::npos);

  // Emitted rationals read back exactly.
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    Rational x = oracle::random_rational(rng, 100000);
    EXPECT_EQ(parse_rational(format_value(x, rational)), x);
    OutputFormat dec{OutputFormat::Mode::Decimal, 7};
    EXPECT_TRUE(oracle::is_correct_rounding(x, 7, format_value(x, dec)));
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"seq", "-p", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"seq", "-p", "x", "-q", "1", "-n", "3"}).code, kUsage);
  EXPECT_EQ(run_cli({"--max-index", "100", "seq", "-p", "1", "-q", "-1", "-n", "1000"}).code,
            kResource);
  EXPECT_EQ(run_cli({"ratio", "-p", "0", "-q", "1", "-n", "3"}).code, kDegenerate);
  EXPECT_EQ(run_cli({"root", "-a", "1", "-b", "1", "-c", "-1"}).code, kNonReal);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST(Cli, MaxIndexFromEnvironment) {
  ::setenv("RECURSEQ_MAX_INDEX", "50", 1);
  EXPECT_EQ(run_cli({"seq", "-p", "1", "-q", "-1", "-n", "60"}).code, kResource);
  EXPECT_EQ(run_cli({"--max-index", "100", "seq", "-p", "1", "-q", "-1", "-n", "60"}).code, kOk);
  ::unsetenv("RECURSEQ_MAX_INDEX");
}
