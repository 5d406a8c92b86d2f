#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wqo/cli.hpp"

namespace wqo {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

class TempFile {
public:
  explicit TempFile(const std::string &contents) {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("wqo_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

private:
  fs::path path_;
};

TEST(Cli, CompareRelated) {
  auto r = run({"compare", "--wqo", "E", "b(b(a))", "d(b(a),b(a),b(a))"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "E\trelated\nRELATED\n");
}

TEST(Cli, CompareUnrelatedPerComponent) {
  auto r = run({"compare", "--wqo", "SB", "c(b(a),b(a))", "c(b(b(b(a))),a)"});
  EXPECT_EQ(r.status, 0);
  r = run({"compare", "--wqo", "YZH", "b(b(a))", "d(b(a),b(a),b(a))"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "Y\tunrelated\nZ\tunrelated\nH\tunrelated\nUNRELATED\n");
}

TEST(Cli, CompareErrors) {
  auto r = run({"compare", "--wqo", "H", "c(b(a))", "a"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("expects 2 arguments"), std::string::npos);
  EXPECT_EQ(run({"compare", "--wqo", "Q", "a", "a"}).status, 2);
  EXPECT_EQ(run({"compare", "--wqo", "H", "a"}).status, 2);
}

TEST(Cli, CustomSignature) {
  TempFile sig("# two constructors\nnil 0\ncons 2\n");
  auto r = run({"--sig", sig.path(), "compare", "--wqo", "H", "cons(nil,nil)", "cons(nil,cons(nil,nil))"});
  EXPECT_EQ(r.status, 0);
}

TEST(Cli, WhistleBlows) {
  TempFile stream("a\nb(a)\n");
  auto r = run({"whistle", "--wqo", "S", stream.path()});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0\tADMIT\n1\tWHISTLE\t0\n");
}

TEST(Cli, WhistleExhausted) {
  TempFile stream("b(a)\n\na\n");
  auto r = run({"whistle", "--wqo", "S", stream.path()});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "0\tADMIT\n1\tADMIT\n");
}

TEST(Cli, WhistleOnEuler) {
  TempFile stream("b(b(a))\nd(b(a),b(a),b(a))\n");
  for (bool naive : {false, true}) {
    std::vector<std::string> args = {"whistle", "--wqo", "E", stream.path()};
    if (naive)
      args.insert(args.begin() + 1, "--naive");
    auto r = run(args);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "0\tADMIT\n1\tWHISTLE\t0\n");
  }
}

TEST(Cli, WhistleParseErrorNamesLine) {
  TempFile stream("a\nb(a\n");
  auto r = run({"whistle", "--wqo", "H", stream.path()});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(run({"whistle", "--wqo", "H", "/nonexistent/stream"}).status, 2);
}

TEST(Cli, CensusSingleton) {
  auto r = run({"census", "--n", "1", "--wqo", "all"});
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.starts_with("#") || line.starts_with("wqo_name"))
      continue;
    EXPECT_TRUE(line.ends_with("\t1")) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 27);
}

TEST(Cli, CensusIsReproducible) {
  auto a = run({"census", "--n", "60", "--seed", "5", "--wqo", "H,M,YZE"});
  auto b = run({"census", "--n", "60", "--seed", "5", "--wqo", "H,M,YZE", "--threads", "3"});
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# seed=5 corpus=60"), std::string::npos);
}

TEST(Cli, CensusDumpAndReload) {
  TempFile dump("");
  auto a = run({"census", "--n", "40", "--seed", "2", "--dump", dump.path()});
  auto b = run({"census", "--corpus", dump.path()});
  ASSERT_EQ(a.status, 0);
  ASSERT_EQ(b.status, 0);
  auto body = [](const std::string &s) { return s.substr(s.find('\n')); };
  EXPECT_EQ(body(a.out), body(b.out));
}

TEST(Cli, CensusAudit) {
  auto r = run({"census", "--n", "100", "--audit"});
  EXPECT_EQ(r.status, 0) << r.out;
}

TEST(Cli, BenchEmpty) {
  auto r = run({"bench", "--wqo", "S", "--n", "0"});
  EXPECT_EQ(r.status, 0);
}

TEST(Cli, BadArguments) {
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"--k", "1", "compare", "--wqo", "Y", "a", "a"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

} // namespace
} // namespace wqo
