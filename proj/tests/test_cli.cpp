#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(BEI_CLI) + " " + args + " 2>/dev/null";
  Result r{0, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze prints a full record") {
  const Result r = run("analyze --g6 C~ --s2 --complex");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"accessible\":true") != std::string::npos);
  CHECK(r.out.find("\"multiplicity\":4") != std::string::npos);
}

TEST_CASE("analyze reads edge lists") {
  const auto path = std::filesystem::temp_directory_path() / "bei_cli_edges.txt";
  std::ofstream(path) << "3\n0 1\n1 2\n";
  const Result r = run("analyze --edges " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("\"indecomposable\":false") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("complex prints the text format") {
  const Result r = run("complex --g6 Bg");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# facets\nx1 x2 x3 y1\nx1 x3 y1 y3\nx2 x3 y1 y2\nx3 y1 y2 y3\n# minimal nonfaces\nx1 y2\nx2 y3\n"
        "# f-vector\n1 6 13 12 4\n# h-vector\n1 2 1 0 0\n# multiplicity\n4\n");
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("analyze").code == 1);
  CHECK(run("analyze --g6 '~~'").code == 1);
  CHECK(run("analyze --g6 Bg --edges x").code == 1);
  CHECK(run("analyze --edges /nonexistent/file").code == 2);
  CHECK(run("verify --run /nonexistent/dir").code == 2);
  CHECK(run("families chain --cycles 3,x").code == 1);
  CHECK(run("families helm --k 2").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("enumerate, resume and verify") {
  const auto dir = std::filesystem::temp_directory_path() / "bei_cli_run";
  std::filesystem::remove_all(dir);
  const Result r = run("enumerate --n 5 --s2 --workers 2 --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("equivalence verified") != std::string::npos);
  CHECK(run("verify --run " + dir.string()).code == 0);
  CHECK(run("enumerate --n 5 --s2 --resume --out " + dir.string()).code == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("families") {
  const Result helm = run("families helm --k 5");
  CHECK(helm.code == 0);
  CHECK(helm.out.find("\"accessible\":true") != std::string::npos);
  const Result chain = run("families chain --cycles 4,3 --glue 1,0 --whiskers 0,1");
  CHECK(chain.code == 0);
  CHECK(chain.out.find("\"setup\"") != std::string::npos);
  const Result cat = run("families catalog --rank3");
  CHECK(cat.code == 0);
  CHECK(std::count(cat.out.begin(), cat.out.end(), '\n') == 9);
}
