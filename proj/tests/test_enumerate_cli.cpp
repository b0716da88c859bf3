#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "quadfactor/enumerate.hpp"
#include "quadfactor/factorization.hpp"
#include "quadfactor/selftest.hpp"

using namespace quadfactor;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "quadfactor");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "quadfactor_tests";
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("fixed polyomino counts") {
  // Counts of fixed polyominoes, holes included.
  const std::vector<std::size_t> expected{1, 2, 6, 19, 63, 216, 760, 2725};
  for (std::size_t n = 1; n <= expected.size(); ++n) CHECK(fixed_polyominoes(n).size() == expected[n - 1]);
}

TEST_CASE("enumerate_boards") {
  CHECK(enumerate_boards(1).size() == 1);
  CHECK(enumerate_boards(2).size() == 2);
  CHECK(enumerate_boards(3).size() == 6);
  // Of the 760 heptominoes, four enclose a single hole.
  CHECK(enumerate_boards(7).size() == 756);
  CHECK_THROWS_AS(enumerate_boards(0), InputError);
  CHECK_THROWS_AS(enumerate_boards(kMaxEnumerationCells + 1), InputError);
  CHECK(board_universe(3).size() == 9);
  for (const auto& inst : enumerate_boards(4)) {
    CHECK(inst.disk.square_count() == 4);
    CHECK(cells_to_text(inst.cells) == inst.text());
  }
}

TEST_CASE("selftest") {
  SelftestOptions options;
  options.max_cells = 4;
  options.threads = 2;
  const auto report = selftest(options);
  CHECK(report.failures() == 0);
  CHECK(report.instances.size() == 1 + 2 + 6 + 19);
  CHECK(report.text().find("total 28 boards, 0 failed") != std::string::npos);

  options.threads = 1;
  CHECK(selftest(options).text() == report.text());

  options.tamper = [](std::size_t instance, LDUFactorization& f) {
    if (instance == 5) f.upper(0, 0) = 2;
  };
  const auto broken = selftest(options);
  CHECK(broken.failures() == 1);
  const auto text = broken.text();
  CHECK(text.find("FAIL instance 5") != std::string::npos);
  CHECK(text.find(broken.instances[5].text()) != std::string::npos);
}

TEST_CASE("cli validate and info") {
  const auto good = temp_file("rect.txt", "###\n###\n");
  CHECK(cli({"validate", good}).code == kExitOk);
  CHECK(cli({"info", good}).code == kExitOk);
  CHECK(cli({"diagonals", good}).code == kExitOk);

  const auto ring = temp_file("ring.txt", "###\n#.#\n###\n");
  const auto bad = cli({"validate", ring});
  CHECK(bad.code == kExitInput);
  CHECK(bad.err.find("not simply connected") != std::string::npos);

  CHECK(cli({"validate", temp_file("empty.txt", "")}).code == kExitInput);
  CHECK(cli({"validate", "/nonexistent/board.txt"}).code == kExitInput);
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK(cli({"nosuchcommand"}).code == kExitInput);
}

TEST_CASE("cli factor json round trip") {
  const auto path = temp_file("zig.txt", "..##\n####\n##..\n");
  const auto run = cli({"factor", path, "--format", "json"});
  REQUIRE(run.code == kExitOk);
  const auto doc = nlohmann::json::parse(run.out);
  LDUFactorization f;
  f.black_order = doc["black_order"].get<std::vector<std::size_t>>();
  f.white_order = doc["white_order"].get<std::vector<std::size_t>>();
  using Rows = std::vector<std::vector<std::int64_t>>;
  f.lower = IntMatrix::from_rows(doc["L"].get<Rows>());
  f.defective = IntMatrix::from_rows(doc["D"].get<Rows>());
  f.upper = IntMatrix::from_rows(doc["U"].get<Rows>());
  const auto b = IntMatrix::from_rows(doc["B"].get<Rows>());
  CHECK(verify_factorization(b, f));
  CHECK(doc["black"] == 4);
  CHECK(doc["white"] == 4);
  CHECK(doc["det"].is_number_integer());

  const auto text = cli({"factor", path});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("rank") != std::string::npos);
}

TEST_CASE("cli arithmetic commands") {
  const auto tromino = temp_file("tromino.txt", "##\n#.\n");
  CHECK(cli({"det", tromino}).code == kExitInput);
  const auto rank = cli({"rank", tromino});
  CHECK(rank.code == kExitOk);
  CHECK(rank.out == "1\n");

  const auto domino = temp_file("domino.txt", "##\n");
  const auto det = cli({"det", domino});
  CHECK(det.code == kExitOk);
  CHECK((det.out == "1\n" || det.out == "-1\n"));

  const auto block = temp_file("block.txt", "##\n##\n");
  CHECK(cli({"solve", block, "--rhs", "3,3"}).code == kExitOk);
  const auto none = cli({"solve", block, "--rhs", "1,0"});
  CHECK(none.code == kExitOk);
  CHECK(none.out.find("no solution") != std::string::npos);
  CHECK(cli({"solve", block, "--rhs", "1"}).code == kExitInput);

  CHECK(cli({"oracle", block}).code == kExitOk);
  CHECK(cli({"cutpaste", block}).code == kExitOk);
}

TEST_CASE("cli enumerate and selftest") {
  const auto count = cli({"enumerate", "5", "--count"});
  CHECK(count.code == kExitOk);
  CHECK(count.out == "63\n");
  CHECK(cli({"enumerate", "11"}).code == kExitInput);
  const auto self = cli({"selftest", "3", "--threads", "1"});
  CHECK(self.code == kExitOk);
  CHECK(self.out.find("0 failed") != std::string::npos);
}
