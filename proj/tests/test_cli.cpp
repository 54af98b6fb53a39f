#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "indpath/graph.hpp"
#include "indpath/report.hpp"

using namespace indpath;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(INDPATH_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("solve: text, json, and csv formats") {
  const CliResult text = run_cli("solve gen:theta:3");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("opt      : 3") != std::string::npos);

  const CliResult json = run_cli("solve --format json --node-vars gen:theta:3");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"opt\":3") != std::string::npos);
  CHECK(json.out.find("\"path\":[") != std::string::npos);
  CHECK(json.out.find("\"config\":\"C^{n}_{int}\"") != std::string::npos);

  const CliResult csv = run_cli("solve --format csv --model walk gen:star:3");
  CHECK(csv.exit_code == 0);
  const auto lines = lines_of(csv.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == csv_header());
  const RunRecord record = from_csv_row(lines[1]);
  CHECK(record.opt == 2);
  CHECK(record.config == "W");
  CHECK(record.status == "optimal");
}

TEST_CASE("solve: exit codes") {
  CHECK(run_cli("solve gen:theta:3").exit_code == 0);
  CHECK(run_cli("solve /nonexistent/missing.edgelist").exit_code == 1);
  CHECK(run_cli("solve --unknown-flag gen:theta:3").exit_code == 1);
  CHECK(run_cli("solve --model warp gen:theta:3").exit_code == 1);
  // Fractional separation belongs to the cut model only.
  CHECK(run_cli("solve --model flow --frac-sep gen:theta:3").exit_code == 1);
  // A generous instance with a zero time limit must report a timeout.
  CHECK(run_cli("solve --time-limit 0 gen:ba:25:3:1").exit_code == 2);
}

TEST_CASE("solve: disconnected input is refused with guidance") {
  const auto dir = fresh_dir("indpath_cli_disconnected");
  const auto file = dir / "two_parts.edgelist";
  std::ofstream(file) << "0 1\n2 3\n";
  const CliResult res = run_cli("solve " + file.string());
  CHECK(res.exit_code == 1);
}

TEST_CASE("solve: karate with the published size solves to the published optimum") {
  const std::string karate = std::string(INDPATH_DATA_DIR) + "/karate.edgelist";
  const CliResult res = run_cli("solve --format csv --node-vars " + karate);
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 2);
  const RunRecord record = from_csv_row(lines[1]);
  CHECK(record.n == 34);
  CHECK(record.m == 78);
  CHECK(record.opt == 8);  // Table-style node count 9
  CHECK(record.status == "optimal");
}

TEST_CASE("generate: deterministic families on disk") {
  const auto dir = fresh_dir("indpath_cli_generate");
  const CliResult ba = run_cli("generate ba --n 20 --d 3 --seeds 0..4 --out " + dir.string());
  CHECK(ba.exit_code == 0);
  for (int seed = 0; seed <= 4; ++seed) {
    const auto file = dir / ("ba_20_3_" + std::to_string(seed) + ".edgelist");
    REQUIRE(std::filesystem::exists(file));
    const Graph g = parse_edge_list_file(file.string()).graph;
    CHECK(g.num_nodes() == 20);
    CHECK(g.num_edges() == 51);
  }

  const CliResult theta = run_cli("generate theta --l 3 --out " + dir.string());
  CHECK(theta.exit_code == 0);
  const Graph t = parse_edge_list_file((dir / "theta_3.edgelist").string()).graph;
  CHECK(t.num_nodes() == 6);
  CHECK(t.num_edges() == 7);

  CHECK(run_cli("generate ba --n 5 --d 9 --seeds 0 --out " + dir.string()).exit_code == 1);
  CHECK(run_cli("generate nosuch --out " + dir.string()).exit_code == 1);
}

TEST_CASE("bench: manifest cross product in order, parallel equals serial") {
  const auto dir = fresh_dir("indpath_cli_bench");
  const auto manifest = dir / "manifest.txt";
  std::ofstream(manifest) << "# tiny sweep\n"
                          << "config C_{int}\n"
                          << "config C^{n}_{int}\n"
                          << "instance gen:theta:3\n"
                          << "instance gen:star:4\n";
  const CliResult serial = run_cli("bench " + manifest.string());
  CHECK(serial.exit_code == 0);
  const auto lines = lines_of(serial.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == csv_header());
  const RunRecord first = from_csv_row(lines[1]);
  CHECK(first.instance == "gen:theta:3");
  CHECK(first.config == "C_{int}");
  CHECK(first.opt == 3);
  const RunRecord last = from_csv_row(lines[4]);
  CHECK(last.instance == "gen:star:4");
  CHECK(last.config == "C^{n}_{int}");
  CHECK(last.opt == 2);

  const CliResult parallel = run_cli("bench --jobs 2 " + manifest.string());
  const auto plines = lines_of(parallel.out);
  REQUIRE(plines.size() == lines.size());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    // Identical rows up to wall time.
    RunRecord a = from_csv_row(lines[i]);
    RunRecord b = from_csv_row(plines[i]);
    a.time_s = b.time_s = 0.0;
    CHECK(to_csv_row(a) == to_csv_row(b));
  }
}

TEST_CASE("bench: empty manifest and partial failures") {
  const auto dir = fresh_dir("indpath_cli_bench2");
  const auto empty = dir / "empty.txt";
  std::ofstream(empty) << "# nothing\n";
  const CliResult none = run_cli("bench " + empty.string());
  CHECK(none.exit_code == 0);
  REQUIRE(lines_of(none.out).size() == 1);  // header only

  const auto broken = dir / "broken.txt";
  std::ofstream(broken) << "config C_{int}\n"
                        << "instance gen:theta:3\n"
                        << "instance /nonexistent/missing.edgelist\n";
  const CliResult mixed = run_cli("bench " + broken.string());
  CHECK(mixed.exit_code == 0);  // partial failures recorded, run continues
  const auto lines = lines_of(mixed.out);
  REQUIRE(lines.size() == 3);
  CHECK(from_csv_row(lines[1]).status == "optimal");
  CHECK(from_csv_row(lines[2]).status == "error");
}

TEST_CASE("analyze: clique bound hierarchy on K6") {
  const CliResult five = run_cli("analyze --clique-bound 5 gen:complete:6");
  CHECK(five.exit_code == 0);
  auto lines = lines_of(five.out);
  REQUIRE(lines.size() == 2);
  {
    std::istringstream row(lines[1]);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 9);
    CHECK(std::stod(fields[5]) >= 1.5 - 1e-6);  // root with cliques bounded at 5
    CHECK(std::stoi(fields[3]) == 1);           // optimum of K6
  }

  const CliResult six = run_cli("analyze --clique-bound 6 gen:complete:6");
  auto lines6 = lines_of(six.out);
  REQUIRE(lines6.size() == 2);
  {
    std::istringstream row(lines6[1]);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    CHECK(std::stod(fields[5]) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::stoi(fields[7]) == 6);  // max clique size
  }

  // Triangle-free instance: clique constraints change nothing.
  const CliResult theta = run_cli("analyze gen:theta:4");
  auto tl = lines_of(theta.out);
  REQUIRE(tl.size() == 2);
  std::istringstream row(tl[1]);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(row, field, ',')) fields.push_back(field);
  CHECK(std::stod(fields[4]) == doctest::Approx(std::stod(fields[5])));
}

TEST_CASE("solve: LP debug dump") {
  const auto dir = fresh_dir("indpath_cli_dump");
  const auto file = dir / "model.lp";
  CHECK(run_cli("solve --dump-lp " + file.string() + " gen:theta:3").exit_code == 0);
  std::ifstream in(file);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str().find("Maximize") != std::string::npos);
  CHECK(buffer.str().find("Subject To") != std::string::npos);
}

TEST_CASE("kernel override leaves results unchanged") {
  const auto run_with_kernel = [&](const std::string& kernel) {
    const std::string cmd = "INDPATH_KERNEL=" + kernel + " " + std::string(INDPATH_CLI_PATH) +
                            " solve --format csv --node-vars gen:ba:14:2:3 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::string out;
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
    pclose(pipe);
    const auto lines = lines_of(out);
    REQUIRE(lines.size() == 2);
    return from_csv_row(lines[1]);
  };
  const RunRecord scalar = run_with_kernel("scalar");
  const RunRecord native = run_with_kernel("avx2");  // detection fallback if absent
  CHECK(scalar.opt == native.opt);
  CHECK(scalar.status == native.status);
}

TEST_CASE("analyze: clique constraints leave this fixed seed's root unchanged") {
  const CliResult res = run_cli("analyze gen:ba:30:3:7");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 2);
  std::istringstream row(lines[1]);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(row, field, ',')) fields.push_back(field);
  REQUIRE(fields.size() == 9);
  CHECK(std::stod(fields[4]) == doctest::Approx(std::stod(fields[5])).epsilon(1e-9));
}

TEST_CASE("time limit env default is honored") {
  // INDPATH_TIME_LIMIT provides the default limit; 0 forces a timeout.
  const std::string cmd = "INDPATH_TIME_LIMIT=0 " + std::string(INDPATH_CLI_PATH) +
                          " solve gen:ba:25:3:1 >/dev/null 2>&1; echo $?";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[64];
  std::string out;
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
  pclose(pipe);
  CHECK(out.substr(0, 1) == "2");
}
