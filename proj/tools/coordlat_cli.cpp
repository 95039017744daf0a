// coordlat: exact lattice point tables, central series, and verification
// suites on the command line.
//
//   coordlat table  --array ball --N 8 --format pretty
//   coordlat series --family coord --max-n 30 --format csv
//   coordlat verify zeros --smoke --format json
//
// Output is deterministic for a fixed command line; `verify` adds wall-clock
// timing to the pretty format unless --no-timing is given. Values that do not
// fit in 64 bits are emitted as decimal strings in JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include "coordlat/lattice.hpp"
#include "coordlat/riordan.hpp"
#include "coordlat/verify.hpp"

#include <chrono>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

using namespace coordlat;
using json = nlohmann::ordered_json;

namespace {

json json_int(const Int& v) {
  static const Int lo(std::numeric_limits<long long>::min());
  static const Int hi(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return json(v.convert_to<long long>());
  return json(v.str());
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q += c;
  }
  return q + "\"";
}

Int entry_to_int(const Rat& q) {
  if (rat_denominator(q) != 1)
    throw std::logic_error("window entry is not an integer");
  return rat_numerator(q);
}

std::vector<std::vector<Int>> build_table(const std::string& array, long m, long n) {
  RiordanArray arr;
  if (array == "shell") arr = make_shell(int(n));
  else if (array == "coord") arr = make_coord(int(n));
  else if (array == "ball") arr = make_ball(int(n));
  else if (array == "shell-tri") arr = make_shell_tri(int(n));
  else if (array == "coord-tri") arr = make_coord_tri(int(n));
  else if (array == "ball-tri") arr = make_ball_tri(int(n));
  else if (array == "pascal") arr = make_pascal_tri(int(n));
  else if (array == "pascal-square") arr = make_pascal_square(int(n));
  else if (array == "family") arr = make_family(m, int(n));
  else throw std::invalid_argument("unknown array: " + array);
  RatMat w = riordan_window(arr, n, n);
  std::vector<std::vector<Int>> grid(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    grid[std::size_t(i)].reserve(std::size_t(n));
    for (long j = 0; j < n; ++j)
      grid[std::size_t(i)].push_back(entry_to_int(w(i, j)));
  }
  return grid;
}

int run_table(const std::string& array, long m, long n, const std::string& format) {
  std::vector<std::vector<Int>> grid = build_table(array, m, n);
  if (format == "csv") {
    for (const auto& row : grid) {
      for (std::size_t j = 0; j < row.size(); ++j)
        std::cout << (j ? "," : "") << row[j].str();
      std::cout << "\n";
    }
    return 0;
  }
  if (format == "json") {
    json out;
    out["array"] = array;
    if (array == "family") out["m"] = m;
    out["n"] = n;
    json rows = json::array();
    for (const auto& row : grid) {
      json r = json::array();
      for (const Int& v : row) r.push_back(json_int(v));
      rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 1;
  for (const auto& row : grid)
    for (const Int& v : row) width = std::max(width, v.str().size());
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string s = row[j].str();
      std::cout << (j ? "  " : "") << std::string(width - s.size(), ' ') << s;
    }
    std::cout << "\n";
  }
  return 0;
}

int run_series(const std::string& family, long maxN, const std::string& format) {
  DiagKind kind;
  if (family == "ball") kind = DiagKind::Ball;
  else if (family == "shell") kind = DiagKind::Shell;
  else if (family == "coord") kind = DiagKind::Coord;
  else if (family == "schroeder") kind = DiagKind::Schroeder;
  else throw std::invalid_argument("unknown family: " + family);
  std::vector<Int> values = diagonal(kind, maxN);
  if (format == "csv") {
    for (long i = 0; i <= maxN; ++i)
      std::cout << i << "," << values[std::size_t(i)].str() << "\n";
    return 0;
  }
  if (format == "json") {
    json out;
    out["family"] = family;
    out["max_n"] = maxN;
    json vals = json::array();
    for (const Int& v : values) vals.push_back(json_int(v));
    out["values"] = std::move(vals);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::size_t idxWidth = std::to_string(maxN).size();
  for (long i = 0; i <= maxN; ++i) {
    std::string idx = std::to_string(i);
    std::cout << std::string(idxWidth - idx.size(), ' ') << idx << "  "
              << values[std::size_t(i)].str() << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& opt, long seed,
               bool timing, const std::string& format) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Check> checks = verify_suite(suite, opt);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  long failed = 0;
  for (const Check& c : checks)
    if (!c.pass) ++failed;

  if (format == "csv") {
    std::cout << "id,claim,verdict,witness\n";
    for (const Check& c : checks)
      std::cout << csv_quote(c.id) << "," << csv_quote(c.claim) << ","
                << (c.pass ? "pass" : "fail") << "," << csv_quote(c.witness)
                << "\n";
  } else if (format == "json") {
    json out;
    out["suite"] = suite;
    json params;
    params["smoke"] = opt.smoke;
    if (opt.window > 0) params["window"] = opt.window;
    if (opt.maxOrder > 0) params["max_order"] = opt.maxOrder;
    out["params"] = std::move(params);
    json list = json::array();
    for (const Check& c : checks) {
      json item;
      item["id"] = c.id;
      item["claim"] = c.claim;
      item["verdict"] = c.pass ? "pass" : "fail";
      if (!c.witness.empty()) item["witness"] = c.witness;
      list.push_back(std::move(item));
    }
    out["checks"] = std::move(list);
    out["seed"] = seed;
    if (timing) out["elapsed_ms"] = elapsed;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Check& c : checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << "\n";
      std::cout << "       " << c.claim << "\n";
      if (!c.witness.empty()) std::cout << "       -> " << c.witness << "\n";
    }
    std::cout << checks.size() << " checks, " << (checks.size() - failed)
              << " passed, " << failed << " failed";
    if (timing) std::cout << " (" << elapsed << " ms)";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cubic-lattice tables, central series, and verification"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"csv", "json", "pretty"};

  auto* table = app.add_subcommand("table", "print a window of a named array");
  std::string tArray = "ball", tFormat = "pretty";
  long tN = 8, tM = 2;
  table->add_option("--array", tArray, "array to print")
      ->check(CLI::IsMember({"shell", "coord", "ball", "shell-tri", "coord-tri",
                             "ball-tri", "pascal", "pascal-square", "family"}));
  table->add_option("--N,--window", tN, "window size")->check(CLI::Range(1, 64));
  table->add_option("--m", tM, "family parameter (with --array family)")
      ->check(CLI::Range(0, 1000));
  table->add_option("--format", tFormat, "output format")
      ->check(CLI::IsMember(formats));

  auto* series = app.add_subcommand("series", "print a central sequence");
  std::string sFamily = "ball", sFormat = "pretty";
  long sMaxN = 30;
  series->add_option("--family", sFamily, "which central sequence")
      ->check(CLI::IsMember({"ball", "shell", "coord", "schroeder"}));
  series->add_option("--max-n", sMaxN, "last index to print")
      ->check(CLI::Range(0, 2000));
  series->add_option("--format", sFormat, "output format")
      ->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string vSuite = "all", vFormat = "pretty";
  bool vSmoke = false, vNoTiming = false;
  long vSeed = 0, vWindow = 0, vMaxOrder = 0;
  verify->add_option("suite", vSuite, "suite name or 'all'")
      ->check(CLI::IsMember({"all", "riordan", "positivity", "zeros", "hankel",
                             "normality"}));
  verify->add_flag("--smoke", vSmoke, "reduced ranges for a quick pass");
  verify->add_flag("--no-timing", vNoTiming, "omit wall-clock timing");
  verify->add_option("--seed", vSeed, "echoed into the JSON report")
      ->check(CLI::Range(0L, std::numeric_limits<long>::max()));
  verify->add_option("--window", vWindow, "positivity window override")
      ->check(CLI::Range(2, 12));
  verify->add_option("--max-order", vMaxOrder, "positivity minor-order override")
      ->check(CLI::Range(1, 6));
  verify->add_option("--format", vFormat, "output format")
      ->check(CLI::IsMember(formats));

  CLI11_PARSE(app, argc, argv);

  try {
    if (table->parsed()) return run_table(tArray, tM, tN, tFormat);
    if (series->parsed()) return run_series(sFamily, sMaxN, sFormat);
    VerifyOptions opt;
    opt.smoke = vSmoke;
    opt.window = vWindow;
    opt.maxOrder = vMaxOrder;
    return run_verify(vSuite, opt, vSeed, !vNoTiming, vFormat);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
