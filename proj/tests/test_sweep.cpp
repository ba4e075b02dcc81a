#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sshowe/certify.hpp"
#include "sshowe/sweep.hpp"

using namespace sshowe;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("prime range and strategy validation") {
  CHECK(primes_in_range(7, 30) == std::vector<uint64_t>{7, 11, 13, 17, 19, 23, 29});
  CHECK(strategy_from_name("jpairs") == Strategy::JPairs);
  CHECK_THROWS_AS(strategy_from_name("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(validate_strategy(4, Strategy::JPairs), std::invalid_argument);
  CHECK_THROWS_AS(validate_strategy(5, Strategy::Cor), std::invalid_argument);
  CHECK_THROWS_AS(validate_strategy(7, Strategy::Auto), std::invalid_argument);
  validate_strategy(4, Strategy::Cor);
  validate_strategy(6, Strategy::Pairs);
}

TEST_CASE("genus-4 sweep over (7, 100]: bottoms exactly at 13, 19, 73") {
  TempDir dir("sshowe_sweep_g4");
  SweepConfig cfg;
  cfg.genus = 4;
  cfg.pmin = 8;
  cfg.pmax = 100;
  cfg.out_dir = dir.path.string();
  std::ostringstream log;
  SweepReport report = run_sweep(cfg, &log);
  CHECK(report.errors == 0);
  CHECK(report.bot_primes == std::vector<uint64_t>{13, 19, 73});
  CHECK(report.rows.size() == primes_in_range(11, 100).size());

  // every certificate file re-verifies from disk
  size_t files = 0;
  for (const auto& row : report.rows) {
    if (row.kind != PrimeOutcome::Found) continue;
    ++files;
    Certificate cert = deserialize(slurp(dir.path / row.cert_file));
    CHECK(cert.p == row.p);
    CHECK(verify(cert).ok());
  }
  CHECK(files == report.found);
  CHECK(fs::exists(dir.path / "report.txt"));
  CHECK(slurp(dir.path / "report.txt") == report.render());

  // the stdout log carries the timing field
  CHECK(log.str().find("time_ms=") != std::string::npos);
  // cor path used for p = 5 (mod 6), scan path otherwise
  for (const auto& row : report.rows)
    CHECK(row.strategy == (row.p % 6 == 5 ? "cor" : "naive"));
}

TEST_CASE("sweeps are byte-identical across thread counts") {
  TempDir d1("sshowe_det_1"), d2("sshowe_det_2");
  SweepConfig cfg;
  cfg.genus = 4;
  cfg.pmin = 7;
  cfg.pmax = 60;
  cfg.out_dir = d1.path.string();
  cfg.threads = 1;
  SweepReport a = run_sweep(cfg, nullptr);
  cfg.out_dir = d2.path.string();
  cfg.threads = 4;
  SweepReport b = run_sweep(cfg, nullptr);
  CHECK(a.render() == b.render());
  for (const auto& row : a.rows) {
    if (row.kind != PrimeOutcome::Found) continue;
    CHECK(slurp(d1.path / row.cert_file) == slurp(d2.path / row.cert_file));
  }
}

TEST_CASE("run_search dispatch honors forced strategies") {
  FieldContext ctx{Prime(23)};
  SearchConfig scfg;
  CHECK(run_search(ctx, 4, Strategy::Cor, scfg).stats.strategy == "cor");
  CHECK(run_search(ctx, 4, Strategy::Naive, scfg).stats.strategy == "naive");
  CHECK(run_search(ctx, 5, Strategy::Auto, scfg).stats.strategy == "jpairs");
  CHECK(run_search(ctx, 5, Strategy::Naive, scfg).stats.strategy == "naive");
  CHECK(run_search(ctx, 6, Strategy::Auto, scfg).stats.strategy == "jpairs");
  FieldContext ctx13{Prime(13)};
  CHECK(run_search(ctx13, 4, Strategy::Auto, scfg).stats.strategy == "naive");
}

TEST_CASE("sweep survives per-prime errors without aborting") {
  // genus-5 pair strategy is bounded; a prime beyond the bound comes back as
  // an error row while in-bound primes still run
  SweepConfig cfg;
  cfg.genus = 5;
  cfg.pmin = 7;
  cfg.pmax = 11;
  cfg.strategy = Strategy::Pairs;
  SweepReport report = run_sweep(cfg, nullptr);
  CHECK(report.errors == 0);
  bool p7_found = false;
  for (const auto& row : report.rows)
    if (row.p == 7 && row.kind == PrimeOutcome::Found) p7_found = true;
  CHECK(p7_found);

  cfg.pmin = 23;
  cfg.pmax = 29;
  SweepReport capped = run_sweep(cfg, nullptr);
  CHECK(capped.errors == capped.rows.size());
  CHECK(capped.rows.size() == 2);
}

TEST_CASE("render marks bottoms and carries the exception list") {
  SweepConfig cfg;
  cfg.genus = 4;
  cfg.pmin = 12;
  cfg.pmax = 20;
  SweepReport report = run_sweep(cfg, nullptr);
  std::string text = report.render();
  CHECK(text.find("p=13 genus=4 strategy=naive outcome=bot") != std::string::npos);
  CHECK(text.find("# bot_primes=13,19") != std::string::npos);
  CHECK(text.find("time_ms") == std::string::npos);
}

}  // TEST_SUITE
