#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sshowe/howe.hpp"

namespace sshowe {

enum class Strategy { Auto, Cor, JPairs, Naive, Pairs };

Strategy strategy_from_name(const std::string& name);
std::string strategy_name(Strategy s);
/// Throws std::invalid_argument if the strategy is not defined for the genus.
void validate_strategy(int genus, Strategy s);

struct SweepConfig {
  int genus = 4;
  uint64_t pmin = 7, pmax = 7;  // inclusive; primes 2, 3, 5 are skipped
  Strategy strategy = Strategy::Auto;
  uint64_t seed = 0;
  int threads = 1;
  bool deterministic = true;
  std::string out_dir;  // empty: no files written
  bool restricted_first = true;
};

struct PrimeOutcome {
  uint64_t p = 0;
  enum Kind { Found, Bot, Error } kind = Bot;
  std::string strategy;
  uint64_t pairs = 0;
  std::string cert_file;  // relative to out_dir
  std::string error;
  uint64_t time_ms = 0;  // wall time; kept out of the written report
};

struct SweepReport {
  SweepConfig config;
  std::vector<PrimeOutcome> rows;  // one per prime in range, ascending
  std::vector<uint64_t> bot_primes;
  size_t found = 0, bot = 0, errors = 0;

  /// Deterministic rendering (no timing data); this is what report.txt holds.
  std::string render() const;
};

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi);

/// Runs every prime in [pmin, pmax] with a bounded worker pool. Certificates
/// are pre-verified, then written atomically to out_dir; per-prime log lines
/// (including wall time) go to `log` as they complete. I/O failures are
/// recorded per prime and do not abort the sweep.
SweepReport run_sweep(const SweepConfig& cfg, std::ostream* log);

/// Single-prime search dispatch used by the sweep and the CLI.
SearchOutcome run_search(const FieldContext& ctx, int genus, Strategy strategy,
                         const SearchConfig& scfg);

std::string certificate_filename(int genus, uint64_t p);

/// Temp-file-then-rename write; throws std::runtime_error on I/O failure.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace sshowe
