#include "sshowe/sweep.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "sshowe/certify.hpp"

namespace sshowe {

namespace fs = std::filesystem;

Strategy strategy_from_name(const std::string& name) {
  if (name == "auto") return Strategy::Auto;
  if (name == "cor") return Strategy::Cor;
  if (name == "jpairs") return Strategy::JPairs;
  if (name == "naive") return Strategy::Naive;
  if (name == "pairs") return Strategy::Pairs;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Cor: return "cor";
    case Strategy::JPairs: return "jpairs";
    case Strategy::Naive: return "naive";
    case Strategy::Pairs: return "pairs";
  }
  return "?";
}

void validate_strategy(int genus, Strategy s) {
  bool ok = false;
  switch (genus) {
    case 4: ok = s == Strategy::Auto || s == Strategy::Cor || s == Strategy::Naive; break;
    case 5:
    case 6:
      ok = s == Strategy::Auto || s == Strategy::JPairs || s == Strategy::Naive ||
           s == Strategy::Pairs;
      break;
    default: throw std::invalid_argument("genus must be 4, 5 or 6");
  }
  if (!ok)
    throw std::invalid_argument("strategy '" + strategy_name(s) + "' is not defined for genus " +
                                std::to_string(genus));
}

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> out;
  for (uint64_t n = std::max<uint64_t>(lo, 2); n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

SearchOutcome run_search(const FieldContext& ctx, int genus, Strategy strategy,
                         const SearchConfig& scfg) {
  validate_strategy(genus, strategy);
  switch (genus) {
    case 4:
      if (strategy == Strategy::Cor) return search_genus4_cor(ctx);
      if (strategy == Strategy::Naive) return search_genus4(ctx, scfg);
      return ctx.p() % 6 == 5 ? search_genus4_cor(ctx) : search_genus4(ctx, scfg);
    case 5:
      if (strategy == Strategy::Naive) return search_genus5_naive(ctx, scfg);
      if (strategy == Strategy::Pairs) return search_genus5_pairs(ctx, scfg);
      return search_genus5(ctx, scfg);
    default:
      if (strategy == Strategy::Naive) return search_genus6_naive(ctx, scfg);
      if (strategy == Strategy::Pairs) return search_genus6_pairs(ctx, scfg);
      return search_genus6(ctx, scfg);
  }
}

std::string certificate_filename(int genus, uint64_t p) {
  return "genus" + std::to_string(genus) + "_p" + std::to_string(p) + ".json";
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("short write to " + tmp);
  }
  fs::rename(tmp, path);
}

std::string SweepReport::render() const {
  std::string out;
  for (const auto& row : rows) {
    out += "p=" + std::to_string(row.p) + " genus=" + std::to_string(config.genus) +
           " strategy=" + row.strategy;
    switch (row.kind) {
      case PrimeOutcome::Found:
        out += " outcome=found pairs=" + std::to_string(row.pairs);
        if (!row.cert_file.empty()) out += " cert=" + row.cert_file;
        break;
      case PrimeOutcome::Bot:
        out += " outcome=bot pairs=" + std::to_string(row.pairs);
        break;
      case PrimeOutcome::Error:
        out += " outcome=error error=\"" + row.error + "\"";
        break;
    }
    out += "\n";
  }
  out += "# total=" + std::to_string(rows.size()) + " found=" + std::to_string(found) +
         " bot=" + std::to_string(bot) + " error=" + std::to_string(errors) + "\n";
  out += "# bot_primes=";
  for (size_t i = 0; i < bot_primes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(bot_primes[i]);
  }
  out += "\n";
  return out;
}

SweepReport run_sweep(const SweepConfig& cfg, std::ostream* log) {
  if (cfg.pmin > cfg.pmax) throw std::invalid_argument("pmin must not exceed pmax");
  if (cfg.genus < 4 || cfg.genus > 6) throw std::invalid_argument("genus must be 4, 5 or 6");
  validate_strategy(cfg.genus, cfg.strategy);

  SweepReport report;
  report.config = cfg;
  if (log && cfg.pmin <= 5)
    *log << "# primes p <= 5 are excluded (characteristic must exceed 5)\n";
  std::vector<uint64_t> primes = primes_in_range(std::max<uint64_t>(cfg.pmin, 7), cfg.pmax);
  report.rows.resize(primes.size());

  if (!cfg.out_dir.empty()) fs::create_directories(cfg.out_dir);

  std::atomic<size_t> next{0};
  std::mutex log_mutex;

  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= primes.size()) return;
      uint64_t p = primes[i];
      PrimeOutcome row;
      row.p = p;
      auto t0 = std::chrono::steady_clock::now();
      try {
        FieldContext ctx{Prime(p)};
        SearchConfig scfg;
        scfg.seed = cfg.seed;
        scfg.restricted_first = cfg.restricted_first;
        SearchOutcome outcome = run_search(ctx, cfg.genus, cfg.strategy, scfg);
        row.strategy = outcome.stats.strategy;
        row.pairs = outcome.stats.pairs_tested;
        if (outcome.status == SearchStatus::Found) {
          VerificationReport vr = verify(*outcome.certificate);
          if (!vr.ok()) {
            row.kind = PrimeOutcome::Error;
            row.error = "emitted certificate failed verification";
          } else {
            row.kind = PrimeOutcome::Found;
            if (!cfg.out_dir.empty()) {
              row.cert_file = certificate_filename(cfg.genus, p);
              write_file_atomic((fs::path(cfg.out_dir) / row.cert_file).string(),
                                serialize(*outcome.certificate));
            }
          }
        } else if (outcome.status == SearchStatus::Exhausted) {
          row.kind = PrimeOutcome::Bot;
        } else {
          row.kind = PrimeOutcome::Error;
          row.error = "search interrupted before exhaustion";
        }
      } catch (const std::exception& e) {
        row.kind = PrimeOutcome::Error;
        row.error = e.what();
      }
      auto t1 = std::chrono::steady_clock::now();
      row.time_ms = static_cast<uint64_t>(
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
      if (log) {
        std::lock_guard<std::mutex> guard(log_mutex);
        *log << "p=" << p << " genus=" << cfg.genus << " strategy=" << row.strategy
             << " outcome="
             << (row.kind == PrimeOutcome::Found ? "found"
                                                 : row.kind == PrimeOutcome::Bot ? "bot" : "error")
             << " pairs=" << row.pairs << " time_ms=" << row.time_ms << "\n";
      }
      report.rows[i] = std::move(row);
    }
  };

  int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& row : report.rows) {
    switch (row.kind) {
      case PrimeOutcome::Found: ++report.found; break;
      case PrimeOutcome::Bot:
        ++report.bot;
        report.bot_primes.push_back(row.p);
        break;
      case PrimeOutcome::Error: ++report.errors; break;
    }
  }

  if (!cfg.out_dir.empty())
    write_file_atomic((fs::path(cfg.out_dir) / "report.txt").string(), report.render());
  return report;
}

}  // namespace sshowe
