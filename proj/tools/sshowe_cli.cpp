// Command-line front end: prime sweeps, single-prime searches, certificate
// verification, table dumps and verification of the embedded example data.
//
// Exit codes: 0 = all found/verified, 1 = at least one bottom outcome or
// failed verification, 2 = operational error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sshowe/certify.hpp"
#include "sshowe/sweep.hpp"

namespace {

using namespace sshowe;

int env_threads_default() {
  if (const char* v = std::getenv("SSHOWE_THREADS")) {
    int n = std::atoi(v);
    if (n > 0) return n;
  }
  return 1;
}

std::string env_out_default(const std::string& fallback) {
  if (const char* v = std::getenv("SSHOWE_OUT")) return v;
  return fallback;
}

struct MinpolyOption {
  bool set = false;
  uint64_t a0 = 0, a1 = 0;
};

FieldContext make_ctx(uint64_t p, const MinpolyOption& mp) {
  if (mp.set) return FieldContext(Prime(p), mp.a0, mp.a1);
  return FieldContext(Prime(p));
}

int cmd_sweep(const SweepConfig& cfg) {
  SweepReport report = run_sweep(cfg, &std::cout);
  std::cout << "# report: " << (std::filesystem::path(cfg.out_dir) / "report.txt").string()
            << "\n";
  if (report.errors) return 2;
  return report.bot ? 1 : 0;
}

int cmd_search(int genus, uint64_t p, Strategy strategy, uint64_t seed,
               const std::string& out_file, bool no_restricted_first) {
  FieldContext ctx{Prime(p)};
  SearchConfig scfg;
  scfg.seed = seed;
  scfg.restricted_first = !no_restricted_first;
  SearchOutcome outcome = run_search(ctx, genus, strategy, scfg);
  std::cerr << "p=" << p << " genus=" << genus << " strategy=" << outcome.stats.strategy
            << " pairs=" << outcome.stats.pairs_tested << "\n";
  if (outcome.status == SearchStatus::Interrupted)
    throw std::runtime_error("search interrupted before exhaustion");
  if (outcome.status == SearchStatus::Exhausted) {
    std::cout << "bot\n";
    return 1;
  }
  VerificationReport vr = verify(*outcome.certificate);
  if (!vr.ok()) throw std::runtime_error("emitted certificate failed verification:\n" +
                                         vr.summary());
  std::string doc = serialize(*outcome.certificate);
  std::cout << doc;
  if (!out_file.empty()) write_file_atomic(out_file, doc);
  return 0;
}

int cmd_verify(const std::vector<std::string>& paths) {
  bool all_ok = true;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Certificate cert = deserialize(buf.str());
    VerificationReport rep = verify(cert);
    std::cout << path << ": " << cert_kind_name(cert.kind()) << " p=" << cert.p << " "
              << (rep.ok() ? "PASS" : "FAIL") << "\n";
    if (!rep.ok()) {
      std::cout << rep.summary();
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_tables(uint64_t p, const MinpolyOption& mp, uint64_t seed) {
  FieldContext ctx = make_ctx(p, mp);
  SupersingularTables tables = build_tables(ctx, seed);
  std::cout << "{\"p\": " << p << ", \"minpoly\": [" << ctx.minpoly_a0() << ", "
            << ctx.minpoly_a1() << ", 1]}\n";
  for (const Fp2& lam : tables.T) std::cout << "T [" << lam.c0 << ", " << lam.c1 << "]\n";
  for (const Fp2& j : tables.S) std::cout << "S [" << j.c0 << ", " << j.c1 << "]\n";
  return 0;
}

int cmd_appendix() {
  size_t pass = 0;
  const auto& records = appendix_records();
  for (const auto& rec : records) {
    VerificationReport rep = verify_appendix(rec);
    std::cout << "genus" << rec.genus << " p=" << rec.p << " "
              << (rep.ok() ? "PASS" : "FAIL");
    if (!rep.note.empty()) std::cout << " (" << rep.note << ")";
    std::cout << "\n";
    if (rep.ok())
      ++pass;
    else
      std::cout << rep.summary();
  }
  std::cout << pass << "/" << records.size() << " records verified\n";
  return pass == records.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search and certification of superspecial curves of genus 4, 5 and 6\n"
               "built from supersingular elliptic curves over F_{p^2}"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a search for every prime in a range");
  SweepConfig cfg;
  cfg.threads = env_threads_default();
  cfg.out_dir = env_out_default("sweep-out");
  std::string sweep_strategy = "auto";
  bool no_restricted_first = false;
  sweep->add_option("--genus,-g", cfg.genus, "curve genus (4, 5 or 6)")->required();
  sweep->add_option("--pmin", cfg.pmin, "lower bound of the prime range (inclusive)")->required();
  sweep->add_option("--pmax", cfg.pmax, "upper bound of the prime range (inclusive)")->required();
  sweep->add_option("--strategy", sweep_strategy, "auto|cor|jpairs|naive|pairs");
  sweep->add_option("--seed", cfg.seed, "seed for randomized splitting");
  sweep->add_option("--threads", cfg.threads, "worker pool size (env SSHOWE_THREADS)");
  sweep->add_flag("--deterministic,!--no-deterministic", cfg.deterministic,
                  "deterministic outputs (default on)");
  sweep->add_option("--out", cfg.out_dir, "output directory (env SSHOWE_OUT)");
  sweep->add_flag("--no-restricted-first", no_restricted_first,
                  "genus 4: skip the restricted first pass");

  // search
  auto* search = app.add_subcommand("search", "search a single prime");
  int s_genus = 4;
  uint64_t s_p = 0, s_seed = 0;
  std::string s_strategy = "auto", s_out;
  bool s_no_restricted = false;
  search->add_option("--genus,-g", s_genus, "curve genus (4, 5 or 6)")->required();
  search->add_option("--p,-p", s_p, "prime characteristic")->required();
  search->add_option("--strategy", s_strategy, "auto|cor|jpairs|naive|pairs");
  search->add_option("--seed", s_seed, "seed for randomized splitting");
  search->add_option("--out", s_out, "certificate file to write");
  search->add_flag("--no-restricted-first", s_no_restricted,
                   "genus 4: skip the restricted first pass");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "re-verify certificate files");
  std::vector<std::string> verify_paths;
  verify_cmd->add_option("files", verify_paths, "certificate files")->required();

  // tables
  auto* tables_cmd = app.add_subcommand(
      "tables", "dump the supersingular Legendre parameters T and j-invariants S");
  uint64_t t_p = 0, t_seed = 0;
  std::vector<uint64_t> t_minpoly;
  tables_cmd->add_option("--p,-p", t_p, "prime characteristic")->required();
  tables_cmd->add_option("--minpoly", t_minpoly,
                         "a0 a1 of a monic quadratic z^2 + a1 z + a0 (default: z^2 - n)")
      ->expected(2);
  tables_cmd->add_option("--seed", t_seed, "seed for randomized splitting");

  // appendix
  app.add_subcommand("appendix", "verify the embedded example constructions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed()) {
      cfg.strategy = strategy_from_name(sweep_strategy);
      cfg.restricted_first = !no_restricted_first;
      return cmd_sweep(cfg);
    }
    if (search->parsed())
      return cmd_search(s_genus, s_p, strategy_from_name(s_strategy), s_seed, s_out,
                        s_no_restricted);
    if (verify_cmd->parsed()) return cmd_verify(verify_paths);
    if (tables_cmd->parsed()) {
      MinpolyOption mp;
      if (!t_minpoly.empty()) {
        mp.set = true;
        mp.a0 = t_minpoly[0];
        mp.a1 = t_minpoly[1];
      }
      return cmd_tables(t_p, mp, t_seed);
    }
    return cmd_appendix();
  } catch (const CertError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
