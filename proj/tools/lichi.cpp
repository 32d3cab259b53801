#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "lichi/cli.hpp"

namespace {

using lichi::cli::Format;
using lichi::cli::Method;
using lichi::cli::RunConfig;

struct Flags {
  std::string chi;
  std::optional<std::uint64_t> label;
  std::string n_range = "1";
  std::string method = "zeros";
  unsigned nu = 3;
  unsigned k_exp = 3;
  std::optional<unsigned> prec_bits;
  std::string zeros;
  std::size_t zeros_count = 0;
  double tmax = 0;
  std::string out;
  std::string format = "table";
  unsigned threads = 0;
};

void add_chi(CLI::App* cmd, Flags& f) {
  cmd->add_option("--q", f.chi, "modulus q, or q.label")->required();
  cmd->add_option("--label", f.label, "character label (default: the real primitive character)");
}

void add_zero_source(CLI::App* cmd, Flags& f) {
  cmd->add_option("--zeros", f.zeros, "zero file to read");
  cmd->add_option("--zeros-count", f.zeros_count, "compute this many zeros");
  cmd->add_option("--tmax", f.tmax, "compute all zeros up to this height");
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--prec-bits", f.prec_bits, "working precision in bits (default: LI_PREC_BITS or 96)");
  cmd->add_option("--out", f.out, "output path");
  cmd->add_option("--threads", f.threads, "worker threads (0: all cores)");
}

RunConfig to_config(const Flags& f) {
  RunConfig cfg;
  lichi::cli::parse_chi_spec(f.chi, cfg);
  if (f.label) cfg.label = f.label;
  std::tie(cfg.n_lo, cfg.n_hi) = lichi::cli::parse_n_range(f.n_range);
  cfg.method = f.method == "arith" ? Method::arith : (f.method == "both" ? Method::both : Method::zeros);
  cfg.nu = f.nu;
  cfg.k_exp = f.k_exp;
  cfg.prec_bits = f.prec_bits;
  cfg.zeros_path = f.zeros;
  cfg.zeros_count = f.zeros_count;
  cfg.tmax = f.tmax;
  cfg.out_path = f.out;
  cfg.format = f.format == "csv" ? Format::csv : Format::table;
  cfg.threads = f.threads;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Li coefficients of Dirichlet L-functions"};
  app.require_subcommand(1);
  Flags f;

  auto* characters = app.add_subcommand("characters", "list the Dirichlet characters mod q");
  characters->add_option("--q", f.chi, "modulus")->required();

  auto* zeros = app.add_subcommand("zeros", "compute critical-line zeros and write a zero file");
  add_chi(zeros, f);
  zeros->add_option("--zeros-count", f.zeros_count, "number of zeros");
  zeros->add_option("--tmax", f.tmax, "height");
  add_common(zeros, f);

  auto* li = app.add_subcommand("li", "compute Li coefficients");
  auto* compare = app.add_subcommand("compare", "compare the prime-sum and zero-sum methods");
  for (auto* cmd : {li, compare}) {
    add_chi(cmd, f);
    cmd->add_option("--n", f.n_range, "n or A..B");
    cmd->add_option("--nu", f.nu, "prime-sum target: error <= 10^-nu");
    cmd->add_option("--k", f.k_exp, "zero-sum target exponent k");
    cmd->add_option("--format", f.format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
    add_zero_source(cmd, f);
    add_common(cmd, f);
  }
  li->add_option("--method", f.method, "arith, zeros or both")->check(CLI::IsMember({"arith", "zeros", "both"}));

  auto* table = app.add_subcommand("table", "reproduce a published table (q = 3, 5, 20 or 60)");
  add_chi(table, f);
  add_zero_source(table, f);
  add_common(table, f);

  CLI11_PARSE(app, argc, argv);

  try {
    if (characters->parsed()) {
      RunConfig cfg;
      lichi::cli::parse_chi_spec(f.chi, cfg);
      return lichi::cli::cmd_characters(cfg.q, std::cout);
    }
    const RunConfig cfg = to_config(f);
    if (zeros->parsed()) return lichi::cli::cmd_zeros(cfg, std::cout, std::cerr);
    if (li->parsed()) return lichi::cli::cmd_li(cfg, std::cout, std::cerr);
    if (compare->parsed()) return lichi::cli::cmd_compare(cfg, std::cout, std::cerr);
    if (table->parsed()) return lichi::cli::cmd_table(cfg, std::cout, std::cerr);
  } catch (const lichi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
