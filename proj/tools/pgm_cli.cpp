// Command-line harness: group construction, generating-set verification,
// the cyclic p^2 analysis, witness extraction, and the block cipher.
//
// Exit codes: 0 on success (and on verdicts matching the prediction for
// the group class), 1 when a computed result contradicts the prediction,
// 2 for usage and input errors.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pgm/cipher.hpp"
#include "pgm/errors.hpp"
#include "pgm/experiment.hpp"
#include "pgm/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) pgm::fail(pgm::Errc::ParseError, "cannot write " + out_path);
  out << text;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) pgm::fail(pgm::Errc::ParseError, "cannot read " + path);
  return in;
}

int verify_exit(const pgm::ExperimentReport& rep, bool cross) {
  std::optional<pgm::Verdict> predicted;
  if (cross) {
    predicted = pgm::Verdict::Symmetric;
  } else if (!rep.k) {
    // A lone proper subgroup means a cyclic prime-square group, the one
    // class whose transforms stay properly imprimitive.
    predicted = pgm::Verdict::ProperImprimitive;
  }
  if (!predicted || rep.verdict == *predicted) return kExitOk;
  std::cerr << "mismatch: expected verdict=" << pgm::verdict_name(*predicted)
            << " computed verdict=" << pgm::verdict_name(rep.verdict)
            << " order=" << rep.order << " n!=" << rep.n_factorial << '\n';
  return kExitMismatch;
}

struct WitnessCheck {
  int point;
  int expected;
};

int print_witness(const pgm::WitnessWord& word, const std::string& out_path,
                  const std::vector<WitnessCheck>& checks) {
  write_output(pgm::format_witness(word), out_path);
  for (const WitnessCheck& c : checks) {
    if (word.product(c.point) != c.expected) {
      std::cerr << "mismatch: expected " << c.point << " -> " << c.expected
                << " computed " << c.point << " -> " << word.product(c.point)
                << '\n';
      return kExitMismatch;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"round functions of logarithmic signatures on finite groups"};
  app.require_subcommand(1);

  int degree_limit = pgm::kDefaultDegreeLimit;
  app.add_option("--degree-limit", degree_limit,
                 "largest group order the tool will handle")
      ->capture_default_str();

  // group make / validate
  auto* group_cmd = app.add_subcommand("group", "group table files");
  group_cmd->require_subcommand(1);
  std::string make_spec, make_out;
  auto* make_cmd = group_cmd->add_subcommand("make", "write a group table");
  make_cmd->add_option("--spec", make_spec, "descriptor, e.g. cyclic:6")
      ->required();
  make_cmd->add_option("--out", make_out, "output file (default stdout)");
  std::string validate_file;
  auto* validate_cmd =
      group_cmd->add_subcommand("validate", "check a group table file");
  validate_cmd->add_option("--file", validate_file)->required();

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "build the generating set and analyze what it generates");
  std::string verify_spec;
  bool verify_cross = false;
  bool verify_porcelain = false;
  std::vector<std::uint64_t> verify_seeds;
  verify_cmd->add_option("--group", verify_spec)->required();
  verify_cmd->add_flag("--cross", verify_cross,
                       "include the secondary-subgroup transforms");
  verify_cmd->add_option("--seed", verify_seeds,
                         "extra sampled transforms (repeatable)");
  verify_cmd->add_flag("--porcelain", verify_porcelain,
                       "line-oriented key=value output");

  // psquare
  auto* psquare_cmd = app.add_subcommand(
      "psquare", "the cyclic prime-square analysis, before and after the "
                 "extra generator");
  int psquare_p = 0;
  bool psquare_porcelain = false;
  psquare_cmd->add_option("--p", psquare_p, "prime")->required();
  psquare_cmd->add_flag("--porcelain", psquare_porcelain);

  // witness
  auto* witness_cmd = app.add_subcommand("witness", "constructive witnesses");
  witness_cmd->require_subcommand(1);
  std::string witness_spec, witness_out;
  int wx = 0, wx2 = 0, wy = 0, wy2 = 0;
  auto* move_cmd = witness_cmd->add_subcommand(
      "move", "a word carrying (x, x2) to (y, y2)");
  move_cmd->add_option("--group", witness_spec)->required();
  move_cmd->add_option("--x", wx)->required();
  move_cmd->add_option("--x2", wx2)->required();
  move_cmd->add_option("--y", wy)->required();
  move_cmd->add_option("--y2", wy2)->required();
  move_cmd->add_option("--out", witness_out, "output file (default stdout)");
  std::string three_spec, three_out;
  int wblock = 0, wa = 0, wb = 0;
  auto* three_cmd = witness_cmd->add_subcommand(
      "threecycle", "a 3-cycle supported on one block (odd order)");
  three_cmd->add_option("--group", three_spec)->required();
  three_cmd->add_option("--block", wblock)->required();
  three_cmd->add_option("--a", wa)->required();
  three_cmd->add_option("--b", wb)->required();
  three_cmd->add_option("--out", three_out);
  std::string odd_spec, odd_out;
  auto* odd_cmd =
      witness_cmd->add_subcommand("odd", "an odd-parity generator");
  odd_cmd->add_option("--group", odd_spec)->required();
  odd_cmd->add_option("--out", odd_out);

  // cipher
  auto* cipher_cmd = app.add_subcommand("cipher", "the block cipher");
  cipher_cmd->require_subcommand(1);
  std::string keygen_spec, keygen_out;
  std::uint64_t keygen_seed = 0;
  auto* keygen_cmd = cipher_cmd->add_subcommand("keygen", "write a key file");
  keygen_cmd->add_option("--group", keygen_spec)->required();
  keygen_cmd->add_option("--seed", keygen_seed)->required();
  keygen_cmd->add_option("--out", keygen_out, "output file (default stdout)");
  std::string enc_key;
  int enc_m = 0;
  auto* encrypt_cmd = cipher_cmd->add_subcommand("encrypt", "one block");
  encrypt_cmd->add_option("--key", enc_key)->required();
  encrypt_cmd->add_option("--m", enc_m)->required();
  std::string dec_key;
  int dec_c = 0;
  auto* decrypt_cmd = cipher_cmd->add_subcommand("decrypt", "one block");
  decrypt_cmd->add_option("--key", dec_key)->required();
  decrypt_cmd->add_option("--c", dec_c)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (make_cmd->parsed()) {
      write_output(pgm::format_group(pgm::make_group(make_spec, degree_limit)),
                   make_out);
      return kExitOk;
    }
    if (validate_cmd->parsed()) {
      std::ifstream in = open_input(validate_file);
      try {
        const pgm::GroupTable g = pgm::parse_group(in);
        std::cout << "ok n=" << g.n << '\n';
        return kExitOk;
      } catch (const pgm::Error& e) {
        std::cerr << "invalid: " << e.what() << '\n';
        return kExitMismatch;
      }
    }
    if (verify_cmd->parsed()) {
      const pgm::ExperimentReport rep = pgm::run_verify(
          verify_spec, pgm::VerifyOptions{verify_cross, verify_seeds,
                                          degree_limit});
      std::cout << (verify_porcelain ? pgm::format_porcelain(rep)
                                     : pgm::format_human(rep));
      return verify_exit(rep, verify_cross);
    }
    if (psquare_cmd->parsed()) {
      const pgm::PsquareReport rep = pgm::run_psquare(psquare_p, degree_limit);
      std::cout << (psquare_porcelain ? pgm::format_porcelain(rep)
                                      : pgm::format_human(rep));
      if (rep.before_as_predicted && rep.after_as_predicted) return kExitOk;
      std::cerr << "mismatch: part1 "
                << (rep.before_as_predicted ? "ok" : "failed") << ", part2 "
                << (rep.after_as_predicted ? "ok" : "failed") << '\n';
      return kExitMismatch;
    }
    if (move_cmd->parsed()) {
      const pgm::GroupTable g = pgm::make_group(witness_spec, degree_limit);
      const pgm::ProofContext ctx = pgm::make_proof_context(g);
      const pgm::WitnessWord word =
          pgm::mover_two_transitive(ctx, wx, wx2, wy, wy2);
      return print_witness(word, witness_out, {{wx, wy}, {wx2, wy2}});
    }
    if (three_cmd->parsed()) {
      const pgm::GroupTable g = pgm::make_group(three_spec, degree_limit);
      const pgm::ProofContext ctx = pgm::make_proof_context(g);
      return print_witness(pgm::three_cycle_odd(ctx, wblock, wa, wb),
                           three_out, {});
    }
    if (odd_cmd->parsed()) {
      const pgm::GroupTable g = pgm::make_group(odd_spec, degree_limit);
      const pgm::ProofContext ctx = pgm::make_proof_context(g);
      const pgm::WitnessWord word = pgm::odd_parity_generator(ctx);
      write_output(pgm::format_witness(word), odd_out);
      if (pgm::parity(word.product) != -1) {
        std::cerr << "mismatch: expected parity -1\n";
        return kExitMismatch;
      }
      return kExitOk;
    }
    if (keygen_cmd->parsed()) {
      const pgm::GroupTable g = pgm::make_group(keygen_spec, degree_limit);
      const pgm::ChainPolicy policy = pgm::choose_chains(g);
      write_output(
          pgm::format_key(pgm::keygen(g, policy.primary, keygen_seed)),
          keygen_out);
      return kExitOk;
    }
    if (encrypt_cmd->parsed()) {
      std::ifstream in = open_input(enc_key);
      const pgm::PgmKey key = pgm::parse_key(in);
      std::cout << pgm::encrypt(key, enc_m) << '\n';
      return kExitOk;
    }
    if (decrypt_cmd->parsed()) {
      std::ifstream in = open_input(dec_key);
      const pgm::PgmKey key = pgm::parse_key(in);
      std::cout << pgm::decrypt(key, dec_c) << '\n';
      return kExitOk;
    }
  } catch (const pgm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
