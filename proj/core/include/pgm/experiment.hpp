#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgm/permgroup.hpp"
#include "pgm/transforms.hpp"

namespace pgm {

enum class Verdict { Symmetric, ProperImprimitive, Other };

const char* verdict_name(Verdict v);

/// One verification run: the group, the chosen chains, the generating set
/// size, and what the generated permutation group turned out to be.
struct ExperimentReport {
  std::string group_spec;
  int n = 0;
  Subgroup h;
  std::optional<Subgroup> k;
  int generator_count = 0;
  BigInt order;
  BigInt n_factorial;
  Verdict verdict = Verdict::Other;
  int transitivity = 0;
  std::vector<BlockSystem> blocks;
  std::chrono::milliseconds elapsed{0};
};

struct VerifyOptions {
  bool cross = false;
  std::vector<std::uint64_t> seeds;
  int degree_limit = kDefaultDegreeLimit;
};

ExperimentReport run_verify(const std::string& spec, const VerifyOptions& opt);

/// Both halves of the cyclic p^2 analysis: the transforms alone generate
/// a proper imprimitive group; adding the extra generator reaches the
/// full symmetric group. For p = 2 the order is cross-checked against
/// the brute-force closure.
struct PsquareReport {
  int p = 0;
  ExperimentReport before;
  ExperimentReport after;
  bool before_as_predicted = false;
  bool after_as_predicted = false;
};

PsquareReport run_psquare(int p, int degree_limit = kDefaultDegreeLimit);

Verdict classify(const BigInt& order, const BigInt& n_factorial,
                 const std::vector<BlockSystem>& blocks);

/// Human-readable table and line-oriented key=value forms. The porcelain
/// form omits elapsed time so identical flags and seeds give identical
/// bytes.
std::string format_human(const ExperimentReport& r);
std::string format_porcelain(const ExperimentReport& r);
std::string format_human(const PsquareReport& r);
std::string format_porcelain(const PsquareReport& r);

/// The groups the checks ship with. Theorem-covered entries are the ones
/// whose transform closure must be the full symmetric group; the two
/// cyclic prime-square entries are the exception pair.
struct MatrixEntry {
  const char* spec;
  bool theorem_covered;
};
const std::vector<MatrixEntry>& test_matrix();

}  // namespace pgm
