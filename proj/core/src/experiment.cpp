#include "pgm/experiment.hpp"

#include <sstream>

#include "pgm/errors.hpp"
#include "pgm/witness.hpp"

namespace pgm {

namespace {

std::string format_elements(const Subgroup& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.elements.size(); ++i) {
    if (i) out << ',';
    out << s.elements[i];
  }
  return out.str();
}

ExperimentReport analyze_generators(std::string spec, const GroupTable& g,
                                    const SubgroupChain& primary,
                                    const std::optional<SubgroupChain>& secondary,
                                    const std::vector<Permutation>& perms) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport r;
  r.group_spec = std::move(spec);
  r.n = g.n;
  r.h = primary.levels[1];
  if (secondary) r.k = secondary->levels[1];
  r.generator_count = static_cast<int>(perms.size());

  const GroupFacts facts = analyze(perms);
  r.order = facts.order;
  r.n_factorial = factorial(g.n);
  r.transitivity = facts.transitivity;
  r.blocks = facts.minimal_block_systems;
  r.verdict = classify(r.order, r.n_factorial, r.blocks);
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Symmetric: return "SYMMETRIC";
    case Verdict::ProperImprimitive: return "PROPER_IMPRIMITIVE";
    case Verdict::Other: return "OTHER";
  }
  return "?";
}

Verdict classify(const BigInt& order, const BigInt& n_factorial,
                 const std::vector<BlockSystem>& blocks) {
  if (order == n_factorial) return Verdict::Symmetric;
  if (order < n_factorial && !blocks.empty()) return Verdict::ProperImprimitive;
  return Verdict::Other;
}

ExperimentReport run_verify(const std::string& spec,
                            const VerifyOptions& opt) {
  const GroupTable g = make_group(spec, opt.degree_limit);
  const EhConfig cfg = make_eh_config(g, opt.cross, opt.seeds);
  const std::vector<EhGenerator> gens = eh_generating_set(cfg);
  return analyze_generators(spec, g, cfg.primary, cfg.secondary,
                            generator_perms(gens));
}

PsquareReport run_psquare(int p, int degree_limit) {
  // psquare_gamma validates primality and the degree limit.
  const LogSignature gamma = psquare_gamma(p, degree_limit);
  const GroupTable& g = gamma.group;
  const std::string spec = "cyclic:" + std::to_string(p * p);

  const ChainPolicy policy = choose_chains(g);
  if (policy.secondary)
    fail(Errc::BadShape, spec + " should have a unique proper subgroup");

  const EhConfig cfg = make_eh_config(g, false);
  std::vector<Permutation> perms = generator_perms(eh_generating_set(cfg));

  PsquareReport r;
  r.p = p;
  r.before = analyze_generators(spec, g, cfg.primary, std::nullopt, perms);
  r.before_as_predicted = r.before.verdict == Verdict::ProperImprimitive;
  if (p == 2) {
    // Independent count: at degree 4 the whole closure fits in memory.
    const size_t count = brute_force_closure(perms).size();
    r.before_as_predicted =
        r.before_as_predicted && BigInt(count) == r.before.order;
  }

  perms.push_back(psquare_extra_generator(p, degree_limit));
  r.after = analyze_generators(spec, g, cfg.primary, std::nullopt, perms);
  r.after_as_predicted = r.after.verdict == Verdict::Symmetric;
  return r;
}

std::string format_human(const ExperimentReport& r) {
  std::ostringstream out;
  out << "group         " << r.group_spec << '\n';
  out << "n             " << r.n << '\n';
  out << "H             {" << format_elements(r.h) << "} (order "
      << r.h.order() << ")\n";
  if (r.k)
    out << "K             {" << format_elements(*r.k) << "} (order "
        << r.k->order() << ")\n";
  else
    out << "K             (none)\n";
  out << "generators    " << r.generator_count << '\n';
  out << "order         " << r.order << '\n';
  out << "n!            " << r.n_factorial << '\n';
  out << "verdict       " << verdict_name(r.verdict) << '\n';
  out << "transitivity  " << r.transitivity << '\n';
  out << "blocks        ";
  if (r.blocks.empty()) {
    out << "(none)";
  } else {
    for (size_t i = 0; i < r.blocks.size(); ++i) {
      if (i) out << ' ';
      out << format_block_system(r.blocks[i]);
    }
  }
  out << '\n';
  out << "elapsed       " << r.elapsed.count() << " ms\n";
  return out.str();
}

std::string format_porcelain(const ExperimentReport& r) {
  std::ostringstream out;
  out << "group=" << r.group_spec << '\n';
  out << "n=" << r.n << '\n';
  out << "h=" << format_elements(r.h) << '\n';
  if (r.k) out << "k=" << format_elements(*r.k) << '\n';
  out << "generators=" << r.generator_count << '\n';
  out << "order=" << r.order << '\n';
  out << "factorial=" << r.n_factorial << '\n';
  out << "verdict=" << verdict_name(r.verdict) << '\n';
  out << "transitivity=" << r.transitivity << '\n';
  out << "blocks=";
  if (r.blocks.empty()) {
    out << "none";
  } else {
    for (size_t i = 0; i < r.blocks.size(); ++i) {
      if (i) out << ' ';
      out << format_block_system(r.blocks[i]);
    }
  }
  out << '\n';
  return out.str();
}

std::string format_human(const PsquareReport& r) {
  std::ostringstream out;
  out << "== transforms only ==\n" << format_human(r.before);
  out << "expected      PROPER_IMPRIMITIVE -> "
      << (r.before_as_predicted ? "ok" : "MISMATCH") << '\n';
  out << "== with extra generator ==\n" << format_human(r.after);
  out << "expected      SYMMETRIC -> "
      << (r.after_as_predicted ? "ok" : "MISMATCH") << '\n';
  return out.str();
}

std::string format_porcelain(const PsquareReport& r) {
  std::ostringstream out;
  out << "p=" << r.p << '\n';
  out << "part1_order=" << r.before.order << '\n';
  out << "part1_verdict=" << verdict_name(r.before.verdict) << '\n';
  out << "part1_blocks=";
  for (size_t i = 0; i < r.before.blocks.size(); ++i) {
    if (i) out << ' ';
    out << format_block_system(r.before.blocks[i]);
  }
  out << '\n';
  out << "part1_ok=" << (r.before_as_predicted ? "true" : "false") << '\n';
  out << "part2_order=" << r.after.order << '\n';
  out << "part2_verdict=" << verdict_name(r.after.verdict) << '\n';
  out << "part2_ok=" << (r.after_as_predicted ? "true" : "false") << '\n';
  return out.str();
}

const std::vector<MatrixEntry>& test_matrix() {
  static const std::vector<MatrixEntry> matrix = {
      {"cyclic:6", true},
      {"cyclic:8", true},
      {"cyclic:10", true},
      {"cyclic:12", true},
      {"dihedral:3", true},
      {"dihedral:4", true},
      {"quaternion", true},
      {"cyclic:2xcyclic:2", true},
      {"cyclic:3xcyclic:3", true},
      {"cyclic:2xcyclic:4", true},
      {"cyclic:4", false},
      {"cyclic:9", false},
  };
  return matrix;
}

}  // namespace pgm
