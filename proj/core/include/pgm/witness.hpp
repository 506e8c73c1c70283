#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgm/permgroup.hpp"
#include "pgm/transforms.hpp"

namespace pgm {

/// One factor of a witness word, named symbolically so the construction
/// stays auditable: family plus parameters identify a generator (see
/// EhGenerator for the parameter conventions), `inverted` marks uses of
/// its inverse, and `perm` caches the factor's permutation.
struct WitnessFactor {
  EhFamily family;
  std::vector<long long> params;
  bool inverted = false;
  Permutation perm;

  std::string name() const;
};

/// A product of named generators together with the product permutation.
/// Composing the factor permutations left-to-right yields exactly
/// `product`; an empty factor list denotes the identity.
struct WitnessWord {
  std::vector<WitnessFactor> factors;
  Permutation product;
};

/// Everything the constructive witnesses need: the group, the fixed
/// chains, the canonical signature over the primary chain, the structured
/// generating set, and the stabilizer chain of the group it generates.
struct ProofContext {
  GroupTable group;
  SubgroupChain primary;
  std::optional<SubgroupChain> secondary;
  Etls alpha;
  BreveMap alpha_breve;
  std::vector<EhGenerator> generators;
  Bsgs group_bsgs;

  int lambda() const { return alpha.lambda(); }
  int mu() const { return alpha.mu(); }
  int block_of(int point) const { return point % lambda(); }
  int coord_of(int point) const { return point / lambda(); }
  const Subgroup& h_subgroup() const { return primary.levels[1]; }
};

/// Builds the context for a group under the standard subgroup policy.
/// Cross transforms are included whenever a second subgroup exists and
/// with_secondary is set.
ProofContext make_proof_context(const GroupTable& g, bool with_secondary = true,
                                std::vector<std::uint64_t> seeds = {});

/// A word whose product carries x to y and x2 to y2, following the
/// block-system case split: blockwise plus regular factors when both
/// pairs straddle blocks, blockwise plus diagonal when both pairs are
/// within single blocks, and a cross factor to break a source pair out of
/// its shared block (or, inverted, to bring a target pair together).
WitnessWord mover_two_transitive(const ProofContext& ctx, int x, int x2, int y,
                                 int y2);

/// For odd group order: the commutator-style product pi^-1 * sigma * pi *
/// sigma of a diagonal transposition sigma on coordinates (a, b) and a
/// regular cycle pi through them on the chosen block. The result is a
/// 3-cycle inside that block and the identity elsewhere.
WitnessWord three_cycle_odd(const ProofContext& ctx, int block, int a, int b);

/// An odd generator: a single-transposition regular transform when H has
/// an involution, otherwise a two-block swap (an odd number of disjoint
/// transpositions, since the block size is odd).
WitnessWord odd_parity_generator(const ProofContext& ctx);

/// The round function over the non-transversal p^2 signature. It fixes 0
/// and moves p out of block 0, which no exact-transversal transform of
/// the cyclic p^2 group can do.
Permutation psquare_extra_generator(int p,
                                    int degree_limit = kDefaultDegreeLimit);

/// Rebuilds a factor's permutation from its symbolic name alone.
Permutation materialize_factor(const ProofContext& ctx,
                               const WitnessFactor& factor);

/// Text format: one factor per line as family(param,...) with a ^-1
/// suffix for inverted factors, then the product permutation.
std::string format_witness(const WitnessWord& word);

}  // namespace pgm
