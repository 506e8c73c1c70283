#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgm/perm.hpp"
#include "pgm/signature.hpp"

namespace pgm {

/// A partition of I_n into lambda cells of size mu that the transforms
/// below permute whole. The canonical system has cell x2 equal to
/// {x2 + lambda*x1 : x1 in I_mu}.
struct BlockSystem {
  int lambda = 0;
  int mu = 0;
  std::vector<std::vector<int>> blocks;

  auto operator<=>(const BlockSystem&) const = default;
};

enum class EhFamily { Blockwise, Regular, Diagonal, Cross, CrossSeed };

const char* eh_family_name(EhFamily f);

/// One labeled generator. Parameter conventions:
///   blockwise / diagonal: the images of the inner permutation;
///   regular:              {z0, h};
///   cross:                {h} (the subgroup element being displaced);
///   cross_seed:           {seed}.
struct EhGenerator {
  EhFamily family;
  std::vector<long long> params;
  Permutation perm;

  std::string name() const;
};

/// Inputs for assembling the structured generating set: the fixed primary
/// chain 1 < H < G, an optional secondary chain 1 < K < G for the
/// cross transforms, and extra seeds for sampled transforms over K.
struct EhConfig {
  GroupTable group;
  SubgroupChain primary;
  std::optional<SubgroupChain> secondary;
  bool include_cross = false;
  std::vector<std::uint64_t> seeds;
};

/// The round function induced by two index bijections: x -> (x a) b^{-1}.
Permutation pgm_transform(const BreveMap& a, const BreveMap& b);

/// Reorders whole blocks: x2 + lambda*x1 -> (x2 tau) + lambda*x1.
Permutation blockwise_perm(const Permutation& tau, int lambda, int mu);

/// Right-multiplication by h inside block z0 only, pulled back through
/// alpha1; the identity elsewhere.
Permutation regular_perm(const Etls& e, int z0, int h);

/// Applies tau to the x1 coordinate of every block at once:
/// x2 + lambda*x1 -> x2 + lambda*(x1 tau).
Permutation diagonal_perm(const Permutation& tau, int lambda, int mu);

BlockSystem canonical_blocks(int lambda, int mu);

/// The subgroup-choice policy: H is an order-2 subgroup when n is even,
/// otherwise a subgroup of smallest (necessarily prime) order; K is a
/// strictly larger subgroup when one exists, otherwise any second
/// subgroup (the elementary-abelian p^2 situation). K is absent exactly
/// when G has a single nontrivial proper subgroup.
struct ChainPolicy {
  SubgroupChain primary;
  std::optional<SubgroupChain> secondary;
};
ChainPolicy choose_chains(const GroupTable& g);

EhConfig make_eh_config(const GroupTable& g, bool include_cross,
                        std::vector<std::uint64_t> seeds = {});

/// The round function over an adjusted secondary-chain signature that
/// fixes point 0 and moves the block-0 point representing h into another
/// block. h must be a non-identity element of the primary H.
EhGenerator cross_transform(const GroupTable& g, const SubgroupChain& primary,
                            const SubgroupChain& secondary, int h);

/// The finite structured generating set: blockwise transforms for a
/// transposition and a lambda-cycle, regular transforms for every block
/// and a generating set of H, diagonal transforms for a transposition and
/// a mu-cycle, and (with include_cross) one cross transform per
/// non-identity element of H plus one sampled transform per seed.
std::vector<EhGenerator> eh_generating_set(const EhConfig& cfg);

std::vector<Permutation> generator_perms(const std::vector<EhGenerator>& gens);

/// Minimal generating set of a subgroup, chosen greedily by index.
std::vector<int> subgroup_generators(const GroupTable& g, const Subgroup& h);

}  // namespace pgm
