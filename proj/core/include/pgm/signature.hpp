#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pgm/group.hpp"

namespace pgm {

/// A logarithmic signature: s injective blocks of element indices whose
/// ordered product map (one pick per block) hits every group element
/// exactly once. The group table is carried by value; at desk scale a
/// copy is a few KB and keeps signatures self-contained.
struct LogSignature {
  GroupTable group;
  std::vector<std::vector<int>> blocks;

  int parts() const { return static_cast<int>(blocks.size()); }
  std::vector<int> radices() const;
};

/// Exact-transversal logarithmic signature: block i is a complete set of
/// right coset representatives of chain.levels[i] in chain.levels[i+1].
/// For s = 2 the blocks are the classic pair (alpha1 enumerating H,
/// alpha2 a transversal of H in G).
struct Etls {
  LogSignature sig;
  SubgroupChain chain;

  const std::vector<int>& alpha1() const { return sig.blocks.front(); }
  const std::vector<int>& alpha2() const { return sig.blocks[1]; }
  /// |H| for s = 2 chains.
  int mu() const { return static_cast<int>(sig.blocks.front().size()); }
  /// [G:H] for s = 2 chains.
  int lambda() const { return static_cast<int>(sig.blocks[1].size()); }
};

/// The index bijection I_n -> G induced by a signature, with its inverse.
struct BreveMap {
  std::vector<int> forward;
  std::vector<int> backward;

  int degree() const { return static_cast<int>(forward.size()); }
};

/// Mixed-radix digits (x_1, ..., x_s) with 0 <= x_i < r_i. The last
/// digit is least significant: x = x_s + r_s*(x_{s-1} + r_{s-1}*(...)),
/// which for s = 2 is exactly x = x_2 + lambda*x_1.
struct KnapsackDigits {
  std::vector<int> digits;
};

KnapsackDigits knapsack_split(long long x, const std::vector<int>& radices);
long long knapsack_join(const KnapsackDigits& d,
                        const std::vector<int>& radices);

/// The deterministic ETLS over a chain: every transversal is the
/// minimal-index scan, so all blocks start with the identity.
Etls canonical_etls(const GroupTable& g, const SubgroupChain& chain);

/// A seeded-uniform ETLS: per chain step, a random representative of each
/// coset, cosets in random order. Equal seeds give identical output.
Etls random_etls(const GroupTable& g, const SubgroupChain& chain,
                 std::uint64_t seed);

/// Accepts the blocks iff the product map is a bijection onto G.
LogSignature validate_log_signature(const GroupTable& g,
                                    const std::vector<std::vector<int>>& blocks);

/// The two-block signature ([a^0..a^{p-1}], [a^0, a^p, ..., a^{p(p-1)}])
/// of the cyclic group of order p^2. It is a logarithmic signature but
/// not an exact-transversal one.
LogSignature psquare_gamma(int p, int degree_limit = kDefaultDegreeLimit);

/// forward[x] = product of blocks[i] at the knapsack digits of x.
BreveMap breve_map(const LogSignature& sig);

/// Signature file format: "s=<int>", "radices=<r1> ... <rs>", then block i
/// as r_i space-separated element indices on one line.
std::string format_signature(const LogSignature& sig);
LogSignature parse_signature(std::istream& in, const GroupTable& g);

}  // namespace pgm
