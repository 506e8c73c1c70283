#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pgm/signature.hpp"
#include "pgm/transforms.hpp"

namespace pgm {

/// Symmetric key material: a pair of logarithmic signatures over one
/// group. The encryption map is the induced round function, cached as an
/// explicit permutation together with its inverse. Keys are immutable;
/// encrypt/decrypt are pure lookups and safe to call concurrently.
struct PgmKey {
  GroupTable group;
  LogSignature alpha;
  LogSignature beta;
  Permutation enc;
  Permutation dec;
  std::uint64_t seed = 0;  // provenance; 0 for hand-assembled keys
};

/// Assembles a key from explicit signatures. beta may be any logarithmic
/// signature, not just an exact-transversal one.
PgmKey make_key(const GroupTable& g, LogSignature alpha, LogSignature beta,
                std::uint64_t seed = 0);

/// Draws two independent seeded signatures over the chain. Equal inputs
/// give byte-identical keys.
PgmKey keygen(const GroupTable& g, const SubgroupChain& chain,
              std::uint64_t seed);

/// One message block is one index of I_n.
int encrypt(const PgmKey& k, int m);
int decrypt(const PgmKey& k, int c);

/// Key file: the group section, the two signature sections, then a
/// "seed=<int>" provenance line.
std::string format_key(const PgmKey& k);
PgmKey parse_key(std::istream& in);

}  // namespace pgm
