#include "pgm/cipher.hpp"

#include <istream>
#include <random>
#include <sstream>

#include "pgm/errors.hpp"

namespace pgm {

namespace {

void require_same_group(const GroupTable& g, const LogSignature& sig,
                        const char* which) {
  if (sig.group.n != g.n || sig.group.mul != g.mul)
    fail(Errc::DegreeMismatch,
         std::string(which) + " signature is over a different group");
}

}  // namespace

PgmKey make_key(const GroupTable& g, LogSignature alpha, LogSignature beta,
                std::uint64_t seed) {
  require_same_group(g, alpha, "alpha");
  require_same_group(g, beta, "beta");
  PgmKey k;
  k.group = g;
  k.enc = pgm_transform(breve_map(alpha), breve_map(beta));
  k.dec = inverse(k.enc);
  k.alpha = std::move(alpha);
  k.beta = std::move(beta);
  k.seed = seed;
  return k;
}

PgmKey keygen(const GroupTable& g, const SubgroupChain& chain,
              std::uint64_t seed) {
  std::mt19937_64 split(seed);
  const std::uint64_t alpha_seed = split();
  const std::uint64_t beta_seed = split();
  return make_key(g, random_etls(g, chain, alpha_seed).sig,
                  random_etls(g, chain, beta_seed).sig, seed);
}

int encrypt(const PgmKey& k, int m) {
  if (m < 0 || m >= k.group.n)
    fail(Errc::OutOfRange, "message " + std::to_string(m) + " outside I_" +
                               std::to_string(k.group.n));
  return k.enc(m);
}

int decrypt(const PgmKey& k, int c) {
  if (c < 0 || c >= k.group.n)
    fail(Errc::OutOfRange, "ciphertext " + std::to_string(c) + " outside I_" +
                               std::to_string(k.group.n));
  return k.dec(c);
}

std::string format_key(const PgmKey& k) {
  std::string out = format_group(k.group);
  out += format_signature(k.alpha);
  out += format_signature(k.beta);
  out += "seed=" + std::to_string(k.seed) + "\n";
  return out;
}

PgmKey parse_key(std::istream& in) {
  const GroupTable g = parse_group_section(in);
  LogSignature alpha = parse_signature(in, g);
  LogSignature beta = parse_signature(in, g);
  std::string line;
  if (!std::getline(in, line) || line.rfind("seed=", 0) != 0)
    fail(Errc::ParseError, "expected 'seed=<int>' line");
  std::uint64_t seed = 0;
  try {
    seed = std::stoull(line.substr(5));
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad seed line '" + line + "'");
  }
  std::string tail;
  if (in >> tail) fail(Errc::ParseError, "trailing garbage '" + tail + "'");
  return make_key(g, std::move(alpha), std::move(beta), seed);
}

}  // namespace pgm
