#include "pgm/signature.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <sstream>

#include "pgm/errors.hpp"

namespace pgm {

namespace {

// Deterministic helper over mt19937_64; modulo bias is irrelevant at
// desk scale and the output is identical on every platform, unlike
// std::uniform_int_distribution.
struct SeededRng {
  std::mt19937_64 gen;
  explicit SeededRng(std::uint64_t seed) : gen(seed) {}
  std::size_t below(std::size_t k) {
    return static_cast<std::size_t>(gen() % k);
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }
};

// Right coset representatives of `lo` inside `hi`, minimal-index scan.
// Each entry pairs the representative with its full coset, in scan order.
struct Coset {
  int rep;
  std::vector<int> elements;
};

std::vector<Coset> cosets_within(const GroupTable& g, const Subgroup& lo,
                                 const Subgroup& hi) {
  std::vector<bool> covered(static_cast<size_t>(g.n), false);
  std::vector<Coset> out;
  for (int x : hi.elements) {
    if (covered[static_cast<size_t>(x)]) continue;
    Coset c{x, {}};
    for (int e : lo.elements) {
      const int y = g.times(e, x);
      covered[static_cast<size_t>(y)] = true;
      c.elements.push_back(y);
    }
    std::sort(c.elements.begin(), c.elements.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::vector<int> LogSignature::radices() const {
  std::vector<int> r;
  r.reserve(blocks.size());
  for (const auto& b : blocks) r.push_back(static_cast<int>(b.size()));
  return r;
}

KnapsackDigits knapsack_split(long long x, const std::vector<int>& radices) {
  long long product = 1;
  for (int r : radices) {
    if (r <= 0) fail(Errc::OutOfRange, "nonpositive radix");
    product *= r;
  }
  if (x < 0 || x >= product)
    fail(Errc::OutOfRange, "value " + std::to_string(x) +
                               " outside 0.." + std::to_string(product - 1));
  KnapsackDigits d;
  d.digits.assign(radices.size(), 0);
  for (size_t i = radices.size(); i-- > 0;) {
    d.digits[i] = static_cast<int>(x % radices[i]);
    x /= radices[i];
  }
  return d;
}

long long knapsack_join(const KnapsackDigits& d,
                        const std::vector<int>& radices) {
  if (d.digits.size() != radices.size())
    fail(Errc::OutOfRange, "digit/radix count mismatch");
  long long x = 0;
  for (size_t i = 0; i < radices.size(); ++i) {
    if (d.digits[i] < 0 || d.digits[i] >= radices[i])
      fail(Errc::OutOfRange, "digit outside its radix");
    x = x * radices[i] + d.digits[i];
  }
  return x;
}

Etls canonical_etls(const GroupTable& g, const SubgroupChain& chain) {
  check_chain(g, chain);
  if (chain.steps() < 2)
    fail(Errc::ChainTooShort,
         "need a chain 1 < H < G; none exists for trivial or prime-order "
         "groups");
  LogSignature sig;
  sig.group = g;
  for (int i = 0; i < chain.steps(); ++i) {
    std::vector<int> block;
    for (const Coset& c : cosets_within(g, chain.levels[static_cast<size_t>(i)],
                                        chain.levels[static_cast<size_t>(i + 1)]))
      block.push_back(c.rep);
    sig.blocks.push_back(std::move(block));
  }
  return Etls{std::move(sig), chain};
}

Etls random_etls(const GroupTable& g, const SubgroupChain& chain,
                 std::uint64_t seed) {
  check_chain(g, chain);
  if (chain.steps() < 2)
    fail(Errc::ChainTooShort,
         "need a chain 1 < H < G; none exists for trivial or prime-order "
         "groups");
  SeededRng rng(seed);
  LogSignature sig;
  sig.group = g;
  for (int i = 0; i < chain.steps(); ++i) {
    auto cs = cosets_within(g, chain.levels[static_cast<size_t>(i)],
                            chain.levels[static_cast<size_t>(i + 1)]);
    std::vector<int> block;
    block.reserve(cs.size());
    for (const Coset& c : cs)
      block.push_back(c.elements[rng.below(c.elements.size())]);
    rng.shuffle(block);
    sig.blocks.push_back(std::move(block));
  }
  return Etls{std::move(sig), chain};
}

LogSignature validate_log_signature(
    const GroupTable& g, const std::vector<std::vector<int>>& blocks) {
  if (blocks.empty()) fail(Errc::BadShape, "signature needs at least one block");
  for (size_t i = 0; i < blocks.size(); ++i) {
    std::vector<bool> seen(static_cast<size_t>(g.n), false);
    if (blocks[i].empty())
      fail(Errc::NotExactCover, "block " + std::to_string(i) + " is empty");
    for (int x : blocks[i]) {
      if (x < 0 || x >= g.n)
        fail(Errc::OutOfRange, "entry " + std::to_string(x) + " in block " +
                                   std::to_string(i));
      if (seen[static_cast<size_t>(x)])
        fail(Errc::NotInjectiveBlock, "block " + std::to_string(i) +
                                          " repeats element " +
                                          std::to_string(x));
      seen[static_cast<size_t>(x)] = true;
    }
  }

  // Walk the digit odometer and count how often each element is produced.
  // A repeat shows up within n+1 products even when the radix product is
  // larger than n, so the scan is bounded without any overflow concerns.
  const size_t s = blocks.size();
  std::vector<int> digits(s, 0);
  std::vector<int> count(static_cast<size_t>(g.n), 0);
  bool wrapped = false;
  while (!wrapped) {
    int prod = blocks[0][static_cast<size_t>(digits[0])];
    for (size_t i = 1; i < s; ++i)
      prod = g.times(prod, blocks[i][static_cast<size_t>(digits[i])]);
    if (++count[static_cast<size_t>(prod)] > 1)
      fail(Errc::NotExactCover,
           "element " + std::to_string(prod) + " produced twice");
    size_t i = s;
    while (true) {
      if (i == 0) {
        wrapped = true;
        break;
      }
      --i;
      if (++digits[i] < static_cast<int>(blocks[i].size())) break;
      digits[i] = 0;
    }
  }
  for (int x = 0; x < g.n; ++x)
    if (count[static_cast<size_t>(x)] == 0)
      fail(Errc::NotExactCover, "element " + std::to_string(x) + " missed");

  LogSignature sig;
  sig.group = g;
  sig.blocks = blocks;
  return sig;
}

LogSignature psquare_gamma(int p, int degree_limit) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p));
  if (p * p > degree_limit)
    fail(Errc::OrderOverflow, "p^2 = " + std::to_string(p * p) +
                                  " exceeds degree limit " +
                                  std::to_string(degree_limit));
  const GroupTable g = make_group("cyclic:" + std::to_string(p * p),
                                  degree_limit);
  std::vector<int> first, second;
  for (int x = 0; x < p; ++x) first.push_back(x);
  for (int x = 0; x < p; ++x) second.push_back(p * x);
  return validate_log_signature(g, {first, second});
}

BreveMap breve_map(const LogSignature& sig) {
  const int n = sig.group.n;
  const std::vector<int> radices = sig.radices();
  long long product = 1;
  for (int r : radices) product *= r;
  if (product != n)
    fail(Errc::NotExactCover, "radix product " + std::to_string(product) +
                                  " differs from group order " +
                                  std::to_string(n));
  BreveMap b;
  b.forward.assign(static_cast<size_t>(n), -1);
  b.backward.assign(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    const KnapsackDigits d = knapsack_split(x, radices);
    int prod = sig.blocks[0][static_cast<size_t>(d.digits[0])];
    for (size_t i = 1; i < sig.blocks.size(); ++i)
      prod = sig.group.times(prod,
                             sig.blocks[i][static_cast<size_t>(d.digits[i])]);
    b.forward[static_cast<size_t>(x)] = prod;
    if (b.backward[static_cast<size_t>(prod)] != -1)
      fail(Errc::NotExactCover,
           "element " + std::to_string(prod) + " produced twice");
    b.backward[static_cast<size_t>(prod)] = x;
  }
  return b;
}

std::string format_signature(const LogSignature& sig) {
  std::ostringstream out;
  out << "s=" << sig.parts() << '\n';
  out << "radices=";
  const std::vector<int> r = sig.radices();
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) out << ' ';
    out << r[i];
  }
  out << '\n';
  for (const auto& block : sig.blocks) {
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) out << ' ';
      out << block[i];
    }
    out << '\n';
  }
  return out.str();
}

LogSignature parse_signature(std::istream& in, const GroupTable& g) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("s=", 0) != 0)
    fail(Errc::ParseError, "expected 's=<int>' header");
  int s = 0;
  try {
    s = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad signature header '" + line + "'");
  }
  if (s <= 0) fail(Errc::ParseError, "signature needs s >= 1");

  if (!std::getline(in, line) || line.rfind("radices=", 0) != 0)
    fail(Errc::ParseError, "expected 'radices=' line");
  std::istringstream rin(line.substr(8));
  std::vector<int> radices;
  int r;
  while (rin >> r) radices.push_back(r);
  if (static_cast<int>(radices.size()) != s)
    fail(Errc::ParseError, "radix count differs from s");

  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < s; ++i) {
    if (!std::getline(in, line))
      fail(Errc::ParseError, "truncated signature block");
    std::istringstream bin(line);
    std::vector<int> block;
    int v;
    while (bin >> v) block.push_back(v);
    if (static_cast<int>(block.size()) != radices[static_cast<size_t>(i)])
      fail(Errc::ParseError, "block " + std::to_string(i) +
                                 " length differs from its radix");
    blocks.push_back(std::move(block));
  }
  return validate_log_signature(g, blocks);
}

}  // namespace pgm
