// Acceptance suite: every headline claim, checked exactly, one line per
// criterion. Exits nonzero if any criterion fails or overruns its time
// budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pgm/cipher.hpp"
#include "pgm/experiment.hpp"
#include "pgm/witness.hpp"

using namespace pgm;

namespace {

struct Harness {
  int failures = 0;

  void run(int number, const std::string& title, double budget_seconds,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > budget_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over budget");
    }
    std::printf("%s  criterion %d: %s (%s%.2fs of %.0fs)\n",
                ok ? "PASS" : "FAIL", number, title.c_str(),
                detail.empty() ? "" : (detail + "; ").c_str(), elapsed,
                budget_seconds);
    if (!ok) ++failures;
  }
};

std::vector<Permutation> eh_perms(const GroupTable& g, bool cross) {
  return generator_perms(eh_generating_set(make_eh_config(g, cross)));
}

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<size_t>(i)] = i;
  for (size_t i = images.size(); i > 1; --i)
    std::swap(images[i - 1], images[rng() % i]);
  return Permutation(std::move(images));
}

bool theorem_orders(std::string& detail) {
  for (const MatrixEntry& e : test_matrix()) {
    if (!e.theorem_covered) continue;
    const GroupTable g = make_group(e.spec);
    const BigInt order = schreier_sims(eh_perms(g, true)).order;
    if (order != factorial(g.n)) {
      detail = std::string(e.spec) + " gave order " + order.str();
      return false;
    }
  }
  return true;
}

bool psquare_part1(std::string& detail) {
  const GroupTable z4 = make_group("cyclic:4");
  const auto perms4 = eh_perms(z4, false);
  const BigInt order4 = schreier_sims(perms4).order;
  if (order4 != 8 || order4 >= factorial(4)) {
    detail = "p=2 order " + order4.str();
    return false;
  }
  if (BigInt(brute_force_closure(perms4).size()) != order4) {
    detail = "p=2 closure disagrees with the stabilizer chain";
    return false;
  }
  const auto systems4 = find_block_systems(perms4);
  if (systems4.size() != 1 || !(systems4[0] == canonical_blocks(2, 2))) {
    detail = "p=2 block system mismatch";
    return false;
  }

  const GroupTable z9 = make_group("cyclic:9");
  const auto perms9 = eh_perms(z9, false);
  const BigInt order9 = schreier_sims(perms9).order;
  if (order9 >= factorial(9)) {
    detail = "p=3 order " + order9.str() + " not proper";
    return false;
  }
  const auto systems9 = find_block_systems(perms9);
  const bool has_size3 =
      std::any_of(systems9.begin(), systems9.end(),
                  [](const BlockSystem& bs) { return bs.mu == 3; });
  if (!has_size3) {
    detail = "p=3 lacks a size-3 block system";
    return false;
  }
  return true;
}

bool psquare_part2(std::string& detail) {
  for (int p : {2, 3}) {
    const GroupTable g = make_group("cyclic:" + std::to_string(p * p));
    auto perms = eh_perms(g, false);
    perms.push_back(psquare_extra_generator(p));
    const BigInt order = schreier_sims(perms).order;
    if (order != factorial(p * p)) {
      detail = "p=" + std::to_string(p) + " augmented order " + order.str();
      return false;
    }
  }
  return true;
}

bool two_transitivity(std::string& detail) {
  for (const MatrixEntry& e : test_matrix()) {
    if (!e.theorem_covered) continue;
    const GroupTable g = make_group(e.spec);
    if (transitivity_degree(eh_perms(g, true)) != 2) {
      detail = std::string(e.spec) + " is not 2-transitive";
      return false;
    }
    const ProofContext ctx = make_proof_context(g);
    for (int x = 0; x < g.n; ++x)
      for (int x2 = 0; x2 < g.n; ++x2)
        for (int y = 0; y < g.n; ++y)
          for (int y2 = 0; y2 < g.n; ++y2) {
            if (x == x2 || y == y2) continue;
            const WitnessWord w = mover_two_transitive(ctx, x, x2, y, y2);
            if (w.product(x) != y || w.product(x2) != y2 ||
                !contains(ctx.group_bsgs, w.product)) {
              detail = std::string(e.spec) + " mover failed at (" +
                       std::to_string(x) + "," + std::to_string(x2) + ")->(" +
                       std::to_string(y) + "," + std::to_string(y2) + ")";
              return false;
            }
          }
  }
  return true;
}

bool odd_constructions(std::string& detail) {
  for (const char* spec : {"cyclic:9", "cyclic:15"}) {
    const GroupTable g = make_group(spec);
    const ProofContext ctx = make_proof_context(g);
    for (int block = 0; block < ctx.lambda(); ++block) {
      const WitnessWord w = three_cycle_odd(ctx, block, 0, 1);
      int moved = 0, in_cycle = 0;
      for (int x = 0; x < g.n; ++x) {
        if (w.product(x) == x) continue;
        ++moved;
        if (x % ctx.lambda() == block) ++in_cycle;
        int y = x, steps = 0;
        do {
          y = w.product(y);
          ++steps;
        } while (y != x);
        if (steps != 3) {
          detail = std::string(spec) + " cycle length " + std::to_string(steps);
          return false;
        }
      }
      if (moved != 3 || in_cycle != 3) {
        detail = std::string(spec) + " support leaked outside the block";
        return false;
      }
    }
  }
  for (const MatrixEntry& e : test_matrix()) {
    const ProofContext ctx = make_proof_context(make_group(e.spec));
    if (parity(odd_parity_generator(ctx).product) != -1) {
      detail = std::string(e.spec) + " odd generator is even";
      return false;
    }
  }
  return true;
}

bool wreath_orders(std::string& detail) {
  for (const MatrixEntry& e : test_matrix()) {
    const GroupTable g = make_group(e.spec);
    if (g.n % 2 != 0) continue;
    const EhConfig cfg = make_eh_config(g, false);
    if (cfg.primary.levels[1].order() != 2) {
      detail = std::string(e.spec) + " policy chose |H| != 2";
      return false;
    }
    const auto perms = generator_perms(eh_generating_set(cfg));
    BigInt expect = factorial(g.n / 2);
    for (int i = 0; i < g.n / 2; ++i) expect *= 2;
    const BigInt order = schreier_sims(perms).order;
    if (order != expect) {
      detail = std::string(e.spec) + " order " + order.str() + " expected " +
               expect.str();
      return false;
    }
    if (g.n <= 8 && BigInt(brute_force_closure(perms).size()) != expect) {
      detail = std::string(e.spec) + " closure disagrees";
      return false;
    }
  }
  return true;
}

bool oracle_equivalence(std::string& detail) {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    std::vector<Permutation> gens;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i)
      gens.push_back(random_perm(n, rng));
    if (BigInt(brute_force_closure(gens).size()) !=
        schreier_sims(gens).order) {
      detail = "trial " + std::to_string(trial) + " disagrees";
      return false;
    }
  }
  return true;
}

bool cipher_roundtrip(std::string& detail) {
  int keys = 0;
  for (const MatrixEntry& e : test_matrix()) {
    const GroupTable g = make_group(e.spec);
    const SubgroupChain chain = choose_chains(g).primary;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const PgmKey k = keygen(g, chain, seed);
      ++keys;
      for (int m = 0; m < g.n; ++m)
        if (decrypt(k, encrypt(k, m)) != m) {
          detail = std::string(e.spec) + " seed " + std::to_string(seed) +
                   " failed at m=" + std::to_string(m);
          return false;
        }
    }
  }
  if (keys < 100) {
    detail = "only " + std::to_string(keys) + " keys";
    return false;
  }
  const GroupTable z4 = make_group("cyclic:4");
  const Etls alpha = canonical_etls(z4, two_step_chain(z4, Subgroup{{0, 2}}));
  const PgmKey k = make_key(z4, alpha.sig, psquare_gamma(2));
  if (encrypt(k, 2) != 1 || encrypt(k, 0) != 0) {
    detail = "power-signature key values off";
    return false;
  }
  return true;
}

bool structural_properties(std::string& detail) {
  std::mt19937_64 rng(5);
  for (const MatrixEntry& e : test_matrix()) {
    const GroupTable g = make_group(e.spec);
    const SubgroupChain chain = choose_chains(g).primary;
    const Etls alpha = canonical_etls(g, chain);
    const int lambda = alpha.lambda();
    const int mu = alpha.mu();
    const BlockSystem bs = canonical_blocks(lambda, mu);
    const auto cell_image = [&](const Permutation& p, int x2) {
      std::vector<int> image;
      for (int v : bs.blocks[static_cast<size_t>(x2)]) image.push_back(p(v));
      std::sort(image.begin(), image.end());
      return image;
    };

    // block preservation for all three families
    for (int trial = 0; trial < 3; ++trial) {
      const Permutation tau_l = random_perm(lambda, rng);
      const Permutation bw = blockwise_perm(tau_l, lambda, mu);
      const Permutation tau_m = random_perm(mu, rng);
      const Permutation diag = diagonal_perm(tau_m, lambda, mu);
      for (int x2 = 0; x2 < lambda; ++x2) {
        if (cell_image(bw, x2) != bs.blocks[static_cast<size_t>(tau_l(x2))] ||
            cell_image(diag, x2) != bs.blocks[static_cast<size_t>(x2)]) {
          detail = std::string(e.spec) + " block preservation";
          return false;
        }
      }
    }
    for (int z0 = 0; z0 < lambda; ++z0)
      for (int h : chain.levels[1].elements)
        for (int x2 = 0; x2 < lambda; ++x2)
          if (cell_image(regular_perm(alpha, z0, h), x2) !=
              bs.blocks[static_cast<size_t>(x2)]) {
            detail = std::string(e.spec) + " regular block preservation";
            return false;
          }

    // homomorphism laws
    for (int trial = 0; trial < 3; ++trial) {
      const Permutation s = random_perm(lambda, rng);
      const Permutation t = random_perm(lambda, rng);
      if (!(blockwise_perm(compose(s, t), lambda, mu) ==
            compose(blockwise_perm(s, lambda, mu),
                    blockwise_perm(t, lambda, mu)))) {
        detail = std::string(e.spec) + " blockwise homomorphism";
        return false;
      }
      const Permutation u = random_perm(mu, rng);
      const Permutation v = random_perm(mu, rng);
      if (!(diagonal_perm(compose(u, v), lambda, mu) ==
            compose(diagonal_perm(u, lambda, mu),
                    diagonal_perm(v, lambda, mu)))) {
        detail = std::string(e.spec) + " diagonal homomorphism";
        return false;
      }
    }
    for (int h1 : chain.levels[1].elements)
      for (int h2 : chain.levels[1].elements)
        if (!(regular_perm(alpha, 0, g.times(h1, h2)) ==
              compose(regular_perm(alpha, 0, h1),
                      regular_perm(alpha, 0, h2)))) {
          detail = std::string(e.spec) + " regular homomorphism";
          return false;
        }

    // transform triple identity and breve bijectivity on random signatures
    const BreveMap a = breve_map(alpha.sig);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const BreveMap b = breve_map(random_etls(g, chain, 2 * seed).sig);
      const BreveMap c = breve_map(random_etls(g, chain, 2 * seed + 1).sig);
      if (!(compose(inverse(pgm_transform(a, c)), pgm_transform(a, b)) ==
            pgm_transform(c, b))) {
        detail = std::string(e.spec) + " triple identity";
        return false;
      }
      std::set<int> images(b.forward.begin(), b.forward.end());
      if (static_cast<int>(images.size()) != g.n) {
        detail = std::string(e.spec) + " breve not bijective";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  Harness h;
  h.run(1, "transform closures reach n! on every theorem-covered group", 5.0,
        theorem_orders);
  h.run(2, "prime-square transforms stay proper and imprimitive", 2.0,
        psquare_part1);
  h.run(3, "the extra generator upgrades prime-square closures to n!", 2.0,
        psquare_part2);
  h.run(4, "2-transitivity, with movers for every ordered pair of pairs",
        30.0, two_transitivity);
  h.run(5, "odd-order 3-cycles and odd-parity generators", 1.0,
        odd_constructions);
  h.run(6, "|H|=2 transforms generate the full wreath product", 2.0,
        wreath_orders);
  h.run(7, "stabilizer-chain orders equal enumerated closure sizes", 5.0,
        oracle_equivalence);
  h.run(8, "cipher round trips and the power-signature key values", 1.0,
        cipher_roundtrip);
  h.run(9, "structural properties of the transform families", 5.0,
        structural_properties);
  if (h.failures == 0) {
    std::printf("all 9 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", h.failures);
  return 1;
}
