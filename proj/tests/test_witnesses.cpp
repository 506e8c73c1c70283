#include <doctest.h>

#include <algorithm>
#include <set>

#include "pgm/errors.hpp"
#include "pgm/experiment.hpp"
#include "pgm/witness.hpp"

using namespace pgm;

namespace {

void check_word_invariants(const ProofContext& ctx, const WitnessWord& word) {
  Permutation fold = Permutation::identity(ctx.group.n);
  for (const WitnessFactor& f : word.factors) {
    CHECK(materialize_factor(ctx, f) == f.perm);
    CHECK(contains(ctx.group_bsgs, f.perm));
    fold = compose(fold, f.perm);
  }
  CHECK(fold == word.product);
  CHECK(contains(ctx.group_bsgs, word.product));
}

std::vector<int> cycle_lengths(const Permutation& p) {
  std::vector<int> lengths;
  std::vector<bool> seen(static_cast<size_t>(p.degree()), false);
  for (int x = 0; x < p.degree(); ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    int len = 0;
    for (int y = x; !seen[static_cast<size_t>(y)]; y = p(y)) {
      seen[static_cast<size_t>(y)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace

TEST_CASE("mover on cyclic:6, both pairs straddling blocks") {
  const GroupTable z6 = make_group("cyclic:6");
  const ProofContext ctx = make_proof_context(z6);
  const WitnessWord w = mover_two_transitive(ctx, 0, 1, 4, 2);
  CHECK(w.product(0) == 4);
  CHECK(w.product(1) == 2);
  for (const WitnessFactor& f : w.factors)
    CHECK((f.family == EhFamily::Blockwise || f.family == EhFamily::Regular));
  check_word_invariants(ctx, w);
}

TEST_CASE("mover on cyclic:6, breaking a shared block apart") {
  const GroupTable z6 = make_group("cyclic:6");
  const ProofContext ctx = make_proof_context(z6);
  const WitnessWord w = mover_two_transitive(ctx, 0, 3, 1, 5);
  CHECK(w.product(0) == 1);
  CHECK(w.product(3) == 5);
  CHECK(std::any_of(w.factors.begin(), w.factors.end(),
                    [](const WitnessFactor& f) {
                      return f.family == EhFamily::Cross;
                    }));
  check_word_invariants(ctx, w);
}

TEST_CASE("mover with equal source and target pairs") {
  const GroupTable z6 = make_group("cyclic:6");
  const ProofContext ctx = make_proof_context(z6);
  for (const auto& pr : std::vector<std::pair<int, int>>{{0, 1}, {0, 3}}) {
    const WitnessWord w = mover_two_transitive(ctx, pr.first, pr.second,
                                               pr.first, pr.second);
    CHECK(w.product(pr.first) == pr.first);
    CHECK(w.product(pr.second) == pr.second);
    check_word_invariants(ctx, w);
  }
}

TEST_CASE("mover rejects degenerate input") {
  const GroupTable z6 = make_group("cyclic:6");
  const ProofContext ctx = make_proof_context(z6);
  try {
    mover_two_transitive(ctx, 2, 2, 0, 1);
    FAIL("expected DegenerateInput");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateInput);
  }
}

TEST_CASE("mover needs the secondary subgroup to leave a block") {
  // cyclic:4 has a single proper subgroup, so the context carries no
  // cross transforms and same-block sources cannot be separated.
  const GroupTable z4 = make_group("cyclic:4");
  const ProofContext ctx = make_proof_context(z4);
  try {
    mover_two_transitive(ctx, 0, 2, 0, 1);
    FAIL("expected MissingSecondarySubgroup");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingSecondarySubgroup);
  }
  // pairs that stay inside the block structure still work
  const WitnessWord w = mover_two_transitive(ctx, 0, 2, 1, 3);
  CHECK(w.product(0) == 1);
  CHECK(w.product(2) == 3);
}

TEST_CASE("movers exhaust all ordered pairs on small groups") {
  for (const char* spec : {"cyclic:6", "cyclic:2xcyclic:2", "dihedral:4"}) {
    const GroupTable g = make_group(spec);
    const ProofContext ctx = make_proof_context(g);
    for (int x = 0; x < g.n; ++x)
      for (int x2 = 0; x2 < g.n; ++x2)
        for (int y = 0; y < g.n; ++y)
          for (int y2 = 0; y2 < g.n; ++y2) {
            if (x == x2 || y == y2) continue;
            const WitnessWord w = mover_two_transitive(ctx, x, x2, y, y2);
            CHECK(w.product(x) == y);
            CHECK(w.product(x2) == y2);
            CHECK(contains(ctx.group_bsgs, w.product));
          }
  }
}

TEST_CASE("mover words fold to their product") {
  const GroupTable g = make_group("cyclic:3xcyclic:3");
  const ProofContext ctx = make_proof_context(g);
  for (int x2 = 1; x2 < g.n; ++x2)
    for (int y = 0; y < g.n; ++y) {
      if (y == 5) continue;
      check_word_invariants(ctx, mover_two_transitive(ctx, 0, x2, y, 5));
    }
}

TEST_CASE("three_cycle_odd on cyclic:9") {
  const GroupTable z9 = make_group("cyclic:9");
  const ProofContext ctx = make_proof_context(z9);
  const WitnessWord w = three_cycle_odd(ctx, 0, 0, 1);
  CHECK(w.product.images ==
        std::vector<int>{3, 1, 2, 6, 4, 5, 0, 7, 8});
  check_word_invariants(ctx, w);

  SUBCASE("matches the conjugation identity computed from scratch") {
    // sigma swaps coordinates 0 and 1 in every block; pi cycles block 0
    const Permutation sigma =
        compose(compose(transposition(9, 0, 3), transposition(9, 1, 4)),
                transposition(9, 2, 5));
    const Permutation pi = make_cycle(9, {0, 3, 6});
    CHECK(w.product == compose(conjugate(sigma, pi), sigma));
  }
}

TEST_CASE("three_cycle_odd cycle structure across blocks and coordinates") {
  for (const char* spec : {"cyclic:9", "cyclic:15", "cyclic:3xcyclic:3"}) {
    const GroupTable g = make_group(spec);
    const ProofContext ctx = make_proof_context(g);
    for (int block = 0; block < ctx.lambda(); ++block)
      for (int a = 0; a < ctx.mu(); ++a)
        for (int b = 0; b < ctx.mu(); ++b) {
          if (a == b) continue;
          const WitnessWord w = three_cycle_odd(ctx, block, a, b);
          std::vector<int> expect(static_cast<size_t>(g.n - 3), 1);
          expect.push_back(3);
          CHECK(cycle_lengths(w.product) == expect);
          for (int x = 0; x < g.n; ++x)
            if (w.product(x) != x) CHECK(x % ctx.lambda() == block);
          CHECK(parity(w.product) == 1);
        }
  }
}

TEST_CASE("three_cycle_odd rejects even orders and bad coordinates") {
  const ProofContext ctx6 = make_proof_context(make_group("cyclic:6"));
  try {
    three_cycle_odd(ctx6, 0, 0, 1);
    FAIL("expected EvenDegree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EvenDegree);
  }
  const ProofContext ctx9 = make_proof_context(make_group("cyclic:9"));
  try {
    three_cycle_odd(ctx9, 0, 1, 1);
    FAIL("expected BadBlockCoordinates");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadBlockCoordinates);
  }
  CHECK_THROWS_AS(three_cycle_odd(ctx9, 5, 0, 1), Error);
}

TEST_CASE("odd_parity_generator") {
  const ProofContext ctx6 = make_proof_context(make_group("cyclic:6"));
  const WitnessWord w6 = odd_parity_generator(ctx6);
  CHECK(w6.product == transposition(6, 0, 3));
  CHECK(parity(w6.product) == -1);

  const ProofContext ctx9 = make_proof_context(make_group("cyclic:9"));
  const WitnessWord w9 = odd_parity_generator(ctx9);
  CHECK(parity(w9.product) == -1);
  CHECK(cycle_lengths(w9.product) == std::vector<int>{1, 1, 1, 2, 2, 2});

  const ProofContext ctx15 = make_proof_context(make_group("cyclic:15"));
  CHECK(parity(odd_parity_generator(ctx15).product) == -1);

  SUBCASE("parity is -1 for every shipped group") {
    for (const MatrixEntry& e : test_matrix()) {
      const ProofContext ctx = make_proof_context(make_group(e.spec));
      const WitnessWord w = odd_parity_generator(ctx);
      CHECK(parity(w.product) == -1);
      check_word_invariants(ctx, w);
    }
  }
}

TEST_CASE("psquare_extra_generator") {
  CHECK(psquare_extra_generator(2).images == std::vector<int>{0, 2, 1, 3});

  const Permutation extra3 = psquare_extra_generator(3);
  CHECK(extra3(0) == 0);
  CHECK(extra3(3) == 1);

  SUBCASE("it moves a block-0 point out of block 0 while fixing 0") {
    for (int p : {2, 3, 5}) {
      const Permutation extra = psquare_extra_generator(p, 32);
      CHECK(extra(0) == 0);
      CHECK(extra(p) % p != 0);
    }
  }

  SUBCASE("adding it to the cyclic:9 transforms yields 9!") {
    auto perms = generator_perms(
        eh_generating_set(make_eh_config(make_group("cyclic:9"), false)));
    perms.push_back(psquare_extra_generator(3));
    CHECK(schreier_sims(perms).order == factorial(9));
  }

  SUBCASE("composite p is rejected") {
    try {
      psquare_extra_generator(6);
      FAIL("expected NotPrime");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotPrime);
    }
  }
}

TEST_CASE("witness words serialize factor names and the product") {
  const GroupTable z6 = make_group("cyclic:6");
  const ProofContext ctx = make_proof_context(z6);
  const WitnessWord w = mover_two_transitive(ctx, 0, 3, 1, 5);
  const std::string text = format_witness(w);
  CHECK(text.find("cross(3)\n") != std::string::npos);
  CHECK(text.rfind(format_permutation(w.product) + "\n") ==
        text.size() - format_permutation(w.product).size() - 1);

  const WitnessWord back = mover_two_transitive(ctx, 1, 5, 0, 3);
  const std::string back_text = format_witness(back);
  CHECK(back_text.find("cross(3)^-1\n") != std::string::npos);
  CHECK(back.product == inverse(w.product));
}
