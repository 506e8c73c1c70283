#include "pgm/witness.hpp"

#include <algorithm>
#include <sstream>

#include "pgm/errors.hpp"

namespace pgm {

namespace {

std::vector<long long> perm_params(const Permutation& tau) {
  std::vector<long long> params;
  params.reserve(tau.images.size());
  for (int v : tau.images) params.push_back(v);
  return params;
}

Permutation perm_from_params(const std::vector<long long>& params) {
  std::vector<int> images;
  images.reserve(params.size());
  for (long long v : params) images.push_back(static_cast<int>(v));
  return Permutation(std::move(images));
}

// Extends the partial map {sources[i] -> targets[i]} to a permutation of
// I_m: the remaining sources, in increasing order, take the remaining
// targets in increasing order.
Permutation complete_map(int m, const std::vector<int>& sources,
                         const std::vector<int>& targets) {
  std::vector<int> images(static_cast<size_t>(m), -1);
  std::vector<bool> used(static_cast<size_t>(m), false);
  for (size_t i = 0; i < sources.size(); ++i) {
    images[static_cast<size_t>(sources[i])] = targets[i];
    used[static_cast<size_t>(targets[i])] = true;
  }
  int next = 0;
  for (int x = 0; x < m; ++x) {
    if (images[static_cast<size_t>(x)] != -1) continue;
    while (used[static_cast<size_t>(next)]) ++next;
    images[static_cast<size_t>(x)] = next;
    used[static_cast<size_t>(next)] = true;
  }
  return Permutation(std::move(images));
}

// Tracks the running images of the two moved points while collecting
// factors.
struct WordBuilder {
  const ProofContext& ctx;
  std::vector<WitnessFactor> factors;
  int cur1;
  int cur2;

  WordBuilder(const ProofContext& c, int p1, int p2)
      : ctx(c), cur1(p1), cur2(p2) {}

  void apply(WitnessFactor factor) {
    cur1 = factor.perm(cur1);
    cur2 = factor.perm(cur2);
    factors.push_back(std::move(factor));
  }

  void apply_blockwise(const Permutation& tau) {
    if (tau.is_identity()) return;
    apply(WitnessFactor{EhFamily::Blockwise, perm_params(tau), false,
                        blockwise_perm(tau, ctx.lambda(), ctx.mu())});
  }

  void apply_diagonal(const Permutation& tau) {
    if (tau.is_identity()) return;
    apply(WitnessFactor{EhFamily::Diagonal, perm_params(tau), false,
                        diagonal_perm(tau, ctx.lambda(), ctx.mu())});
  }

  void apply_regular(int z0, int h) {
    if (h == 0) return;
    apply(WitnessFactor{EhFamily::Regular, {z0, h}, false,
                        regular_perm(ctx.alpha, z0, h)});
  }

  void apply_cross(int h) {
    for (const EhGenerator& gen : ctx.generators) {
      if (gen.family == EhFamily::Cross && gen.params == std::vector<long long>{h}) {
        apply(WitnessFactor{EhFamily::Cross, gen.params, false, gen.perm});
        return;
      }
    }
    fail(Errc::MissingSecondarySubgroup,
         "context has no cross transform for element " + std::to_string(h));
  }

  // Moves cur1 onto y and cur2 onto y2 when cur1/cur2 and y/y2 each
  // straddle two blocks: one blockwise factor aligns the blocks, then one
  // regular factor per target block aligns the coordinates.
  void split_to_split(int y, int y2) {
    const int lambda = ctx.lambda();
    const Permutation tau =
        complete_map(lambda, {ctx.block_of(cur1), ctx.block_of(cur2)},
                     {ctx.block_of(y), ctx.block_of(y2)});
    apply_blockwise(tau);
    const std::vector<int>& alpha1 = ctx.alpha.alpha1();
    const GroupTable& g = ctx.group;
    const auto align = [&](int cur, int target) {
      const int u = ctx.coord_of(cur);
      const int v = ctx.coord_of(target);
      const int h = g.times(g.inverse_of(alpha1[static_cast<size_t>(u)]),
                            alpha1[static_cast<size_t>(v)]);
      apply_regular(ctx.block_of(target), h);
    };
    // The two regular factors live on different blocks, so aligning the
    // first point leaves the second in place.
    align(cur1, y);
    align(cur2, y2);
  }

  // Breaks a same-block pair apart: normalize so one point is 0, then use
  // the cross transform that fixes 0 and expels the other point.
  void split_pair() {
    if (ctx.block_of(cur1) != 0)
      apply_blockwise(transposition(ctx.lambda(), ctx.block_of(cur1), 0));
    if (cur1 != 0 && cur2 != 0)
      apply_diagonal(transposition(ctx.mu(), ctx.coord_of(cur2), 0));
    const int moving = (cur1 == 0) ? cur2 : cur1;
    apply_cross(ctx.alpha_breve.forward[static_cast<size_t>(moving)]);
  }
};

WitnessFactor invert_factor(const ProofContext& ctx,
                            const WitnessFactor& factor) {
  switch (factor.family) {
    case EhFamily::Blockwise:
    case EhFamily::Diagonal: {
      const Permutation tau = inverse(perm_from_params(factor.params));
      return WitnessFactor{factor.family, perm_params(tau), factor.inverted,
                           inverse(factor.perm)};
    }
    case EhFamily::Regular: {
      const int z0 = static_cast<int>(factor.params[0]);
      const int h = static_cast<int>(factor.params[1]);
      return WitnessFactor{EhFamily::Regular,
                           {z0, ctx.group.inverse_of(h)},
                           factor.inverted,
                           inverse(factor.perm)};
    }
    case EhFamily::Cross:
    case EhFamily::CrossSeed:
      return WitnessFactor{factor.family, factor.params, !factor.inverted,
                           inverse(factor.perm)};
  }
  fail(Errc::OutOfRange, "unknown factor family");
}

WitnessWord finish(std::vector<WitnessFactor> factors, int degree) {
  Permutation product = Permutation::identity(degree);
  for (const WitnessFactor& f : factors) product = compose(product, f.perm);
  return WitnessWord{std::move(factors), std::move(product)};
}

void require_point(const ProofContext& ctx, int p, const char* what) {
  if (p < 0 || p >= ctx.group.n)
    fail(Errc::OutOfRange, std::string(what) + " = " + std::to_string(p));
}

}  // namespace

std::string WitnessFactor::name() const {
  std::ostringstream out;
  out << eh_family_name(family) << '(';
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) out << ',';
    out << params[i];
  }
  out << ')';
  if (inverted) out << "^-1";
  return out.str();
}

ProofContext make_proof_context(const GroupTable& g, bool with_secondary,
                                std::vector<std::uint64_t> seeds) {
  ChainPolicy policy = choose_chains(g);
  const bool cross = with_secondary && policy.secondary.has_value();

  EhConfig cfg;
  cfg.group = g;
  cfg.primary = policy.primary;
  if (cross) cfg.secondary = policy.secondary;
  cfg.include_cross = cross;
  cfg.seeds = std::move(seeds);

  ProofContext ctx;
  ctx.group = g;
  ctx.primary = policy.primary;
  ctx.secondary = cross ? policy.secondary : std::nullopt;
  ctx.alpha = canonical_etls(g, policy.primary);
  ctx.alpha_breve = breve_map(ctx.alpha.sig);
  ctx.generators = eh_generating_set(cfg);
  ctx.group_bsgs = schreier_sims(generator_perms(ctx.generators), g.n);
  return ctx;
}

WitnessWord mover_two_transitive(const ProofContext& ctx, int x, int x2, int y,
                                 int y2) {
  require_point(ctx, x, "x");
  require_point(ctx, x2, "x2");
  require_point(ctx, y, "y");
  require_point(ctx, y2, "y2");
  if (x == x2 || y == y2)
    fail(Errc::DegenerateInput, "the two moved points must be distinct");

  const bool same_src = ctx.block_of(x) == ctx.block_of(x2);
  const bool same_dst = ctx.block_of(y) == ctx.block_of(y2);

  if (same_src && !same_dst) {
    WordBuilder b(ctx, x, x2);
    b.split_pair();
    b.split_to_split(y, y2);
    return finish(std::move(b.factors), ctx.group.n);
  }

  if (!same_src && same_dst) {
    // Run the split construction backwards: take (y, y2) apart onto
    // (x, x2), then invert the word.
    WitnessWord reverse = mover_two_transitive(ctx, y, y2, x, x2);
    std::vector<WitnessFactor> factors;
    factors.reserve(reverse.factors.size());
    for (auto it = reverse.factors.rbegin(); it != reverse.factors.rend(); ++it)
      factors.push_back(invert_factor(ctx, *it));
    return finish(std::move(factors), ctx.group.n);
  }

  if (same_src && same_dst) {
    WordBuilder b(ctx, x, x2);
    if (ctx.block_of(x) != ctx.block_of(y))
      b.apply_blockwise(
          transposition(ctx.lambda(), ctx.block_of(x), ctx.block_of(y)));
    b.apply_diagonal(complete_map(
        ctx.mu(), {ctx.coord_of(b.cur1), ctx.coord_of(b.cur2)},
        {ctx.coord_of(y), ctx.coord_of(y2)}));
    return finish(std::move(b.factors), ctx.group.n);
  }

  WordBuilder b(ctx, x, x2);
  b.split_to_split(y, y2);
  return finish(std::move(b.factors), ctx.group.n);
}

WitnessWord three_cycle_odd(const ProofContext& ctx, int block, int a, int b) {
  const int n = ctx.group.n;
  if (n % 2 == 0)
    fail(Errc::EvenDegree,
         "the 3-cycle construction applies to odd group orders");
  const int lambda = ctx.lambda();
  const int mu = ctx.mu();
  if (block < 0 || block >= lambda)
    fail(Errc::BadBlockIndex, "block " + std::to_string(block));
  if (a < 0 || a >= mu || b < 0 || b >= mu || a == b)
    fail(Errc::BadBlockCoordinates,
         "need two distinct in-block coordinates below " + std::to_string(mu));

  const std::vector<int>& alpha1 = ctx.alpha.alpha1();
  const GroupTable& g = ctx.group;
  // Carrier of a to b inside H; its order is odd, hence at least 3, so
  // conjugating the diagonal transposition traces a genuine 3-cycle.
  const int h = g.times(g.inverse_of(alpha1[static_cast<size_t>(a)]),
                        alpha1[static_cast<size_t>(b)]);

  const Permutation sigma_tau = transposition(mu, a, b);
  std::vector<WitnessFactor> factors;
  factors.push_back(WitnessFactor{EhFamily::Regular,
                                  {block, g.inverse_of(h)},
                                  false,
                                  regular_perm(ctx.alpha, block,
                                               g.inverse_of(h))});
  factors.push_back(WitnessFactor{EhFamily::Diagonal, perm_params(sigma_tau),
                                  false, diagonal_perm(sigma_tau, lambda, mu)});
  factors.push_back(WitnessFactor{EhFamily::Regular,
                                  {block, h},
                                  false,
                                  regular_perm(ctx.alpha, block, h)});
  factors.push_back(WitnessFactor{EhFamily::Diagonal, perm_params(sigma_tau),
                                  false, diagonal_perm(sigma_tau, lambda, mu)});
  return finish(std::move(factors), n);
}

WitnessWord odd_parity_generator(const ProofContext& ctx) {
  const GroupTable& g = ctx.group;
  for (int h : ctx.h_subgroup().elements) {
    if (h != 0 && g.times(h, h) == 0) {
      std::vector<WitnessFactor> factors{
          WitnessFactor{EhFamily::Regular, {0, h}, false,
                        regular_perm(ctx.alpha, 0, h)}};
      return finish(std::move(factors), g.n);
    }
  }
  // |H| odd: swapping two blocks is mu disjoint transpositions, mu odd.
  const Permutation tau = transposition(ctx.lambda(), 0, 1);
  std::vector<WitnessFactor> factors{
      WitnessFactor{EhFamily::Blockwise, perm_params(tau), false,
                    blockwise_perm(tau, ctx.lambda(), ctx.mu())}};
  return finish(std::move(factors), g.n);
}

Permutation psquare_extra_generator(int p, int degree_limit) {
  const LogSignature gamma = psquare_gamma(p, degree_limit);
  const GroupTable& g = gamma.group;
  std::vector<int> h_elements;
  for (int x = 0; x < p; ++x) h_elements.push_back(p * x);
  std::sort(h_elements.begin(), h_elements.end());
  const Etls alpha =
      canonical_etls(g, two_step_chain(g, Subgroup{h_elements}));
  return pgm_transform(breve_map(alpha.sig), breve_map(gamma));
}

Permutation materialize_factor(const ProofContext& ctx,
                               const WitnessFactor& factor) {
  Permutation p;
  switch (factor.family) {
    case EhFamily::Blockwise:
      p = blockwise_perm(perm_from_params(factor.params), ctx.lambda(),
                         ctx.mu());
      break;
    case EhFamily::Diagonal:
      p = diagonal_perm(perm_from_params(factor.params), ctx.lambda(),
                        ctx.mu());
      break;
    case EhFamily::Regular:
      p = regular_perm(ctx.alpha, static_cast<int>(factor.params[0]),
                       static_cast<int>(factor.params[1]));
      break;
    case EhFamily::Cross: {
      if (!ctx.secondary)
        fail(Errc::MissingSecondarySubgroup, "context lacks a K chain");
      p = cross_transform(ctx.group, ctx.primary, *ctx.secondary,
                          static_cast<int>(factor.params[0]))
              .perm;
      break;
    }
    case EhFamily::CrossSeed: {
      if (!ctx.secondary)
        fail(Errc::MissingSecondarySubgroup, "context lacks a K chain");
      const Etls beta =
          random_etls(ctx.group, *ctx.secondary,
                      static_cast<std::uint64_t>(factor.params[0]));
      p = pgm_transform(ctx.alpha_breve, breve_map(beta.sig));
      break;
    }
  }
  return factor.inverted ? inverse(p) : p;
}

std::string format_witness(const WitnessWord& word) {
  std::string out;
  for (const WitnessFactor& f : word.factors) {
    out += f.name();
    out += '\n';
  }
  out += format_permutation(word.product);
  out += '\n';
  return out;
}

}  // namespace pgm
