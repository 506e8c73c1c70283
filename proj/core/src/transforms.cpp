#include "pgm/transforms.hpp"

#include <algorithm>
#include <sstream>

#include "pgm/errors.hpp"

namespace pgm {

namespace {

void require_shape(int lambda, int mu) {
  if (lambda < 2 || mu < 1)
    fail(Errc::BadShape, "need lambda >= 2 blocks of size >= 1");
}

const Subgroup& chain_h(const SubgroupChain& chain) {
  return chain.levels[1];
}

}  // namespace

const char* eh_family_name(EhFamily f) {
  switch (f) {
    case EhFamily::Blockwise: return "blockwise";
    case EhFamily::Regular: return "regular";
    case EhFamily::Diagonal: return "diagonal";
    case EhFamily::Cross: return "cross";
    case EhFamily::CrossSeed: return "cross_seed";
  }
  return "?";
}

std::string EhGenerator::name() const {
  std::ostringstream out;
  out << eh_family_name(family) << '(';
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) out << ',';
    out << params[i];
  }
  out << ')';
  return out.str();
}

Permutation pgm_transform(const BreveMap& a, const BreveMap& b) {
  if (a.degree() != b.degree())
    fail(Errc::DegreeMismatch, "pgm_transform over different degrees");
  std::vector<int> images(a.forward.size());
  for (size_t x = 0; x < images.size(); ++x)
    images[x] = b.backward[static_cast<size_t>(a.forward[x])];
  return Permutation(std::move(images));
}

Permutation blockwise_perm(const Permutation& tau, int lambda, int mu) {
  require_shape(lambda, mu);
  if (tau.degree() != lambda)
    fail(Errc::DegreeMismatch, "tau must permute the lambda block indices");
  Permutation p = Permutation::identity(lambda * mu);
  for (int x1 = 0; x1 < mu; ++x1)
    for (int x2 = 0; x2 < lambda; ++x2)
      p.images[static_cast<size_t>(x2 + lambda * x1)] = tau(x2) + lambda * x1;
  return p;
}

Permutation regular_perm(const Etls& e, int z0, int h) {
  const GroupTable& g = e.sig.group;
  const int lambda = e.lambda();
  const int mu = e.mu();
  if (e.sig.parts() != 2)
    fail(Errc::BadShape, "regular transforms need a two-part signature");
  if (z0 < 0 || z0 >= lambda)
    fail(Errc::BadBlockIndex, "block index " + std::to_string(z0));
  const std::vector<int>& alpha1 = e.alpha1();
  // position of each subgroup element inside alpha1
  std::vector<int> pos(static_cast<size_t>(g.n), -1);
  for (int i = 0; i < mu; ++i)
    pos[static_cast<size_t>(alpha1[static_cast<size_t>(i)])] = i;
  if (h < 0 || h >= g.n || pos[static_cast<size_t>(h)] < 0)
    fail(Errc::NotInSubgroup, "element " + std::to_string(h) +
                                  " is not in the chain subgroup");

  Permutation p = Permutation::identity(g.n);
  for (int x1 = 0; x1 < mu; ++x1) {
    const int image =
        pos[static_cast<size_t>(g.times(alpha1[static_cast<size_t>(x1)], h))];
    p.images[static_cast<size_t>(z0 + lambda * x1)] = z0 + lambda * image;
  }
  return p;
}

Permutation diagonal_perm(const Permutation& tau, int lambda, int mu) {
  require_shape(lambda, mu);
  if (tau.degree() != mu)
    fail(Errc::DegreeMismatch, "tau must permute the mu in-block coordinates");
  Permutation p = Permutation::identity(lambda * mu);
  for (int x1 = 0; x1 < mu; ++x1)
    for (int x2 = 0; x2 < lambda; ++x2)
      p.images[static_cast<size_t>(x2 + lambda * x1)] = x2 + lambda * tau(x1);
  return p;
}

BlockSystem canonical_blocks(int lambda, int mu) {
  if (lambda < 2 || mu < 2)
    fail(Errc::BadShape, "block systems need lambda >= 2 and mu >= 2");
  BlockSystem bs;
  bs.lambda = lambda;
  bs.mu = mu;
  for (int x2 = 0; x2 < lambda; ++x2) {
    std::vector<int> cell;
    for (int x1 = 0; x1 < mu; ++x1) cell.push_back(x2 + lambda * x1);
    bs.blocks.push_back(std::move(cell));
  }
  return bs;
}

std::vector<int> subgroup_generators(const GroupTable& g, const Subgroup& h) {
  std::vector<int> gens;
  Subgroup have = trivial_subgroup();
  for (int x : h.elements) {
    if (have.contains(x)) continue;
    gens.push_back(x);
    have = subgroup_closure(g, gens);
    if (have.order() == h.order()) break;
  }
  return gens;
}

ChainPolicy choose_chains(const GroupTable& g) {
  const std::vector<Subgroup> subs = enumerate_proper_subgroups(g);
  if (subs.empty())
    fail(Errc::ChainTooShort,
         "no chain 1 < H < G: group is trivial or of prime order");

  const Subgroup* h = nullptr;
  if (g.n % 2 == 0) {
    for (const Subgroup& s : subs)
      if (s.order() == 2) {
        h = &s;
        break;
      }
  }
  if (!h) h = &subs.front();  // smallest order, which is prime

  const Subgroup* k = nullptr;
  for (const Subgroup& s : subs)
    if (s.order() > h->order()) {
      k = &s;
      break;
    }
  if (!k) {
    for (const Subgroup& s : subs)
      if (s.elements != h->elements) {
        k = &s;
        break;
      }
  }

  ChainPolicy policy;
  policy.primary = two_step_chain(g, *h);
  if (k) policy.secondary = two_step_chain(g, *k);
  return policy;
}

EhConfig make_eh_config(const GroupTable& g, bool include_cross,
                        std::vector<std::uint64_t> seeds) {
  ChainPolicy policy = choose_chains(g);
  if (include_cross && !policy.secondary)
    fail(Errc::MissingSecondarySubgroup,
         "cross transforms need a second nontrivial proper subgroup; the "
         "group has only one");
  EhConfig cfg;
  cfg.group = g;
  cfg.primary = std::move(policy.primary);
  cfg.secondary = std::move(policy.secondary);
  cfg.include_cross = include_cross;
  cfg.seeds = std::move(seeds);
  return cfg;
}

EhGenerator cross_transform(const GroupTable& g, const SubgroupChain& primary,
                            const SubgroupChain& secondary, int h) {
  const Subgroup& hsub = chain_h(primary);
  const Subgroup& ksub = chain_h(secondary);
  if (h <= 0 || h >= g.n || !hsub.contains(h))
    fail(Errc::NotInSubgroup,
         "cross transforms displace non-identity elements of H");

  const Etls alpha = canonical_etls(g, primary);
  const BreveMap alpha_breve = breve_map(alpha.sig);
  const int lambda_h = alpha.lambda();

  const Etls beta0 = canonical_etls(g, secondary);
  const int lambda_k = beta0.lambda();
  const int mu_k = beta0.mu();

  const auto in_block0 = [lambda_h](int point) {
    return point % lambda_h == 0;
  };

  // Candidate adjusted signatures, in the order the construction tries
  // them: the unadjusted one; if h lies in K, transpositions of the first
  // block fixing position 0; otherwise replacements of the representative
  // of h's coset by other members of that coset.
  const auto try_candidate = [&](const LogSignature& beta_sig)
      -> std::optional<Permutation> {
    const BreveMap bb = breve_map(beta_sig);
    if (bb.backward[0] != 0) return std::nullopt;  // must fix point 0
    if (in_block0(bb.backward[static_cast<size_t>(h)])) return std::nullopt;
    return pgm_transform(alpha_breve, bb);
  };

  if (auto p = try_candidate(beta0.sig))
    return EhGenerator{EhFamily::Cross, {h}, std::move(*p)};

  if (ksub.contains(h)) {
    const int j = static_cast<int>(
        std::find(beta0.alpha1().begin(), beta0.alpha1().end(), h) -
        beta0.alpha1().begin());
    for (int t = 1; t < mu_k; ++t) {
      if (t == j) continue;
      LogSignature sig = beta0.sig;
      std::swap(sig.blocks[0][static_cast<size_t>(j)],
                sig.blocks[0][static_cast<size_t>(t)]);
      if (auto p = try_candidate(sig))
        return EhGenerator{EhFamily::Cross, {h}, std::move(*p)};
    }
  } else {
    const BreveMap bb0 = breve_map(beta0.sig);
    const int i = bb0.backward[static_cast<size_t>(h)] % lambda_k;
    for (int k : ksub.elements) {
      if (k == 0) continue;
      LogSignature sig = beta0.sig;
      sig.blocks[1][static_cast<size_t>(i)] =
          g.times(k, beta0.alpha2()[static_cast<size_t>(i)]);
      if (auto p = try_candidate(sig))
        return EhGenerator{EhFamily::Cross, {h}, std::move(*p)};
    }
  }
  // |K| > |H| (or H meets K trivially) guarantees a candidate above works.
  fail(Errc::MissingSecondarySubgroup,
       "no adjusted signature over K displaces element " + std::to_string(h));
}

std::vector<EhGenerator> eh_generating_set(const EhConfig& cfg) {
  const GroupTable& g = cfg.group;
  check_chain(g, cfg.primary);
  if (cfg.primary.steps() != 2)
    fail(Errc::BadShape, "the generating set is built over a chain 1 < H < G");
  if (cfg.include_cross && !cfg.secondary)
    fail(Errc::MissingSecondarySubgroup, "include_cross without a K chain");
  if (cfg.secondary) {
    check_chain(g, *cfg.secondary);
    if (chain_h(*cfg.secondary).elements == chain_h(cfg.primary).elements)
      fail(Errc::MissingSecondarySubgroup, "K must differ from H");
  }

  const Etls alpha = canonical_etls(g, cfg.primary);
  const BreveMap alpha_breve = breve_map(alpha.sig);
  const int lambda = alpha.lambda();
  const int mu = alpha.mu();
  const Subgroup& hsub = chain_h(cfg.primary);

  std::vector<EhGenerator> out;

  const auto tau_params = [](const Permutation& tau) {
    std::vector<long long> params;
    params.reserve(tau.images.size());
    for (int v : tau.images) params.push_back(v);
    return params;
  };

  // Blockwise: a transposition and a full cycle generate Sym(lambda);
  // for lambda = 2 they coincide and one suffices.
  std::vector<Permutation> sym_lambda{transposition(lambda, 0, 1)};
  std::vector<int> all_lambda(static_cast<size_t>(lambda));
  for (int i = 0; i < lambda; ++i) all_lambda[static_cast<size_t>(i)] = i;
  if (lambda > 2) sym_lambda.push_back(make_cycle(lambda, all_lambda));
  for (const Permutation& tau : sym_lambda)
    out.push_back(EhGenerator{EhFamily::Blockwise, tau_params(tau),
                              blockwise_perm(tau, lambda, mu)});

  // Regular: every block, one transform per generator of H. Distinct
  // (z0, h) give distinct permutations, the regular action being faithful.
  for (int z0 = 0; z0 < lambda; ++z0)
    for (int h : subgroup_generators(g, hsub))
      out.push_back(
          EhGenerator{EhFamily::Regular, {z0, h}, regular_perm(alpha, z0, h)});

  // Diagonal: a transposition and a full cycle generate Sym(mu).
  std::vector<Permutation> sym_mu{transposition(mu, 0, 1)};
  std::vector<int> all_mu(static_cast<size_t>(mu));
  for (int i = 0; i < mu; ++i) all_mu[static_cast<size_t>(i)] = i;
  if (mu > 2) sym_mu.push_back(make_cycle(mu, all_mu));
  for (const Permutation& tau : sym_mu)
    out.push_back(EhGenerator{EhFamily::Diagonal, tau_params(tau),
                              diagonal_perm(tau, lambda, mu)});

  if (cfg.include_cross) {
    // One transform per displaced element, even when two of them happen
    // to coincide as permutations: witness words look factors up by h.
    for (int h : hsub.elements) {
      if (h == 0) continue;
      out.push_back(cross_transform(g, cfg.primary, *cfg.secondary, h));
    }
    for (std::uint64_t seed : cfg.seeds) {
      const Etls beta = random_etls(g, *cfg.secondary, seed);
      out.push_back(
          EhGenerator{EhFamily::CrossSeed,
                      {static_cast<long long>(seed)},
                      pgm_transform(alpha_breve, breve_map(beta.sig))});
    }
  }
  return out;
}

std::vector<Permutation> generator_perms(const std::vector<EhGenerator>& gens) {
  std::vector<Permutation> perms;
  perms.reserve(gens.size());
  for (const EhGenerator& g : gens) perms.push_back(g.perm);
  return perms;
}

}  // namespace pgm
