#include "pgm/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "pgm/errors.hpp"

namespace pgm {

namespace {

int common_degree(const std::vector<Permutation>& gens, int fallback) {
  if (gens.empty()) return fallback;
  const int d = gens.front().degree();
  for (const Permutation& g : gens)
    if (g.degree() != d)
      fail(Errc::DegreeMismatch, "generators of mixed degree");
  return d;
}

int min_moved_point(const Permutation& p) {
  for (int x = 0; x < p.degree(); ++x)
    if (p(x) != x) return x;
  return -1;
}

}  // namespace

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Permutation> Bsgs::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : level_gens)
    for (const Permutation& g : level) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  return out;
}

namespace {

// Working state of the deterministic Schreier-Sims construction. Level i
// owns base point base[i], the generators known to fix base[0..i-1], and
// the orbit/transversal of base[i] under them.
struct SsBuilder {
  int degree;
  std::vector<int> base;
  std::vector<std::vector<Permutation>> gens;
  std::vector<std::vector<std::optional<Permutation>>> transversal;
  std::vector<std::vector<int>> orbit;  // BFS order

  explicit SsBuilder(int d) : degree(d) {}

  void append_level(int point) {
    base.push_back(point);
    gens.emplace_back();
    transversal.emplace_back(static_cast<size_t>(degree), std::nullopt);
    orbit.emplace_back();
  }

  void rebuild_orbit(size_t level) {
    auto& tr = transversal[level];
    std::fill(tr.begin(), tr.end(), std::nullopt);
    auto& orb = orbit[level];
    orb.clear();
    const int root = base[level];
    tr[static_cast<size_t>(root)] = Permutation::identity(degree);
    orb.push_back(root);
    for (size_t head = 0; head < orb.size(); ++head) {
      const int point = orb[head];
      for (const Permutation& s : gens[level]) {
        const int image = s(point);
        if (!tr[static_cast<size_t>(image)]) {
          tr[static_cast<size_t>(image)] =
              compose(*tr[static_cast<size_t>(point)], s);
          orb.push_back(image);
        }
      }
    }
  }

  // Sift g through levels from..end. Returns the residue and the level at
  // which sifting stopped (levels count when it sifted to the bottom).
  std::pair<Permutation, size_t> strip(Permutation g, size_t from) const {
    for (size_t l = from; l < base.size(); ++l) {
      const int image = g(base[l]);
      const auto& rep = transversal[l][static_cast<size_t>(image)];
      if (!rep) return {std::move(g), l};
      g = compose(g, inverse(*rep));
    }
    return {std::move(g), base.size()};
  }
};

}  // namespace

Bsgs schreier_sims(const std::vector<Permutation>& gens, int degree) {
  const int d = common_degree(gens, degree);
  SsBuilder b(d);

  for (const Permutation& g : gens) {
    if (g.is_identity()) continue;
    size_t m = 0;
    while (m < b.base.size() && g(b.base[m]) == b.base[m]) ++m;
    if (m == b.base.size()) b.append_level(min_moved_point(g));
    for (size_t l = 0; l <= m; ++l) b.gens[l].push_back(g);
  }

  // Verify the Schreier condition level by level, deepest first; every
  // non-trivial sift residue becomes a new strong generator and sends the
  // scan back down to the level it extends.
  for (size_t i = b.base.size(); i-- > 0;) {
    b.rebuild_orbit(i);
    bool clean = true;
    for (size_t oi = 0; oi < b.orbit[i].size() && clean; ++oi) {
      const int point = b.orbit[i][oi];
      for (const Permutation& s : b.gens[i]) {
        const Permutation& u_point =
            *b.transversal[i][static_cast<size_t>(point)];
        const Permutation& u_image =
            *b.transversal[i][static_cast<size_t>(s(point))];
        const Permutation schreier =
            compose(compose(u_point, s), inverse(u_image));
        if (schreier.is_identity()) continue;
        auto [residue, j] = b.strip(schreier, i + 1);
        if (residue.is_identity()) continue;
        if (j == b.base.size()) b.append_level(min_moved_point(residue));
        for (size_t l = i + 1; l <= j; ++l) b.gens[l].push_back(residue);
        i = j + 1;  // loop decrement re-enters at level j
        clean = false;
        break;
      }
    }
  }

  Bsgs out;
  out.degree = d;
  out.base = std::move(b.base);
  out.level_gens = std::move(b.gens);
  out.transversals = std::move(b.transversal);
  out.order = 1;
  for (const auto& orb : b.orbit) out.order *= static_cast<int>(orb.size());
  return out;
}

bool contains(const Bsgs& b, const Permutation& p) {
  if (p.degree() != b.degree)
    fail(Errc::DegreeMismatch, "membership test across degrees");
  Permutation residue = p;
  for (size_t l = 0; l < b.base.size(); ++l) {
    const int image = residue(b.base[l]);
    const auto& rep = b.transversals[l][static_cast<size_t>(image)];
    if (!rep) return false;
    residue = compose(residue, inverse(*rep));
  }
  return residue.is_identity();
}

int transitivity_degree(const std::vector<Permutation>& gens, int cap) {
  const int n = common_degree(gens, 0);
  if (n < 2) fail(Errc::OutOfRange, "transitivity needs degree >= 2");
  if (cap < 1 || cap > 2)
    fail(Errc::OutOfRange, "transitivity cap must be 1 or 2");

  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (size_t head = 0; head < queue.size(); ++head)
    for (const Permutation& g : gens) {
      const int y = g(queue[head]);
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  if (static_cast<int>(queue.size()) < n) return 0;
  if (cap == 1) return 1;

  // orbit of the ordered pair (0,1), pairs encoded a*n + b
  std::vector<bool> pair_seen(static_cast<size_t>(n) * static_cast<size_t>(n),
                              false);
  std::vector<int> pair_queue{0 * n + 1};
  pair_seen[static_cast<size_t>(1)] = true;
  for (size_t head = 0; head < pair_queue.size(); ++head) {
    const int a = pair_queue[head] / n;
    const int bpt = pair_queue[head] % n;
    for (const Permutation& g : gens) {
      const int code = g(a) * n + g(bpt);
      if (!pair_seen[static_cast<size_t>(code)]) {
        pair_seen[static_cast<size_t>(code)] = true;
        pair_queue.push_back(code);
      }
    }
  }
  return pair_queue.size() ==
                 static_cast<size_t>(n) * static_cast<size_t>(n - 1)
             ? 2
             : 1;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

// The finest G-invariant partition with a and b in one cell.
std::vector<std::vector<int>> minimal_partition(
    const std::vector<Permutation>& gens, int n, int a, int b) {
  Dsu dsu(n);
  std::vector<std::pair<int, int>> pending{{a, b}};
  dsu.merge(a, b);
  while (!pending.empty()) {
    const auto [x, y] = pending.back();
    pending.pop_back();
    for (const Permutation& g : gens)
      if (dsu.merge(g(x), g(y))) pending.emplace_back(g(x), g(y));
  }
  std::vector<std::vector<int>> cells(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    cells[static_cast<size_t>(dsu.find(x))].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& cell : cells)
    if (!cell.empty()) out.push_back(std::move(cell));
  return out;
}

}  // namespace

std::vector<BlockSystem> find_block_systems(
    const std::vector<Permutation>& gens) {
  const int n = common_degree(gens, 0);
  if (n < 2) return {};
  if (transitivity_degree(gens, 1) < 1)
    fail(Errc::NotTransitive, "block systems need a transitive group");

  std::set<std::vector<std::vector<int>>> seen;
  for (int k = 1; k < n; ++k) {
    auto cells = minimal_partition(gens, n, 0, k);
    if (cells.size() < 2) continue;  // the all-in-one partition
    std::sort(cells.begin(), cells.end(),
              [](const auto& x, const auto& y) { return x[0] < y[0]; });
    seen.insert(std::move(cells));
  }

  // Keep only minimal systems: drop any whose cell through 0 strictly
  // contains another's cell through 0.
  std::vector<BlockSystem> out;
  for (const auto& cells : seen) {
    const std::vector<int>& cell0 = cells.front();
    bool minimal = true;
    for (const auto& other : seen) {
      const std::vector<int>& other0 = other.front();
      if (other0.size() >= cell0.size()) continue;
      if (std::includes(cell0.begin(), cell0.end(), other0.begin(),
                        other0.end())) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    BlockSystem bs;
    bs.lambda = static_cast<int>(cells.size());
    bs.mu = static_cast<int>(cells.front().size());
    bs.blocks = cells;
    out.push_back(std::move(bs));
  }
  return out;
}

std::vector<Permutation> brute_force_closure(
    const std::vector<Permutation>& gens, int degree) {
  const int n = common_degree(gens, degree);
  if (n > 8)
    fail(Errc::DegreeTooLarge,
         "brute-force closure is capped at degree 8, got " +
             std::to_string(n));
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> queue{Permutation::identity(n)};
  for (size_t head = 0; head < queue.size(); ++head)
    for (const Permutation& g : gens) {
      Permutation next = compose(queue[head], g);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  return queue;
}

GroupFacts analyze(const std::vector<Permutation>& gens) {
  const int n = common_degree(gens, 0);
  if (n < 1) fail(Errc::OutOfRange, "analyze needs a nonempty degree");

  GroupFacts facts;
  facts.order = schreier_sims(gens).order;
  facts.is_symmetric = facts.order == factorial(n);
  facts.is_alternating = n >= 2 && 2 * facts.order == factorial(n);
  facts.transitivity = n >= 2 ? transitivity_degree(gens) : 1;
  if (facts.transitivity >= 1 && n >= 2)
    facts.minimal_block_systems = find_block_systems(gens);
  return facts;
}

std::string format_block_system(const BlockSystem& bs) {
  std::ostringstream out;
  for (const auto& cell : bs.blocks) {
    out << '{';
    for (size_t i = 0; i < cell.size(); ++i) {
      if (i) out << ',';
      out << cell[i];
    }
    out << '}';
  }
  return out.str();
}

std::string format_report(const GroupFacts& facts, int degree) {
  std::ostringstream out;
  out << "order=" << facts.order << '\n';
  out << "factorial=" << factorial(degree) << '\n';
  out << "is_symmetric=" << (facts.is_symmetric ? "true" : "false") << '\n';
  out << "is_alternating=" << (facts.is_alternating ? "true" : "false")
      << '\n';
  out << "transitivity=" << facts.transitivity << '\n';
  out << "blocks=";
  if (facts.minimal_block_systems.empty()) {
    out << "none";
  } else {
    for (size_t i = 0; i < facts.minimal_block_systems.size(); ++i) {
      if (i) out << ' ';
      out << format_block_system(facts.minimal_block_systems[i]);
    }
  }
  out << '\n';
  return out.str();
}

}  // namespace pgm
