#include "pgm/group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pgm/errors.hpp"

namespace pgm {

namespace {

GroupTable from_mul(std::vector<std::vector<int>> mul) {
  GroupTable g;
  g.n = static_cast<int>(mul.size());
  g.mul = std::move(mul);
  g.inv.assign(static_cast<size_t>(g.n), -1);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (g.times(i, j) == 0) g.inv[static_cast<size_t>(i)] = j;
  return g;
}

GroupTable cyclic_group(int m) {
  std::vector<std::vector<int>> mul(static_cast<size_t>(m),
                                    std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % m;
  return from_mul(std::move(mul));
}

// Elements r^a s^e indexed a + m*e; s r = r^{-1} s.
GroupTable dihedral_group(int m) {
  const int n = 2 * m;
  std::vector<std::vector<int>> mul(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n)));
  auto idx = [m](int a, int e) { return ((a % m) + m) % m + m * e; };
  for (int a = 0; a < m; ++a) {
    for (int e = 0; e < 2; ++e) {
      for (int c = 0; c < m; ++c) {
        for (int f = 0; f < 2; ++f) {
          const int i = idx(a, e);
          const int j = idx(c, f);
          const int rot = (e == 0) ? a + c : a - c;
          mul[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              idx(rot, e ^ f);
        }
      }
    }
  }
  return from_mul(std::move(mul));
}

// Indices: 0:1  1:-1  2:i  3:-i  4:j  5:-j  6:k  7:-k.
GroupTable quaternion_group() {
  // Products of the bases {1,i,j,k}: i*i = -1, i*j = k, i*k = -j,
  // j*i = -k, j*j = -1, j*k = i, k*i = j, k*j = -i, k*k = -1.
  static const int basis[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sgn[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int b1 = i / 2, s1 = i % 2;
      const int b2 = j / 2, s2 = j % 2;
      const int b = basis[b1][b2];
      const int s = s1 ^ s2 ^ sgn[b1][b2];
      mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = 2 * b + s;
    }
  }
  return from_mul(std::move(mul));
}

GroupTable symmetric_group(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> rank;
  for (size_t i = 0; i < perms.size(); ++i) rank[perms[i]] = static_cast<int>(i);

  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mul(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n)));
  std::vector<int> prod(static_cast<size_t>(k));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // left-to-right: x -> perms[j][perms[i][x]]
      for (int x = 0; x < k; ++x)
        prod[static_cast<size_t>(x)] = perms[static_cast<size_t>(
            j)][static_cast<size_t>(perms[static_cast<size_t>(i)]
                                        [static_cast<size_t>(x)])];
      mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = rank.at(prod);
    }
  }
  return from_mul(std::move(mul));
}

// (a,b) indexed a*|G2| + b.
GroupTable direct_product(const GroupTable& g1, const GroupTable& g2) {
  const int n = g1.n * g2.n;
  std::vector<std::vector<int>> mul(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < g1.n; ++a)
    for (int b = 0; b < g2.n; ++b)
      for (int c = 0; c < g1.n; ++c)
        for (int d = 0; d < g2.n; ++d)
          mul[static_cast<size_t>(a * g2.n + b)]
             [static_cast<size_t>(c * g2.n + d)] =
                 g1.times(a, c) * g2.n + g2.times(b, d);
  return from_mul(std::move(mul));
}

GroupTable make_atom(const std::string& atom, int degree_limit) {
  const size_t colon = atom.find(':');
  const std::string name = atom.substr(0, colon);
  int arg = -1;
  if (colon != std::string::npos) {
    const std::string rest = atom.substr(colon + 1);
    if (rest.empty() ||
        rest.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::UnknownSpec, "bad parameter in '" + atom + "'");
    arg = std::stoi(rest);
  }

  auto check_order = [&](long long order) {
    if (order > degree_limit)
      fail(Errc::OrderOverflow, "order " + std::to_string(order) +
                                    " exceeds degree limit " +
                                    std::to_string(degree_limit));
  };

  if (name == "cyclic") {
    if (arg < 1) fail(Errc::UnknownSpec, "cyclic:m needs m >= 1");
    check_order(arg);
    return cyclic_group(arg);
  }
  if (name == "dihedral") {
    if (arg < 1) fail(Errc::UnknownSpec, "dihedral:m needs m >= 1");
    check_order(2LL * arg);
    return dihedral_group(arg);
  }
  if (name == "quaternion") {
    if (arg != -1) fail(Errc::UnknownSpec, "quaternion takes no parameter");
    check_order(8);
    return quaternion_group();
  }
  if (name == "symmetric") {
    if (arg < 1 || arg > 5)
      fail(Errc::UnknownSpec, "symmetric:k needs 1 <= k <= 5");
    long long order = 1;
    for (int i = 2; i <= arg; ++i) order *= i;
    check_order(order);
    return symmetric_group(arg);
  }
  fail(Errc::UnknownSpec, "unknown group '" + atom + "'");
}

}  // namespace

int GroupTable::element_order(int x) const {
  int ord = 1;
  for (int y = x; y != 0; y = times(y, x)) ++ord;
  return ord;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

int Subgroup::position_of(int x) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return -1;
  return static_cast<int>(it - elements.begin());
}

GroupTable make_group(const std::string& spec, int degree_limit) {
  if (spec.empty()) fail(Errc::UnknownSpec, "empty descriptor");
  std::vector<std::string> atoms;
  size_t start = 0;
  while (true) {
    const size_t sep = spec.find('x', start);
    if (sep == std::string::npos) {
      atoms.push_back(spec.substr(start));
      break;
    }
    atoms.push_back(spec.substr(start, sep - start));
    start = sep + 1;
  }
  GroupTable g = make_atom(atoms[0], degree_limit);
  for (size_t i = 1; i < atoms.size(); ++i) {
    const GroupTable h = make_atom(atoms[i], degree_limit);
    if (static_cast<long long>(g.n) * h.n > degree_limit)
      fail(Errc::OrderOverflow,
           "product order " + std::to_string(static_cast<long long>(g.n) * h.n) +
               " exceeds degree limit " + std::to_string(degree_limit));
    g = direct_product(g, h);
  }
  return g;
}

GroupTable validate_table(const std::vector<std::vector<int>>& raw,
                          std::vector<int>* relabeling) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) fail(Errc::ParseError, "empty table");
  for (const auto& row : raw) {
    if (static_cast<int>(row.size()) != n)
      fail(Errc::ParseError, "table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        fail(Errc::ParseError, "entry " + std::to_string(v) + " outside 0.." +
                                   std::to_string(n - 1));
  }

  for (int i = 0; i < n; ++i) {
    std::vector<bool> row_hit(static_cast<size_t>(n), false);
    std::vector<bool> col_hit(static_cast<size_t>(n), false);
    for (int j = 0; j < n; ++j) {
      const int rv = raw[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const int cv = raw[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (row_hit[static_cast<size_t>(rv)])
        fail(Errc::NotLatinSquare, "row " + std::to_string(i) + " repeats " +
                                       std::to_string(rv));
      if (col_hit[static_cast<size_t>(cv)])
        fail(Errc::NotLatinSquare, "column " + std::to_string(i) +
                                       " repeats " + std::to_string(cv));
      row_hit[static_cast<size_t>(rv)] = true;
      col_hit[static_cast<size_t>(cv)] = true;
    }
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool two_sided = true;
    for (int j = 0; j < n && two_sided; ++j)
      two_sided = raw[static_cast<size_t>(e)][static_cast<size_t>(j)] == j &&
                  raw[static_cast<size_t>(j)][static_cast<size_t>(e)] == j;
    if (two_sided) identity = e;
  }
  if (identity < 0) fail(Errc::NoIdentity, "no two-sided identity element");

  // Relabel by swapping labels 0 and `identity` so the identity sits at 0.
  std::vector<int> map(static_cast<size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  std::swap(map[0], map[static_cast<size_t>(identity)]);
  std::vector<std::vector<int>> mul(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[static_cast<size_t>(map[static_cast<size_t>(i)])]
         [static_cast<size_t>(map[static_cast<size_t>(j)])] =
             map[static_cast<size_t>(
                 raw[static_cast<size_t>(i)][static_cast<size_t>(j)])];
  if (relabeling) *relabeling = map;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const size_t si = static_cast<size_t>(i);
        const size_t sj = static_cast<size_t>(j);
        const size_t sk = static_cast<size_t>(k);
        const int left = mul[static_cast<size_t>(mul[si][sj])][sk];
        const int right = mul[si][static_cast<size_t>(mul[sj][sk])];
        if (left != right)
          fail(Errc::NotAssociative, "triple (" + std::to_string(i) + "," +
                                         std::to_string(j) + "," +
                                         std::to_string(k) + ")");
      }

  return from_mul(std::move(mul));
}

Subgroup subgroup_closure(const GroupTable& g, const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g.n)
      fail(Errc::OutOfRange, "generator index " + std::to_string(x));

  std::vector<bool> in(static_cast<size_t>(g.n), false);
  std::vector<int> queue{0};
  in[0] = true;
  for (int x : gens)
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = true;
      queue.push_back(x);
    }
  for (size_t head = 0; head < queue.size(); ++head) {
    const int a = queue[head];
    const int ia = g.inverse_of(a);
    if (!in[static_cast<size_t>(ia)]) {
      in[static_cast<size_t>(ia)] = true;
      queue.push_back(ia);
    }
    for (size_t other = 0; other < queue.size(); ++other) {
      for (int prod : {g.times(a, queue[other]), g.times(queue[other], a)}) {
        if (!in[static_cast<size_t>(prod)]) {
          in[static_cast<size_t>(prod)] = true;
          queue.push_back(prod);
        }
      }
    }
  }

  Subgroup h;
  for (int x = 0; x < g.n; ++x)
    if (in[static_cast<size_t>(x)]) h.elements.push_back(x);
  return h;
}

std::vector<Subgroup> enumerate_proper_subgroups(const GroupTable& g,
                                                 int degree_limit) {
  if (g.n > degree_limit)
    fail(Errc::DegreeTooLarge, "group order " + std::to_string(g.n) +
                                   " exceeds degree limit " +
                                   std::to_string(degree_limit));
  std::set<std::vector<int>> seen;
  auto consider = [&](const std::vector<int>& gens) {
    const Subgroup h = subgroup_closure(g, gens);
    if (h.order() > 1 && h.order() < g.n) seen.insert(h.elements);
  };
  for (int a = 1; a < g.n; ++a) {
    consider({a});
    for (int b = a + 1; b < g.n; ++b) consider({a, b});
  }

  std::vector<Subgroup> out;
  for (const auto& elems : seen) out.push_back(Subgroup{elems});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

bool is_subgroup_of(const GroupTable& g, const Subgroup& h) {
  if (h.elements.empty() || h.elements.front() != 0) return false;
  for (int x : h.elements) {
    if (x < 0 || x >= g.n) return false;
    if (!h.contains(g.inverse_of(x))) return false;
    for (int y : h.elements)
      if (!h.contains(g.times(x, y))) return false;
  }
  for (size_t i = 1; i < h.elements.size(); ++i)
    if (h.elements[i] <= h.elements[i - 1]) return false;
  return true;
}

CosetDecomposition right_cosets(const GroupTable& g, const Subgroup& h) {
  if (!is_subgroup_of(g, h)) fail(Errc::NotASubgroup, "right_cosets");
  CosetDecomposition d;
  d.subgroup = h;
  d.mu = h.order();
  std::vector<bool> covered(static_cast<size_t>(g.n), false);
  for (int x = 0; x < g.n; ++x) {
    if (covered[static_cast<size_t>(x)]) continue;
    d.reps.push_back(x);
    for (int e : h.elements) covered[static_cast<size_t>(g.times(e, x))] = true;
  }
  d.lambda = static_cast<int>(d.reps.size());
  return d;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup full_subgroup(const GroupTable& g) {
  Subgroup h;
  h.elements.resize(static_cast<size_t>(g.n));
  std::iota(h.elements.begin(), h.elements.end(), 0);
  return h;
}

SubgroupChain two_step_chain(const GroupTable& g, const Subgroup& h) {
  SubgroupChain chain{{trivial_subgroup(), h, full_subgroup(g)}};
  check_chain(g, chain);
  return chain;
}

void check_chain(const GroupTable& g, const SubgroupChain& chain) {
  if (chain.levels.size() < 2)
    fail(Errc::ChainTooShort, "chain needs at least two steps");
  if (chain.levels.front().elements != std::vector<int>{0})
    fail(Errc::NotASubgroup, "chain must start at the trivial subgroup");
  if (chain.levels.back().order() != g.n)
    fail(Errc::NotASubgroup, "chain must end at the whole group");
  for (const Subgroup& level : chain.levels)
    if (!is_subgroup_of(g, level))
      fail(Errc::NotASubgroup, "chain level is not a subgroup");
  for (size_t i = 1; i < chain.levels.size(); ++i) {
    const Subgroup& lo = chain.levels[i - 1];
    const Subgroup& hi = chain.levels[i];
    if (lo.order() >= hi.order())
      fail(Errc::NotASubgroup, "chain levels must strictly increase");
    for (int x : lo.elements)
      if (!hi.contains(x))
        fail(Errc::NotASubgroup, "chain levels must be nested");
  }
}

std::string format_group(const GroupTable& g) {
  std::ostringstream out;
  out << "n=" << g.n << '\n';
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      if (j) out << ' ';
      out << g.times(i, j);
    }
    out << '\n';
  }
  return out.str();
}

GroupTable parse_group_section(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("n=", 0) != 0)
    fail(Errc::ParseError, "expected 'n=<int>' header");
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(header.substr(2), &used);
    if (used != header.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad group header '" + header + "'");
  }
  if (n <= 0) fail(Errc::ParseError, "group order must be positive");

  std::vector<std::vector<int>> raw(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> raw[static_cast<size_t>(i)][static_cast<size_t>(j)]))
        fail(Errc::ParseError, "truncated multiplication table");
  in >> std::ws;
  return validate_table(raw);
}

GroupTable parse_group(std::istream& in) {
  GroupTable g = parse_group_section(in);
  std::string tail;
  if (in >> tail) fail(Errc::ParseError, "trailing garbage '" + tail + "'");
  return g;
}

}  // namespace pgm
