#include "pgm/perm.hpp"

#include <numeric>
#include <sstream>

#include "pgm/errors.hpp"

namespace pgm {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    fail(Errc::DegreeMismatch, "degrees " + std::to_string(p.degree()) +
                                   " and " + std::to_string(q.degree()));
}

void require_point(int n, int x) {
  if (x < 0 || x >= n)
    fail(Errc::OutOfRange,
         "point " + std::to_string(x) + " outside I_" + std::to_string(n));
}

}  // namespace

Permutation Permutation::identity(int n) {
  std::vector<int> imgs(static_cast<size_t>(n));
  std::iota(imgs.begin(), imgs.end(), 0);
  return Permutation(std::move(imgs));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images[static_cast<size_t>(x)] != x) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  std::vector<int> imgs(p.images.size());
  for (size_t x = 0; x < imgs.size(); ++x)
    imgs[x] = q.images[static_cast<size_t>(p.images[x])];
  return Permutation(std::move(imgs));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> imgs(p.images.size());
  for (size_t x = 0; x < imgs.size(); ++x)
    imgs[static_cast<size_t>(p.images[x])] = static_cast<int>(x);
  return Permutation(std::move(imgs));
}

Permutation conjugate(const Permutation& s, const Permutation& p) {
  require_same_degree(s, p);
  return compose(compose(inverse(p), s), p);
}

int parity(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  int cycles = 0;
  for (int x = 0; x < n; ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    ++cycles;
    for (int y = x; !seen[static_cast<size_t>(y)]; y = p(y))
      seen[static_cast<size_t>(y)] = true;
  }
  return ((n - cycles) % 2 == 0) ? +1 : -1;
}

Permutation transposition(int n, int a, int b) {
  require_point(n, a);
  require_point(n, b);
  Permutation p = Permutation::identity(n);
  std::swap(p.images[static_cast<size_t>(a)], p.images[static_cast<size_t>(b)]);
  return p;
}

Permutation make_cycle(int n, const std::vector<int>& points) {
  Permutation p = Permutation::identity(n);
  if (points.size() < 2) return p;
  for (size_t i = 0; i < points.size(); ++i) {
    require_point(n, points[i]);
    p.images[static_cast<size_t>(points[i])] =
        points[(i + 1) % points.size()];
  }
  return p;
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream out;
  for (int x = 0; x < p.degree(); ++x) {
    if (x) out << ' ';
    out << p(x);
  }
  return out.str();
}

Permutation parse_permutation(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> imgs;
  int v;
  while (in >> v) imgs.push_back(v);
  if (!in.eof()) fail(Errc::ParseError, "non-integer token in permutation");
  const int n = static_cast<int>(imgs.size());
  if (n == 0) fail(Errc::ParseError, "empty permutation line");
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int v2 : imgs) {
    if (v2 < 0 || v2 >= n || hit[static_cast<size_t>(v2)])
      fail(Errc::ParseError, "image list is not a permutation of 0.." +
                                 std::to_string(n - 1));
    hit[static_cast<size_t>(v2)] = true;
  }
  return Permutation(std::move(imgs));
}

std::string format_generators(const std::vector<Permutation>& gens) {
  std::string out;
  for (const Permutation& g : gens) {
    out += format_permutation(g);
    out += '\n';
  }
  return out;
}

std::vector<Permutation> parse_generators(std::istream& in) {
  std::vector<Permutation> gens;
  std::string line;
  while (std::getline(in, line)) {
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    gens.push_back(parse_permutation(line));
    if (gens.size() > 1 && gens.back().degree() != gens.front().degree())
      fail(Errc::DegreeMismatch, "mixed degrees in generator file");
  }
  return gens;
}

}  // namespace pgm
