#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace pgm {

/// A permutation of I_n = {0, ..., n-1} stored as its image array:
/// images[x] is the image of x. All maps in this library compose
/// left-to-right, so x(p.q) = (x p) q.
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {}

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[x]; }
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// s^p = p^{-1} s p. Conjugating a transposition relabels its points:
/// (a b)^p = (ap bp).
Permutation conjugate(const Permutation& s, const Permutation& p);

/// Sign homomorphism: +1 for even permutations, -1 for odd ones.
int parity(const Permutation& p);

Permutation transposition(int n, int a, int b);

/// Cycle (points[0] points[1] ... points[k-1]) on n points.
Permutation make_cycle(int n, const std::vector<int>& points);

/// Text format: the n images, space-separated, on a single line.
std::string format_permutation(const Permutation& p);
Permutation parse_permutation(const std::string& line);

/// Generator-set files: one permutation per line; '#' starts a comment
/// line; blank lines are skipped. All permutations must share one degree.
std::string format_generators(const std::vector<Permutation>& gens);
std::vector<Permutation> parse_generators(std::istream& in);

}  // namespace pgm
