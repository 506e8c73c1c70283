#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgm {

/// Hard cap used by the group factory and the subgroup scan unless the
/// caller raises it. Keeps n^3 associativity scans and n! arithmetic
/// interactive.
inline constexpr int kDefaultDegreeLimit = 64;

/// A finite group of order n given by its full multiplication table over
/// element indices 0..n-1. Index 0 is always the identity; inv caches
/// two-sided inverses. Values are immutable once built and safe to share
/// across threads.
struct GroupTable {
  int n = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;

  int times(int i, int j) const {
    return mul[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  int inverse_of(int i) const { return inv[static_cast<size_t>(i)]; }

  /// Order of the cyclic subgroup generated by x.
  int element_order(int x) const;
};

/// A subgroup as its strictly increasing element-index list.
struct Subgroup {
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
  /// Position of x in `elements`, or -1.
  int position_of(int x) const;

  auto operator<=>(const Subgroup&) const = default;
};

/// A strictly increasing chain of subgroups from the trivial subgroup up
/// to the whole group. steps() is the number of inclusions s; the chain
/// shapes used by signatures require s >= 2.
struct SubgroupChain {
  std::vector<Subgroup> levels;

  int steps() const { return static_cast<int>(levels.size()) - 1; }
};

/// Right cosets H\G: reps[j] represents the coset {h*reps[j] : h in H}.
/// The canonical decomposition scans 0..n-1 and picks the minimal unused
/// index per coset, so reps[0] = 0.
struct CosetDecomposition {
  Subgroup subgroup;
  std::vector<int> reps;
  int lambda = 0;  // [G:H]
  int mu = 0;      // |H|
};

/// Test-group factory. Descriptors: cyclic:m, dihedral:m (order 2m),
/// quaternion, symmetric:k (k <= 5), or products joined with 'x', e.g.
/// cyclic:2xcyclic:4.
GroupTable make_group(const std::string& spec,
                      int degree_limit = kDefaultDegreeLimit);

/// Checks every GroupTable invariant on a raw table. If the two-sided
/// identity sits at an index e != 0, elements are relabeled by swapping
/// labels 0 and e; the applied old-index -> new-index map is written to
/// *relabeling when requested (identity map when no relabeling happened).
GroupTable validate_table(const std::vector<std::vector<int>>& raw,
                          std::vector<int>* relabeling = nullptr);

/// Smallest subgroup containing gens; empty gens gives the trivial one.
Subgroup subgroup_closure(const GroupTable& g, const std::vector<int>& gens);

/// All nontrivial proper subgroups obtainable as closures of generator
/// subsets of size <= 2, sorted by (order, elements). Complete for the
/// desk-scale groups this library ships; the bound is a documented
/// completeness bound, not a general claim.
std::vector<Subgroup> enumerate_proper_subgroups(
    const GroupTable& g, int degree_limit = kDefaultDegreeLimit);

CosetDecomposition right_cosets(const GroupTable& g, const Subgroup& h);

bool is_subgroup_of(const GroupTable& g, const Subgroup& h);

Subgroup trivial_subgroup();
Subgroup full_subgroup(const GroupTable& g);

/// The chain 1 < H < G.
SubgroupChain two_step_chain(const GroupTable& g, const Subgroup& h);

/// Validates levels: strictly increasing by inclusion, from {0} to G.
void check_chain(const GroupTable& g, const SubgroupChain& chain);

/// Group file format: first line "n=<int>", then n rows of n
/// space-separated entries. parse_group rejects trailing garbage;
/// parse_group_section reads one group and leaves the stream on the next
/// section, for formats that embed a group.
std::string format_group(const GroupTable& g);
GroupTable parse_group(std::istream& in);
GroupTable parse_group_section(std::istream& in);

}  // namespace pgm
