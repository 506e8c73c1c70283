#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pgm/perm.hpp"
#include "pgm/transforms.hpp"

namespace pgm {

/// Group orders are exact big integers; the headline checks are exact
/// equalities with n!, which outgrows 64 bits from n = 21 on.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

/// A base and strong generating set built by the deterministic
/// Schreier-Sims procedure. level_gens[i] holds the strong generators
/// assigned to level i (they fix base[0..i-1]); the stabilizer of
/// base[0..i-1] is generated by the union of levels >= i... transversals
/// map each point of the i-th fundamental orbit to a coset representative
/// u with base[i]^u = point. Immutable once built; queries are
/// thread-safe.
struct Bsgs {
  int degree = 0;
  std::vector<int> base;
  std::vector<std::vector<Permutation>> level_gens;
  std::vector<std::vector<std::optional<Permutation>>> transversals;
  BigInt order = 1;

  std::vector<Permutation> strong_generators() const;
};

/// Deterministic for a fixed generator order. Empty input gives the
/// trivial group (pass `degree` to fix its degree).
Bsgs schreier_sims(const std::vector<Permutation>& gens, int degree = 0);

/// Membership by sifting.
bool contains(const Bsgs& b, const Permutation& p);

/// 2 if the orbit of the ordered pair (0,1) is all of n(n-1) pairs,
/// else 1 if the orbit of 0 is all points, else 0. cap is fixed at 2;
/// higher transitivity is out of scope.
int transitivity_degree(const std::vector<Permutation>& gens, int cap = 2);

/// All minimal nontrivial block systems of the transitive group <gens>,
/// found by union-find refinement of the pairs {0,k}. An empty result
/// means the group is primitive.
std::vector<BlockSystem> find_block_systems(const std::vector<Permutation>& gens);

/// Full element enumeration by breadth-first products; the independent
/// oracle for order claims. Degree is capped at 8 so the closure fits in
/// memory.
std::vector<Permutation> brute_force_closure(const std::vector<Permutation>& gens,
                                             int degree = 0);

struct GroupFacts {
  BigInt order;
  bool is_symmetric = false;
  bool is_alternating = false;
  int transitivity = 0;
  std::vector<BlockSystem> minimal_block_systems;
};

GroupFacts analyze(const std::vector<Permutation>& gens);

/// key=value lines: order, factorial, is_symmetric, is_alternating,
/// transitivity, blocks.
std::string format_report(const GroupFacts& facts, int degree);

std::string format_block_system(const BlockSystem& bs);

}  // namespace pgm
