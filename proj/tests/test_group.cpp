#include <doctest.h>

#include <sstream>

#include "pgm/errors.hpp"
#include "pgm/experiment.hpp"
#include "pgm/group.hpp"

using namespace pgm;

namespace {

void check_full_associativity(const GroupTable& g) {
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      for (int k = 0; k < g.n; ++k)
        REQUIRE(g.times(g.times(i, j), k) == g.times(i, g.times(j, k)));
}

}  // namespace

TEST_CASE("make_group cyclic tables use addition mod m") {
  const GroupTable g = make_group("cyclic:4");
  REQUIRE(g.n == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(g.times(i, j) == (i + j) % 4);
  CHECK(g.inverse_of(1) == 3);
}

TEST_CASE("dihedral:3 has order 6 and is nonabelian") {
  const GroupTable g = make_group("dihedral:3");
  REQUIRE(g.n == 6);
  check_full_associativity(g);
  bool abelian = true;
  for (int i = 0; i < g.n && abelian; ++i)
    for (int j = 0; j < g.n; ++j)
      if (g.times(i, j) != g.times(j, i)) {
        abelian = false;
        break;
      }
  // order 6 and nonabelian pins the isomorphism type to Sym(3)
  CHECK_FALSE(abelian);
}

TEST_CASE("quaternion group: every subgroup is normal") {
  const GroupTable g = make_group("quaternion");
  REQUIRE(g.n == 8);
  check_full_associativity(g);
  const auto subs = enumerate_proper_subgroups(g);
  REQUIRE_FALSE(subs.empty());
  for (const Subgroup& s : subs) {
    for (int x = 0; x < g.n; ++x) {
      for (int h : s.elements) {
        const int conj = g.times(g.times(g.inverse_of(x), h), x);
        CHECK(s.contains(conj));
      }
    }
  }
  // one subgroup of order 2 and three of order 4
  CHECK(subs.size() == 4);
  CHECK(subs[0].order() == 2);
}

TEST_CASE("direct products") {
  const GroupTable v4 = make_group("cyclic:2xcyclic:2");
  REQUIRE(v4.n == 4);
  CHECK(enumerate_proper_subgroups(v4).size() == 3);

  const GroupTable g = make_group("cyclic:2xcyclic:4");
  REQUIRE(g.n == 8);
  check_full_associativity(g);
}

TEST_CASE("make_group rejects bad descriptors") {
  CHECK_THROWS_AS(make_group("frobnicate"), Error);
  CHECK_THROWS_AS(make_group("cyclic:abc"), Error);
  CHECK_THROWS_AS(make_group("symmetric:6"), Error);
  try {
    make_group("cyclic:65");
    FAIL("expected OrderOverflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderOverflow);
  }
  // raising the limit admits larger groups
  CHECK(make_group("cyclic:65", 100).n == 65);
  CHECK(make_group("symmetric:5", 120).n == 120);
}

TEST_CASE("validate_table accepts the order-2 group") {
  const GroupTable g = validate_table({{0, 1}, {1, 0}});
  CHECK(g.n == 2);
  CHECK(g.inverse_of(1) == 1);
}

TEST_CASE("validate_table rejects a column repeat") {
  try {
    validate_table({{0, 1}, {0, 1}});
    FAIL("expected NotLatinSquare");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLatinSquare);
  }
}

TEST_CASE("validate_table rejects one-sided identities") {
  // mul[i][j] = (i - j) mod 5: 0 is a right identity only
  std::vector<std::vector<int>> raw(5, std::vector<int>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) raw[i][j] = ((i - j) % 5 + 5) % 5;
  try {
    validate_table(raw);
    FAIL("expected NoIdentity");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoIdentity);
  }
}

TEST_CASE("validate_table relabels an off-origin identity") {
  // Z3 with labels rotated so the identity sits at index 2.
  const GroupTable z3 = make_group("cyclic:3");
  const int relabel[3] = {2, 0, 1};  // old group index -> raw label
  std::vector<std::vector<int>> raw(3, std::vector<int>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      raw[relabel[i]][relabel[j]] = relabel[z3.times(i, j)];
  std::vector<int> map;
  const GroupTable g = validate_table(raw, &map);
  CHECK(g.times(0, 0) == 0);
  for (int j = 0; j < 3; ++j) {
    CHECK(g.times(0, j) == j);
    CHECK(g.times(j, 0) == j);
  }
  CHECK(map[2] == 0);  // the old identity label moved to index 0
}

TEST_CASE("validate_table reports a non-associative loop") {
  const std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                              {1, 0, 3, 4, 2},
                                              {2, 3, 4, 0, 1},
                                              {3, 4, 1, 2, 0},
                                              {4, 2, 0, 1, 3}};
  try {
    validate_table(loop);
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAssociative);
  }
}

TEST_CASE("subgroup_closure") {
  const GroupTable z6 = make_group("cyclic:6");
  CHECK(subgroup_closure(z6, {2}).elements == std::vector<int>{0, 2, 4});
  CHECK(subgroup_closure(z6, {}).elements == std::vector<int>{0});

  const GroupTable d4 = make_group("dihedral:4");
  const Subgroup refl = subgroup_closure(d4, {4});
  CHECK(refl.order() == 2);

  SUBCASE("closure is idempotent") {
    for (const char* spec : {"cyclic:12", "dihedral:4", "quaternion"}) {
      const GroupTable g = make_group(spec);
      for (int a = 0; a < g.n; ++a) {
        const Subgroup once = subgroup_closure(g, {a});
        CHECK(subgroup_closure(g, once.elements).elements == once.elements);
      }
    }
  }
}

TEST_CASE("enumerate_proper_subgroups") {
  const GroupTable z4 = make_group("cyclic:4");
  const auto z4subs = enumerate_proper_subgroups(z4);
  REQUIRE(z4subs.size() == 1);
  CHECK(z4subs[0].elements == std::vector<int>{0, 2});

  const auto z6subs = enumerate_proper_subgroups(make_group("cyclic:6"));
  REQUIRE(z6subs.size() == 2);
  CHECK(z6subs[0].elements == std::vector<int>{0, 3});
  CHECK(z6subs[1].elements == std::vector<int>{0, 2, 4});

  SUBCASE("Lagrange holds across the shipped groups") {
    for (const MatrixEntry& e : test_matrix()) {
      const GroupTable g = make_group(e.spec);
      for (const Subgroup& s : enumerate_proper_subgroups(g))
        CHECK(g.n % s.order() == 0);
    }
  }

  SUBCASE("the scan refuses groups beyond the degree limit") {
    const GroupTable big = make_group("cyclic:65", 100);
    try {
      enumerate_proper_subgroups(big);
      FAIL("expected DegreeTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegreeTooLarge);
    }
    CHECK_FALSE(enumerate_proper_subgroups(big, 100).empty());
  }
}

TEST_CASE("right_cosets") {
  const GroupTable z6 = make_group("cyclic:6");
  const CosetDecomposition d = right_cosets(z6, Subgroup{{0, 3}});
  CHECK(d.reps == std::vector<int>{0, 1, 2});
  CHECK(d.lambda == 3);
  CHECK(d.mu == 2);

  const CosetDecomposition trivial = right_cosets(z6, trivial_subgroup());
  CHECK(trivial.lambda == 6);
  CHECK(trivial.reps == std::vector<int>{0, 1, 2, 3, 4, 5});

  SUBCASE("cosets partition the group") {
    const GroupTable d3 = make_group("dihedral:3");
    const Subgroup h = subgroup_closure(d3, {3});
    REQUIRE(h.order() == 2);
    const CosetDecomposition dec = right_cosets(d3, h);
    CHECK(dec.lambda == 3);
    std::vector<int> covered(static_cast<size_t>(d3.n), 0);
    for (int rep : dec.reps)
      for (int e : h.elements) covered[static_cast<size_t>(d3.times(e, rep))]++;
    for (int c : covered) CHECK(c == 1);
  }

  SUBCASE("non-subgroups are rejected") {
    try {
      right_cosets(z6, Subgroup{{0, 1}});
      FAIL("expected NotASubgroup");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotASubgroup);
    }
  }
}

TEST_CASE("every factory group passes the full associativity scan") {
  for (const MatrixEntry& e : test_matrix())
    check_full_associativity(make_group(e.spec));
}

TEST_CASE("group file round trip") {
  const GroupTable g = make_group("dihedral:4");
  std::istringstream in(format_group(g));
  const GroupTable back = parse_group(in);
  CHECK(back.mul == g.mul);

  SUBCASE("trailing garbage is rejected") {
    std::istringstream bad(format_group(g) + "7\n");
    try {
      parse_group(bad);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
  SUBCASE("truncated tables are rejected") {
    std::string text = format_group(g);
    text.resize(text.size() / 2);
    std::istringstream bad(text);
    CHECK_THROWS_AS(parse_group(bad), Error);
  }
}
