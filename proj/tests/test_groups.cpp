#include <doctest.h>

#include <random>
#include <set>

#include "ccsym/errors.hpp"
#include "ccsym/groups.hpp"

using namespace ccsym;
using Complex = std::complex<double>;

namespace {

std::set<std::string> labels_of(const FiniteGroup& g, const std::vector<int>& members) {
  std::set<std::string> out;
  for (int m : members) out.insert(g.label(m));
  return out;
}

}  // namespace

TEST_CASE("dihedral group orders and relations") {
  const auto d4 = dihedral_group(4);
  CHECK(d4.order() == 8);
  CHECK(dihedral_group(3).order() == 6);
  const auto a = d4.find("a"), a3 = d4.find("a^3"), r = d4.find("r");
  CHECK(d4.mul(a, a3) == d4.identity());
  CHECK(d4.mul(r, r) == d4.identity());
  const auto ra = d4.mul(r, a);
  CHECK(d4.mul(ra, ra) == d4.identity());
  // ar means r first, then a
  CHECK(d4.mul(a, r) == d4.find("ar"));
  CHECK_FALSE(d4.is_abelian());
  CHECK_THROWS_AS(dihedral_group(2), InvalidOrder);
  CHECK_THROWS_AS(dihedral_group(-1), InvalidOrder);
}

TEST_CASE("group axioms hold for every constructed group") {
  for (int k = 3; k <= 30; ++k) CHECK(group_axioms_hold(dihedral_group(k)));
  CHECK(group_axioms_hold(cyclic_group(7)));
  CHECK(group_axioms_hold(trivial_group()));
}

TEST_CASE("invalid multiplication tables are rejected") {
  CHECK_THROWS_AS(FiniteGroup({"e", "x"}, {0, 1, 1, 1}), InvalidGroup);  // x has no inverse
  CHECK_THROWS_AS(FiniteGroup({"e", "x"}, {0, 1, 1}), InvalidGroup);
  CHECK_THROWS_AS(FiniteGroup({"e", "x"}, {0, 1, 1, 2}), InvalidGroup);
  CHECK_THROWS_AS(FiniteGroup({}, {}), InvalidGroup);
  // identity and inverses exist but (x x) y != x (x y)
  CHECK_THROWS_AS(FiniteGroup({"e", "x", "y"}, {0, 1, 2, 1, 0, 0, 2, 0, 0}), InvalidGroup);
  CHECK_THROWS_AS(dihedral_group(4).find("b"), InvalidGroup);
}

TEST_CASE("conjugacy classes of D4") {
  const auto g = dihedral_group(4);
  const auto cc = conjugacy_classes(g);
  REQUIRE(cc.count() == 5);
  CHECK(labels_of(g, cc.classes[0]) == std::set<std::string>{"e"});
  CHECK(labels_of(g, cc.classes[1]) == std::set<std::string>{"a", "a^3"});
  CHECK(labels_of(g, cc.classes[2]) == std::set<std::string>{"a^2"});
  CHECK(labels_of(g, cc.classes[3]) == std::set<std::string>{"r", "a^2r"});
  CHECK(labels_of(g, cc.classes[4]) == std::set<std::string>{"ar", "a^3r"});
  CHECK(class_name(g, cc, 3) == "r,a^2r");
}

TEST_CASE("conjugacy classes of D3") {
  const auto g = dihedral_group(3, DihedralLabels::Triangle);
  const auto cc = conjugacy_classes(g);
  REQUIRE(cc.count() == 3);
  CHECK(labels_of(g, cc.classes[0]) == std::set<std::string>{"I"});
  CHECK(labels_of(g, cc.classes[1]) == std::set<std::string>{"R", "R^2"});
  CHECK(labels_of(g, cc.classes[2]) == std::set<std::string>{"T", "TR", "TR^2"});
}

TEST_CASE("class structure invariants") {
  for (int k = 3; k <= 12; ++k) {
    const auto g = dihedral_group(k);
    const auto cc = conjugacy_classes(g);
    CHECK(cc.sizes[0] == 1);
    CHECK(cc.classes[0][0] == g.identity());
    int total = 0;
    for (int s : cc.sizes) {
      CHECK(g.order() % s == 0);
      total += s;
    }
    CHECK(total == g.order());
    CHECK(cc.count() == (k % 2 == 0 ? k / 2 + 3 : (k - 1) / 2 + 2));
  }
  const auto z = cyclic_group(6);
  CHECK(z.is_abelian());
  CHECK(conjugacy_classes(z).count() == 6);
}

TEST_CASE("character table of D4") {
  const auto t = character_table(dihedral_group(4));
  const double expected[5][5] = {{1, 1, 1, 1, 1},
                                 {1, 1, 1, -1, -1},
                                 {1, -1, 1, 1, -1},
                                 {1, -1, 1, -1, 1},
                                 {2, 0, -2, 0, 0}};
  REQUIRE(t.count() == 5);
  CHECK(t.degrees == std::vector<int>{1, 1, 1, 1, 2});
  for (int i = 0; i < 5; ++i)
    for (int c = 0; c < 5; ++c)
      CHECK(t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] ==
            Complex(expected[i][c], 0));
  CHECK(t.class_names == std::vector<std::string>{"e", "a,a^3", "a^2", "r,a^2r", "ar,a^3r"});
}

TEST_CASE("character table of D3") {
  const auto t = character_table(dihedral_group(3, DihedralLabels::Triangle));
  const double expected[3][3] = {{1, 1, 1}, {1, 1, -1}, {2, -1, 0}};
  CHECK(t.degrees == std::vector<int>{1, 1, 2});
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c)
      CHECK(t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] ==
            Complex(expected[i][c], 0));
}

TEST_CASE("character tables satisfy the orthogonality relations") {
  for (int k = 3; k <= 12; ++k) {
    const auto t = character_table(dihedral_group(k));
    int sum_sq = 0;
    for (int d : t.degrees) sum_sq += d * d;
    CHECK(sum_sq == t.group_order());
    for (int i = 0; i < t.count(); ++i) {
      CHECK(t.values[static_cast<std::size_t>(i)][0].real() == t.degrees[static_cast<std::size_t>(i)]);
      for (int j = 0; j < t.count(); ++j) {
        const auto ip = char_inner_product(t.values[static_cast<std::size_t>(i)],
                                           t.values[static_cast<std::size_t>(j)], t.classes);
        CHECK(std::abs(ip - Complex(i == j ? 1 : 0, 0)) <= 1e-12);
      }
    }
    for (int c = 0; c < t.count(); ++c)
      for (int c2 = 0; c2 < t.count(); ++c2) {
        Complex acc = 0;
        for (int i = 0; i < t.count(); ++i)
          acc += std::conj(t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) *
                 t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(c2)];
        acc *= static_cast<double>(t.classes.sizes[static_cast<std::size_t>(c)]) / t.group_order();
        CHECK(std::abs(acc - Complex(c == c2 ? 1 : 0, 0)) <= 1e-12);
      }
  }
}

TEST_CASE("character tables are limited to dihedral groups") {
  CHECK_THROWS_AS(character_table(cyclic_group(4)), UnsupportedGroup);
  CHECK_THROWS_AS(character_table(trivial_group()), UnsupportedGroup);
}

TEST_CASE("inner products and decomposition") {
  const auto t4 = character_table(dihedral_group(4));
  const ClassFunction square{8, 0, 0, 0, 0};
  CHECK(std::abs(char_inner_product(square, t4.values[0], t4.classes) - Complex(1, 0)) < 1e-15);
  CHECK(decompose(square, t4) == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(char_inner_product(ClassFunction(5, 0.0), t4.values[2], t4.classes) == Complex(0, 0));
  CHECK(decompose(t4.values[0], t4) == std::vector<int>{1, 0, 0, 0, 0});

  const auto t3 = character_table(dihedral_group(3));
  CHECK(decompose(ClassFunction{8, -1, 0}, t3) == std::vector<int>{1, 1, 3});

  CHECK_THROWS_AS(decompose(ClassFunction{1, 0.5, 0}, t3), NonIntegerMultiplicity);
  CHECK_THROWS_AS(decompose(ClassFunction{1, 1, 1, 1, -1}, t4), NonIntegerMultiplicity);
  CHECK_THROWS_AS(char_inner_product(ClassFunction{1, 2}, t3.values[0], t3.classes),
                  DimensionMismatch);
}

TEST_CASE("decompose recovers random direct sums") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> weight(0, 4);
  for (int k = 3; k <= 9; ++k) {
    const auto t = character_table(dihedral_group(k));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> n;
      ClassFunction chi(static_cast<std::size_t>(t.count()), 0.0);
      for (int i = 0; i < t.count(); ++i) {
        n.push_back(weight(rng));
        for (int c = 0; c < t.count(); ++c)
          chi[static_cast<std::size_t>(c)] +=
              static_cast<double>(n.back()) * t.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      }
      CHECK(decompose(chi, t) == n);
    }
  }
}
