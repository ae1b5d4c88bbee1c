#include <stdexcept>
#include <random>

#include "doctest.h"
#include "hanoihedral/branching.hpp"
#include "hanoihedral/errors.hpp"
#include "hanoihedral/group_spec.hpp"
#include "hanoihedral/portrait.hpp"
#include "hanoihedral/selfsim.hpp"

using namespace hh;

namespace {

GenWord random_word(int d, std::size_t max_len, std::mt19937_64& rng) {
  GenWord w(rng() % (max_len + 1));
  for (auto& g : w) g = static_cast<int>(rng() % d);
  return w;
}

// a presentation that cannot contract: x = rho (x, x, ..., x)
GroupSpec non_contracting_spec() {
  std::vector<std::uint8_t> rho(3);
  for (int x = 0; x < 3; ++x) rho[x] = static_cast<std::uint8_t>((x + 1) % 3);
  SpecGenerator x{"x", Perm::from_images(rho), {0, 0, 0}};
  std::vector<std::uint8_t> rho2(3);
  for (int i = 0; i < 3; ++i) rho2[i] = static_cast<std::uint8_t>((i + 2) % 3);
  SpecGenerator y{"y", Perm::from_images(rho2), {1, 1, 1}};
  return GroupSpec(3, {x, y}, false);
}

}  // namespace

TEST_CASE("hanoihedral spec construction") {
  auto spec = GroupSpec::hanoihedral(3);
  CHECK(spec.generator_count() == 3);
  CHECK(spec.generator(0).root == Perm::parse(3, "0 2 1"));  // (1 2)
  CHECK(spec.generator(1).root == Perm::parse(3, "2 1 0"));  // (0 2)
  CHECK(spec.generator(2).root == Perm::parse(3, "1 0 2"));  // (0 1)
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < 3; ++x)
      CHECK(spec.generator(i).sections[x] == (x == i ? i : -1));
  }

  auto spec5 = GroupSpec::hanoihedral(5);
  CHECK(spec5.generator(4).root == Perm::parse(5, "3 2 1 0 4"));  // (0 3)(1 2)

  CHECK_THROWS_AS((void)GroupSpec::hanoihedral(4), std::invalid_argument);
  CHECK_THROWS_AS((void)GroupSpec::hanoihedral(1), std::invalid_argument);
}

TEST_CASE("evaluate") {
  auto spec = GroupSpec::hanoihedral(3);
  CHECK(evaluate(spec, {}, 2).is_identity());

  // a_1 a_2 a_1 a_0 stabilizes the first level
  Portrait p = evaluate(spec, spec.parse_word("a1 a2 a1 a0"), 1);
  CHECK(p.label(Vertex{}).is_identity());

  auto spec5 = GroupSpec::hanoihedral(5);
  for (int depth : {1, 2, 3})
    CHECK(evaluate(spec5, spec5.parse_word("a0 a0"), depth).is_identity());
}

TEST_CASE("evaluate is a homomorphism") {
  for (int d : {3, 5}) {
    auto spec = GroupSpec::hanoihedral(d);
    std::mt19937_64 rng(900 + d);
    for (int trial = 0; trial < 40; ++trial) {
      GenWord w1 = random_word(d, 8, rng);
      GenWord w2 = random_word(d, 8, rng);
      for (int n : {1, 2, 3}) {
        CHECK(evaluate(spec, word_concat(w1, w2), n) ==
              evaluate(spec, w1, n) * evaluate(spec, w2, n));
      }
    }
  }
}

TEST_CASE("first level decomposition") {
  auto spec = GroupSpec::hanoihedral(5);
  int d = 5;

  // a_j a_{j+i} a_i a_0 decomposes as a_j at j, a_{j+i} at j-i, a_i at -i,
  // a_0 at 0 with trivial root
  for (int j = 1; j < d; ++j) {
    for (int i = 1; i < d; ++i) {
      auto dec = first_level_decomposition(spec, st1_basic_word(d, j, i));
      CHECK(dec.root.is_identity());
      // check against the portrait sections
      Portrait p = evaluate(spec, st1_basic_word(d, j, i), 3);
      for (int x = 0; x < d; ++x)
        CHECK(evaluate(spec, dec.sections[x], 2) == p.section(Vertex{}.child(x)));
    }
  }

  auto single = first_level_decomposition(spec, {2});
  CHECK(single.root == spec.generator(2).root);
  CHECK(single.sections[2] == GenWord{2});
  for (int x = 0; x < d; ++x)
    if (x != 2) CHECK(single.sections[x].empty());

  auto empty = first_level_decomposition(spec, {});
  CHECK(empty.root.is_identity());
  for (const auto& s : empty.sections) CHECK(s.empty());
}

TEST_CASE("decomposition agrees with portraits on random words") {
  for (int d : {3, 5}) {
    auto spec = GroupSpec::hanoihedral(d);
    std::mt19937_64 rng(77 + d);
    for (int trial = 0; trial < 40; ++trial) {
      GenWord w = random_word(d, 10, rng);
      auto dec = first_level_decomposition(spec, w);
      Portrait p = evaluate(spec, w, 3);
      CHECK(dec.root == p.label(Vertex{}));
      for (int x = 0; x < d; ++x)
        CHECK(evaluate(spec, dec.sections[x], 2) == p.section(Vertex{}.child(x)));
    }
  }
}

TEST_CASE("contraction bound") {
  for (int d : {3, 5}) {
    auto spec = GroupSpec::hanoihedral(d);
    std::mt19937_64 rng(3000 + d);
    for (int trial = 0; trial < 60; ++trial) {
      GenWord w = free_reduce(spec, random_word(d, 16, rng));
      if (w.size() < 2) continue;
      auto dec = first_level_decomposition(spec, w);
      for (const auto& s : dec.sections)
        CHECK(2 * free_reduce(spec, s).size() <= w.size() + 1);
    }
  }
}

TEST_CASE("word problem") {
  auto spec = GroupSpec::hanoihedral(3);
  CHECK(is_trivial(spec, spec.parse_word("a0 a0")));
  CHECK_FALSE(is_trivial(spec, spec.parse_word("a0 a1")));
  CHECK_FALSE(is_trivial(spec, spec.parse_word("a2")));
  CHECK(is_trivial(spec, {}));

  // two expressions for the same coordinate-supported commutator
  GenWord lhs = delta_commutator_word(3, 1, 1, 2);
  GenWord rhs = word_concat(st1_basic_word(3, 1, 2), st1_basic_word(3, 1, 2));
  CHECK(word_equal(spec, lhs, rhs));

  CHECK(word_equal(spec, spec.parse_word("a0 a1 a2"), spec.parse_word("a0 a1 a2")));
  CHECK_FALSE(word_equal(spec, spec.parse_word("a0 a1"), spec.parse_word("a1 a0")));
}

TEST_CASE("word problem flags non-contracting specs") {
  auto bad = non_contracting_spec();
  TrivialityOracle oracle(bad, 12);
  CHECK_THROWS_AS((void)oracle.is_trivial({0, 1, 0, 1}), not_contracting_error);
}

TEST_CASE("nucleus") {
  for (int d : {3, 5, 7}) {
    auto spec = GroupSpec::hanoihedral(d);
    auto nuc = nucleus(spec);
    CHECK(static_cast<int>(nuc.size()) == d + 1);
    CHECK(nuc[0].empty());  // identity
    for (int g = 0; g < d; ++g) {
      bool found = false;
      for (const auto& w : nuc)
        if (w == GenWord{g}) found = true;
      CHECK(found);
    }
  }
  CHECK_THROWS_AS((void)nucleus(non_contracting_spec(), 3), not_contracting_error);
}

TEST_CASE("group spec text round trip") {
  auto spec = GroupSpec::hanoihedral(5);
  auto back = GroupSpec::from_text(spec.to_text());
  CHECK(back.d() == 5);
  CHECK(back.generator_count() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(back.generator(i).root == spec.generator(i).root);
    CHECK(back.generator(i).sections == spec.generator(i).sections);
  }
  GenWord w = back.parse_word("a0 a2 a1");
  CHECK(back.word_str(w) == "a0 a2 a1");
}
